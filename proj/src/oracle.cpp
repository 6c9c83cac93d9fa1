#include "gabidulin/oracle.hpp"

#include <limits>

#include "gabidulin/linalg.hpp"

namespace gabidulin {

namespace {

std::uint64_t message_count(const Code& code) {
    const std::uint64_t qm = code.field()->size();
    std::uint64_t total = 1;
    for (int i = 0; i < code.k(); ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / qm) return 0;  // 0 = overflow
        total *= qm;
    }
    return total;
}

// Visits every message polynomial (all q^(mk) coefficient vectors) in
// lexicographic coefficient order.
template <typename Fn>
void for_each_message(const Code& code, Fn&& fn) {
    const FieldPtr& F = code.field();
    const std::uint64_t total = message_count(code);
    std::vector<std::uint64_t> odo(static_cast<std::size_t>(code.k()), 0);
    for (std::uint64_t step = 0; step < total; ++step) {
        std::vector<FieldElement> coeffs(odo.size());
        for (std::size_t i = 0; i < odo.size(); ++i) coeffs[i] = F->from_index(odo[i]);
        fn(LinPoly(F, std::move(coeffs)));
        for (std::size_t i = 0; i < odo.size(); ++i) {
            if (++odo[i] < F->size()) break;
            odo[i] = 0;
        }
    }
}

void require_budget(const Code& code, const Word& r, std::uint64_t budget) {
    if (static_cast<int>(r.size()) != code.n())
        throw Error(errc::length_mismatch, "received word must have length n");
    const std::uint64_t total = message_count(code);
    if (total == 0 || total > budget)
        throw Error(errc::too_large, "q^(mk) messages exceed the oracle budget of " +
                                         std::to_string(budget));
}

}  // namespace

OracleResult oracle_closest(const Code& code, const Word& r, std::uint64_t budget) {
    require_budget(code, r, budget);
    const Field& F = *code.field();
    OracleResult res;
    res.min_distance = code.n() + 1;
    for_each_message(code, [&](const LinPoly& msg) {
        Word cw = code.encode(msg);
        const int d = rank_distance(F, cw, r);
        ++res.histogram[d];
        if (d < res.min_distance) {
            res.min_distance = d;
            res.closest.clear();
        }
        if (d == res.min_distance) res.closest.push_back({msg, std::move(cw)});
    });
    sort_entries(code, res.closest);
    return res;
}

std::vector<OracleEntry> oracle_within(const Code& code, const Word& r, int t,
                                       std::uint64_t budget) {
    require_budget(code, r, budget);
    const Field& F = *code.field();
    std::vector<OracleEntry> out;
    for_each_message(code, [&](const LinPoly& msg) {
        Word cw = code.encode(msg);
        const int d = rank_distance(F, cw, r);
        if (d <= t) out.push_back({msg, std::move(cw), d});
    });
    return out;
}

}  // namespace gabidulin
