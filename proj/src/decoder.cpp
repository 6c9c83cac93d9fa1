#include "gabidulin/decoder.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <thread>
#include <utility>

#include "gabidulin/linalg.hpp"

namespace gabidulin {

namespace {

// Message coefficients padded to k digit rows; canonical sort/dedup key.
std::vector<Digit> message_key(const Code& code, const LinPoly& msg) {
    const Field& F = *code.field();
    std::vector<Digit> key;
    key.reserve(static_cast<std::size_t>(code.k()) * F.m());
    for (int i = 0; i < code.k(); ++i) {
        const FieldElement c = msg.coeff(i);
        key.insert(key.end(), c.digits().begin(), c.digits().end());
    }
    return key;
}

// q^(m * slots), or nullopt on overflow.
std::optional<std::uint64_t> candidate_count(const Field& F, long slots) {
    std::uint64_t total = 1;
    for (long i = 0; i < slots; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / F.size()) return std::nullopt;
        total *= F.size();
    }
    return total;
}

// Checks the candidate range [begin, end); coefficient tuples are indexed
// with the a-slots least significant. Accepted messages go to out in index
// order.
void sweep_range(const Code& code, const MinimalBasis& mb, int j, long a_slots,
                 std::uint64_t begin, std::uint64_t end, std::vector<LinPoly>& out) {
    const FieldPtr& F = code.field();
    std::vector<std::uint64_t> odo(static_cast<std::size_t>(a_slots + j));
    std::uint64_t rest = begin;
    for (auto& d : odo) {
        d = rest % F->size();
        rest /= F->size();
    }
    for (std::uint64_t step = begin; step < end; ++step) {
        std::vector<FieldElement> a_coeffs(static_cast<std::size_t>(a_slots));
        for (long i = 0; i < a_slots; ++i)
            a_coeffs[static_cast<std::size_t>(i)] = F->from_index(odo[static_cast<std::size_t>(i)]);
        std::vector<FieldElement> b_coeffs(static_cast<std::size_t>(j) + 1);
        for (int i = 0; i < j; ++i)
            b_coeffs[static_cast<std::size_t>(i)] =
                F->from_index(odo[static_cast<std::size_t>(a_slots + i)]);
        b_coeffs[static_cast<std::size_t>(j)] = F->one();

        const LinPoly a(F, std::move(a_coeffs));
        const LinPoly b(F, std::move(b_coeffs));
        const ModuleElement f{a.compose(mb.g1.f1) + b.compose(mb.g2.f1),
                              a.compose(mb.g1.f2) + b.compose(mb.g2.f2)};
        if (auto msg = check_candidate(f, code.k())) out.push_back(std::move(*msg));

        for (std::size_t i = 0; i < odo.size(); ++i) {
            if (++odo[i] < F->size()) break;
            odo[i] = 0;
        }
    }
}

constexpr std::uint64_t kParallelSweepThreshold = std::uint64_t{1} << 13;

unsigned sweep_worker_count(std::uint64_t total) {
    if (total < kParallelSweepThreshold) return 1;
    const unsigned hw = std::thread::hardware_concurrency();
    if (hw <= 1) return 1;
    return static_cast<unsigned>(
        std::min<std::uint64_t>(std::min(hw, 32u), total / (kParallelSweepThreshold / 8)));
}

// Runs the decoding sweep at index j: all a with
// qdeg(a) <= l2 - l1 + j (only a = 0 when the bound is negative) and all
// monic b with qdeg(b) = j. Large sweeps are partitioned across worker
// threads; every operation is pure, and the sink consumes messages in a
// fixed partition order, so results do not depend on the schedule.
template <typename Sink>
void sweep(const Code& code, const MinimalBasis& mb, int j, std::uint64_t budget, Sink&& sink) {
    const long a_bound = mb.l2 - mb.l1 + j;
    const long a_slots = a_bound < 0 ? 0 : a_bound + 1;
    const auto total = candidate_count(*code.field(), a_slots + j);
    if (!total || *total > budget)
        throw Error(errc::candidate_budget_exceeded,
                    "sweep at j=" + std::to_string(j) + " needs " +
                        (total ? std::to_string(*total) : std::string("> 2^64")) +
                        " candidates, budget is " + std::to_string(budget) +
                        " (raise --budget to proceed)");

    const unsigned workers = sweep_worker_count(*total);
    if (workers <= 1) {
        std::vector<LinPoly> accepted;
        sweep_range(code, mb, j, a_slots, 0, *total, accepted);
        for (LinPoly& msg : accepted) sink(msg);
        return;
    }

    std::vector<std::vector<LinPoly>> accepted(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (*total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = w * chunk;
        const std::uint64_t end = std::min(*total, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, w, begin, end] {
            try {
                sweep_range(code, mb, j, a_slots, begin, end, accepted[w]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
    for (std::vector<LinPoly>& part : accepted)
        for (LinPoly& msg : part) sink(msg);
}

}  // namespace

bool vanishes_at_points(const ModuleElement& e, const Code& code, const Word& r) {
    const Field& F = *code.field();
    for (int i = 0; i < code.n(); ++i) {
        const FieldElement v = F.add(e.f1.evaluate(code.g()[static_cast<std::size_t>(i)]),
                                     e.f2.evaluate(r[static_cast<std::size_t>(i)]));
        if (!v.is_zero()) return false;
    }
    return true;
}

bool in_module(const ModuleElement& e, const InterpolationBasis& basis) {
    // e = a o [Pi, 0] + b o [-Lambda, x] forces b = f2 and a o Pi = f1 + f2 o Lambda.
    const LinPoly lambda = -basis.row2.f1;
    const LinPoly lhs = e.f1 + e.f2.compose(lambda);
    return left_divide(lhs, basis.row1.f1).second.is_zero();
}

InterpolationBasis interpolation_module(const Code& code, const Word& r) {
    if (static_cast<int>(r.size()) != code.n())
        throw Error(errc::length_mismatch, "received word must have length n");
    const FieldPtr& F = code.field();
    const LinPoly pi = annihilator(F, code.g());
    const LinPoly lambda = q_lagrange(F, code.g(), r);
    InterpolationBasis basis{{pi, LinPoly(F)}, {-lambda, LinPoly::identity(F)}};
    if (!vanishes_at_points(basis.row1, code, r) || !vanishes_at_points(basis.row2, code, r))
        throw Error(errc::internal, "interpolation rows do not vanish at the data points");
    return basis;
}

std::optional<long> weighted_qdeg(const ModuleElement& e, long k1, long k2) {
    const auto d1 = e.f1.qdeg();
    const auto d2 = e.f2.qdeg();
    if (!d1 && !d2) return std::nullopt;
    if (!d1) return k2 + *d2;
    if (!d2) return k1 + *d1;
    return std::max(k1 + *d1, k2 + *d2);
}

MinimalBasis minimal_basis(const InterpolationBasis& basis, int k) {
    const FieldPtr& F = basis.row1.f1.field();
    LinPoly h0 = basis.row1.f1, t0 = basis.row1.f2;  // [Pi, 0]
    LinPoly h1 = basis.row2.f1, t1 = basis.row2.f2;  // [-Lambda, x]

    // Back-transform: originals = V o (current rows), kept exact throughout.
    LinPoly v11 = LinPoly::identity(F), v12 = LinPoly(F);
    LinPoly v21 = LinPoly(F), v22 = LinPoly::identity(F);

    const auto keep_dividing = [&] {
        const auto dh = h1.qdeg();
        if (!dh) return false;
        const auto dt = t1.qdeg();
        if (!dt) return true;
        return *dt + static_cast<long>(k) - 1 < static_cast<long>(*dh);
    };

    int guard = 0;
    const int max_steps = h0.qdeg() ? *h0.qdeg() + 2 : 2;
    while (keep_dividing()) {
        if (++guard > max_steps) throw Error(errc::internal, "Euclid failed to terminate");
        auto [quot, rem] = left_divide(h0, h1);
        LinPoly t2 = t0 - quot.compose(t1);
        h0 = std::exchange(h1, std::move(rem));
        t0 = std::exchange(t1, std::move(t2));
        // V <- V o [[quot, x], [x, 0]] (the inverse of this elimination step).
        LinPoly n11 = v11.compose(quot) + v12;
        LinPoly n21 = v21.compose(quot) + v22;
        v12 = std::exchange(v11, std::move(n11));
        v22 = std::exchange(v21, std::move(n21));
    }

    MinimalBasis mb;
    mb.g1 = {h0, t0};
    mb.g2 = {h1, t1};
    const auto l1 = weighted_qdeg(mb.g1, 0, k - 1);
    const auto l2 = weighted_qdeg(mb.g2, 0, k - 1);
    if (!l1 || !l2) throw Error(errc::internal, "degenerate minimal basis row");
    mb.l1 = *l1;
    mb.l2 = *l2;
    mb.to_row1 = {v11, v12};
    mb.to_row2 = {v21, v22};
    return mb;
}

std::optional<LinPoly> check_candidate(const ModuleElement& f, int k) {
    if (f.f2.is_zero()) return std::nullopt;  // no valid error span polynomial
    auto [quot, rem] = right_divide(f.f1, f.f2);
    if (!rem.is_zero()) return std::nullopt;
    if (!qdeg_le(quot.qdeg(), k - 1)) return std::nullopt;
    // Candidates are [N, -D] with N = D o msg. Exact division gives
    // f1 = f2 o quot, i.e. D o msg = D o (-quot), so msg = -quot.
    return -quot;
}

DecodeResult list_decode(const Code& code, const Word& r, std::uint64_t budget) {
    const Field& F = *code.field();
    const InterpolationBasis basis = interpolation_module(code, r);
    const MinimalBasis mb = minimal_basis(basis, code.k());

    // t = j + l2 - k + 1 <= n bounds the search; beyond it something is broken,
    // since every received word lies within rank distance n of some codeword.
    const long max_j = code.n() - (mb.l2 - code.k() + 1);
    for (int j = 0;; ++j) {
        if (j > max_j)
            throw Error(errc::radius_exhausted, "no codeword found within rank radius n");
        std::map<std::vector<Digit>, DecodeEntry> found;
        sweep(code, mb, j, budget, [&](const LinPoly& msg) {
            found.emplace(message_key(code, msg), DecodeEntry{msg, code.encode(msg)});
        });
        if (found.empty()) continue;

        const int t = static_cast<int>(j + mb.l2 - code.k() + 1);
        DecodeResult result;
        result.distance = t;
        for (auto& [key, entry] : found) {
            if (rank_distance(F, entry.codeword, r) != t)
                throw Error(errc::internal, "accepted candidate at wrong rank distance");
            result.entries.push_back(std::move(entry));
        }
        return result;
    }
}

std::vector<DecodeEntry> enumerate_distance_t(const Code& code, const Word& r, int t,
                                              std::uint64_t budget) {
    if (t < 0 || t > code.n())
        throw Error(errc::bad_params, "radius must satisfy 0 <= t <= n");
    const Field& F = *code.field();
    const InterpolationBasis basis = interpolation_module(code, r);
    const MinimalBasis mb = minimal_basis(basis, code.k());

    const long j = static_cast<long>(t) - mb.l2 + code.k() - 1;
    if (j < 0) return {};
    std::map<std::vector<Digit>, DecodeEntry> found;
    sweep(code, mb, static_cast<int>(j), budget, [&](const LinPoly& msg) {
        Word cw = code.encode(msg);
        // Inflated span polynomials also pass divisibility for closer
        // codewords; keep distance-t codewords only.
        if (rank_distance(F, cw, r) != t) return;
        found.emplace(message_key(code, msg), DecodeEntry{msg, std::move(cw)});
    });
    std::vector<DecodeEntry> out;
    out.reserve(found.size());
    for (auto& [key, entry] : found) out.push_back(std::move(entry));
    return out;
}

DecodeEntry decode_unique(const Code& code, const Word& r, std::uint64_t budget) {
    DecodeResult res = list_decode(code, r, budget);
    // Unique radius: 2t < d = n - k + 1.
    if (res.entries.size() == 1 && 2 * res.distance < code.min_distance())
        return res.entries.front();
    throw AmbiguousError(std::move(res), "received word is outside the unique decoding radius");
}

void sort_entries(const Code& code, std::vector<DecodeEntry>& entries) {
    std::sort(entries.begin(), entries.end(), [&](const DecodeEntry& a, const DecodeEntry& b) {
        return message_key(code, a.message) < message_key(code, b.message);
    });
}

}  // namespace gabidulin
