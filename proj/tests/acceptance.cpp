// Acceptance suite: one checked criterion per run ("acceptance N"), or all
// of them in sequence with no argument. Each criterion prints a single
// PASS/FAIL line with its elapsed time and budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gabidulin/code.hpp"
#include "gabidulin/decoder.hpp"
#include "gabidulin/linalg.hpp"
#include "gabidulin/oracle.hpp"
#include "gabidulin/serialization.hpp"

using namespace gabidulin;

namespace {

struct Failure {
    std::string what;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw Failure{what};
}

FieldPtr f8() { return Field::make(2, 3, {1, 1, 0, 1}); }

FieldElement ae(const FieldPtr& F, std::uint64_t e) { return F->alpha_pow(e); }

LinPoly poly_ae(const FieldPtr& F, const std::vector<long>& exps) {
    std::vector<FieldElement> coeffs;
    for (long e : exps)
        coeffs.push_back(e < 0 ? F->zero() : F->alpha_pow(static_cast<std::uint64_t>(e)));
    return LinPoly(F, std::move(coeffs));
}

LinPoly random_poly(const FieldPtr& F, int max_qdeg, std::mt19937_64& rng) {
    std::vector<FieldElement> coeffs(static_cast<std::size_t>(rng() % (max_qdeg + 1)) + 1);
    for (auto& c : coeffs) c = F->from_index(rng() % F->size());
    return LinPoly(F, std::move(coeffs));
}

LinPoly random_nonzero_poly(const FieldPtr& F, int max_qdeg, std::mt19937_64& rng) {
    while (true) {
        LinPoly p = random_poly(F, max_qdeg, rng);
        if (!p.is_zero()) return p;
    }
}

Word random_word(const FieldPtr& F, int n, std::mt19937_64& rng) {
    Word w;
    for (int i = 0; i < n; ++i) w.push_back(F->from_index(rng() % F->size()));
    return w;
}

Word random_independent(const FieldPtr& F, int count, std::mt19937_64& rng) {
    Word g;
    while (static_cast<int>(g.size()) < count) {
        g.push_back(F->from_index(rng() % F->size()));
        if (rank_q(expand(*F, g)) != static_cast<int>(g.size())) g.pop_back();
    }
    return g;
}

Word add_words(const Field& F, const Word& a, const Word& b) {
    Word out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.add(a[i], b[i]);
    return out;
}

bool same_entry_set(const std::vector<DecodeEntry>& dec, const std::vector<DecodeEntry>& orc) {
    if (dec.size() != orc.size()) return false;
    for (std::size_t i = 0; i < dec.size(); ++i) {
        if (!(dec[i].message == orc[i].message)) return false;
        if (!(dec[i].codeword == orc[i].codeword)) return false;
    }
    return true;
}

// --- criterion 1: the worked example's fixtures, coefficient-exact --------

void criterion1() {
    auto F = f8();
    require(F->alpha_pow(3) == F->add(F->alpha(), F->one()), "alpha^3 != alpha + 1");
    const Code code = Code::standard(F, 3, 2);
    const Word r = {ae(F, 3), F->zero(), F->alpha()};

    const InterpolationBasis ib = interpolation_module(code, r);
    require(ib.row1.f1 == poly_ae(F, {0, -1, -1, 0}), "Pi != x^8 + x");
    require(ib.row2.f1 == poly_ae(F, {5, -1, 2}), "Lambda != a^2 x^4 + a^5 x");

    const auto [quot, rem] = left_divide(ib.row1.f1, -ib.row2.f1);
    require(quot == LinPoly::monomial(F, 1, ae(F, 3)), "Euclid quotient != a^3 x^2");
    require(rem == poly_ae(F, {0, 6}), "Euclid remainder != a^6 x^2 + x");

    const MinimalBasis mb = minimal_basis(ib, code.k());
    require(mb.g1.f1 == poly_ae(F, {5, -1, 2}) && mb.g1.f2 == LinPoly::identity(F),
            "g1 != [a^2 x^4 + a^5 x, x]");
    require(mb.g2.f1 == poly_ae(F, {0, 6}) && mb.g2.f2 == LinPoly::monomial(F, 1, ae(F, 3)),
            "g2 != [a^6 x^2 + x, a^3 x^2]");
    require(mb.l1 == 2 && mb.l2 == 2, "weighted degrees != (2, 2)");
}

// --- criterion 2: the worked example decodes to the oracle set ------------

void criterion2() {
    auto F = f8();
    const Code code = Code::standard(F, 3, 2);
    const Word r = {ae(F, 3), F->zero(), F->alpha()};

    const DecodeResult dec = list_decode(code, r);
    const OracleResult orc = oracle_closest(code, r);
    require(dec.distance == 1, "minimal distance != 1");
    require(orc.min_distance == 1, "oracle distance != 1");
    require(same_entry_set(dec.entries, orc.closest), "decoded set != oracle set");

    bool has_m6 = false;
    for (const auto& e : dec.entries)
        if (e.message == poly_ae(F, {0, 1}) &&
            e.codeword == Word{ae(F, 3), F->one(), ae(F, 3)})
            has_m6 = true;
    require(has_m6, "missing message a x^2 + x with codeword (a^3, 1, a^3)");
}

// --- criterion 3: exhaustive oracle equivalence over all 512 words --------

void criterion3() {
    auto F = f8();
    const Code code = Code::standard(F, 3, 2);
    for (std::uint64_t w = 0; w < 512; ++w) {
        Word r(3);
        std::uint64_t rest = w;
        for (int i = 0; i < 3; ++i) {
            r[static_cast<std::size_t>(i)] = F->from_index(rest % 8);
            rest /= 8;
        }
        const DecodeResult dec = list_decode(code, r);
        const OracleResult orc = oracle_closest(code, r);
        require(dec.distance == orc.min_distance,
                "distance mismatch at word " + std::to_string(w));
        require(same_entry_set(dec.entries, orc.closest),
                "set mismatch at word " + std::to_string(w));
    }
}

// --- criterion 4: unique decoding, 500 seeded trials -----------------------

void criterion4() {
    std::mt19937_64 rng(0xACCE5504);
    const std::vector<FieldPtr> fields = {Field::make(2, 4), Field::make(2, 5), Field::make(2, 6)};
    for (int trial = 0; trial < 500; ++trial) {
        const FieldPtr& F = fields[static_cast<std::size_t>(trial % 3)];
        const int n = F->m();
        const int k = 1 + static_cast<int>(rng() % (n - 1));
        const Code code = Code::standard(F, n, k);
        const LinPoly msg = random_poly(F, k - 1, rng);
        const int tmax = (n - k) / 2;
        const int t = static_cast<int>(rng() % (tmax + 1));
        const Word e = random_error(code, t, rng());
        const Word r = add_words(*F, code.encode(msg), e);

        const DecodeResult dec = list_decode(code, r);
        require(dec.distance == t, "trial " + std::to_string(trial) + ": distance != t");
        require(dec.entries.size() == 1,
                "trial " + std::to_string(trial) + ": list is not a singleton");
        require(dec.entries[0].message == msg,
                "trial " + std::to_string(trial) + ": wrong message");
    }
}

// --- criterion 5: beyond the unique radius, decoder == oracle -------------

void criterion5() {
    std::mt19937_64 rng(0xACCE5505);
    auto F = Field::make(2, 4);
    const Code code = Code::standard(F, 4, 2);  // d = 3
    for (int trial = 0; trial < 100; ++trial) {
        const LinPoly msg = random_poly(F, code.k() - 1, rng);
        const Word c = code.encode(msg);
        const Word e = random_error(code, 2, rng());
        const Word r = add_words(*F, c, e);

        const DecodeResult dec = list_decode(code, r);
        const OracleResult orc = oracle_closest(code, r);
        require(dec.distance == orc.min_distance,
                "trial " + std::to_string(trial) + ": distance mismatch");
        require(same_entry_set(dec.entries, orc.closest),
                "trial " + std::to_string(trial) + ": set mismatch");

        bool oracle_has_c = false;
        for (const auto& entry : orc.closest)
            if (entry.codeword == c) oracle_has_c = true;
        if (oracle_has_c) {
            bool dec_has_c = false;
            for (const auto& entry : dec.entries)
                if (entry.codeword == c) dec_has_c = true;
            require(dec_has_c,
                    "trial " + std::to_string(trial) + ": transmitted codeword missing");
        }
    }
}

// --- criterion 6: ring-operation suite, 1000 randomized instances each ----

void criterion6() {
    std::mt19937_64 rng(0xACCE5506);
    const std::vector<FieldPtr> fields = {f8(), Field::make(2, 4), Field::make(3, 2, {1, 0, 1}),
                                          Field::make(3, 3), Field::make(5, 2)};
    auto pick = [&]() -> const FieldPtr& { return fields[rng() % fields.size()]; };

    for (int i = 0; i < 1000; ++i) {  // division round-trips and uniqueness
        const FieldPtr& F = pick();
        const LinPoly h = random_poly(F, 3, rng);
        const LinPoly g = random_nonzero_poly(F, 3, rng);
        LinPoly r0 = random_poly(F, 3, rng);
        while (!qdeg_lt(r0.qdeg(), *g.qdeg())) r0 = random_poly(F, *g.qdeg(), rng);

        const auto [lh, lr] = left_divide(h.compose(g) + r0, g);
        require(lh == h && lr == r0, "left division round-trip/uniqueness failed");
        const auto [rh, rr] = right_divide(g.compose(h) + r0, g);
        require(rh == h && rr == r0, "right division round-trip/uniqueness failed");
    }

    for (int i = 0; i < 1000; ++i) {  // compose degree-additivity
        const FieldPtr& F = pick();
        const LinPoly a = random_nonzero_poly(F, 4, rng);
        const LinPoly b = random_nonzero_poly(F, 4, rng);
        require(*a.compose(b).qdeg() == *a.qdeg() + *b.qdeg(), "degree additivity failed");
    }

    for (int i = 0; i < 1000; ++i) {  // evaluate o compose homomorphism
        const FieldPtr& F = pick();
        const LinPoly a = random_poly(F, 4, rng);
        const LinPoly b = random_poly(F, 4, rng);
        const FieldElement x = F->from_index(rng() % F->size());
        require(a.compose(b).evaluate(x) == a.evaluate(b.evaluate(x)),
                "composition homomorphism failed");
    }

    for (int i = 0; i < 1000; ++i) {  // annihilator vanishing, exhaustive
        const FieldPtr& F = pick();
        require(F->size() <= 512, "field too large for the exhaustive check");
        const int dim = static_cast<int>(rng() % (F->m() + 1));
        const Word basis = random_independent(F, dim, rng);
        const LinPoly pi = annihilator(F, basis);
        require(pi.is_monic() && *pi.qdeg() == dim, "annihilator degree/monicity failed");
        std::uint64_t zeros = 0;
        for (std::uint64_t idx = 0; idx < F->size(); ++idx)
            if (pi.evaluate(F->from_index(idx)).is_zero()) ++zeros;
        std::uint64_t span_size = 1;
        for (int d = 0; d < dim; ++d) span_size *= F->q();
        require(zeros == span_size, "annihilator does not vanish exactly on the span");
        for (const FieldElement& b : basis)
            require(pi.evaluate(b).is_zero(), "annihilator misses a basis vector");
    }

    for (int i = 0; i < 1000; ++i) {  // q-Lagrange inverts evaluation
        const FieldPtr& F = pick();
        const int n = 2 + static_cast<int>(rng() % (F->m() - 1));
        const Word pts = random_independent(F, n, rng);
        const LinPoly f = random_poly(F, n - 1, rng);
        Word vals;
        for (const FieldElement& p : pts) vals.push_back(f.evaluate(p));
        require(q_lagrange(F, pts, vals) == f, "interpolation failed to invert evaluation");
    }
}

// --- criterion 7: error span polynomial, 500 random pairs ------------------

void criterion7() {
    std::mt19937_64 rng(0xACCE5507);
    const std::vector<FieldPtr> fields = {Field::make(2, 4), Field::make(2, 5), Field::make(2, 6)};
    for (int trial = 0; trial < 500; ++trial) {
        const FieldPtr& F = fields[static_cast<std::size_t>(trial % 3)];
        const int n = F->m();
        const Code code = Code::standard(F, n, 2);
        const int t = static_cast<int>(rng() % (n + 1));
        const Word e = random_error(code, t, rng());
        const Word c = code.encode(random_poly(F, 1, rng));
        const Word r = add_words(*F, c, e);

        const LinPoly D = error_span_poly(F, e);
        require(D.is_monic(), "D is not monic");
        require(*D.qdeg() == t, "qdeg(D) != t");
        for (int i = 0; i < n; ++i)
            require(D.evaluate(r[static_cast<std::size_t>(i)]) ==
                        D.evaluate(c[static_cast<std::size_t>(i)]),
                    "D(r_i) != D(c_i)");
        require(D == annihilator(F, span_basis(*F, e)), "D is not the span annihilator");
    }
}

// --- criterion 8: module membership, both directions ------------------------

void criterion8() {
    std::mt19937_64 rng(0xACCE5508);
    const std::vector<FieldPtr> fields = {f8(), Field::make(2, 4), Field::make(2, 5)};
    for (int trial = 0; trial < 500; ++trial) {
        const FieldPtr& F = fields[static_cast<std::size_t>(trial % 3)];
        const int n = F->m();
        const Code code = Code::standard(F, n, 2);
        const Word r = random_word(F, n, rng);
        const InterpolationBasis ib = interpolation_module(code, r);
        const MinimalBasis mb = minimal_basis(ib, code.k());
        const LinPoly a = random_poly(F, 2, rng);
        const LinPoly b = random_poly(F, 2, rng);
        const ModuleElement f{a.compose(mb.g1.f1) + b.compose(mb.g2.f1),
                              a.compose(mb.g1.f2) + b.compose(mb.g2.f2)};
        require(vanishes_at_points(f, code, r), "left combination leaves the module");
    }

    // Converse, exhaustively at q = 2, m = n = 3: vanishing at the points is
    // exactly membership (remainder-zero reduction against the basis).
    auto F = f8();
    const Code code = Code::standard(F, 3, 2);
    const Word r = random_word(F, 3, rng);
    const InterpolationBasis ib = interpolation_module(code, r);
    for (std::uint64_t key = 0; key < 8 * 8 * 8 * 8 * 8; ++key) {
        std::uint64_t rest = key;
        std::vector<FieldElement> c1(3), c2(2);
        for (auto& c : c1) {
            c = F->from_index(rest % 8);
            rest /= 8;
        }
        for (auto& c : c2) {
            c = F->from_index(rest % 8);
            rest /= 8;
        }
        const ModuleElement e{LinPoly(F, std::move(c1)), LinPoly(F, std::move(c2))};
        require(vanishes_at_points(e, code, r) == in_module(e, ib),
                "vanishing/membership mismatch at pair " + std::to_string(key));
    }
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<void()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "worked-example fixtures (Pi, Lambda, Euclid step, minimal basis)", 0.1, criterion1},
        {2, "worked-example decoding equals the 64-codeword oracle set", 1.0, criterion2},
        {3, "exhaustive oracle equivalence over all 512 received words", 30.0, criterion3},
        {4, "unique decoding: 500 seeded trials, m = n in {4,5,6}", 60.0, criterion4},
        {5, "beyond the unique radius: 100 rank-2-error trials vs oracle", 120.0, criterion5},
        {6, "ring-operation suite: 1000 randomized instances per property", 120.0, criterion6},
        {7, "error span polynomial: 500 random (codeword, error) pairs", 120.0, criterion7},
        {8, "module membership: 500 combinations + exhaustive converse", 120.0, criterion8},
    };

    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);
    if (only < 0 || only > static_cast<int>(criteria.size())) {
        std::fprintf(stderr, "usage: acceptance [1-%zu]\n", criteria.size());
        return 2;
    }

    bool all_ok = true;
    for (const Criterion& c : criteria) {
        if (only != 0 && c.id != only) continue;
        const auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            c.run();
        } catch (const Failure& f) {
            failure = f.what;
        } catch (const std::exception& e) {
            failure = e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_budget = elapsed < c.budget_seconds;
        const bool ok = failure.empty() && in_budget;
        all_ok = all_ok && ok;
        std::printf("%s  criterion %d: %s  (%.3fs < %.1fs)%s%s\n", ok ? "PASS" : "FAIL", c.id,
                    c.name, elapsed, c.budget_seconds, failure.empty() ? "" : " -- ",
                    failure.c_str());
    }
    return all_ok ? 0 : 1;
}
