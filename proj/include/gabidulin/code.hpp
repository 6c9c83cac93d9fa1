// Gabidulin codes: evaluation of linearized polynomials of qdeg < k at n
// F_q-independent points, the additive rank-error channel, and the error
// span polynomial.
#pragma once

#include <cstdint>
#include <vector>

#include "gabidulin/field.hpp"
#include "gabidulin/linpoly.hpp"

namespace gabidulin {

class Code {
  public:
    // Requires n <= m, 1 <= k <= n and g linearly independent over F_q.
    Code(FieldPtr f, int n, int k, Word g);

    // g = (alpha^0, ..., alpha^(n-1)), independent whenever n <= m.
    static Code standard(FieldPtr f, int n, int k);

    const FieldPtr& field() const { return field_; }
    int n() const { return n_; }
    int k() const { return k_; }
    const Word& g() const { return g_; }
    int min_distance() const { return n_ - k_ + 1; }

    // (f(g_1), ..., f(g_n)); requires qdeg(msg) < k.
    Word encode(const LinPoly& msg) const;
    Word encode(const std::vector<FieldElement>& coeffs) const;

    // Coefficient vector (length <= k) normalized to a message polynomial.
    LinPoly message(const std::vector<FieldElement>& coeffs) const;

  private:
    FieldPtr field_;
    int n_;
    int k_;
    Word g_;
};

// Error of rank exactly t: the vector interpretation of A*B with A a random
// full-rank m x t and B a full-rank t x n matrix over F_q (rejection
// sampling). Deterministic for a fixed seed.
Word random_error(const Code& code, int t, std::uint64_t seed);

// The unique monic linearized polynomial whose root space is exactly the
// span of e_1,...,e_n; qdeg = rank(e). D = x for e = 0.
LinPoly error_span_poly(const FieldPtr& F, const Word& e);

// Some F_q-basis of the span of the entries of e.
Word span_basis(const Field& F, const Word& e);

}  // namespace gabidulin
