// q-linearized polynomials f(x) = sum a_i x^(q^i) over F_{q^m}: the
// non-commutative ring under addition and composition, with symbolic left
// and right division, annihilators of subspaces, q-Lagrange interpolation
// and root-space computation.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gabidulin/field.hpp"

namespace gabidulin {

class LinPoly {
  public:
    LinPoly() = default;
    explicit LinPoly(FieldPtr f) : field_(std::move(f)) {}
    // Coefficients low-to-high; trailing zeros are trimmed. Empty = zero.
    LinPoly(FieldPtr f, std::vector<FieldElement> coeffs);

    static LinPoly identity(FieldPtr f);                            // x
    static LinPoly monomial(FieldPtr f, int i, FieldElement c);     // c x^(q^i)

    const FieldPtr& field() const { return field_; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const;

    // qdeg(0) is bottom (nullopt), smaller than every integer.
    std::optional<int> qdeg() const {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<int>(coeffs_.size()) - 1;
    }

    // Coefficient of x^(q^i); zero beyond the degree.
    FieldElement coeff(int i) const;

    FieldElement evaluate(const FieldElement& x) const;

    LinPoly operator+(const LinPoly& rhs) const;
    LinPoly operator-(const LinPoly& rhs) const;
    LinPoly operator-() const;
    LinPoly scaled(const FieldElement& c) const;

    // this(rhs(x)); qdeg is additive for nonzero operands.
    LinPoly compose(const LinPoly& rhs) const;

    bool operator==(const LinPoly& rhs) const;

    // "a^2*x^4 + a^5*x" style; powers of x are q^i.
    std::string to_string() const;

  private:
    FieldPtr field_;
    std::vector<FieldElement> coeffs_;

    void trim();
};

// True when d <= bound, treating nullopt as bottom.
inline bool qdeg_le(std::optional<int> d, long bound) { return !d.has_value() || *d <= bound; }
inline bool qdeg_lt(std::optional<int> d, long bound) { return !d.has_value() || *d < bound; }

// f = h o g + r with qdeg(r) < qdeg(g); throws divisor_zero.
std::pair<LinPoly, LinPoly> left_divide(const LinPoly& f, const LinPoly& g);

// f = g o m + r with qdeg(r) < qdeg(g); throws divisor_zero. Each step
// extracts a coefficient through the inverse Frobenius, which is exact
// because x -> x^q is bijective on a finite field.
std::pair<LinPoly, LinPoly> right_divide(const LinPoly& f, const LinPoly& g);

// Monic polynomial of q-degree |basis| vanishing exactly on the F_q-span
// of the basis; built iteratively, one basis vector at a time. Throws
// dependent_basis. annihilator(F, {}) = x.
LinPoly annihilator(const FieldPtr& F, std::span<const FieldElement> basis);

// Unique polynomial of qdeg <= n-1 with Lambda(g_i) = r_i, computed by
// solving the n x n Moore system. Throws dependent_evaluation_points.
LinPoly q_lagrange(const FieldPtr& F, const Word& g, const Word& r);

// F_q-basis of {beta in F_{q^m} : f(beta) = 0}; throws zero_polynomial.
std::vector<FieldElement> root_space(const LinPoly& f);

}  // namespace gabidulin
