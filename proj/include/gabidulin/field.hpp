// The extension field F_{q^m} = F_q[alpha]/(modulus) with q prime, and its
// elements as coefficient vectors over F_q. Elements are plain immutable
// values; all arithmetic lives on Field so that one context can be shared.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gabidulin/error.hpp"

namespace gabidulin {

using Digit = std::uint32_t;

// (v_1,...,v_m) with v_i in {0,...,q-1}, representing sum v_i alpha^{i-1}.
class FieldElement {
  public:
    FieldElement() = default;
    explicit FieldElement(std::vector<Digit> digits) : d_(std::move(digits)) {}

    const std::vector<Digit>& digits() const { return d_; }

    bool is_zero() const {
        for (Digit v : d_)
            if (v != 0) return false;
        return true;
    }

    bool operator==(const FieldElement&) const = default;
    auto operator<=>(const FieldElement&) const = default;

  private:
    std::vector<Digit> d_;
};

using Word = std::vector<FieldElement>;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
  public:
    // Validates q prime, modulus monic of degree m and irreducible over F_q
    // (by trial division against all monic polynomials of degree <= m/2).
    Field(Digit q, int m, std::vector<Digit> modulus);

    static FieldPtr make(Digit q, int m, std::vector<Digit> modulus);
    static FieldPtr make(Digit q, int m);  // canonical modulus for (q, m)

    // Lowest-index monic irreducible of degree m (x^3+x+1 for F_8); x-1 for m=1.
    static std::vector<Digit> default_modulus(Digit q, int m);
    static bool is_irreducible(Digit q, const std::vector<Digit>& poly);

    Digit q() const { return q_; }
    int m() const { return m_; }
    const std::vector<Digit>& modulus() const { return modulus_; }
    std::uint64_t size() const { return size_; }  // q^m

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement alpha() const;
    FieldElement from_digits(const std::vector<Digit>& v) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;
    FieldElement pow(const FieldElement& a, std::uint64_t e) const;
    FieldElement scalar_mul(Digit c, const FieldElement& a) const;  // c in F_q

    // a^(q^i); the exponent is taken mod m since x -> x^q has order dividing m.
    FieldElement frobenius(const FieldElement& a, long i) const;
    FieldElement frobenius_inv(const FieldElement& a, long i) const;

    // Mixed-radix packing sum v_i q^(i-1); a bijection onto [0, q^m).
    std::uint64_t index(const FieldElement& a) const;
    FieldElement from_index(std::uint64_t idx) const;

    // Discrete-log tables exist when alpha is primitive and q^m is small.
    bool has_exp_table() const { return !exp_.empty(); }
    std::optional<std::uint64_t> log_alpha(const FieldElement& a) const;
    FieldElement alpha_pow(std::uint64_t e) const;

    // "0", "1", "a", "a^5" when the exp table exists, else "(1,0,1)".
    std::string to_string(const FieldElement& a) const;
    std::string digits_string(const FieldElement& a) const;

    // Throws wrong_length / digit_out_of_range.
    void check(const FieldElement& a) const;

    bool operator==(const Field& other) const {
        return q_ == other.q_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

  private:
    Digit q_;
    int m_;
    std::vector<Digit> modulus_;  // digits low-to-high, length m+1, leading 1
    std::uint64_t size_;

    // frob_[i] is the m x m matrix over F_q of x -> x^(q^i), row-major.
    std::vector<std::vector<Digit>> frob_;

    std::vector<std::uint32_t> exp_;  // exp_[e] = index(alpha^e)
    std::vector<std::int32_t> log_;   // log_[index] = e, -1 for zero

    std::vector<Digit> reduce(std::vector<Digit> p) const;
    FieldElement apply_fq_matrix(const std::vector<Digit>& mat, const FieldElement& a) const;
    void build_frobenius();
    void build_tables();
};

// Requires the two contexts to describe the same field.
void require_same_field(const Field& a, const Field& b);

}  // namespace gabidulin
