#include "gabidulin/field.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace gabidulin {

namespace {

constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 40;
constexpr std::uint64_t kTableCap = std::uint64_t{1} << 20;

bool is_prime(Digit n) {
    if (n < 2) return false;
    for (Digit d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Digit fq_add(Digit a, Digit b, Digit q) { return (a + b) % q; }
Digit fq_sub(Digit a, Digit b, Digit q) { return (a + q - b) % q; }
Digit fq_mul(Digit a, Digit b, Digit q) {
    return static_cast<Digit>(static_cast<std::uint64_t>(a) * b % q);
}

Digit fq_inv(Digit a, Digit q) {
    // Extended Euclid on integers; a != 0 mod q, q prime.
    long long t = 0, new_t = 1, r = q, new_r = a % q;
    while (new_r != 0) {
        long long quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    return static_cast<Digit>(((t % q) + q) % q);
}

// Polynomials over F_q as digit vectors, low-to-high.
using FqPoly = std::vector<Digit>;

void fq_trim(FqPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// p mod d, d monic after normalization (d must be nonzero).
FqPoly fq_mod(FqPoly p, const FqPoly& d, Digit q) {
    fq_trim(p);
    const int dd = static_cast<int>(d.size()) - 1;
    const Digit lead_inv = fq_inv(d.back(), q);
    while (static_cast<int>(p.size()) - 1 >= dd) {
        const int shift = static_cast<int>(p.size()) - 1 - dd;
        const Digit c = fq_mul(p.back(), lead_inv, q);
        for (int i = 0; i <= dd; ++i)
            p[shift + i] = fq_sub(p[shift + i], fq_mul(c, d[i], q), q);
        fq_trim(p);
        if (p.empty()) break;
    }
    return p;
}

FqPoly fq_polymul(const FqPoly& a, const FqPoly& b, Digit q) {
    if (a.empty() || b.empty()) return {};
    FqPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = fq_add(out[i + j], fq_mul(a[i], b[j], q), q);
    }
    return out;
}

}  // namespace

bool Field::is_irreducible(Digit q, const std::vector<Digit>& poly) {
    FqPoly p = poly;
    fq_trim(p);
    const int m = static_cast<int>(p.size()) - 1;
    if (m < 1) return false;
    // Any factorization has a monic factor of degree <= m/2; try them all.
    for (int d = 1; 2 * d <= m; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= q;
        for (std::uint64_t c = 0; c < count; ++c) {
            FqPoly div(d + 1, 0);
            std::uint64_t rest = c;
            for (int i = 0; i < d; ++i) {
                div[i] = static_cast<Digit>(rest % q);
                rest /= q;
            }
            div[d] = 1;
            if (fq_mod(p, div, q).empty()) return false;
        }
    }
    return true;
}

std::vector<Digit> Field::default_modulus(Digit q, int m) {
    if (!is_prime(q)) throw Error(errc::not_prime, "q = " + std::to_string(q));
    if (m < 1) throw Error(errc::bad_params, "extension degree must be >= 1");
    if (m == 1) return {q - 1, 1};  // x - 1, so alpha = 1
    std::uint64_t count = 1;
    for (int i = 0; i < m; ++i) {
        count *= q;
        if (count > kMaxFieldSize)
            throw Error(errc::bad_params, "q^m exceeds the supported field size");
    }
    for (std::uint64_t c = 0; c < count; ++c) {
        std::vector<Digit> mod(m + 1, 0);
        std::uint64_t rest = c;
        for (int i = 0; i < m; ++i) {
            mod[i] = static_cast<Digit>(rest % q);
            rest /= q;
        }
        mod[m] = 1;
        if (is_irreducible(q, mod)) return mod;
    }
    throw Error(errc::internal, "no irreducible polynomial found");  // unreachable
}

Field::Field(Digit q, int m, std::vector<Digit> modulus)
    : q_(q), m_(m), modulus_(std::move(modulus)) {
    if (!is_prime(q_)) throw Error(errc::not_prime, "q = " + std::to_string(q_));
    if (m_ < 1) throw Error(errc::bad_params, "extension degree must be >= 1");
    if (modulus_.size() != static_cast<std::size_t>(m_) + 1)
        throw Error(errc::degree_mismatch,
                    "modulus must have exactly m+1 = " + std::to_string(m_ + 1) + " digits");
    for (Digit d : modulus_)
        if (d >= q_) throw Error(errc::digit_out_of_range, "modulus digit >= q");
    if (modulus_.back() != 1)
        throw Error(errc::degree_mismatch, "modulus must be monic of degree m");
    size_ = 1;
    for (int i = 0; i < m_; ++i) {
        size_ *= q_;
        if (size_ > kMaxFieldSize)
            throw Error(errc::bad_params, "q^m exceeds the supported field size");
    }
    if (!is_irreducible(q_, modulus_))
        throw Error(errc::not_irreducible, "modulus is reducible over F_q");
    build_frobenius();
    build_tables();
}

FieldPtr Field::make(Digit q, int m, std::vector<Digit> modulus) {
    return std::make_shared<const Field>(q, m, std::move(modulus));
}

FieldPtr Field::make(Digit q, int m) { return make(q, m, default_modulus(q, m)); }

void Field::check(const FieldElement& a) const {
    if (a.digits().size() != static_cast<std::size_t>(m_))
        throw Error(errc::wrong_length, "element must have exactly m = " + std::to_string(m_) +
                                            " digits, got " + std::to_string(a.digits().size()));
    for (Digit d : a.digits())
        if (d >= q_) throw Error(errc::digit_out_of_range, "digit >= q");
}

FieldElement Field::zero() const { return FieldElement(std::vector<Digit>(m_, 0)); }

FieldElement Field::one() const {
    std::vector<Digit> d(m_, 0);
    d[0] = 1;
    return FieldElement(std::move(d));
}

FieldElement Field::alpha() const {
    if (m_ == 1) {
        // alpha is the residue of x, a scalar here: x = -modulus[0].
        return FieldElement({fq_sub(0, modulus_[0], q_)});
    }
    std::vector<Digit> d(m_, 0);
    d[1] = 1;
    return FieldElement(std::move(d));
}

FieldElement Field::from_digits(const std::vector<Digit>& v) const {
    FieldElement e(v);
    check(e);
    return e;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    std::vector<Digit> d(m_);
    for (int i = 0; i < m_; ++i) d[i] = fq_add(a.digits()[i], b.digits()[i], q_);
    return FieldElement(std::move(d));
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    std::vector<Digit> d(m_);
    for (int i = 0; i < m_; ++i) d[i] = fq_sub(a.digits()[i], b.digits()[i], q_);
    return FieldElement(std::move(d));
}

FieldElement Field::neg(const FieldElement& a) const {
    check(a);
    std::vector<Digit> d(m_);
    for (int i = 0; i < m_; ++i) d[i] = fq_sub(0, a.digits()[i], q_);
    return FieldElement(std::move(d));
}

FieldElement Field::scalar_mul(Digit c, const FieldElement& a) const {
    check(a);
    if (c >= q_) throw Error(errc::digit_out_of_range, "scalar >= q");
    std::vector<Digit> d(m_);
    for (int i = 0; i < m_; ++i) d[i] = fq_mul(c, a.digits()[i], q_);
    return FieldElement(std::move(d));
}

std::vector<Digit> Field::reduce(std::vector<Digit> p) const {
    p = fq_mod(std::move(p), modulus_, q_);
    p.resize(m_, 0);
    return p;
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    return FieldElement(reduce(fq_polymul(a.digits(), b.digits(), q_)));
}

FieldElement Field::inv(const FieldElement& a) const {
    check(a);
    if (a.is_zero()) throw Error(errc::division_by_zero, "inverse of zero");
    // Extended Euclid in F_q[x] against the modulus.
    FqPoly r = modulus_, new_r = a.digits();
    fq_trim(new_r);
    FqPoly t, new_t = {1};
    while (!new_r.empty()) {
        // Divide r by new_r.
        FqPoly quot;
        {
            FqPoly rem = r;
            fq_trim(rem);
            const int dd = static_cast<int>(new_r.size()) - 1;
            const Digit lead_inv = fq_inv(new_r.back(), q_);
            quot.assign(rem.size() > new_r.size() ? rem.size() - new_r.size() + 1 : 1, 0);
            while (static_cast<int>(rem.size()) - 1 >= dd && !rem.empty()) {
                const int shift = static_cast<int>(rem.size()) - 1 - dd;
                const Digit c = fq_mul(rem.back(), lead_inv, q_);
                quot[shift] = c;
                for (int i = 0; i <= dd; ++i)
                    rem[shift + i] = fq_sub(rem[shift + i], fq_mul(c, new_r[i], q_), q_);
                fq_trim(rem);
            }
            r = std::exchange(new_r, rem);
        }
        // t, new_t = new_t, t - quot * new_t
        FqPoly prod = fq_polymul(quot, new_t, q_);
        FqPoly next(std::max(t.size(), prod.size()), 0);
        for (std::size_t i = 0; i < next.size(); ++i) {
            Digit ti = i < t.size() ? t[i] : 0;
            Digit pi = i < prod.size() ? prod[i] : 0;
            next[i] = fq_sub(ti, pi, q_);
        }
        fq_trim(next);
        t = std::exchange(new_t, next);
    }
    // r is now gcd = nonzero constant; scale t by its inverse.
    const Digit scale = fq_inv(r.empty() ? 1 : r[0], q_);
    FqPoly out(m_, 0);
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = fq_mul(t[i], scale, q_);
    return FieldElement(std::move(out));
}

FieldElement Field::pow(const FieldElement& a, std::uint64_t e) const {
    check(a);
    FieldElement base = a;
    FieldElement acc = one();
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

FieldElement Field::apply_fq_matrix(const std::vector<Digit>& mat, const FieldElement& a) const {
    std::vector<Digit> out(m_, 0);
    for (int i = 0; i < m_; ++i) {
        std::uint64_t acc = 0;
        for (int j = 0; j < m_; ++j)
            acc += static_cast<std::uint64_t>(mat[static_cast<std::size_t>(i) * m_ + j]) *
                   a.digits()[j];
        out[i] = static_cast<Digit>(acc % q_);
    }
    return FieldElement(std::move(out));
}

void Field::build_frobenius() {
    // Base matrix of x -> x^q: column j holds the digits of (alpha^j)^q.
    std::vector<Digit> base(static_cast<std::size_t>(m_) * m_, 0);
    for (int j = 0; j < m_; ++j) {
        std::vector<Digit> monomial(m_, 0);
        monomial[j] = 1;
        FieldElement img = pow(FieldElement(monomial), q_);
        for (int i = 0; i < m_; ++i) base[static_cast<std::size_t>(i) * m_ + j] = img.digits()[i];
    }
    frob_.resize(m_);
    frob_[0].assign(static_cast<std::size_t>(m_) * m_, 0);
    for (int i = 0; i < m_; ++i) frob_[0][static_cast<std::size_t>(i) * m_ + i] = 1;
    for (int p = 1; p < m_; ++p) {
        frob_[p].assign(static_cast<std::size_t>(m_) * m_, 0);
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j) {
                std::uint64_t acc = 0;
                for (int l = 0; l < m_; ++l)
                    acc += static_cast<std::uint64_t>(base[static_cast<std::size_t>(i) * m_ + l]) *
                           frob_[p - 1][static_cast<std::size_t>(l) * m_ + j];
                frob_[p][static_cast<std::size_t>(i) * m_ + j] = static_cast<Digit>(acc % q_);
            }
    }
}

void Field::build_tables() {
    if (size_ > kTableCap) return;
    std::vector<std::uint32_t> exp;
    std::vector<std::int32_t> log(size_, -1);
    exp.reserve(size_ - 1);
    FieldElement cur = one();
    const FieldElement a = alpha();
    for (std::uint64_t e = 0; e < size_ - 1; ++e) {
        if (e > 0 && cur == one()) return;  // alpha is not primitive
        const std::uint64_t idx = index(cur);
        exp.push_back(static_cast<std::uint32_t>(idx));
        log[idx] = static_cast<std::int32_t>(e);
        cur = mul(cur, a);
    }
    if (!(cur == one())) return;
    exp_ = std::move(exp);
    log_ = std::move(log);
}

FieldElement Field::frobenius(const FieldElement& a, long i) const {
    check(a);
    const long p = ((i % m_) + m_) % m_;
    return apply_fq_matrix(frob_[static_cast<std::size_t>(p)], a);
}

FieldElement Field::frobenius_inv(const FieldElement& a, long i) const {
    return frobenius(a, m_ - ((i % m_) + m_) % m_);
}

std::uint64_t Field::index(const FieldElement& a) const {
    check(a);
    std::uint64_t idx = 0;
    for (int i = m_ - 1; i >= 0; --i) idx = idx * q_ + a.digits()[i];
    return idx;
}

FieldElement Field::from_index(std::uint64_t idx) const {
    if (idx >= size_) throw Error(errc::bad_params, "element index out of range");
    std::vector<Digit> d(m_);
    for (int i = 0; i < m_; ++i) {
        d[i] = static_cast<Digit>(idx % q_);
        idx /= q_;
    }
    return FieldElement(std::move(d));
}

std::optional<std::uint64_t> Field::log_alpha(const FieldElement& a) const {
    check(a);
    if (!has_exp_table() || a.is_zero()) return std::nullopt;
    return static_cast<std::uint64_t>(log_[index(a)]);
}

FieldElement Field::alpha_pow(std::uint64_t e) const {
    if (has_exp_table()) return from_index(exp_[e % (size_ - 1)]);
    return pow(alpha(), e);
}

std::string Field::digits_string(const FieldElement& a) const {
    check(a);
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < m_; ++i) {
        if (i) os << ',';
        os << a.digits()[i];
    }
    os << ')';
    return os.str();
}

std::string Field::to_string(const FieldElement& a) const {
    check(a);
    if (a.is_zero()) return "0";
    if (auto e = log_alpha(a)) {
        if (*e == 0) return "1";
        if (*e == 1) return "a";
        return "a^" + std::to_string(*e);
    }
    if (a == one()) return "1";
    return digits_string(a);
}

void require_same_field(const Field& a, const Field& b) {
    if (!(a == b)) throw Error(errc::field_mismatch, "operands belong to different fields");
}

}  // namespace gabidulin
