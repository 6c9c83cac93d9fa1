#include "gabidulin/linpoly.hpp"

#include <sstream>

#include "gabidulin/linalg.hpp"

namespace gabidulin {

namespace {

const Field& ctx(const LinPoly& p) {
    if (!p.field()) throw Error(errc::internal, "polynomial without field context");
    return *p.field();
}

void require_compatible(const LinPoly& a, const LinPoly& b) {
    require_same_field(ctx(a), ctx(b));
}

}  // namespace

LinPoly::LinPoly(FieldPtr f, std::vector<FieldElement> coeffs)
    : field_(std::move(f)), coeffs_(std::move(coeffs)) {
    for (const FieldElement& c : coeffs_) field_->check(c);
    trim();
}

void LinPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

LinPoly LinPoly::identity(FieldPtr f) {
    FieldElement one = f->one();
    return LinPoly(std::move(f), {std::move(one)});
}

LinPoly LinPoly::monomial(FieldPtr f, int i, FieldElement c) {
    if (i < 0) throw Error(errc::bad_params, "negative q-degree");
    std::vector<FieldElement> coeffs(static_cast<std::size_t>(i) + 1, f->zero());
    coeffs[static_cast<std::size_t>(i)] = std::move(c);
    return LinPoly(std::move(f), std::move(coeffs));
}

bool LinPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == field_->one(); }

FieldElement LinPoly::coeff(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return ctx(*this).zero();
    return coeffs_[static_cast<std::size_t>(i)];
}

FieldElement LinPoly::evaluate(const FieldElement& x) const {
    const Field& F = ctx(*this);
    FieldElement acc = F.zero();
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        acc = F.add(acc, F.mul(coeffs_[i], F.frobenius(x, static_cast<long>(i))));
    return acc;
}

LinPoly LinPoly::operator+(const LinPoly& rhs) const {
    require_compatible(*this, rhs);
    const Field& F = ctx(*this);
    std::vector<FieldElement> out(std::max(coeffs_.size(), rhs.coeffs_.size()), F.zero());
    for (std::size_t i = 0; i < out.size(); ++i) {
        FieldElement a = i < coeffs_.size() ? coeffs_[i] : F.zero();
        FieldElement b = i < rhs.coeffs_.size() ? rhs.coeffs_[i] : F.zero();
        out[i] = F.add(a, b);
    }
    return LinPoly(field_, std::move(out));
}

LinPoly LinPoly::operator-(const LinPoly& rhs) const { return *this + (-rhs); }

LinPoly LinPoly::operator-() const {
    const Field& F = ctx(*this);
    std::vector<FieldElement> out = coeffs_;
    for (FieldElement& c : out) c = F.neg(c);
    return LinPoly(field_, std::move(out));
}

LinPoly LinPoly::scaled(const FieldElement& c) const {
    const Field& F = ctx(*this);
    std::vector<FieldElement> out = coeffs_;
    for (FieldElement& v : out) v = F.mul(c, v);
    return LinPoly(field_, std::move(out));
}

LinPoly LinPoly::compose(const LinPoly& rhs) const {
    require_compatible(*this, rhs);
    const Field& F = ctx(*this);
    if (is_zero() || rhs.is_zero()) return LinPoly(field_);
    std::vector<FieldElement> out(coeffs_.size() + rhs.coeffs_.size() - 1, F.zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] = F.add(out[i + j],
                               F.mul(coeffs_[i], F.frobenius(rhs.coeffs_[j], static_cast<long>(i))));
    }
    return LinPoly(field_, std::move(out));
}

bool LinPoly::operator==(const LinPoly& rhs) const {
    if (!field_ || !rhs.field_) return coeffs_ == rhs.coeffs_;
    require_compatible(*this, rhs);
    return coeffs_ == rhs.coeffs_;
}

std::string LinPoly::to_string() const {
    if (is_zero()) return "0";
    const Field& F = ctx(*this);
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
        const FieldElement& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::uint64_t power = 1;
        for (int p = 0; p < i; ++p) power *= F.q();
        const bool is_one = c == F.one();
        if (!is_one) os << F.to_string(c);
        if (i == 0) {
            os << (is_one ? "x" : "*x");
        } else {
            os << (is_one ? "x^" : "*x^") << power;
        }
    }
    return os.str();
}

std::pair<LinPoly, LinPoly> left_divide(const LinPoly& f, const LinPoly& g) {
    require_compatible(f, g);
    if (g.is_zero()) throw Error(errc::divisor_zero, "left division by zero");
    const Field& F = ctx(f);
    const int s = *g.qdeg();
    std::vector<FieldElement> rem = f.coeffs();
    std::vector<FieldElement> quot;
    if (f.qdeg() && *f.qdeg() >= s) quot.assign(static_cast<std::size_t>(*f.qdeg() - s) + 1, F.zero());
    while (!rem.empty() && static_cast<int>(rem.size()) - 1 >= s) {
        const int t = static_cast<int>(rem.size()) - 1 - s;
        // (h_t x^[t]) o g has leading coefficient h_t * g_s^[t] at degree t+s.
        const FieldElement ht = F.mul(rem.back(), F.inv(F.frobenius(g.coeffs()[s], t)));
        quot[static_cast<std::size_t>(t)] = ht;
        for (int j = 0; j <= s; ++j)
            rem[static_cast<std::size_t>(t + j)] =
                F.sub(rem[static_cast<std::size_t>(t + j)], F.mul(ht, F.frobenius(g.coeffs()[j], t)));
        while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    }
    return {LinPoly(f.field(), std::move(quot)), LinPoly(f.field(), std::move(rem))};
}

std::pair<LinPoly, LinPoly> right_divide(const LinPoly& f, const LinPoly& g) {
    require_compatible(f, g);
    if (g.is_zero()) throw Error(errc::divisor_zero, "right division by zero");
    const Field& F = ctx(f);
    const int s = *g.qdeg();
    const FieldElement lead_inv = F.inv(g.coeffs()[s]);
    std::vector<FieldElement> rem = f.coeffs();
    std::vector<FieldElement> quot;
    if (f.qdeg() && *f.qdeg() >= s) quot.assign(static_cast<std::size_t>(*f.qdeg() - s) + 1, F.zero());
    while (!rem.empty() && static_cast<int>(rem.size()) - 1 >= s) {
        const int t = static_cast<int>(rem.size()) - 1 - s;
        // g o (m_t x^[t]) has leading coefficient g_s * m_t^[s] at degree t+s.
        const FieldElement mt = F.frobenius_inv(F.mul(rem.back(), lead_inv), s);
        quot[static_cast<std::size_t>(t)] = mt;
        for (int j = 0; j <= s; ++j)
            rem[static_cast<std::size_t>(t + j)] =
                F.sub(rem[static_cast<std::size_t>(t + j)],
                      F.mul(g.coeffs()[j], F.frobenius(mt, j)));
        while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    }
    return {LinPoly(f.field(), std::move(quot)), LinPoly(f.field(), std::move(rem))};
}

LinPoly annihilator(const FieldPtr& F, std::span<const FieldElement> basis) {
    if (rank_q(expand(*F, basis)) != static_cast<int>(basis.size()))
        throw Error(errc::dependent_basis, "basis is linearly dependent over F_q");
    LinPoly pi = LinPoly::identity(F);
    for (const FieldElement& b : basis) {
        // pi <- pi^q - pi(b)^(q-1) * pi, i.e. compose x^q - c x on the left.
        const FieldElement c = F->pow(pi.evaluate(b), F->q() - 1);
        std::vector<FieldElement> next(pi.coeffs().size() + 1, F->zero());
        for (std::size_t j = 0; j < pi.coeffs().size(); ++j) {
            next[j + 1] = F->add(next[j + 1], F->frobenius(pi.coeffs()[j], 1));
            next[j] = F->sub(next[j], F->mul(c, pi.coeffs()[j]));
        }
        pi = LinPoly(F, std::move(next));
    }
    return pi;
}

LinPoly q_lagrange(const FieldPtr& F, const Word& g, const Word& r) {
    if (g.size() != r.size())
        throw Error(errc::length_mismatch, "interpolation needs matching point/value counts");
    const int n = static_cast<int>(g.size());
    if (n == 0) return LinPoly(F);
    if (rank_q(expand(*F, g)) != n)
        throw Error(errc::dependent_evaluation_points,
                    "evaluation points are linearly dependent over F_q");
    // Lambda(g_j) = sum_i lambda_i g_j^[i] = r_j: the transposed Moore system.
    MatFqm A = MatFqm::zeros(F, n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) A.at(j, i) = F->frobenius(g[static_cast<std::size_t>(j)], i);
    Word lambda = solve(A, r);
    return LinPoly(F, std::move(lambda));
}

std::vector<FieldElement> root_space(const LinPoly& f) {
    if (f.is_zero()) throw Error(errc::zero_polynomial, "root space of the zero polynomial");
    const Field& F = ctx(f);
    const FieldPtr& fp = f.field();
    // Matrix of y -> f(y) over F_q in the basis {alpha^(i-1)}.
    MatFq M = MatFq::zeros(F.m(), F.m(), F.q());
    for (int j = 0; j < F.m(); ++j) {
        std::vector<Digit> monomial(static_cast<std::size_t>(F.m()), 0);
        monomial[static_cast<std::size_t>(j)] = 1;
        const FieldElement img = f.evaluate(FieldElement(std::move(monomial)));
        for (int i = 0; i < F.m(); ++i) M.at(i, j) = img.digits()[i];
    }
    std::vector<FieldElement> basis;
    for (std::vector<Digit>& v : kernel_basis(std::move(M))) basis.push_back(fp->from_digits(v));
    return basis;
}

}  // namespace gabidulin
