#include "gabidulin/code.hpp"

#include <random>

#include "gabidulin/linalg.hpp"

namespace gabidulin {

Code::Code(FieldPtr f, int n, int k, Word g)
    : field_(std::move(f)), n_(n), k_(k), g_(std::move(g)) {
    if (n_ < 1 || n_ > field_->m())
        throw Error(errc::bad_params, "code length must satisfy 1 <= n <= m");
    if (k_ < 1 || k_ > n_) throw Error(errc::bad_params, "dimension must satisfy 1 <= k <= n");
    if (static_cast<int>(g_.size()) != n_)
        throw Error(errc::bad_params, "g must have exactly n entries");
    for (const FieldElement& e : g_) field_->check(e);
    if (rank_q(expand(*field_, g_)) != n_)
        throw Error(errc::dependent_g, "evaluation points are linearly dependent over F_q");
}

Code Code::standard(FieldPtr f, int n, int k) {
    Word g;
    for (int i = 0; i < n; ++i) g.push_back(f->alpha_pow(static_cast<std::uint64_t>(i)));
    return Code(std::move(f), n, k, std::move(g));
}

LinPoly Code::message(const std::vector<FieldElement>& coeffs) const {
    if (static_cast<int>(coeffs.size()) > k_)
        throw Error(errc::degree_too_high, "message has more than k coefficients");
    return LinPoly(field_, coeffs);
}

Word Code::encode(const LinPoly& msg) const {
    require_same_field(*field_, *msg.field());
    if (!qdeg_lt(msg.qdeg(), k_))
        throw Error(errc::degree_too_high, "message q-degree must be below k");
    Word c(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) c[static_cast<std::size_t>(i)] = msg.evaluate(g_[static_cast<std::size_t>(i)]);
    return c;
}

Word Code::encode(const std::vector<FieldElement>& coeffs) const { return encode(message(coeffs)); }

Word random_error(const Code& code, int t, std::uint64_t seed) {
    const Field& F = *code.field();
    const int m = F.m();
    const int n = code.n();
    if (t < 0 || t > std::min(m, n))
        throw Error(errc::rank_out_of_range, "error rank must satisfy 0 <= t <= min(m, n)");
    Word e(static_cast<std::size_t>(n), F.zero());
    if (t == 0) return e;

    std::mt19937_64 rng(seed);
    auto sample_full_rank = [&](int rows, int cols) {
        // Rejection sampling; a random matrix is full rank with high probability.
        while (true) {
            MatFq M = MatFq::zeros(rows, cols, F.q());
            for (Digit& v : M.a) v = static_cast<Digit>(rng() % F.q());
            if (rank_q(M) == std::min(rows, cols)) return M;
        }
    };
    const MatFq A = sample_full_rank(m, t);
    const MatFq B = sample_full_rank(t, n);
    for (int j = 0; j < n; ++j) {
        std::vector<Digit> col(static_cast<std::size_t>(m), 0);
        for (int i = 0; i < m; ++i) {
            std::uint64_t acc = 0;
            for (int l = 0; l < t; ++l)
                acc += static_cast<std::uint64_t>(A.at(i, l)) * B.at(l, j);
            col[static_cast<std::size_t>(i)] = static_cast<Digit>(acc % F.q());
        }
        e[static_cast<std::size_t>(j)] = FieldElement(std::move(col));
    }
    return e;
}

Word span_basis(const Field& F, const Word& e) {
    // Greedily keep the entries that grow the rank; rank_q is cheap at this
    // scale and keeps the elimination logic in one place.
    Word basis;
    for (const FieldElement& v : e) {
        if (v.is_zero()) continue;
        basis.push_back(v);
        if (rank_q(expand(F, basis)) != static_cast<int>(basis.size())) basis.pop_back();
    }
    return basis;
}

LinPoly error_span_poly(const FieldPtr& F, const Word& e) {
    const Word basis = span_basis(*F, e);
    return annihilator(F, basis);
}

}  // namespace gabidulin
