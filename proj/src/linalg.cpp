#include "gabidulin/linalg.hpp"

#include <utility>

namespace gabidulin {

namespace {

Digit fq_inv(Digit a, Digit q) {
    long long t = 0, new_t = 1, r = q, new_r = a % q;
    while (new_r != 0) {
        long long quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    return static_cast<Digit>(((t % q) + q) % q);
}

// Row echelon form in place; returns pivot columns. First-nonzero pivoting.
std::vector<int> echelon(MatFq& M) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < M.cols && row < M.rows; ++col) {
        int pivot = -1;
        for (int i = row; i < M.rows; ++i)
            if (M.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < M.cols; ++j) std::swap(M.at(pivot, j), M.at(row, j));
        const Digit inv = fq_inv(M.at(row, col), M.q);
        for (int j = 0; j < M.cols; ++j)
            M.at(row, j) = static_cast<Digit>(static_cast<std::uint64_t>(M.at(row, j)) * inv % M.q);
        for (int i = 0; i < M.rows; ++i) {
            if (i == row || M.at(i, col) == 0) continue;
            const Digit c = M.at(i, col);
            for (int j = 0; j < M.cols; ++j) {
                std::uint64_t v = M.at(i, j) + static_cast<std::uint64_t>(M.q - c) * M.at(row, j);
                M.at(i, j) = static_cast<Digit>(v % M.q);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

MatFq MatFq::zeros(int rows, int cols, Digit q) {
    MatFq M;
    M.rows = rows;
    M.cols = cols;
    M.q = q;
    M.a.assign(static_cast<std::size_t>(rows) * cols, 0);
    return M;
}

MatFqm MatFqm::zeros(FieldPtr f, int rows, int cols) {
    MatFqm M;
    M.rows = rows;
    M.cols = cols;
    M.a.assign(static_cast<std::size_t>(rows) * cols, f->zero());
    M.field = std::move(f);
    return M;
}

int rank_q(MatFq M) { return static_cast<int>(echelon(M).size()); }

std::vector<std::vector<Digit>> kernel_basis(MatFq M) {
    const int n = M.cols;
    const std::vector<int> pivots = echelon(M);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Digit>> basis;
    for (int free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Digit> v(n, 0);
        v[free_col] = 1;
        // Each pivot row reads: x_pivot + sum over later columns = 0.
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            const Digit c = M.at(static_cast<int>(r), free_col);
            v[pivots[r]] = c == 0 ? 0 : M.q - c;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

MatFq expand(const Field& F, std::span<const FieldElement> v) {
    MatFq M = MatFq::zeros(F.m(), static_cast<int>(v.size()), F.q());
    for (int j = 0; j < M.cols; ++j) {
        F.check(v[j]);
        for (int i = 0; i < M.rows; ++i) M.at(i, j) = v[j].digits()[i];
    }
    return M;
}

int rank_distance(const Field& F, const Word& x, const Word& y) {
    if (x.size() != y.size())
        throw Error(errc::length_mismatch, "rank_distance needs equal-length words");
    Word diff(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) diff[i] = F.sub(x[i], y[i]);
    return rank_q(expand(F, diff));
}

MatFqm moore_matrix(const FieldPtr& F, const Word& v, int k) {
    if (k < 1) throw Error(errc::bad_params, "Moore matrix needs k >= 1");
    MatFqm M = MatFqm::zeros(F, k, static_cast<int>(v.size()));
    for (int j = 0; j < M.cols; ++j) {
        M.at(0, j) = v[j];
        F->check(v[j]);
        for (int i = 1; i < k; ++i) M.at(i, j) = F->frobenius(v[j], i);
    }
    return M;
}

Word solve(const MatFqm& A, const Word& b) {
    if (A.rows != A.cols) throw Error(errc::bad_params, "solve needs a square matrix");
    if (static_cast<int>(b.size()) != A.rows)
        throw Error(errc::length_mismatch, "right-hand side has wrong length");
    const Field& F = *A.field;
    const int n = A.rows;
    MatFqm M = A;
    Word rhs = b;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (!M.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw Error(errc::singular, "matrix is singular");
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(M.at(pivot, j), M.at(col, j));
            std::swap(rhs[pivot], rhs[col]);
        }
        const FieldElement inv = F.inv(M.at(col, col));
        for (int j = 0; j < n; ++j) M.at(col, j) = F.mul(M.at(col, j), inv);
        rhs[col] = F.mul(rhs[col], inv);
        for (int i = 0; i < n; ++i) {
            if (i == col || M.at(i, col).is_zero()) continue;
            const FieldElement c = M.at(i, col);
            for (int j = 0; j < n; ++j)
                M.at(i, j) = F.sub(M.at(i, j), F.mul(c, M.at(col, j)));
            rhs[i] = F.sub(rhs[i], F.mul(c, rhs[col]));
        }
    }
    return rhs;
}

int rank_fqm(MatFqm A) {
    const Field& F = *A.field;
    int rank = 0;
    for (int col = 0; col < A.cols && rank < A.rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < A.rows; ++i)
            if (!A.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < A.cols; ++j) std::swap(A.at(pivot, j), A.at(rank, j));
        const FieldElement inv = F.inv(A.at(rank, col));
        for (int j = 0; j < A.cols; ++j) A.at(rank, j) = F.mul(A.at(rank, j), inv);
        for (int i = 0; i < A.rows; ++i) {
            if (i == rank || A.at(i, col).is_zero()) continue;
            const FieldElement c = A.at(i, col);
            for (int j = 0; j < A.cols; ++j) A.at(i, j) = F.sub(A.at(i, j), F.mul(c, A.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

}  // namespace gabidulin
