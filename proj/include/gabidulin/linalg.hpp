// Exact linear algebra over F_q and F_{q^m}: rank, Moore matrices, rank
// distance and linear-system solving. Elimination pivots on the first
// nonzero entry; there is no magnitude notion in a finite field.
#pragma once

#include <span>
#include <vector>

#include "gabidulin/field.hpp"

namespace gabidulin {

struct MatFq {
    int rows = 0;
    int cols = 0;
    Digit q = 2;
    std::vector<Digit> a;  // row-major, entries reduced mod q

    static MatFq zeros(int rows, int cols, Digit q);

    Digit& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    Digit at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

struct MatFqm {
    FieldPtr field;
    int rows = 0;
    int cols = 0;
    std::vector<FieldElement> a;  // row-major

    static MatFqm zeros(FieldPtr f, int rows, int cols);

    FieldElement& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const FieldElement& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

// Rank over F_q by Gaussian elimination (takes a working copy).
int rank_q(MatFq M);

// Basis of the right null space {x : Mx = 0} over F_q.
std::vector<std::vector<Digit>> kernel_basis(MatFq M);

// m x n matrix whose column i is the digit expansion of v_i.
MatFq expand(const Field& F, std::span<const FieldElement> v);

// rank_q(expand(x - y)); a metric on F_{q^m}^n.
int rank_distance(const Field& F, const Word& x, const Word& y);

// Entry (i, j) = frobenius(v_j, i), rows i = 0..k-1.
MatFqm moore_matrix(const FieldPtr& F, const Word& v, int k);

// Solves A x = b over F_{q^m}; throws singular when A is not invertible.
Word solve(const MatFqm& A, const Word& b);

int rank_fqm(MatFqm A);

}  // namespace gabidulin
