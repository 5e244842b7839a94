#pragma once

// Data-parallel kernels and their serial reference twins. The serial versions
// are the straightforward transcriptions; tests and bench/ compare the two.

#include <cstddef>
#include <vector>

#include "anyon/execution.hpp"
#include "anyon/lattice.hpp"
#include "anyon/poly.hpp"
#include "anyon/poly_matrix.hpp"

namespace anyon::kernels {

/// One round of the path recurrence: next[v] = sum of prev[u] over predecessors u of v.
void path_step_serial(const Lattice& lattice, const std::vector<BigInt>& prev, std::vector<BigInt>& next);
/// Same, split over vertices with OpenMP.
void path_step_omp(const Lattice& lattice, const std::vector<BigInt>& prev, std::vector<BigInt>& next);

inline void path_step(Execution exec, const Lattice& lattice, const std::vector<BigInt>& prev,
                      std::vector<BigInt>& next) {
    exec == Execution::parallel ? path_step_omp(lattice, prev, next) : path_step_serial(lattice, prev, next);
}

/// Result of fraction-free forward elimination on an n x (n + extra) matrix.
/// `upper` holds the upper-triangular form (rows possibly permuted); the
/// determinant of the leading n x n block is sign * upper(n-1, n-1).
struct Elimination {
    PolyMatrix upper;
    std::size_t n = 0;
    int sign = 1;

    IntPoly determinant() const;
};

/// Plain dense Bareiss elimination with row pivoting on zero pivots. Every
/// entry below and right of the pivot is updated at every step.
Elimination bareiss_reference(PolyMatrix m, std::size_t n);

/// Bareiss elimination exploiting sparsity: rows not yet reached by fill-in
/// are scaled lazily by the previous pivot when first touched, zero entries
/// are skipped, and the row updates of each step run under OpenMP when
/// exec == parallel. Produces the same `upper` as bareiss_reference.
Elimination bareiss_banded(PolyMatrix m, std::size_t n, Execution exec = Execution::parallel);

/// Fraction-free back substitution on the augmented column `rhs_col` of an
/// eliminated matrix: returns numerators x_i * det with det = sign * upper(n-1,n-1).
std::vector<IntPoly> back_substitute(const Elimination& e, std::size_t rhs_col);

}  // namespace anyon::kernels
