#pragma once

#include <cstddef>
#include <vector>

#include "anyon/execution.hpp"
#include "anyon/lattice.hpp"
#include "anyon/poly.hpp"
#include "anyon/poly_matrix.hpp"

namespace anyon {

/// p x q 0/1 matrix with ones exactly where (column - row) == s, 1-based.
PolyMatrix j_matrix(std::size_t p, std::size_t q, long s);

/// A_m = J_{m,m;0} - t J_{m,m;-1}
PolyMatrix a_block(std::size_t m);
/// E_p = -t J_{p,p-1;0}
PolyMatrix e_block(std::size_t p);
/// E'_p = -t J_{p,p+1;1}
PolyMatrix e_prime_block(std::size_t p);

/// Block-tridiagonal system matrix F_k: diagonal A_{k+1}, ..., A_1, superdiagonal
/// E_{k+1}, ..., E_2, subdiagonal E'_k, ..., E'_1. Row and column r correspond
/// to the vertex at canonical index r.
PolyMatrix build_system(int k);

/// Generating functions F_{i,j}(t;k) for every vertex of D_k plus det(F_k).
struct GenFnSolution {
    int k = 0;
    std::vector<RationalFn> solutions;  // canonical vertex order
    IntPoly determinant;                // constant term +1
    std::vector<IntPoly> numerators;    // x_v * determinant, before reduction

    const RationalFn& at(Vertex v) const { return solutions.at(vertex_index(v, k)); }
};

/// Solves F_k x = e_1 by fraction-free elimination.
GenFnSolution solve_system(int k, Execution exec = Execution::parallel);

/// det(F_k), sign-normalized so the constant term is +1.
IntPoly system_det(int k, Execution exec = Execution::parallel);

/// det(m) * m^{-1} and det(m) for a square polynomial matrix, with det's
/// constant term made positive when nonzero (the adjugate follows the same sign).
struct ScaledInverse {
    PolyMatrix adjugate;
    IntPoly determinant;
};
ScaledInverse scaled_inverse(const PolyMatrix& m);

}  // namespace anyon
