#include "anyon/genfunc.hpp"

#include <stdexcept>
#include <string>

#include "anyon/errors.hpp"
#include "anyon/kernels.hpp"

namespace anyon {

namespace {

// +1 unless p has a negative constant term (or, failing that, leading coefficient).
int normalizing_sign(const IntPoly& p) {
    if (p.is_zero()) return 1;
    const BigInt c0 = p.coeff(0);
    if (c0 != 0) return c0 < 0 ? -1 : 1;
    return p.leading() < 0 ? -1 : 1;
}

bool is_allowed_entry(const IntPoly& p) {
    return p.is_zero() || p == IntPoly(1) || p == -IntPoly::t();
}

}  // namespace

PolyMatrix j_matrix(std::size_t p, std::size_t q, long s) {
    if (p == 0 || q == 0) throw InvalidArgument("J_{p,q;s} needs p, q >= 1");
    PolyMatrix m(p, q);
    for (std::size_t r = 1; r <= p; ++r)
        for (std::size_t c = 1; c <= q; ++c)
            if (static_cast<long>(c) - static_cast<long>(r) == s) m(r - 1, c - 1) = IntPoly(1);
    return m;
}

PolyMatrix a_block(std::size_t m) { return j_matrix(m, m, 0) - IntPoly::t() * j_matrix(m, m, -1); }

PolyMatrix e_block(std::size_t p) { return -IntPoly::t() * j_matrix(p, p - 1, 0); }

PolyMatrix e_prime_block(std::size_t p) { return -IntPoly::t() * j_matrix(p, p + 1, 1); }

PolyMatrix build_system(int k) {
    require_level(k);
    const std::size_t dim = vertex_count(k);
    PolyMatrix f(dim, dim);
    // Block i (overhang i) holds vertices (i,0..k-i); its size is k+1-i.
    for (int i = 0; i <= k; ++i) {
        const auto size = static_cast<std::size_t>(k + 1 - i);
        const std::size_t off = vertex_index({i, 0}, k);
        f.set_block(off, off, a_block(size));
        if (i < k) f.set_block(off, vertex_index({i + 1, 0}, k), e_block(size));
        if (i > 0) f.set_block(off, vertex_index({i - 1, 0}, k), e_prime_block(size));
    }
    // The inhomogeneous term of the (0,0) equation sits in row 1.
    if (vertex_index({0, 0}, k) != 0 || f(0, 0) != IntPoly(1))
        throw std::logic_error("system matrix: (0,0) equation is not in row 1");
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            if (!is_allowed_entry(f(r, c))) throw std::logic_error("system matrix: unexpected entry");
    return f;
}

GenFnSolution solve_system(int k, Execution exec) {
    const PolyMatrix f = build_system(k);
    const std::size_t dim = f.rows();
    PolyMatrix aug(dim, dim + 1);
    aug.set_block(0, 0, f);
    aug(0, dim) = IntPoly(1);

    const auto elim = kernels::bareiss_banded(std::move(aug), dim, exec);
    IntPoly det = elim.determinant();
    if (det.is_zero()) throw SingularMatrix("det(F_" + std::to_string(k) + ") vanishes identically");
    std::vector<IntPoly> numerators = kernels::back_substitute(elim, dim);

    if (normalizing_sign(det) < 0) {
        det = -det;
        for (auto& x : numerators) x = -x;
    }

    GenFnSolution out;
    out.k = k;
    out.solutions.reserve(dim);
    for (const auto& x : numerators) out.solutions.emplace_back(x, det);
    out.determinant = std::move(det);
    out.numerators = std::move(numerators);
    return out;
}

IntPoly system_det(int k, Execution exec) {
    const PolyMatrix f = build_system(k);
    IntPoly det = kernels::bareiss_banded(f, f.rows(), exec).determinant();
    return normalizing_sign(det) < 0 ? -det : det;
}

ScaledInverse scaled_inverse(const PolyMatrix& m) {
    if (!m.square()) throw InvalidArgument("scaled_inverse needs a square matrix");
    const std::size_t n = m.rows();
    PolyMatrix aug(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, PolyMatrix::identity(n));
    const auto elim = kernels::bareiss_banded(std::move(aug), n, Execution::serial);

    ScaledInverse out{PolyMatrix(n, n), elim.determinant()};
    const int s = normalizing_sign(out.determinant);
    if (s < 0) out.determinant = -out.determinant;
    for (std::size_t c = 0; c < n; ++c) {
        auto column = kernels::back_substitute(elim, n + c);
        for (std::size_t r = 0; r < n; ++r) out.adjugate(r, c) = s < 0 ? -column[r] : column[r];
    }
    return out;
}

}  // namespace anyon
