#include <string>

#include "anyon/errors.hpp"
#include "anyon/kernels.hpp"

namespace anyon::kernels {

namespace {

void check_shape(const PolyMatrix& m, std::size_t n) {
    if (n == 0 || m.rows() != n || m.cols() < n)
        throw InvalidArgument("elimination needs an n x (n + extra) matrix with n >= 1");
}

// Swaps a row with a nonzero entry in column k into position k. Returns false
// when the whole column below the diagonal is zero.
bool pivot_rows(PolyMatrix& m, std::size_t n, std::size_t k, int& sign, std::vector<char>* touched) {
    if (!m(k, k).is_zero()) return true;
    for (std::size_t r = k + 1; r < n; ++r) {
        if (m(r, k).is_zero()) continue;
        m.swap_rows(k, r);
        if (touched) std::swap((*touched)[k], (*touched)[r]);
        sign = -sign;
        return true;
    }
    return false;
}

void scale_row(PolyMatrix& m, std::size_t row, std::size_t from_col, const IntPoly& factor) {
    for (std::size_t j = from_col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(row, j) *= factor;
}

}  // namespace

IntPoly Elimination::determinant() const {
    return sign < 0 ? -upper(n - 1, n - 1) : upper(n - 1, n - 1);
}

Elimination bareiss_reference(PolyMatrix m, std::size_t n) {
    check_shape(m, n);
    int sign = 1;
    IntPoly prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        if (!pivot_rows(m, n, k, sign, nullptr))
            throw SingularMatrix("matrix is singular (zero column at step " + std::to_string(k + 1) + ")");
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < m.cols(); ++j)
                m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)).divide_exact(prev);
            m(i, k) = IntPoly();
        }
        prev = m(k, k);
    }
    return {std::move(m), n, sign};
}

Elimination bareiss_banded(PolyMatrix m, std::size_t n, Execution exec) {
    check_shape(m, n);
    const std::size_t cols = m.cols();
    const IntPoly one(1);
    int sign = 1;
    IntPoly prev(1);
    // touched[i]: row i holds its true Bareiss value. Untouched rows still hold
    // their original entries; their true value is that times the previous pivot.
    std::vector<char> touched(n, 0);
    touched[0] = 1;

    for (std::size_t k = 0; k < n; ++k) {
        if (!pivot_rows(m, n, k, sign, &touched))
            throw SingularMatrix("matrix is singular (zero column at step " + std::to_string(k + 1) + ")");
        if (!touched[k]) {
            scale_row(m, k, k, prev);
            touched[k] = 1;
        }
        const IntPoly& pivot = m(k, k);
        const bool unit_prev = (prev == one);

        const auto first = static_cast<long>(k + 1);
        const auto last = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel && n - k > 8)
        for (long row = first; row < last; ++row) {
            const auto i = static_cast<std::size_t>(row);
            if (!touched[i]) {
                if (m(i, k).is_zero()) continue;
                scale_row(m, i, k, prev);
                touched[i] = 1;
            }
            if (m(i, k).is_zero()) {
                for (std::size_t j = k + 1; j < cols; ++j) {
                    IntPoly& a = m(i, j);
                    if (a.is_zero()) continue;
                    a = unit_prev ? pivot * a : (pivot * a).divide_exact(prev);
                }
                continue;
            }
            const IntPoly factor = m(i, k);
            for (std::size_t j = k + 1; j < cols; ++j) {
                IntPoly& a = m(i, j);
                const IntPoly& b = m(k, j);
                if (a.is_zero() && b.is_zero()) continue;
                IntPoly v = pivot * a;
                if (!b.is_zero()) v -= factor * b;
                a = unit_prev ? std::move(v) : v.divide_exact(prev);
            }
            m(i, k) = IntPoly();
        }
        prev = m(k, k);
    }
    return {std::move(m), n, sign};
}

std::vector<IntPoly> back_substitute(const Elimination& e, std::size_t rhs_col) {
    const std::size_t n = e.n;
    const PolyMatrix& u = e.upper;
    if (rhs_col < n || rhs_col >= u.cols()) throw InvalidArgument("right-hand side column out of range");
    const IntPoly& det_raw = u(n - 1, n - 1);
    std::vector<IntPoly> x(n);
    for (std::size_t i = n; i-- > 0;) {
        IntPoly acc = det_raw * u(i, rhs_col);
        for (std::size_t j = i + 1; j < n; ++j)
            if (!u(i, j).is_zero() && !x[j].is_zero()) acc -= u(i, j) * x[j];
        x[i] = acc.divide_exact(u(i, i));
    }
    if (e.sign < 0)
        for (auto& xi : x) xi = -xi;
    return x;
}

}  // namespace anyon::kernels
