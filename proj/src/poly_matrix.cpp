#include "anyon/poly_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace anyon {

void PolyMatrix::set_block(std::size_t row0, std::size_t col0, const PolyMatrix& block) {
    if (row0 + block.rows() > rows_ || col0 + block.cols() > cols_)
        throw std::out_of_range("block does not fit in matrix");
    for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t c = 0; c < block.cols(); ++c) (*this)(row0 + r, col0 + c) = block(r, c);
}

void PolyMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in product");
    PolyMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t m = 0; m < a.cols(); ++m) {
            if (a(r, m).is_zero()) continue;
            for (std::size_t c = 0; c < b.cols(); ++c)
                if (!b(m, c).is_zero()) out(r, c) += a(r, m) * b(m, c);
        }
    return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix shape mismatch in difference");
    PolyMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

PolyMatrix operator*(const IntPoly& s, const PolyMatrix& m) {
    PolyMatrix out = m;
    for (auto& e : out.data_)
        if (!e.is_zero()) e = s * e;
    return out;
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = IntPoly(1);
    return m;
}

}  // namespace anyon
