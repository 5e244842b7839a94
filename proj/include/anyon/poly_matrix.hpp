#pragma once

#include <cstddef>
#include <vector>

#include "anyon/poly.hpp"

namespace anyon {

/// Row-major matrix of IntPoly. Storage is 0-based; the at1() accessor and all
/// printed reports use 1-based indices.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    IntPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const IntPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const IntPoly& at1(std::size_t r, std::size_t c) const { return (*this)(r - 1, c - 1); }

    /// Copies `block` with its top-left corner at (row0, col0).
    void set_block(std::size_t row0, std::size_t col0, const PolyMatrix& block);

    void swap_rows(std::size_t a, std::size_t b);

    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const IntPoly& s, const PolyMatrix& m);

    static PolyMatrix identity(std::size_t n);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<IntPoly> data_;
};

}  // namespace anyon
