#pragma once

#include <cstddef>
#include <vector>

#include "triplecover/big_int.hpp"

namespace triplecover {

/// Dense integer matrix, row-major. Entries are arbitrary-precision so that
/// elimination never overflows.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<BigInt> entries_;
};

/// Exact rank over the rationals, computed by fraction-free (Bareiss-style)
/// elimination on integer entries. Deterministic for equal inputs.
std::size_t rank(const ExactMatrix& mat);

ExactMatrix transpose(const ExactMatrix& mat);

}  // namespace triplecover
