#pragma once

#include "walkmat/bigint.hpp"
#include "walkmat/errors.hpp"

#include <cstddef>
#include <vector>

namespace walkmat {

using IntVector = std::vector<Int>;

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {
        if (rows == 0 || cols == 0)
            throw DimensionError("IntMatrix: dimensions must be positive");
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t k) {
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap(a_[i * cols_ + j], a_[k * cols_ + j]);
    }

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

// Block matrix with block (i,j) equal to a(i,j) * b. Result is (ra*rb) x (ca*cb).
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

// Exact matrix-vector product; throws DimensionError unless cols(m) == len(v).
IntVector mat_vec(const IntMatrix& m, const IntVector& v);

// Exact determinant by one-step fraction-free (Bareiss) elimination. Pivots
// are the first nonzero entry in each column; a pivot column with no nonzero
// candidate short-circuits to 0. All intermediate divisions are exact.
Int det_bareiss(IntMatrix m);

} // namespace walkmat
