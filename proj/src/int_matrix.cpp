#include "walkmat/int_matrix.hpp"

namespace walkmat {

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Int& aij = a(i, j);
            if (aij == 0) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
    return out;
}

IntVector mat_vec(const IntMatrix& m, const IntVector& v) {
    if (m.cols() != v.size())
        throw DimensionError("mat_vec: cols(M) != len(v)");
    IntVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
            acc += m(i, j) * v[j];
        out[i] = std::move(acc);
    }
    return out;
}

Int det_bareiss(IntMatrix m) {
    if (!m.square())
        throw DimensionError("det_bareiss: matrix must be square");
    const std::size_t n = m.rows();
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && m(r, k) == 0) ++r;
            if (r == n) return 0;
            m.swap_rows(k, r);
            sign = -sign;
        }
        const Int pivot = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // One-step fraction-free update; division by the previous
                // pivot is exact (Sylvester's identity on leading minors).
                m(i, j) = (m(i, j) * pivot - m(i, k) * m(k, j)) / prev;
            }
            m(i, k) = 0;
        }
        prev = pivot;
    }
    return sign < 0 ? Int(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

} // namespace walkmat
