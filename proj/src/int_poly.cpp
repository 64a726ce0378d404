#include "walkmat/int_poly.hpp"

#include <sstream>

namespace walkmat {

namespace {
const Int kZero = 0;
}

void IntPoly::canonicalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(std::size_t k, Int c) {
    std::vector<Int> v(k + 1);
    v[k] = std::move(c);
    return IntPoly(std::move(v));
}

const Int& IntPoly::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : kZero;
}

const Int& IntPoly::leading() const {
    if (c_.empty())
        throw DomainError("IntPoly::leading: zero polynomial");
    return c_.back();
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::dilated(const Int& s) const {
    std::vector<Int> out(c_);
    Int sk = 1;
    for (std::size_t k = 1; k < out.size(); ++k) {
        sk *= s;
        out[k] *= sk;
    }
    return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
    canonicalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
    canonicalize();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly{};
    std::vector<Int> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

IntPoly& IntPoly::operator*=(const Int& s) {
    for (auto& c : c_) c *= s;
    canonicalize();
    return *this;
}

IntPoly IntPoly::operator-() const {
    IntPoly out(*this);
    for (auto& c : out.c_) c = -c;
    return out;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Int& c = c_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Int ac = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        if (ac != 1 || k == 0) os << ac.get_str();
        if (k > 0) {
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Int resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw DomainError("resultant: zero polynomial argument");
    const std::size_t n = static_cast<std::size_t>(f.degree());
    const std::size_t m = static_cast<std::size_t>(g.degree());
    if (n == 0 && m == 0) return 1; // empty Sylvester matrix
    if (m == 0) return ipow(g.coeff(0), n);
    if (n == 0) return ipow(f.coeff(0), m);

    // m rows of f's coefficients followed by n rows of g's, descending,
    // each row shifted one column right of the previous.
    IntMatrix syl(n + m, n + m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j)
            syl(i, i + j) = f.coeff(n - j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j)
            syl(m + i, i + j) = g.coeff(m - j);
    return det_bareiss(std::move(syl));
}

IntPoly chebyshev_u(std::size_t n) {
    IntPoly prev{1};
    if (n == 0) return prev;
    IntPoly cur{0, 2};
    const IntPoly two_x{0, 2};
    for (std::size_t k = 1; k < n; ++k) {
        IntPoly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPoly chebyshev_s(std::size_t n) {
    IntPoly prev{1};
    if (n == 0) return prev;
    IntPoly cur{0, 1};
    const IntPoly x{0, 1};
    for (std::size_t k = 1; k < n; ++k) {
        IntPoly next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPoly s_sum(std::size_t m) {
    if (m == 0)
        throw DomainError("s_sum: m must be >= 1");
    IntPoly acc;
    for (std::size_t k = 0; k < m; ++k) acc += chebyshev_s(k);
    return acc;
}

IntPoly weighted_power_sum(const std::vector<Int>& c, const IntPoly& p, const IntPoly& q) {
    if (c.empty())
        throw DomainError("weighted_power_sum: empty coefficient list");
    const std::size_t n = c.size() - 1;
    std::vector<IntPoly> qpow(n + 1);
    qpow[0] = IntPoly{1};
    for (std::size_t j = 1; j <= n; ++j) qpow[j] = qpow[j - 1] * q;

    IntPoly acc;
    IntPoly ppow{1};
    for (std::size_t k = 0; k <= n; ++k) {
        if (c[k] != 0) acc += c[k] * ppow * qpow[n - k];
        if (k < n) ppow *= p;
    }
    return acc;
}

IntPoly charpoly(const IntMatrix& a) {
    if (!a.square())
        throw DimensionError("charpoly: matrix must be square");
    const std::size_t n = a.rows();

    // Evaluate det(xI - A) at x = 0..n with the Bareiss kernel, then
    // interpolate by Newton divided differences. The node differences make
    // every division exact in the rationals; integrality of the final
    // coefficients is asserted below.
    std::vector<mpq_class> dd(n + 1);
    for (std::size_t x = 0; x <= n; ++x) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = (i == j ? Int(Int(x) - a(i, j)) : Int(-a(i, j)));
        dd[x] = mpq_class(det_bareiss(std::move(m)));
    }
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t i = n; i >= k; --i)
            dd[i] = (dd[i] - dd[i - 1]) / static_cast<long>(k);

    // Horner assembly of the Newton form sum dd[i] * prod_{j<i} (x - j).
    std::vector<mpq_class> poly{dd[n]};
    for (std::size_t i = n; i-- > 0;) {
        poly.insert(poly.begin(), mpq_class(0));
        for (std::size_t k = 0; k + 1 < poly.size(); ++k)
            poly[k] -= static_cast<long>(i) * poly[k + 1];
        poly[0] += dd[i];
    }

    std::vector<Int> coeffs(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        mpq_class v = poly[k];
        v.canonicalize();
        if (v.get_den() != 1)
            throw NumericError("charpoly: interpolation produced a non-integer coefficient");
        coeffs[k] = v.get_num();
    }
    IntPoly result(std::move(coeffs));
    if (result.degree() != static_cast<int>(n) || result.leading() != 1)
        throw NumericError("charpoly: interpolation lost the monic leading term");
    return result;
}

} // namespace walkmat
