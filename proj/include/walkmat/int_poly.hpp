#pragma once

#include "walkmat/int_matrix.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace walkmat {

// Univariate polynomial with arbitrary-precision integer coefficients,
// ascending-degree storage: coeffs()[k] is the coefficient of x^k.
// Canonical form: no trailing zero coefficients; the zero polynomial keeps an
// empty vector and reports degree() == -1 (the "-inf" sentinel).
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<Int> ascending) : c_(ascending) { canonicalize(); }
    explicit IntPoly(std::vector<Int> ascending) : c_(std::move(ascending)) { canonicalize(); }

    static IntPoly constant(Int c) { return IntPoly{std::move(c)}; }
    static IntPoly monomial(std::size_t k, Int c = 1);

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const noexcept { return c_; }
    const Int& coeff(std::size_t k) const; // zero beyond the degree
    const Int& leading() const;            // throws DomainError on the zero polynomial
    const Int& constant_term() const { return coeff(0); }

    Int eval(const Int& x) const;
    IntPoly dilated(const Int& s) const; // p(s*x)

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    IntPoly& operator*=(const Int& s);
    IntPoly operator-() const;

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const Int& s) { return a *= s; }
    friend IntPoly operator*(const Int& s, IntPoly a) { return a *= s; }

    bool operator==(const IntPoly&) const = default;

    std::string str(const std::string& var = "x") const;

private:
    void canonicalize();
    std::vector<Int> c_;
};

// Resultant of two nonzero polynomials as the determinant of their Sylvester
// matrix. Conventions: Res of two constants is 1 (empty matrix), and
// Res(f, c) = c^deg(f), Res(c, g) = c^deg(g) for a nonzero constant c.
// Throws DomainError if either argument is the zero polynomial.
Int resultant(const IntPoly& f, const IntPoly& g);

// Chebyshev polynomial of the second kind: U_0 = 1, U_1 = 2x,
// U_{n+1} = 2x U_n - U_{n-1}. Degree n, leading coefficient 2^n.
IntPoly chebyshev_u(std::size_t n);

// Renormalized (monic) variant S_n(x) = U_n(x/2): S_0 = 1, S_1 = x,
// S_{n+1} = x S_n - S_{n-1}. Equals the characteristic polynomial of the
// n-vertex path for n >= 1.
IntPoly chebyshev_s(std::size_t n);

// S_0 + S_1 + ... + S_{m-1}; monic of degree m-1. Requires m >= 1.
IntPoly s_sum(std::size_t m);

// sum_{k=0}^{n} c[k] * p^k * q^(n-k) where n = len(c) - 1. With c the
// coefficients of a degree-n polynomial f, this is the homogenization
// q^n * f(p/q).
IntPoly weighted_power_sum(const std::vector<Int>& c, const IntPoly& p, const IntPoly& q);

// Monic characteristic polynomial det(xI - A) with exact integer
// coefficients, computed by evaluation at x = 0..n and exact interpolation.
IntPoly charpoly(const IntMatrix& a);

} // namespace walkmat
