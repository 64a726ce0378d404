#pragma once

#include "walkmat/graph.hpp"

#include <cstddef>
#include <vector>

namespace walkmat {

// Small dense symmetric matrix of doubles, row-major.
struct DMatrix {
    std::size_t n = 0;
    std::vector<double> a;

    DMatrix() = default;
    explicit DMatrix(std::size_t order) : n(order), a(order * order, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

DMatrix to_double(const IntMatrix& m);

// Eigenvalues ascending; vectors[k] is the normalized eigenvector paired
// with values[k]. Columns are mutually orthonormal.
struct EigenDecomp {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
};

// Classical cyclic Jacobi rotations, sweeping until the off-diagonal
// Frobenius mass drops to tol. Throws DomainError on non-symmetric input
// and NumericError if the sweep cap is hit first.
EigenDecomp jacobi_eigen(DMatrix a, double tol = 1e-12);

// The m roots of S_m(x) - lambda*S_{m-1}(x), all simple, returned in
// descending order. Bisection runs inside the m sign-alternation intervals
// bounded by the roots 2cos(k*pi/m) of S_{m-1} and the outer brackets
// +-(|lambda| + 2.5). Each root's residual is at most tol.
std::vector<double> mu_roots(double lambda, std::size_t m, double tol = 1e-10);

// Values S_0(x) .. S_m(x) by the three-term recurrence.
std::vector<double> chebyshev_s_values(std::size_t m, double x);

// Stacked eigenvector of the rooted product: block j (layer ordering of
// rooted_product_path) equals (S_{m-j}(mu)/S_{m-1}(mu)) * xi for j = 1..m.
// Throws NumericError when |S_{m-1}(mu)| <= tol (numerical degeneracy).
std::vector<double> build_eta(const std::vector<double>& xi, double mu, std::size_t m,
                              double tol = 1e-10);

// Aggregated residuals of the eigen-structure checks on G and its rooted
// product with the m-vertex path.
struct SpectralReport {
    double max_eigen_residual = 0;  // max over (i,j) of ||A~ eta - mu eta|| / ||eta||
    double max_emn_residual = 0;    // max |e^T eta - (S(mu)/S_{m-1}(mu)) e^T xi|
    double max_spectrum_diff = 0;   // sorted {mu_i^(j)} vs eigenvalues of A~
    double min_mu_gap = 0;          // min consecutive gap within each i's root list
    double min_s_m1_abs = 0;        // min |S_{m-1}(mu)| over all (i,j)
    bool pass = false;
};

// Runs every (i, j) check; pass requires residuals and the spectrum
// difference at most tol, root gaps above 10*tol and |S_{m-1}(mu)| >= 1e-6.
SpectralReport verify_eigenvector_lemma(const Graph& g, std::size_t m, double tol = 1e-8);

// |det W(G)| compared against the eigen-data product
// |prod_{i1<i2} (lambda_{i2}-lambda_{i1}) * prod_i e^T xi_i|.
struct WalkdetEigenReport {
    Int exact;           // det W(G)
    double approx = 0;   // the signed floating-point product
    double error = 0;    // relative when exact != 0, |approx| otherwise
    bool pass = false;
};

WalkdetEigenReport verify_walkdet_eigen_formula(const Graph& g, double tol = 1e-6);

} // namespace walkmat
