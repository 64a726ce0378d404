#include "walkmat/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace walkmat {

DMatrix to_double(const IntMatrix& m) {
    if (!m.square())
        throw DimensionError("to_double: matrix must be square");
    DMatrix out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.at(i, j) = m(i, j).get_d();
    return out;
}

namespace {

double off_diag(const DMatrix& a) {
    double s = 0;
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j)
            if (i != j) s += a.at(i, j) * a.at(i, j);
    return std::sqrt(s);
}

} // namespace

EigenDecomp jacobi_eigen(DMatrix a, double tol) {
    const std::size_t n = a.n;
    if (n == 0)
        throw DimensionError("jacobi_eigen: empty matrix");
    double maxabs = 0;
    for (double v : a.a) maxabs = std::max(maxabs, std::fabs(v));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::fabs(a.at(i, j) - a.at(j, i)) > 1e-12 * (1.0 + maxabs))
                throw DomainError("jacobi_eigen: matrix is not symmetric");

    std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0; // v[c] is column c

    constexpr int kMaxSweeps = 128;
    int sweep = 0;
    while (off_diag(a) > tol) {
        if (++sweep > kMaxSweeps)
            throw NumericError("jacobi_eigen: no convergence after sweep cap");
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a.at(p, q);
                if (apq == 0.0) continue;
                const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a.at(k, p), akq = a.at(k, q);
                    a.at(k, p) = c * akp - s * akq;
                    a.at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a.at(p, k), aqk = a.at(q, k);
                    a.at(p, k) = c * apk - s * aqk;
                    a.at(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v[p][k], vkq = v[q][k];
                    v[p][k] = c * vkp - s * vkq;
                    v[q][k] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return a.at(x, x) < a.at(y, y); });

    EigenDecomp out;
    out.values.reserve(n);
    out.vectors.reserve(n);
    for (std::size_t i : order) {
        out.values.push_back(a.at(i, i));
        out.vectors.push_back(v[i]);
    }
    return out;
}

std::vector<double> chebyshev_s_values(std::size_t m, double x) {
    std::vector<double> s(m + 1);
    s[0] = 1.0;
    if (m >= 1) s[1] = x;
    for (std::size_t k = 2; k <= m; ++k) s[k] = x * s[k - 1] - s[k - 2];
    return s;
}

namespace {

double mu_objective(double lambda, std::size_t m, double x) {
    const auto s = chebyshev_s_values(m, x);
    return s[m] - lambda * s[m - 1];
}

} // namespace

std::vector<double> mu_roots(double lambda, std::size_t m, double tol) {
    if (m == 0)
        throw DomainError("mu_roots: m must be >= 1");
    const double outer = std::fabs(lambda) + 2.5;

    // Bracket points ascending: -outer, roots of S_{m-1}, +outer. The
    // objective alternates sign across them.
    std::vector<double> pts;
    pts.reserve(m + 1);
    pts.push_back(-outer);
    for (std::size_t k = m - 1; k >= 1; --k)
        pts.push_back(2.0 * std::cos(static_cast<double>(k) * std::numbers::pi /
                                     static_cast<double>(m)));
    pts.push_back(outer);

    std::vector<double> roots;
    roots.reserve(m);
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        double lo = pts[k], hi = pts[k + 1];
        double flo = mu_objective(lambda, m, lo);
        double fhi = mu_objective(lambda, m, hi);
        if (flo == 0.0) {
            roots.push_back(lo);
            continue;
        }
        if (fhi == 0.0) {
            roots.push_back(hi);
            continue;
        }
        if ((flo > 0) == (fhi > 0))
            throw NumericError("mu_roots: bracket endpoints do not alternate in sign");
        for (int it = 0; it < 200 && hi - lo > 0; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) break;
            const double fm = mu_objective(lambda, m, mid);
            if (fm == 0.0) {
                lo = hi = mid;
                break;
            }
            if ((fm > 0) == (flo > 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        const double root = 0.5 * (lo + hi);
        if (std::fabs(mu_objective(lambda, m, root)) > tol)
            throw NumericError("mu_roots: bisection residual above tolerance");
        roots.push_back(root);
    }
    std::reverse(roots.begin(), roots.end());
    return roots;
}

std::vector<double> build_eta(const std::vector<double>& xi, double mu, std::size_t m,
                              double tol) {
    if (m == 0)
        throw DomainError("build_eta: m must be >= 1");
    const auto s = chebyshev_s_values(m - 1, mu);
    const double sm1 = s[m - 1];
    if (std::fabs(sm1) <= tol)
        throw NumericError("build_eta: |S_{m-1}(mu)| below tolerance");
    const std::size_t n = xi.size();
    std::vector<double> eta(m * n);
    for (std::size_t j = 1; j <= m; ++j) {
        const double factor = s[m - j] / sm1;
        for (std::size_t i = 0; i < n; ++i)
            eta[(j - 1) * n + i] = factor * xi[i];
    }
    return eta;
}

SpectralReport verify_eigenvector_lemma(const Graph& g, std::size_t m, double tol) {
    if (m == 0)
        throw DomainError("verify_eigenvector_lemma: m must be >= 1");
    const std::size_t n = g.order();
    const Graph gp = rooted_product_path(g, m);
    const DMatrix at = to_double(gp.adjacency_matrix());

    const EigenDecomp base = jacobi_eigen(to_double(g.adjacency_matrix()));
    const EigenDecomp product = jacobi_eigen(at);

    SpectralReport rep;
    rep.min_mu_gap = std::numeric_limits<double>::infinity();
    rep.min_s_m1_abs = std::numeric_limits<double>::infinity();

    std::vector<double> all_mu;
    all_mu.reserve(n * m);
    for (std::size_t i = 0; i < n; ++i) {
        const double lambda = base.values[i];
        const std::vector<double>& xi = base.vectors[i];
        const auto mus = mu_roots(lambda, m);
        for (std::size_t j = 0; j + 1 < mus.size(); ++j)
            rep.min_mu_gap = std::min(rep.min_mu_gap, mus[j] - mus[j + 1]);

        double exi = 0;
        for (double x : xi) exi += x;

        for (double mu : mus) {
            all_mu.push_back(mu);
            const auto s = chebyshev_s_values(m - 1, mu);
            rep.min_s_m1_abs = std::min(rep.min_s_m1_abs, std::fabs(s[m - 1]));

            const auto eta = build_eta(xi, mu, m);
            double rnum = 0, rden = 0;
            const std::size_t nm = eta.size();
            for (std::size_t r = 0; r < nm; ++r) {
                double av = 0;
                for (std::size_t c = 0; c < nm; ++c) av += at.at(r, c) * eta[c];
                const double diff = av - mu * eta[r];
                rnum += diff * diff;
                rden += eta[r] * eta[r];
            }
            rep.max_eigen_residual =
                std::max(rep.max_eigen_residual, std::sqrt(rnum) / std::sqrt(rden));

            double ssum = 0;
            for (std::size_t k = 0; k < m; ++k) ssum += s[k];
            double eeta = 0;
            for (double x : eta) eeta += x;
            rep.max_emn_residual =
                std::max(rep.max_emn_residual, std::fabs(eeta - ssum / s[m - 1] * exi));
        }
    }

    std::sort(all_mu.begin(), all_mu.end());
    for (std::size_t k = 0; k < all_mu.size(); ++k)
        rep.max_spectrum_diff =
            std::max(rep.max_spectrum_diff, std::fabs(all_mu[k] - product.values[k]));

    // min_mu_gap stays +inf for m = 1 (no consecutive pairs), which passes.
    rep.pass = rep.max_eigen_residual <= tol && rep.max_emn_residual <= tol &&
               rep.max_spectrum_diff <= tol && rep.min_mu_gap > 10 * tol &&
               rep.min_s_m1_abs >= 1e-6;
    return rep;
}

WalkdetEigenReport verify_walkdet_eigen_formula(const Graph& g, double tol) {
    const std::size_t n = g.order();
    const EigenDecomp eig = jacobi_eigen(to_double(g.adjacency_matrix()));

    double prod = 1.0;
    for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t i2 = i1 + 1; i2 < n; ++i2)
            prod *= eig.values[i2] - eig.values[i1];
    for (std::size_t i = 0; i < n; ++i) {
        double exi = 0;
        for (double x : eig.vectors[i]) exi += x;
        prod *= exi;
    }

    WalkdetEigenReport rep;
    rep.exact = walk_det(g);
    rep.approx = prod;
    if (rep.exact == 0) {
        rep.error = std::fabs(prod);
    } else {
        const double exact_abs = std::fabs(rep.exact.get_d());
        rep.error = std::fabs(std::fabs(prod) - exact_abs) / exact_abs;
    }
    rep.pass = rep.error <= tol;
    return rep;
}

} // namespace walkmat
