#include "walkmat/identities.hpp"

#include "walkmat/int_poly.hpp"

#include <chrono>

namespace walkmat {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int sign_pm(const Int& numer, const Int& denom) {
    // The realized sign in |numer| = |denom| comparisons; 0 when denom = 0.
    if (denom == 0) return 0;
    return sgn(numer) * sgn(denom) >= 0 ? 1 : -1;
}

json dec_list(const std::vector<Int>& v) {
    json out = json::array();
    for (const Int& x : v) out.push_back(dec(x));
    return out;
}

std::vector<Int> default_samples(std::size_t count) {
    std::vector<Int> t;
    t.reserve(count);
    for (std::size_t k = 0; k < count; ++k) t.emplace_back(static_cast<long>(k));
    return t;
}

// Shared driver for the sampled resultant identities. lhs_at/rhs_at map a
// sample t to the two sides; equality at every sample certifies the
// polynomial identity in t because both sides have degree <= m-1:
// t enters the Sylvester matrix linearly in its deg(g) = m-1 rows, and the
// closed forms carry t^floor(m/2) at most. The default sample set t = 0..m
// has one point beyond the bound as a safety margin.
template <typename Lhs, typename Rhs>
Certificate sampled_identity(const std::string& name, std::size_t m,
                             const std::vector<Int>& samples, Lhs&& lhs_at, Rhs&& rhs_at) {
    const auto start = Clock::now();
    Certificate cert;
    cert.identity = name;
    cert.params = {{"m", m}, {"t_samples", dec_list(samples)}};

    std::vector<Int> lhs, rhs;
    lhs.reserve(samples.size());
    rhs.reserve(samples.size());
    bool ok = true;
    for (const Int& t : samples) {
        lhs.push_back(lhs_at(t));
        rhs.push_back(rhs_at(t));
        ok = ok && lhs.back() == rhs.back();
    }
    cert.lhs = dec_list(lhs);
    cert.rhs = dec_list(rhs);
    cert.pass = ok;
    cert.elapsed_ms = ms_since(start);
    return cert;
}

Int closed_form_sign(std::size_t m) {
    // (-1)^{m(m-1)/2}
    return (m * (m - 1) / 2) % 2 == 0 ? Int(1) : Int(-1);
}

} // namespace

Certificate verify_main_theorem(const Graph& g, std::size_t m) {
    if (m < 2)
        throw DomainError("verify_main_theorem: m must be >= 2");
    const auto start = Clock::now();

    const Int lhs = walk_det(rooted_product_path(g, m));
    const Int rhs = ipow(a0(g), static_cast<unsigned long>(m / 2)) *
                    ipow(walk_det(g), static_cast<unsigned long>(m));

    Certificate cert;
    cert.identity = "theorem";
    cert.params = {{"graph6", graph6_encode(g)}, {"m", m}};
    cert.lhs = dec(lhs);
    cert.rhs = dec(rhs);
    cert.observed_sign = sign_pm(lhs, rhs);
    cert.pass = abs(lhs) == abs(rhs);
    cert.elapsed_ms = ms_since(start);
    return cert;
}

Certificate verify_schwenk(const Graph& g, std::size_t m) {
    if (m < 1)
        throw DomainError("verify_schwenk: m must be >= 1");
    const auto start = Clock::now();

    const IntPoly lhs = charpoly(rooted_product_path(g, m).adjacency_matrix());
    const IntPoly base = charpoly(g.adjacency_matrix());
    const IntPoly rhs = weighted_power_sum(base.coeffs(), chebyshev_s(m), chebyshev_s(m - 1));

    Certificate cert;
    cert.identity = "schwenk";
    cert.params = {{"graph6", graph6_encode(g)}, {"m", m}};
    cert.lhs = dec_list(lhs.coeffs());
    cert.rhs = dec_list(rhs.coeffs());
    cert.pass = lhs == rhs;
    cert.elapsed_ms = ms_since(start);
    return cert;
}

Certificate verify_dilcher_stolarsky(std::size_t m) {
    if (m < 1)
        throw DomainError("verify_dilcher_stolarsky: m must be >= 1");
    const auto start = Clock::now();

    const Int lhs = resultant(chebyshev_u(m), chebyshev_u(m - 1));
    const Int rhs = closed_form_sign(m) * pow2(static_cast<unsigned long>(m * (m - 1)));

    Certificate cert;
    cert.identity = "dilcher";
    cert.params = {{"m", m}};
    cert.lhs = dec(lhs);
    cert.rhs = dec(rhs);
    cert.pass = lhs == rhs;
    cert.elapsed_ms = ms_since(start);
    return cert;
}

Certificate verify_newres(std::size_t m, const std::optional<std::vector<Int>>& t_override) {
    if (m < 1)
        throw DomainError("verify_newres: m must be >= 1");
    const IntPoly um = chebyshev_u(m);
    const IntPoly um1 = chebyshev_u(m - 1);
    IntPoly usum;
    for (std::size_t k = 0; k < m; ++k) usum += chebyshev_u(k);
    const Int sign = closed_form_sign(m);
    const Int scale = pow2(static_cast<unsigned long>(m * (m - 1)));

    const auto samples = t_override ? *t_override : default_samples(m + 1);
    return sampled_identity(
        "newres", m, samples,
        [&](const Int& t) { return resultant(um + t * um1, usum); },
        [&](const Int& t) -> Int {
            return sign * ipow(t, static_cast<unsigned long>(m / 2)) * scale;
        });
}

Certificate verify_res1(std::size_t m, const std::optional<std::vector<Int>>& t_override) {
    if (m < 1)
        throw DomainError("verify_res1: m must be >= 1");
    const IntPoly sm = chebyshev_s(m);
    const IntPoly sm1 = chebyshev_s(m - 1);
    const Int rhs = closed_form_sign(m);

    const auto samples = t_override ? *t_override : default_samples(m);
    return sampled_identity(
        "res1", m, samples,
        [&](const Int& t) { return resultant(sm - t * sm1, sm1); },
        [&](const Int&) { return rhs; });
}

Certificate verify_res2(std::size_t m, const std::optional<std::vector<Int>>& t_override) {
    if (m < 1)
        throw DomainError("verify_res2: m must be >= 1");
    const IntPoly sm = chebyshev_s(m);
    const IntPoly sm1 = chebyshev_s(m - 1);
    const IntPoly ssum = s_sum(m);
    const Int sign = closed_form_sign(m);

    const auto samples = t_override ? *t_override : default_samples(m + 1);
    return sampled_identity(
        "res2", m, samples,
        [&](const Int& t) { return resultant(sm - t * sm1, ssum); },
        [&](const Int& t) -> Int {
            return sign * ipow(Int(-t), static_cast<unsigned long>(m / 2));
        });
}

Certificate verify_divisibility(const Graph& g) {
    const auto start = Clock::now();
    const Int det = walk_det(g);
    const Int modulus = pow2(static_cast<unsigned long>(g.order() / 2));

    Certificate cert;
    cert.identity = "divisibility";
    cert.params = {{"graph6", graph6_encode(g)},
                   {"walk_det", dec(det)},
                   {"modulus", dec(modulus)}};
    cert.lhs = dec(det % modulus); // residue, must vanish
    cert.rhs = "0";
    cert.pass = divisible(det, modulus);
    cert.elapsed_ms = ms_since(start);
    return cert;
}

} // namespace walkmat
