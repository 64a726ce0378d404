#include "walkmat/int_poly.hpp"
#include "walkmat/graph.hpp"

#include <doctest.h>

#include <random>

using namespace walkmat;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int max_deg, int lo = -6, int hi = 6) {
    std::uniform_int_distribution<int> cdist(lo, hi);
    std::uniform_int_distribution<int> ddist(0, max_deg);
    const int deg = ddist(rng);
    std::vector<Int> c(deg + 1);
    for (auto& x : c) x = cdist(rng);
    if (c.back() == 0) c.back() = 1;
    return IntPoly(std::move(c));
}

} // namespace

TEST_CASE("ring arithmetic and canonical form") {
    const IntPoly f{-1, 0, 1};          // x^2 - 1
    CHECK(f + IntPoly{1} == IntPoly{0, 0, 1});
    CHECK(IntPoly{0, 1} * IntPoly{0, 1} == IntPoly{0, 0, 1});
    CHECK(IntPoly({0, -2, 0, 1}).eval(2) == 4);

    CHECK(IntPoly{}.degree() == -1);
    CHECK((f - f).is_zero());
    CHECK(IntPoly{0, 0, 0}.degree() == -1);
    CHECK(IntPoly{3}.degree() == 0);
    CHECK((f * IntPoly{}).is_zero());
}

TEST_CASE("resultant fixed cases") {
    CHECK(resultant(IntPoly{-1, 1}, IntPoly{0, 1}) == 1);
    CHECK(resultant(chebyshev_u(2), chebyshev_u(1)) == -4);
    CHECK(resultant(IntPoly{1, 0, 1}, IntPoly{0, 1}) == 1);
}

TEST_CASE("resultant conventions and errors") {
    CHECK_THROWS_AS(resultant(IntPoly{}, IntPoly{0, 1}), DomainError);
    CHECK_THROWS_AS(resultant(IntPoly{0, 1}, IntPoly{}), DomainError);
    CHECK(resultant(IntPoly{5}, IntPoly{7}) == 1);
    CHECK(resultant(IntPoly{0, 0, 1}, IntPoly{3}) == 9);  // c^deg f
    CHECK(resultant(IntPoly{3}, IntPoly{0, 0, 1}) == 9);
}

TEST_CASE("resultant swap symmetry") {
    std::mt19937_64 rng(20240910);
    for (int rep = 0; rep < 50; ++rep) {
        const IntPoly f = random_poly(rng, 5);
        const IntPoly g = random_poly(rng, 5);
        const int n = f.degree(), m = g.degree();
        const Int sign = (n * m) % 2 == 0 ? 1 : -1;
        CHECK(resultant(f, g) == sign * resultant(g, f));
    }
}

TEST_CASE("resultant shift invariance in the leading argument") {
    std::mt19937_64 rng(20240911);
    std::uniform_int_distribution<int> tdist(-8, 8);
    for (int rep = 0; rep < 50; ++rep) {
        IntPoly f = random_poly(rng, 6);
        IntPoly g = random_poly(rng, 6);
        if (f.degree() <= g.degree()) std::swap(f, g);
        if (f.degree() == g.degree()) continue;  // needs deg g < deg f
        const Int t = tdist(rng);
        CHECK(resultant(f + t * g, g) == resultant(f, g));
    }
}

TEST_CASE("resultant scaling under x -> t*x") {
    std::mt19937_64 rng(20240912);
    std::uniform_int_distribution<int> tdist(1, 5);
    for (int rep = 0; rep < 30; ++rep) {
        const IntPoly f = random_poly(rng, 4);
        const IntPoly g = random_poly(rng, 4);
        Int t = tdist(rng);
        if (rep % 2 == 0) t = -t;
        const unsigned long nm =
            static_cast<unsigned long>(f.degree()) * static_cast<unsigned long>(g.degree());
        CHECK(resultant(f.dilated(t), g.dilated(t)) == ipow(t, nm) * resultant(f, g));
    }
}

TEST_CASE("chebyshev generators") {
    CHECK(chebyshev_u(0) == IntPoly{1});
    CHECK(chebyshev_u(1) == IntPoly{0, 2});
    CHECK(chebyshev_u(2) == IntPoly{-1, 0, 4});
    CHECK(chebyshev_u(10).leading() == 1024);

    CHECK(chebyshev_s(2) == IntPoly{-1, 0, 1});
    CHECK(chebyshev_s(3) == IntPoly{0, -2, 0, 1});
    CHECK(chebyshev_s(4) == IntPoly{1, 0, -3, 0, 1});
    CHECK(chebyshev_s(4) == charpoly(path_graph(4).adjacency_matrix()));
}

TEST_CASE("S_n is the path characteristic polynomial") {
    for (std::size_t n = 1; n <= 12; ++n)
        CHECK(chebyshev_s(n) == charpoly(path_graph(n).adjacency_matrix()));
}

TEST_CASE("U_n(x) equals S_n(2x)") {
    for (std::size_t n = 0; n <= 12; ++n)
        CHECK(chebyshev_u(n) == chebyshev_s(n).dilated(2));
}

TEST_CASE("s_sum") {
    CHECK_THROWS_AS(s_sum(0), DomainError);
    CHECK(s_sum(1) == IntPoly{1});
    CHECK(s_sum(2) == IntPoly{1, 1});
    CHECK(s_sum(3) == IntPoly{0, 1, 1});
    for (std::size_t m = 1; m <= 10; ++m) {
        CHECK(s_sum(m).degree() == static_cast<int>(m) - 1);
        CHECK(s_sum(m).leading() == 1);
    }
}

TEST_CASE("weighted_power_sum") {
    CHECK(weighted_power_sum({Int(1)}, chebyshev_s(2), chebyshev_s(1)) == IntPoly{1});

    // n = 1: c0 + c1*P with Q = 1
    CHECK(weighted_power_sum({Int(-7), Int(1)}, IntPoly{0, 1}, IntPoly{1}) ==
          IntPoly{-7, 1});

    // phi(K_2) = x^2 - 1 pushed through (S_2, S_1) gives the charpoly of the
    // 4-vertex product graph
    const IntPoly lhs =
        weighted_power_sum({Int(-1), Int(0), Int(1)}, chebyshev_s(2), chebyshev_s(1));
    CHECK(lhs == IntPoly{1, 0, -3, 0, 1});
    const Graph product = rooted_product_path(path_graph(2), 2);
    CHECK(lhs == charpoly(product.adjacency_matrix()));
}
