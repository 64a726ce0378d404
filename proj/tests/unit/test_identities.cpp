#include "walkmat/identities.hpp"

#include "walkmat/int_poly.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace walkmat;

TEST_CASE("main theorem fixed cases") {
    SUBCASE("K_1, m = 3: both sides vanish through a0 = 0") {
        const Certificate c = verify_main_theorem(path_graph(1), 3);
        CHECK(c.pass);
        CHECK(c.lhs == "0");
        CHECK(c.rhs == "0");
        CHECK(c.observed_sign == 0);
    }
    SUBCASE("K_2, m = 2: both sides vanish through det W = 0") {
        const Certificate c = verify_main_theorem(path_graph(2), 2);
        CHECK(c.pass);
        CHECK(c.lhs == "0");
        CHECK(c.rhs == "0");
    }
    SUBCASE("a seed with det W = 8, a0 = -1") {
        const Graph g = graph6_decode("EYWO");
        REQUIRE(walk_det(g) == 8);
        REQUIRE(a0(g) == -1);
        const Certificate c2 = verify_main_theorem(g, 2);
        CHECK(c2.pass);
        CHECK(c2.rhs == "-64");
        const Certificate c3 = verify_main_theorem(g, 3);
        CHECK(c3.pass);
        CHECK(c3.rhs == "-512");
        const Certificate c4 = verify_main_theorem(g, 4);
        CHECK(c4.pass);
        CHECK(c4.rhs == "4096");
    }
    SUBCASE("m = 1 is rejected") {
        CHECK_THROWS_AS(verify_main_theorem(path_graph(2), 1), DomainError);
    }
}

TEST_CASE("main theorem on random 6-vertex graphs, both sides independent") {
    std::mt19937_64 rng(20241010);
    int nonzero_seen = 0;
    for (int rep = 0; rep < 30; ++rep) {
        const Graph g = oracles::random_graph(rng, 6);
        const Certificate c = verify_main_theorem(g, 2);
        CHECK(c.pass);
        if (walk_det(g) != 0 && a0(g) != 0) {
            ++nonzero_seen;
            CHECK((c.observed_sign == 1 || c.observed_sign == -1));
        }
    }
    CHECK(nonzero_seen > 0);
}

TEST_CASE("certificates are deterministic modulo timing") {
    const Graph g = graph6_decode("EYWO");
    Certificate a = verify_main_theorem(g, 3);
    Certificate b = verify_main_theorem(g, 3);
    a.elapsed_ms = b.elapsed_ms = 0;
    CHECK(a.to_json() == b.to_json());
}

TEST_CASE("certificate JSONL shape") {
    const json j = json::parse(verify_main_theorem(graph6_decode("EYWO"), 2).to_jsonl());
    CHECK(j["identity"] == "theorem");
    CHECK(j["params"]["graph6"] == "EYWO");
    CHECK(j["params"]["m"] == 2);
    CHECK(j["lhs"].is_string());
    CHECK(j["rhs"] == "-64");
    CHECK((j["sign"] == 1 || j["sign"] == -1));
    CHECK(j["pass"] == true);
    CHECK(j["ms"].is_number());

    const json d = json::parse(verify_main_theorem(path_graph(1), 2).to_jsonl());
    CHECK(d["sign"].is_null());
}

TEST_CASE("schwenk factorization fixed cases") {
    SUBCASE("K_1 reduces to the path polynomial") {
        const Certificate c = verify_schwenk(path_graph(1), 4);
        CHECK(c.pass);
        const IntPoly s4 = chebyshev_s(4);
        json expected = json::array();
        for (const Int& x : s4.coeffs()) expected.push_back(dec(x));
        CHECK(c.lhs == expected);
    }
    SUBCASE("K_2 at m = 2") {
        const Certificate c = verify_schwenk(path_graph(2), 2);
        CHECK(c.pass);
        const IntPoly expected =
            chebyshev_s(2) * chebyshev_s(2) - chebyshev_s(1) * chebyshev_s(1);
        json want = json::array();
        for (const Int& x : expected.coeffs()) want.push_back(dec(x));
        CHECK(c.rhs == want);
    }
}

TEST_CASE("schwenk factorization on random graphs") {
    std::mt19937_64 rng(20241011);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t n = 1 + rng() % 7;
        const std::size_t m = 1 + rng() % 5;
        CHECK(verify_schwenk(oracles::random_graph(rng, n), m).pass);
    }
}

TEST_CASE("dilcher-stolarsky resultants") {
    CHECK(verify_dilcher_stolarsky(1).lhs == "1");
    CHECK(verify_dilcher_stolarsky(2).lhs == "-4");
    CHECK(verify_dilcher_stolarsky(3).lhs == "-64");
    for (std::size_t m = 1; m <= 12; ++m) {
        const Certificate c = verify_dilcher_stolarsky(m);
        CHECK(c.pass);
        CHECK(c.lhs == c.rhs);
    }
}

TEST_CASE("new resultant lemma") {
    SUBCASE("m = 1 is constant 1") {
        const Certificate c = verify_newres(1);
        CHECK(c.pass);
        for (const auto& v : c.lhs) CHECK(v == "1");
    }
    SUBCASE("m = 2 samples") {
        const Certificate c = verify_newres(2, std::vector<Int>{Int(0), Int(1)});
        CHECK(c.pass);
        CHECK(c.lhs[0] == "0");   // shared root at t = 0
        CHECK(c.lhs[1] == "-4");
    }
    SUBCASE("holds through m = 12") {
        for (std::size_t m = 1; m <= 12; ++m) CHECK(verify_newres(m).pass);
    }
}

TEST_CASE("resultant corollaries") {
    SUBCASE("res1 is the constant sign, every sample") {
        for (std::size_t m = 1; m <= 12; ++m) {
            const Certificate c = verify_res1(m);
            CHECK(c.pass);
            const std::string expected = (m * (m - 1) / 2) % 2 == 0 ? "1" : "-1";
            for (const auto& v : c.lhs) CHECK(v == expected);
        }
    }
    SUBCASE("res1 fixed values") {
        const Certificate c2 = verify_res1(2, std::vector<Int>{Int(0)});
        CHECK(c2.lhs[0] == "-1"); // Res(x^2 - 1, x)
        const Certificate c3 = verify_res1(3);
        for (const auto& v : c3.lhs) CHECK(v == "-1");
    }
    SUBCASE("res2 fixed values") {
        const Certificate c = verify_res2(2, std::vector<Int>{Int(0), Int(1)});
        CHECK(c.pass);
        CHECK(c.lhs[0] == "0");
        CHECK(c.lhs[1] == "1"); // Res(x^2 - x - 1, x + 1)
    }
    SUBCASE("res2 holds through m = 12") {
        for (std::size_t m = 1; m <= 12; ++m) CHECK(verify_res2(m).pass);
    }
}

TEST_CASE("divisibility certificates") {
    CHECK(verify_divisibility(path_graph(1)).pass);
    CHECK(verify_divisibility(path_graph(3)).pass);

    std::mt19937_64 rng(20241012);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 1 + rng() % 12;
        const Certificate c = verify_divisibility(oracles::random_graph(rng, n));
        CHECK(c.pass);
        CHECK(c.lhs == "0");
    }
}
