#include "walkmat/graph.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace walkmat;

TEST_CASE("graph6 decode fixed cases") {
    const Graph k1 = graph6_decode("@");
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);

    const Graph k2 = graph6_decode("A_");
    CHECK(k2.order() == 2);
    CHECK(k2.adjacent(0, 1));

    const Graph e5 = graph6_decode("D??");
    CHECK(e5.order() == 5);
    CHECK(e5.edge_count() == 0);

    CHECK(graph6_decode("Bg") == path_graph(3));
    CHECK(graph6_decode("Ch") == path_graph(4));
    CHECK(graph6_decode("A_\n") == k2); // trailing newline tolerated
}

TEST_CASE("graph6 decode errors carry byte offsets") {
    CHECK_THROWS_AS(graph6_decode(""), ParseError);
    CHECK_THROWS_AS(graph6_decode("D?"), ParseError);      // short payload
    CHECK_THROWS_AS(graph6_decode("D???"), ParseError);    // trailing byte
    CHECK_THROWS_AS(graph6_decode("A_\x05"), ParseError);  // byte out of range
    CHECK_THROWS_AS(graph6_decode("?"), ParseError);       // order 0
    CHECK_THROWS_AS(graph6_decode("~~????"), ParseError);  // 8-byte header
    CHECK_THROWS_AS(graph6_decode("AW"), ParseError);      // nonzero padding

    try {
        graph6_decode("D?");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }
}

TEST_CASE("graph6 encode fixed cases") {
    CHECK(graph6_encode(graph6_decode("@")) == "@");
    CHECK(graph6_encode(Graph(5)) == "D??");
    CHECK(graph6_encode(path_graph(2)) == "A_");
}

TEST_CASE("graph6 round-trip on random graphs") {
    std::mt19937_64 rng(20240920);
    for (int rep = 0; rep < 1000; ++rep) {
        const std::size_t n = 1 + rng() % 12;
        const Graph g = oracles::random_graph(rng, n);
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
}

TEST_CASE("graph6 extended header round-trip") {
    Graph g(70);
    g.add_edge(0, 69);
    g.add_edge(5, 44);
    const std::string enc = graph6_encode(g);
    CHECK(enc.size() == 4 + (70 * 69 / 2 + 5) / 6);
    CHECK(static_cast<unsigned char>(enc[0]) == 126);
    CHECK(graph6_decode(enc) == g);

    // n = 62/63 header switch boundary
    CHECK(graph6_encode(Graph(62))[0] == char(62 + 63));
    const std::string e63 = graph6_encode(Graph(63));
    CHECK(static_cast<unsigned char>(e63[0]) == 126);
    CHECK(graph6_decode(e63).order() == 63);

    // the 4-byte header must not be used for small orders
    CHECK_THROWS_AS(graph6_decode("~??D??"), ParseError);
}

TEST_CASE("path_graph") {
    CHECK_THROWS_AS(path_graph(0), DomainError);
    CHECK(path_graph(1).order() == 1);
    CHECK(path_graph(2).edge_count() == 1);

    const Graph p4 = path_graph(4);
    CHECK(p4.edge_count() == 3);
    std::size_t deg[4] = {0, 0, 0, 0};
    for (auto [i, j] : p4.edges()) {
        ++deg[i];
        ++deg[j];
    }
    CHECK(deg[0] == 1);
    CHECK(deg[1] == 2);
    CHECK(deg[2] == 2);
    CHECK(deg[3] == 1);
}

TEST_CASE("rooted product fixed cases") {
    CHECK_THROWS_AS(rooted_product_path(path_graph(2), 0), DomainError);

    for (std::size_t m = 1; m <= 5; ++m)
        CHECK(rooted_product_path(path_graph(1), m) == path_graph(m));

    // K_2 with a pendant vertex on each end is the 4-vertex path, up to the
    // layer labelling (2,3 hang off 0,1)
    const Graph g = rooted_product_path(path_graph(2), 2);
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(1, 3));
}

TEST_CASE("rooted product counts and kronecker structure") {
    std::mt19937_64 rng(20240921);
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t n = 1 + rng() % 8;
        const std::size_t m = 1 + rng() % 5;
        const Graph g = oracles::random_graph(rng, n);
        const Graph gp = rooted_product_path(g, m);

        CHECK(gp.order() == n * m);
        CHECK(gp.edge_count() == g.edge_count() + n * (m - 1));

        IntMatrix d1(m, m);
        d1(0, 0) = 1;
        const IntMatrix expected =
            kronecker(path_graph(m).adjacency_matrix(), IntMatrix::identity(n));
        IntMatrix sum = expected;
        const IntMatrix gd = kronecker(d1, g.adjacency_matrix());
        for (std::size_t i = 0; i < sum.rows(); ++i)
            for (std::size_t j = 0; j < sum.cols(); ++j)
                sum(i, j) += gd(i, j);
        CHECK(gp.adjacency_matrix() == sum);
    }
}

TEST_CASE("walk matrix fixed cases") {
    const IntMatrix w1 = walk_matrix(path_graph(1));
    CHECK(w1(0, 0) == 1);

    const IntMatrix w2 = walk_matrix(path_graph(2));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(w2(i, j) == 1);
}

TEST_CASE("walk matrix equals the DP walk counter") {
    std::mt19937_64 rng(20240922);
    for (int rep = 0; rep < 40; ++rep) {
        const std::size_t n = 1 + rng() % 8;
        const Graph g = oracles::random_graph(rng, n);
        const IntMatrix w = walk_matrix(g);
        const auto counts = oracles::walk_counts(g, n - 1);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                CHECK(w(i, k) == counts[k][i]);
    }
}

TEST_CASE("walk matrix matches exhaustive walk enumeration on tiny graphs") {
    std::mt19937_64 rng(20240923);
    for (int rep = 0; rep < 10; ++rep) {
        const std::size_t n = 1 + rng() % 5;
        const Graph g = oracles::random_graph(rng, n);
        const IntMatrix w = walk_matrix(g);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                CHECK(w(i, k) == oracles::walk_count_enum(g, i, k));
    }
}

TEST_CASE("walk_det fixed cases and divisibility") {
    CHECK(walk_det(path_graph(1)) == 1);
    CHECK(walk_det(path_graph(3)) == 0);
    CHECK(walk_det(graph6_decode("A_")) == 0);

    std::mt19937_64 rng(20240924);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t n = 1 + rng() % 10;
        const Graph g = oracles::random_graph(rng, n);
        CHECK(divisible(walk_det(g), pow2(n / 2)));
    }
}

TEST_CASE("a0 fixed cases") {
    CHECK(a0(path_graph(1)) == 0);
    CHECK(a0(path_graph(2)) == -1);

    Graph c3(3);
    c3.add_edge(0, 1);
    c3.add_edge(1, 2);
    c3.add_edge(0, 2);
    CHECK(a0(c3) == -2);
}

TEST_CASE("complement") {
    CHECK(complement(path_graph(1)) == path_graph(1));

    Graph c3(3);
    c3.add_edge(0, 1);
    c3.add_edge(1, 2);
    c3.add_edge(0, 2);
    CHECK(complement(Graph(3)) == c3);

    std::mt19937_64 rng(20240925);
    for (int rep = 0; rep < 50; ++rep) {
        const Graph g = oracles::random_graph(rng, 1 + rng() % 9);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("graph basic invariants") {
    CHECK_THROWS_AS(Graph(0), DomainError);
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(1, 1), DomainError);
    CHECK_THROWS_AS(g.add_edge(0, 3), DomainError);
    g.add_edge(2, 0);
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(2, 0));
}
