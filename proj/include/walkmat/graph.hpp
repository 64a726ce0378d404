#pragma once

#include "walkmat/int_matrix.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace walkmat {

// Simple undirected labelled graph on vertices 0..n-1 (no loops, no
// multi-edges). Adjacency is kept as a symmetric bit relation.
class Graph {
public:
    explicit Graph(std::size_t n) : n_(n), adj_(n * n, false) {
        if (n == 0)
            throw DomainError("Graph: order must be >= 1");
    }

    std::size_t order() const noexcept { return n_; }

    bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * n_ + j]; }

    void add_edge(std::size_t i, std::size_t j) {
        if (i == j)
            throw DomainError("Graph::add_edge: loops are not allowed");
        if (i >= n_ || j >= n_)
            throw DomainError("Graph::add_edge: vertex out of range");
        adj_[i * n_ + j] = adj_[j * n_ + i] = true;
    }

    std::size_t edge_count() const {
        std::size_t e = 0;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if (adj_[i * n_ + j]) ++e;
        return e;
    }

    std::vector<std::pair<std::size_t, std::size_t>> edges() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if (adj_[i * n_ + j]) out.emplace_back(i, j);
        return out;
    }

    IntMatrix adjacency_matrix() const {
        IntMatrix a(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (adj_[i * n_ + j]) a(i, j) = 1;
        return a;
    }

    bool operator==(const Graph&) const = default;

private:
    std::size_t n_;
    std::vector<bool> adj_;
};

// graph6 line -> Graph. Accepts the 1-byte header (n <= 62) and the 4-byte
// extended header (63 <= n <= 258047); upper-triangle bits are read
// column-major, 6 bits per byte after subtracting 63, zero-padded. Throws
// ParseError (with byte offset) on malformed headers, short payloads,
// nonzero padding or trailing bytes.
Graph graph6_decode(std::string_view line);

// Graph -> graph6 line (without trailing newline). Round-trips with
// graph6_decode.
std::string graph6_encode(const Graph& g);

// Path on m vertices 0..m-1 with edges {k, k+1}. Requires m >= 1.
Graph path_graph(std::size_t m);

// Edge present iff absent in g (loops stay absent).
Graph complement(const Graph& g);

// Attach a copy of the m-vertex path to every vertex of g, identifying the
// path's first endvertex with that vertex. Copy vertex (i, j), i in 0..n-1,
// j in 1..m, gets index (j-1)*n + i, so layer j=1 carries g's edges and the
// adjacency matrix equals kron(A(P_m), I_n) + kron(diag(1,0,...,0), A(g))
// entrywise. Requires m >= 1 (m = 1 returns g itself).
Graph rooted_product_path(const Graph& g, std::size_t m);

// [e, Ae, ..., A^{n-1}e]: column k counts the length-k walks starting at
// each vertex.
IntMatrix walk_matrix(const Graph& g);

// det of the walk matrix; always a multiple of 2^floor(n/2).
Int walk_det(const Graph& g);

// Constant term of the characteristic polynomial, i.e. (-1)^n det A.
Int a0(const Graph& g);

} // namespace walkmat
