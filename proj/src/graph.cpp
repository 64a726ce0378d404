#include "walkmat/graph.hpp"

namespace walkmat {

namespace {

constexpr unsigned kBias = 63;   // printable offset: payload bytes are 63..126
constexpr std::size_t kMaxOrder = 258047;

unsigned sextet(std::string_view s, std::size_t pos) {
    if (pos >= s.size())
        throw ParseError("graph6: unexpected end of input", pos);
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126)
        throw ParseError("graph6: byte outside printable range 63..126", pos);
    return c - kBias;
}

} // namespace

Graph graph6_decode(std::string_view line) {
    // Tolerate a trailing newline so raw file lines can be passed through.
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty())
        throw ParseError("graph6: empty input", 0);

    std::size_t pos = 0;
    std::size_t n;
    if (static_cast<unsigned char>(line[0]) != 126) {
        n = sextet(line, pos++);
    } else {
        if (line.size() > 1 && static_cast<unsigned char>(line[1]) == 126)
            throw ParseError("graph6: 8-byte order header (n > 258047) not supported", 1);
        ++pos;
        n = 0;
        for (int k = 0; k < 3; ++k) n = (n << 6) | sextet(line, pos++);
        if (n < 63)
            throw ParseError("graph6: extended header used for order < 63", 1);
    }
    if (n == 0)
        throw ParseError("graph6: graph of order 0 not supported", 0);
    if (n > kMaxOrder)
        throw ParseError("graph6: order exceeds 258047", 1);

    Graph g(n);
    unsigned buf = 0;
    int avail = 0;
    // Upper-triangle bits in column-major order: (0,1), (0,2), (1,2), (0,3), ...
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (avail == 0) {
                buf = sextet(line, pos++);
                avail = 6;
            }
            if (buf & (1u << (avail - 1))) g.add_edge(i, j);
            --avail;
        }
    }
    if (avail > 0 && (buf & ((1u << avail) - 1)) != 0)
        throw ParseError("graph6: nonzero padding bits", pos - 1);
    if (pos != line.size())
        throw ParseError("graph6: trailing bytes after payload", pos);
    return g;
}

std::string graph6_encode(const Graph& g) {
    const std::size_t n = g.order();
    if (n > kMaxOrder)
        throw DomainError("graph6_encode: order exceeds 258047");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    }
    unsigned buf = 0;
    int used = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            buf = (buf << 1) | (g.adjacent(i, j) ? 1u : 0u);
            if (++used == 6) {
                out.push_back(static_cast<char>(buf + kBias));
                buf = 0;
                used = 0;
            }
        }
    }
    if (used > 0)
        out.push_back(static_cast<char>((buf << (6 - used)) + kBias));
    return out;
}

Graph path_graph(std::size_t m) {
    if (m == 0)
        throw DomainError("path_graph: m must be >= 1");
    Graph g(m);
    for (std::size_t k = 0; k + 1 < m; ++k) g.add_edge(k, k + 1);
    return g;
}

Graph complement(const Graph& g) {
    const std::size_t n = g.order();
    Graph out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!g.adjacent(i, j)) out.add_edge(i, j);
    return out;
}

Graph rooted_product_path(const Graph& g, std::size_t m) {
    if (m == 0)
        throw DomainError("rooted_product_path: m must be >= 1");
    const std::size_t n = g.order();
    Graph out(n * m);
    // Layer 1 (indices 0..n-1) is g itself; the paths grow layer by layer.
    for (auto [i, j] : g.edges()) out.add_edge(i, j);
    for (std::size_t layer = 0; layer + 1 < m; ++layer)
        for (std::size_t v = 0; v < n; ++v)
            out.add_edge(layer * n + v, (layer + 1) * n + v);
    return out;
}

IntMatrix walk_matrix(const Graph& g) {
    const std::size_t n = g.order();
    const IntMatrix a = g.adjacency_matrix();
    IntMatrix w(n, n);
    IntVector col(n, Int(1));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) w(i, k) = col[i];
        if (k + 1 < n) col = mat_vec(a, col);
    }
    return w;
}

Int walk_det(const Graph& g) {
    return det_bareiss(walk_matrix(g));
}

Int a0(const Graph& g) {
    Int d = det_bareiss(g.adjacency_matrix());
    return g.order() % 2 == 0 ? d : Int(-d);
}

} // namespace walkmat
