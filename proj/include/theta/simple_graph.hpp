#ifndef THETA_SIMPLE_GRAPH_HPP
#define THETA_SIMPLE_GRAPH_HPP

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "theta/bitset128.hpp"

namespace theta {

inline constexpr int kMaxVertices = 128;

// Finite undirected simple graph on vertices 0..n-1. Adjacency rows are
// fixed-width bit vectors; the relation is kept symmetric and irreflexive.
class SimpleGraph {
  public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : n_(n), adj_(n) {
        if (n < 1 || n > kMaxVertices)
            throw std::invalid_argument("SimpleGraph: vertex count out of range 1..128");
    }

    int n() const { return n_; }
    int edge_count() const {
        int m = 0;
        for (int v = 0; v < n_; ++v) m += adj_[v].count();
        return m / 2;
    }

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    VertexSet neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    VertexSet vertices() const { return VertexSet::full(n_); }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("SimpleGraph: loop edge rejected");
        adj_[u].set(v);
        adj_[v].set(u);
    }
    void remove_edge(int u, int v) {
        adj_[u].reset(v);
        adj_[v].reset(u);
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n_; ++u)
            for (int v : iterate(adj_[u]))
                if (v > u) es.emplace_back(u, v);
        return es;
    }

    bool operator==(const SimpleGraph&) const = default;

  private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("SimpleGraph: vertex out of range");
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// A graph with two labeled end-vertices x, y; all other vertices are inner.
struct Link {
    SimpleGraph graph;
    int x = 0, y = 1;
};

inline SimpleGraph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

// Connected component of `within` containing `start` (start must be in `within`).
inline VertexSet component_of(const SimpleGraph& g, VertexSet within, int start) {
    VertexSet comp = VertexSet::single(start);
    VertexSet frontier = comp;
    while (frontier.any()) {
        VertexSet next;
        for (int v : iterate(frontier)) next |= g.neighbors(v);
        next &= within;
        next -= comp;
        comp |= next;
        frontier = next;
    }
    return comp;
}

inline std::vector<VertexSet> components(const SimpleGraph& g, VertexSet within) {
    std::vector<VertexSet> out;
    VertexSet rest = within;
    while (rest.any()) {
        VertexSet c = component_of(g, rest, rest.first());
        out.push_back(c);
        rest -= c;
    }
    return out;
}

inline bool is_connected(const SimpleGraph& g, VertexSet within) {
    if (within.empty()) return false;
    return component_of(g, within, within.first()) == within;
}

inline bool is_connected(const SimpleGraph& g) { return is_connected(g, g.vertices()); }

// Subgraph induced by S, vertices relabeled 0..|S|-1 in ascending original
// order. `map_out`, when given, receives original ids indexed by new id.
inline SimpleGraph induced_subgraph(const SimpleGraph& g, VertexSet s,
                                    std::vector<int>* map_out = nullptr) {
    if (s.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
    if (!s.subset_of(g.vertices()))
        throw std::invalid_argument("induced_subgraph: set not within vertex range");
    std::vector<int> orig;
    for (int v : iterate(s)) orig.push_back(v);
    SimpleGraph h(static_cast<int>(orig.size()));
    for (size_t i = 0; i < orig.size(); ++i)
        for (size_t j = i + 1; j < orig.size(); ++j)
            if (g.adjacent(orig[i], orig[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    if (map_out) *map_out = orig;
    return h;
}

// --- graph6 codec (McKay short form, n <= 62) ---

inline std::string graph6_encode(const SimpleGraph& g) {
    if (g.n() > 62) throw std::invalid_argument("graph6_encode: n > 62 needs long form");
    std::string out;
    out.push_back(static_cast<char>(g.n() + 63));
    int bit = 0, acc = 0;
    auto flush = [&](bool pad) {
        if (bit == 0 && !pad) return;
        out.push_back(static_cast<char>((acc << (6 - bit)) + 63));
        acc = 0;
        bit = 0;
    };
    for (int v = 1; v < g.n(); ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++bit == 6) flush(false);
        }
    if (bit > 0) flush(true);
    return out;
}

inline SimpleGraph graph6_decode(const std::string& line) {
    if (line.empty()) throw std::invalid_argument("graph6_decode: empty input");
    int n = static_cast<unsigned char>(line[0]) - 63;
    if (n < 1 || n > 62) throw std::invalid_argument("graph6_decode: malformed header byte");
    int nbits = n * (n - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    if (static_cast<int>(line.size()) != 1 + nbytes)
        throw std::invalid_argument("graph6_decode: truncated or overlong bit payload");
    SimpleGraph g(n);
    int idx = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            int byte = static_cast<unsigned char>(line[1 + idx / 6]) - 63;
            if (byte < 0 || byte > 63) throw std::invalid_argument("graph6_decode: bad payload byte");
            if ((byte >> (5 - idx % 6)) & 1) g.add_edge(u, v);
            ++idx;
        }
    return g;
}

// --- native edge-list text format: "n m" then m lines "u v" ---

inline std::string edge_list_encode(const SimpleGraph& g) {
    auto es = g.edges();
    std::ostringstream os;
    os << g.n() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) os << u << ' ' << v << '\n';
    return os.str();
}

inline SimpleGraph edge_list_decode(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("edge_list_decode: missing header");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("edge_list_decode: truncated edge list");
        es.emplace_back(u, v);
    }
    return build_graph(n, es);
}

inline SimpleGraph edge_list_decode(const std::string& text) {
    std::istringstream is(text);
    return edge_list_decode(is);
}

}  // namespace theta

#endif
