#ifndef THETA_MULTIGRAPH_HPP
#define THETA_MULTIGRAPH_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "theta/bitset128.hpp"

namespace theta {

// Multigraph with indexed edges; parallel edges are distinct by index. Loops
// are allowed only at the designated edge e0 (semi-loopless mode). A loop
// contributes 2 to its endpoint's degree.
class MultiGraph {
  public:
    MultiGraph(int n, std::vector<std::pair<int, int>> edges,
               std::optional<int> e0 = std::nullopt)
        : n_(n), edges_(std::move(edges)), e0_(e0) {
        if (n < 1) throw std::invalid_argument("MultiGraph: need at least one vertex");
        if (e0 && (*e0 < 0 || *e0 >= static_cast<int>(edges_.size())))
            throw std::invalid_argument("MultiGraph: e0 index out of range");
        if (e0 && edges_.size() < 2)
            throw std::invalid_argument("MultiGraph: e0 requires at least two edges");
        for (size_t i = 0; i < edges_.size(); ++i) {
            auto [u, v] = edges_[i];
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("MultiGraph: edge endpoint out of range");
            if (u == v && (!e0 || static_cast<int>(i) != *e0))
                throw std::invalid_argument("MultiGraph: loop without e0 designation");
        }
        for (int v = 0; v < n; ++v)
            if (degree(v) == 0) throw std::invalid_argument("MultiGraph: isolated vertex");
    }

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::pair<int, int> edge(int i) const { return edges_[i]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::optional<int> e0() const { return e0_; }
    bool is_semi_loopless() const { return e0_.has_value(); }
    bool e0_is_loop() const { return e0_ && edges_[*e0_].first == edges_[*e0_].second; }

    int degree(int v) const {
        int d = 0;
        for (auto [a, b] : edges_) d += (a == v) + (b == v);
        return d;
    }
    VertexSet odd_degree_vertices() const {
        VertexSet s;
        for (int v = 0; v < n_; ++v)
            if (degree(v) % 2 == 1) s.set(v);
        return s;
    }

    int multiplicity(int u, int v) const {
        int m = 0;
        for (auto [a, b] : edges_)
            m += (a == u && b == v) || (a == v && b == u);
        return m;
    }

    bool connected() const {
        VertexSet seen = VertexSet::single(0);
        bool grew = true;
        while (grew) {
            grew = false;
            for (auto [a, b] : edges_) {
                if (seen.test(a) && !seen.test(b)) { seen.set(b); grew = true; }
                if (seen.test(b) && !seen.test(a)) { seen.set(a); grew = true; }
            }
        }
        return seen.count() == n_;
    }

  private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::optional<int> e0_;
};

inline MultiGraph build_multigraph(int n, const std::vector<std::pair<int, int>>& edges,
                                   std::optional<int> e0 = std::nullopt) {
    return MultiGraph(n, edges, e0);
}

// Exact minimum edge-cut size, counting multiplicities; brute force over
// vertex bipartitions (loops never cross a cut).
inline int edge_connectivity(const MultiGraph& f) {
    if (f.n() < 2) throw std::invalid_argument("edge_connectivity: need n >= 2");
    if (f.n() > 16) throw std::invalid_argument("edge_connectivity: n > 16 unsupported");
    if (!f.connected()) return 0;
    int best = f.edge_count() + 1;
    for (unsigned mask = 1; mask < (1u << (f.n() - 1)); ++mask) {
        // vertex n-1 always on side 0; mask picks side 1 among 0..n-2
        int cross = 0;
        for (auto [a, b] : f.edges()) {
            bool sa = a < f.n() - 1 && ((mask >> a) & 1);
            bool sb = b < f.n() - 1 && ((mask >> b) & 1);
            cross += sa != sb;
        }
        best = std::min(best, cross);
    }
    return best;
}

// Euler trail as an alternating vertex/edge-index sequence
// v0 e0 v1 e1 ... v_k; closed means Euler tour.
struct EulerTrail {
    std::vector<int> vertices;  // k+1 entries
    std::vector<int> edges;     // k entries, a permutation of edge indices
    bool closed = false;
};

// Hierholzer; Some iff connected with 0 or 2 odd-degree vertices.
inline std::optional<EulerTrail> find_euler_trail(const MultiGraph& f) {
    if (!f.connected()) return std::nullopt;
    VertexSet odd = f.odd_degree_vertices();
    int odd_count = odd.count();
    if (odd_count != 0 && odd_count != 2) return std::nullopt;
    int start = odd_count == 2 ? odd.first() : 0;

    int m = f.edge_count();
    std::vector<std::vector<std::pair<int, int>>> inc(f.n());  // (edge index, other end)
    for (int i = 0; i < m; ++i) {
        auto [a, b] = f.edge(i);
        inc[a].emplace_back(i, b);
        if (a != b) inc[b].emplace_back(i, a);
    }
    std::vector<char> used(m, 0);
    std::vector<size_t> ptr(f.n(), 0);
    // Hierholzer with an explicit stack of (vertex, incoming edge).
    std::vector<std::pair<int, int>> stack{{start, -1}};
    std::vector<std::pair<int, int>> out;  // reversed trail
    while (!stack.empty()) {
        auto [v, in_edge] = stack.back();
        bool advanced = false;
        while (ptr[v] < inc[v].size()) {
            auto [ei, w] = inc[v][ptr[v]];
            if (used[ei]) { ++ptr[v]; continue; }
            used[ei] = 1;
            stack.push_back({w, ei});
            advanced = true;
            break;
        }
        if (!advanced) {
            out.push_back({v, in_edge});
            stack.pop_back();
        }
    }
    if (static_cast<int>(out.size()) != m + 1) return std::nullopt;  // disconnected edges
    std::reverse(out.begin(), out.end());
    EulerTrail t;
    for (size_t i = 0; i < out.size(); ++i) {
        t.vertices.push_back(out[i].first);
        if (i + 1 < out.size()) t.edges.push_back(out[i + 1].second);
    }
    t.closed = odd_count == 0;
    return t;
}

inline bool has_euler_tour(const MultiGraph& f) {
    return f.connected() && f.odd_degree_vertices().empty();
}

namespace detail {

inline std::vector<std::vector<int>> multiplicity_matrix(const MultiGraph& f) {
    std::vector<std::vector<int>> m(f.n(), std::vector<int>(f.n(), 0));
    for (auto [a, b] : f.edges()) {
        ++m[a][b];
        if (a != b) ++m[b][a];
    }
    return m;
}

}  // namespace detail

// Multiplicity-preserving vertex bijection, exhaustive over permutations;
// for semi-loopless inputs the e0 edge must map to the e0 edge.
inline std::optional<std::vector<int>> multigraph_isomorphic(const MultiGraph& f1,
                                                             const MultiGraph& f2) {
    if (f1.n() > 12 || f2.n() > 12)
        throw std::invalid_argument("multigraph_isomorphic: size cap 12 exceeded");
    if (f1.n() != f2.n() || f1.edge_count() != f2.edge_count()) return std::nullopt;
    if (f1.is_semi_loopless() != f2.is_semi_loopless()) return std::nullopt;
    if (f1.is_semi_loopless() && f1.e0_is_loop() != f2.e0_is_loop()) return std::nullopt;
    auto m1 = detail::multiplicity_matrix(f1), m2 = detail::multiplicity_matrix(f2);
    std::vector<int> d1(f1.n()), d2(f2.n());
    for (int v = 0; v < f1.n(); ++v) d1[v] = f1.degree(v);
    for (int v = 0; v < f2.n(); ++v) d2[v] = f2.degree(v);
    {
        auto s1 = d1, s2 = d2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return std::nullopt;
    }
    std::vector<int> perm(f1.n());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < f1.n() && ok; ++u) {
            if (d1[u] != d2[perm[u]]) { ok = false; break; }
            for (int v = u; v < f1.n() && ok; ++v)
                if (m1[u][v] != m2[perm[u]][perm[v]]) ok = false;
        }
        if (ok && f1.is_semi_loopless()) {
            auto [a, b] = f1.edge(*f1.e0());
            auto [c, d] = f2.edge(*f2.e0());
            ok = (perm[a] == c && perm[b] == d) || (perm[a] == d && perm[b] == c);
        }
        if (ok) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

// Text format: line 1 "n m [e0=<index>]"; then m lines "u v".
inline std::string multigraph_encode(const MultiGraph& f) {
    std::ostringstream os;
    os << f.n() << ' ' << f.edge_count();
    if (f.e0()) os << " e0=" << *f.e0();
    os << '\n';
    for (auto [u, v] : f.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

inline MultiGraph multigraph_decode(const std::string& text) {
    std::istringstream is(text);
    std::string header;
    while (std::getline(is, header) && header.empty()) {}
    std::istringstream hs(header);
    int n, m;
    if (!(hs >> n >> m)) throw std::invalid_argument("multigraph_decode: bad header");
    std::optional<int> e0;
    std::string tok;
    if (hs >> tok) {
        if (tok.rfind("e0=", 0) != 0) throw std::invalid_argument("multigraph_decode: bad e0 token");
        e0 = std::stoi(tok.substr(3));
    }
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(is >> u >> v)) throw std::invalid_argument("multigraph_decode: truncated edges");
        es.emplace_back(u, v);
    }
    return MultiGraph(n, es, e0);
}

}  // namespace theta

#endif
