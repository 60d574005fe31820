#ifndef THETA_METRICS_HPP
#define THETA_METRICS_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "theta/simple_graph.hpp"

namespace theta {

namespace detail {

// Max number of internally vertex-disjoint s-t paths (s,t non-adjacent),
// by unit-capacity max-flow on the vertex-split digraph. Node 2v = v_in,
// 2v+1 = v_out; v_in->v_out carries the vertex capacity.
inline int local_vertex_connectivity(const SimpleGraph& g, int s, int t) {
    int n = g.n();
    int N = 2 * n;
    std::vector<std::vector<int>> cap(N, std::vector<int>(N, 0));
    for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? n : 1;
    for (int u = 0; u < n; ++u)
        for (int v : iterate(g.neighbors(u))) cap[2 * u + 1][2 * v] = 1;
    int src = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    while (true) {
        std::vector<int> prev(N, -1);
        prev[src] = src;
        std::vector<int> queue{src};
        for (size_t qi = 0; qi < queue.size() && prev[sink] < 0; ++qi) {
            int u = queue[qi];
            for (int v = 0; v < N; ++v)
                if (prev[v] < 0 && cap[u][v] > 0) {
                    prev[v] = u;
                    queue.push_back(v);
                }
        }
        if (prev[sink] < 0) break;
        for (int v = sink; v != src; v = prev[v]) {
            cap[prev[v]][v] -= 1;
            cap[v][prev[v]] += 1;
        }
        ++flow;
    }
    return flow;
}

}  // namespace detail

// Exact vertex connectivity kappa(G); K_n yields n-1.
inline int vertex_connectivity(const SimpleGraph& g) {
    if (g.n() < 2) throw std::invalid_argument("vertex_connectivity: need n >= 2");
    int n = g.n();
    bool complete = true;
    for (int v = 0; v < n && complete; ++v) complete = g.degree(v) == n - 1;
    if (complete) return n - 1;
    int best = n - 1;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (!g.adjacent(s, t))
                best = std::min(best, detail::local_vertex_connectivity(g, s, t));
    return best;
}

// All unordered 2-cuts with their links <{x,y} union V(H)> per component H,
// pairs in lexicographic order.
struct TwoCut {
    std::pair<int, int> cut;
    std::vector<SimpleGraph> links;               // relabeled link graphs
    std::vector<std::vector<int>> link_vertices;  // original ids per link
    std::vector<std::pair<int, int>> link_ends;   // (x,y) positions in each relabeled link
};

inline std::vector<TwoCut> list_two_cuts(const SimpleGraph& g) {
    if (g.n() < 4) throw std::invalid_argument("list_two_cuts: need n >= 4");
    if (!is_connected(g)) throw std::invalid_argument("list_two_cuts: disconnected input");
    std::vector<TwoCut> out;
    for (int x = 0; x < g.n(); ++x)
        for (int y = x + 1; y < g.n(); ++y) {
            VertexSet rest = g.vertices();
            rest.reset(x);
            rest.reset(y);
            auto comps = components(g, rest);
            if (comps.size() < 2) continue;
            TwoCut tc;
            tc.cut = {x, y};
            for (const auto& c : comps) {
                VertexSet lv = c;
                lv.set(x);
                lv.set(y);
                std::vector<int> orig;
                SimpleGraph link = induced_subgraph(g, lv, &orig);
                auto pos = [&](int v) {
                    return static_cast<int>(std::lower_bound(orig.begin(), orig.end(), v) - orig.begin());
                };
                tc.link_ends.emplace_back(pos(x), pos(y));
                tc.links.push_back(std::move(link));
                tc.link_vertices.push_back(std::move(orig));
            }
            out.push_back(std::move(tc));
        }
    return out;
}

namespace detail {

// Exact maximum clique via branch and bound with greedy coloring bound.
inline void max_clique_rec(const std::vector<VertexSet>& adj, VertexSet cand, int size,
                           int& best) {
    if (size + cand.count() <= best) return;
    if (cand.empty()) {
        best = std::max(best, size);
        return;
    }
    // Greedy coloring of candidates for the bound; branch in reverse color order.
    std::vector<int> order, colors;
    {
        VertexSet rest = cand;
        int color = 0;
        while (rest.any()) {
            ++color;
            VertexSet avail = rest;
            while (avail.any()) {
                int v = avail.first();
                order.push_back(v);
                colors.push_back(color);
                rest.reset(v);
                avail.reset(v);
                avail -= adj[v];
            }
        }
    }
    VertexSet remaining = cand;
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
        if (size + colors[i] <= best) return;
        int v = order[i];
        max_clique_rec(adj, remaining & adj[v], size + 1, best);
        remaining.reset(v);
    }
}

}  // namespace detail

// Exact independence number: maximum clique of the complement.
inline int independence_number(const SimpleGraph& g) {
    std::vector<VertexSet> co(g.n());
    VertexSet all = g.vertices();
    for (int v = 0; v < g.n(); ++v) {
        co[v] = all - g.neighbors(v);
        co[v].reset(v);
    }
    int best = 0;
    detail::max_clique_rec(co, all, 0, best);
    return best;
}

inline bool is_locally_connected(const SimpleGraph& g) {
    for (int v = 0; v < g.n(); ++v) {
        VertexSet nb = g.neighbors(v);
        if (nb.empty()) return g.n() == 1;
        if (!is_connected(g, nb)) return false;
    }
    return true;
}

struct StructuralMetrics {
    int alpha = 0;
    bool is_cycle = false;
    bool is_complete = false;
    bool locally_connected = false;
    int min_degree = 0;
};

inline StructuralMetrics structural_metrics(const SimpleGraph& g) {
    StructuralMetrics m;
    m.alpha = independence_number(g);
    m.min_degree = g.n() > 0 ? g.degree(0) : 0;
    bool two_regular = true, complete = true;
    for (int v = 0; v < g.n(); ++v) {
        int d = g.degree(v);
        m.min_degree = std::min(m.min_degree, d);
        two_regular = two_regular && d == 2;
        complete = complete && d == g.n() - 1;
    }
    m.is_cycle = two_regular && g.n() >= 3 && is_connected(g);
    m.is_complete = complete;
    m.locally_connected = is_locally_connected(g);
    return m;
}

// All minimum vertex cuts, by exhaustive subset check (intended for small n).
inline std::vector<VertexSet> minimum_vertex_cuts(const SimpleGraph& g) {
    int k = vertex_connectivity(g);
    std::vector<VertexSet> cuts;
    if (k >= g.n() - 1) return cuts;  // complete-ish: no separating set
    std::vector<int> pick(k);
    auto rec = [&](auto&& self, int idx, int from) -> void {
        if (idx == k) {
            VertexSet s;
            for (int v : pick) s.set(v);
            VertexSet rest = g.vertices() - s;
            if (rest.any() && components(g, rest).size() >= 2) cuts.push_back(s);
            return;
        }
        for (int v = from; v < g.n(); ++v) {
            pick[idx] = v;
            self(self, idx + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
    return cuts;
}

}  // namespace theta

#endif
