#ifndef THETA_TESTS_ORACLES_HPP
#define THETA_TESTS_ORACLES_HPP

// Naive reference implementations used only by the tests. They share no
// code with the library's search routines: connectivity is a plain BFS
// over an adjacency matrix, Hamilton questions are settled by permutation
// enumeration, and spanning thetas by scanning edge subsets of size n + 1.

#include <algorithm>
#include <numeric>
#include <vector>

#include "theta/simple_graph.hpp"

namespace oracles {

struct Matrix {
    int n = 0;
    std::vector<char> adj;  // n*n, symmetric
    bool at(int i, int j) const { return adj[i * n + j] != 0; }
};

inline Matrix matrix_of(const theta::SimpleGraph& g) {
    Matrix m;
    m.n = g.n();
    m.adj.assign(m.n * m.n, 0);
    for (auto [u, v] : g.edges()) m.adj[u * m.n + v] = m.adj[v * m.n + u] = 1;
    return m;
}

// BFS over an explicit edge mask (pairs of endpoints); vertices outside
// `alive` are ignored.
inline bool connected_on(int n, const std::vector<std::pair<int, int>>& edges,
                         const std::vector<char>& alive) {
    int start = -1, count = 0;
    for (int v = 0; v < n; ++v)
        if (alive[v]) {
            if (start < 0) start = v;
            ++count;
        }
    if (count == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> queue{start};
    seen[start] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        for (auto [a, b] : edges) {
            int other = a == u ? b : b == u ? a : -1;
            if (other < 0 || !alive[other] || seen[other]) continue;
            seen[other] = 1;
            ++reached;
            queue.push_back(other);
        }
    }
    return reached == count;
}

inline bool naive_connected(const theta::SimpleGraph& g) {
    std::vector<char> alive(g.n(), 1);
    return connected_on(g.n(), g.edges(), alive);
}

// Hamilton cycle by checking every cyclic vertex order (first vertex fixed).
inline bool naive_hamilton_cycle(const theta::SimpleGraph& g) {
    int n = g.n();
    if (n < 3) return false;
    Matrix m = matrix_of(g);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = m.at(perm[n - 1], perm[0]);
        for (int i = 0; ok && i + 1 < n; ++i) ok = m.at(perm[i], perm[i + 1]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return false;
}

// Hamilton path (any endpoints) by permutation enumeration.
inline bool naive_hamilton_path(const theta::SimpleGraph& g) {
    int n = g.n();
    if (n == 1) return true;
    Matrix m = matrix_of(g);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; ok && i + 1 < n; ++i) ok = m.at(perm[i], perm[i + 1]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Hamilton path with fixed endpoints x, y.
inline bool naive_hamilton_path_between(const theta::SimpleGraph& g, int x, int y) {
    int n = g.n();
    Matrix m = matrix_of(g);
    std::vector<int> mid;
    for (int v = 0; v < n; ++v)
        if (v != x && v != y) mid.push_back(v);
    std::sort(mid.begin(), mid.end());
    do {
        bool ok = true;
        int prev = x;
        for (int v : mid) {
            if (!m.at(prev, v)) { ok = false; break; }
            prev = v;
        }
        if (ok && m.at(prev, y)) return true;
    } while (std::next_permutation(mid.begin(), mid.end()));
    return n == 2 ? m.at(x, y) : false;
}

// No cut vertex: removing any single vertex keeps the rest connected.
inline bool naive_two_connected_subgraph(int n, const std::vector<std::pair<int, int>>& edges,
                                         const std::vector<char>& alive) {
    if (!connected_on(n, edges, alive)) return false;
    int count = 0;
    for (int v = 0; v < n; ++v) count += alive[v];
    if (count < 3) return false;
    for (int v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        std::vector<char> rest = alive;
        rest[v] = 0;
        std::vector<std::pair<int, int>> kept;
        for (auto [a, b] : edges)
            if (a != v && b != v) kept.push_back({a, b});
        if (!connected_on(n, kept, rest)) return false;
    }
    return true;
}

// A spanning theta is a connected spanning 2-connected subgraph with degree
// sequence (3, 3, 2, ..., 2): scan all edge subsets of size n + 1.
inline bool naive_spanning_theta(const theta::SimpleGraph& g) {
    int n = g.n(), m = static_cast<int>(g.edges().size());
    if (n < 4 || m < n + 1) return false;
    const auto& all = g.edges();
    std::vector<char> alive(n, 1);
    // choose n+1 of the m edges
    std::vector<int> idx(n + 1);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::vector<int> deg(n, 0);
        std::vector<std::pair<int, int>> sub;
        for (int e : idx) {
            sub.push_back(all[e]);
            ++deg[all[e].first];
            ++deg[all[e].second];
        }
        int threes = 0;
        bool degs_ok = true;
        for (int v = 0; v < n; ++v) {
            if (deg[v] == 3) ++threes;
            else if (deg[v] != 2) { degs_ok = false; break; }
        }
        if (degs_ok && threes == 2 && naive_two_connected_subgraph(n, sub, alive)) return true;
        // next combination
        int i = n;
        while (i >= 0 && idx[i] == m - (n + 1) + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j <= n; ++j) idx[j] = idx[j - 1] + 1;
    }
    return false;
}

// Naive vertex connectivity: smallest vertex set whose deletion disconnects
// (or min(n-1, ...) for complete graphs), by subset enumeration.
inline int naive_vertex_connectivity(const theta::SimpleGraph& g) {
    int n = g.n();
    std::vector<char> all(n, 1);
    if (!connected_on(n, g.edges(), all)) return 0;
    for (int size = 1; size < n - 1; ++size) {
        std::vector<int> c(size);
        std::iota(c.begin(), c.end(), 0);
        while (true) {
            std::vector<char> alive(n, 1);
            for (int v : c) alive[v] = 0;
            std::vector<std::pair<int, int>> kept;
            for (auto [a, b] : g.edges())
                if (alive[a] && alive[b]) kept.push_back({a, b});
            if (!connected_on(n, kept, alive)) return size;
            int i = size - 1;
            while (i >= 0 && c[i] == n - size + i) --i;
            if (i < 0) break;
            ++c[i];
            for (int j = i + 1; j < size; ++j) c[j] = c[j - 1] + 1;
        }
    }
    return n - 1;
}

// Largest independent set by subset scan (n <= ~20).
inline int naive_independence_number(const theta::SimpleGraph& g) {
    int n = g.n(), best = 0;
    Matrix m = matrix_of(g);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int i = 0; ok && i < n; ++i)
            if ((mask >> i) & 1)
                for (int j = i + 1; ok && j < n; ++j)
                    if (((mask >> j) & 1) && m.at(i, j)) ok = false;
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

}  // namespace oracles

#endif
