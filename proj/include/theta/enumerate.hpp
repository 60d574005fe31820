#ifndef THETA_ENUMERATE_HPP
#define THETA_ENUMERATE_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "theta/multigraph.hpp"
#include "theta/simple_graph.hpp"

namespace theta {

namespace detail {

// Bits of the upper triangle in column order: (0,1),(0,2),(1,2),(0,3),...
// for the relabeling that puts perm[i] at position i.
struct CanonSearch {
    const SimpleGraph& g;
    std::string best;           // '0'/'1' chars; empty = unset
    std::vector<int> perm;
    std::vector<char> used;
    std::string cur;

    explicit CanonSearch(const SimpleGraph& g_) : g(g_), used(g_.n(), 0) {}

    // `tight` is true while cur equals the incumbent prefix; only then is
    // segment-local pruning sound. Once cur is strictly smaller than the
    // incumbent at some position, every completion must be explored.
    void rec(int depth, bool tight) {
        if (depth == g.n()) {
            if (best.empty() || cur < best) best = cur;
            return;
        }
        for (int w = 0; w < g.n(); ++w) {
            if (used[w]) continue;
            size_t mark = cur.size();
            for (int i = 0; i < depth; ++i)
                cur.push_back(g.adjacent(perm[i], w) ? '1' : '0');
            bool viable = true;
            bool child_tight = tight;
            if (tight && !best.empty()) {
                int cmp = cur.compare(mark, cur.size() - mark, best, mark, cur.size() - mark);
                if (cmp > 0) viable = false;        // larger than the incumbent
                else if (cmp < 0) child_tight = false;  // strictly smaller already
            }
            if (viable) {
                perm.push_back(w);
                used[w] = 1;
                rec(depth + 1, child_tight);
                used[w] = 0;
                perm.pop_back();
            }
            cur.resize(mark);
        }
    }
};

}  // namespace detail

// Lexicographically minimal upper-triangle adjacency string over all vertex
// permutations. Equal exactly for isomorphic graphs.
inline std::string canonical_form(const SimpleGraph& g) {
    if (g.n() > 10) throw std::invalid_argument("canonical_form: n > 10 unsupported");
    detail::CanonSearch s(g);
    s.rec(0, true);
    return std::to_string(g.n()) + ":" + s.best;
}

using GraphPredicate = std::function<bool(const SimpleGraph&)>;

// One representative per isomorphism class on n vertices satisfying
// `predicate` (empty = all). `hereditary_prune`, when given, must be a
// property closed under vertex deletion (e.g. claw-freeness): intermediate
// graphs failing it are discarded, which is sound because every induced
// subgraph of a surviving graph also satisfies it.
inline std::vector<SimpleGraph> enumerate_graphs(int n, const GraphPredicate& predicate = {},
                                                 const GraphPredicate& hereditary_prune = {}) {
    if (n < 1 || n > 9) throw std::invalid_argument("enumerate_graphs: need 1 <= n <= 9");
    // Grow vertex by vertex: every (k+1)-vertex graph arises from some
    // k-vertex graph by adding one vertex with an arbitrary neighborhood.
    std::vector<SimpleGraph> level{SimpleGraph(1)};
    for (int k = 1; k < n; ++k) {
        std::set<std::string> seen;
        std::vector<std::pair<std::string, SimpleGraph>> next;
        for (const SimpleGraph& g : level) {
            for (unsigned mask = 0; mask < (1u << k); ++mask) {
                SimpleGraph h(k + 1);
                for (auto [u, v] : g.edges()) h.add_edge(u, v);
                for (int v = 0; v < k; ++v)
                    if ((mask >> v) & 1) h.add_edge(v, k);
                if (hereditary_prune && !hereditary_prune(h)) continue;
                std::string form = canonical_form(h);
                if (seen.insert(form).second) next.emplace_back(std::move(form), std::move(h));
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        level.clear();
        for (auto& [form, g] : next) level.push_back(std::move(g));
    }
    if (!predicate) return level;
    std::vector<SimpleGraph> out;
    for (const SimpleGraph& g : level)
        if (predicate(g)) out.push_back(g);
    return out;
}

namespace detail {

// Canonical key of a multigraph: minimum over vertex permutations of the
// flattened multiplicity matrix (upper triangle) plus the e0 descriptor.
inline std::string multigraph_key(int n, const std::vector<std::vector<int>>& mult,
                                  int loop_at, int e0_a, int e0_b) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::string best;
    do {
        std::string key;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                key.push_back(static_cast<char>('0' + mult[perm[i]][perm[j]]));
        if (loop_at >= 0) {
            int pos = 0;
            for (int i = 0; i < n; ++i)
                if (perm[i] == loop_at) pos = i;
            key += "|L" + std::to_string(pos);
        } else if (e0_a >= 0) {
            int pa = 0, pb = 0;
            for (int i = 0; i < n; ++i) {
                if (perm[i] == e0_a) pa = i;
                if (perm[i] == e0_b) pb = i;
            }
            key += "|E" + std::to_string(std::min(pa, pb)) + "," + std::to_string(std::max(pa, pb));
        }
        if (best.empty() || key < best) best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(n) + ":" + best;
}

inline MultiGraph assemble_multigraph(int n, const std::vector<std::vector<int>>& mult,
                                      int loop_at, int e0_a, int e0_b) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int t = 0; t < mult[i][j]; ++t) edges.emplace_back(i, j);
    std::optional<int> e0;
    if (loop_at >= 0) {
        edges.emplace_back(loop_at, loop_at);
        e0 = static_cast<int>(edges.size()) - 1;
    } else if (e0_a >= 0) {
        edges.emplace_back(e0_a, e0_b);  // one parallel copy of (e0_a, e0_b) is the label
        e0 = static_cast<int>(edges.size()) - 1;
    }
    return MultiGraph(n, edges, e0);
}

}  // namespace detail

// Isomorph-free multigraphs with 1..max_n vertices and per-pair multiplicity
// at most max_mult; in semi-loopless mode every output carries an e0 label
// (a loop, or one designated copy of a parallel class) and the label is
// respected by the isomorphism classes.
inline std::vector<MultiGraph> enumerate_multigraphs(int max_n, int max_mult,
                                                     bool semi_loopless = false) {
    if (max_mult < 1 || max_mult > 4)
        throw std::invalid_argument("enumerate_multigraphs: need 1 <= max_mult <= 4");
    if (max_n < 1 || max_n > (semi_loopless ? 3 : 4))
        throw std::invalid_argument("enumerate_multigraphs: vertex cap exceeded");
    std::vector<MultiGraph> out;
    std::set<std::string> seen;
    for (int n = 1; n <= max_n; ++n) {
        int pairs = n * (n - 1) / 2;
        std::vector<std::pair<int, int>> pair_list;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pair_list.emplace_back(i, j);
        std::vector<int> mults(pairs, 0);
        auto emit = [&](int loop_at, int e0_a, int e0_b) {
            std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
            for (int p = 0; p < pairs; ++p) {
                auto [i, j] = pair_list[p];
                m[i][j] = m[j][i] = mults[p];
            }
            // Reject isolated vertices (a loop keeps its vertex busy).
            for (int v = 0; v < n; ++v) {
                int deg = (v == loop_at) ? 2 : 0;
                for (int w = 0; w < n; ++w) deg += m[v][w];
                if (deg == 0) return;
            }
            int edge_total = loop_at >= 0 ? 1 : 0;
            for (int p = 0; p < pairs; ++p) edge_total += mults[p];
            if (edge_total == 0) return;
            if (semi_loopless && edge_total < 2) return;
            std::string key = detail::multigraph_key(n, m, loop_at, e0_a, e0_b);
            if (seen.insert(key).second)
                out.push_back(detail::assemble_multigraph(n, m, loop_at, e0_a, e0_b));
        };
        auto sweep = [&](auto&& self, int p) -> void {
            if (p == pairs) {
                if (!semi_loopless) {
                    emit(-1, -1, -1);
                } else {
                    for (int v = 0; v < n; ++v) emit(v, -1, -1);  // e0 = loop at v
                    for (int q = 0; q < pairs; ++q)
                        if (mults[q] < max_mult) {
                            // e0 = one extra copy of pair q
                            ++mults[q];
                            auto [a, b] = pair_list[q];
                            emit(-1, a, b);
                            --mults[q];
                        }
                }
                return;
            }
            for (int c = 0; c <= max_mult; ++c) {
                mults[p] = c;
                self(self, p + 1);
            }
            mults[p] = 0;
        };
        sweep(sweep, 0);
    }
    return out;
}

// Exhaustive minimality check: no proper induced subgraph may satisfy the
// target property. Scans subsets in decreasing size.
struct MinimalityVerdict {
    bool is_minimal = true;
    std::optional<VertexSet> witness;  // a satisfying proper induced subgraph
};

inline MinimalityVerdict minimality_scan(const SimpleGraph& g, const GraphPredicate& property) {
    if (g.n() > 16) throw std::invalid_argument("minimality_scan: n > 16 unsupported");
    int n = g.n();
    for (int size = n - 1; size >= 1; --size) {
        std::vector<int> pick(size);
        MinimalityVerdict found;
        auto rec = [&](auto&& self, int idx, int from) -> bool {
            if (idx == size) {
                VertexSet s;
                for (int v : pick) s.set(v);
                if (property(induced_subgraph(g, s))) {
                    found = {false, s};
                    return true;
                }
                return false;
            }
            for (int v = from; v < n; ++v) {
                pick[idx] = v;
                if (self(self, idx + 1, v + 1)) return true;
            }
            return false;
        };
        if (rec(rec, 0, 0)) return found;
    }
    return {};
}

}  // namespace theta

#endif
