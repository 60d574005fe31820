#ifndef THETA_HAMILTON_HPP
#define THETA_HAMILTON_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "theta/metrics.hpp"
#include "theta/simple_graph.hpp"

namespace theta {

namespace detail {

// Polynomial-time refutation for spanning subgraphs with prescribed degrees:
// every vertex w must end with degree t(w) = 2, plus 1 each for the branch
// vertices u and v (pass u = v = -1 for a Hamilton cycle). Returns true only
// when no such subgraph can exist. Rules, iterated to a fixpoint:
//   - a vertex with t(w) forced edges excludes its remaining edges; one that
//     cannot reach t(w) even using all non-excluded edges is a contradiction;
//   - a forced cycle is a contradiction unless it may legally appear: for a
//     Hamilton cycle that means the cycle spans everything; for a theta,
//     every cycle passes through both branch vertices;
//   - an edge closing a forced path into an illegal cycle is excluded;
//   - final parity test: the chosen non-forced edges of each component of
//     the available graph contribute an even degree total, so the component
//     sum of t(w) - forced_degree(w) must be even.
inline bool degree_constrained_refute(const SimpleGraph& g, int u, int v) {
    const auto& es = g.edges();
    int m = static_cast<int>(es.size());
    int n = g.n();
    enum : char { kAvail = 0, kForced = 1, kExcluded = 2 };
    std::vector<char> state(m, kAvail);
    std::vector<std::vector<int>> inc(n);
    for (int e = 0; e < m; ++e) {
        inc[es[e].first].push_back(e);
        inc[es[e].second].push_back(e);
    }
    auto t = [&](int w) { return 2 + (w == u ? 1 : 0) + (w == v ? 1 : 0); };

    // A forced cycle avoiding `skip` cannot lie in any valid subgraph
    // (for the Hamilton case a short spanning-cycle check happens first).
    auto forced_cycle_avoiding = [&](int skip) {
        std::vector<int> parent(n);
        for (int w = 0; w < n; ++w) parent[w] = w;
        auto find = [&](int w) {
            while (parent[w] != w) w = parent[w] = parent[parent[w]];
            return w;
        };
        for (int e = 0; e < m; ++e) {
            if (state[e] != kForced) continue;
            auto [a, b] = es[e];
            if (a == skip || b == skip) continue;
            int ra = find(a), rb = find(b);
            if (ra == rb) return true;  // second a-b connection = cycle
            parent[ra] = rb;
        }
        return false;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (int w = 0; w < n; ++w) {
            int fo = 0, av = 0;
            for (int e : inc[w]) {
                if (state[e] == kForced) ++fo;
                else if (state[e] == kAvail) ++av;
            }
            if (fo > t(w) || fo + av < t(w)) return true;
            if (fo == t(w)) {
                for (int e : inc[w])
                    if (state[e] == kAvail) { state[e] = kExcluded; changed = true; }
            } else if (fo + av == t(w)) {
                for (int e : inc[w])
                    if (state[e] == kAvail) { state[e] = kForced; changed = true; }
            }
        }

        // Decompose the forced subgraph; refute on illegal cycles and close
        // off edges that would create one.
        int forced_total = 0;
        for (int e = 0; e < m; ++e)
            if (state[e] == kForced) ++forced_total;
        if (u < 0) {
            if (forced_total < n && forced_cycle_avoiding(-1)) return true;
        } else {
            if (forced_cycle_avoiding(u) || forced_cycle_avoiding(v)) return true;
        }
        // Maximal forced paths: component id + end detection over vertices of
        // forced degree >= 1. Components already verified acyclic as needed.
        {
            std::vector<int> comp(n, -1), fdeg(n, 0);
            std::vector<char> has_u, has_v;
            std::vector<std::vector<int>> ends;
            std::vector<int> size_of;
            for (int w = 0; w < n; ++w)
                for (int e : inc[w])
                    if (state[e] == kForced) ++fdeg[w];
            int nc = 0;
            for (int s = 0; s < n; ++s) {
                if (comp[s] != -1 || fdeg[s] == 0) continue;
                comp[s] = nc;
                has_u.push_back(s == u);
                has_v.push_back(s == v);
                ends.push_back({});
                size_of.push_back(0);
                std::vector<int> stack{s};
                while (!stack.empty()) {
                    int w = stack.back();
                    stack.pop_back();
                    ++size_of[nc];
                    if (w == u) has_u[nc] = true;
                    if (w == v) has_v[nc] = true;
                    if (fdeg[w] == 1) ends[nc].push_back(w);
                    for (int e : inc[w]) {
                        if (state[e] != kForced) continue;
                        int other = es[e].first ^ es[e].second ^ w;
                        if (comp[other] == -1) {
                            comp[other] = nc;
                            stack.push_back(other);
                        }
                    }
                }
                ++nc;
            }
            for (int e = 0; e < m; ++e) {
                if (state[e] != kAvail) continue;
                auto [a, b] = es[e];
                if (comp[a] < 0 || comp[a] != comp[b]) continue;
                int c = comp[a];
                if (static_cast<int>(ends[c].size()) != 2) continue;
                if ((ends[c][0] != a || ends[c][1] != b) && (ends[c][0] != b || ends[c][1] != a))
                    continue;
                bool legal_close = u < 0 ? size_of[c] == n : (has_u[c] && has_v[c]);
                if (!legal_close) { state[e] = kExcluded; changed = true; }
            }
        }
    }

    // Component parity over the available (non-forced, non-excluded) graph.
    {
        std::vector<int> parent(n);
        for (int w = 0; w < n; ++w) parent[w] = w;
        auto find = [&](int w) {
            while (parent[w] != w) w = parent[w] = parent[parent[w]];
            return w;
        };
        for (int e = 0; e < m; ++e)
            if (state[e] == kAvail) parent[find(es[e].first)] = find(es[e].second);
        std::vector<int> need(n, 0), comp_sum(n, 0);
        for (int w = 0; w < n; ++w) need[w] = t(w);
        for (int e = 0; e < m; ++e)
            if (state[e] == kForced) { --need[es[e].first]; --need[es[e].second]; }
        for (int w = 0; w < n; ++w) comp_sum[find(w)] += need[w];
        for (int w = 0; w < n; ++w)
            if (comp_sum[w] % 2 != 0) return true;
    }
    return false;
}

// Backtracking Hamilton-path extension. `target` = -1 accepts any final
// vertex. Prunes on reachability of the unvisited set and on unvisited
// vertices that no longer have two usable neighbors.
inline bool ham_extend(const SimpleGraph& g, int cur, int target, VertexSet visited,
                       std::vector<int>& path) {
    VertexSet rest = g.vertices() - visited;
    if (rest.empty()) return target < 0 || cur == target;

    // Every unvisited vertex needs a way in and a way out.
    for (int w : iterate(rest)) {
        VertexSet avail = g.neighbors(w) & (rest | VertexSet::single(cur));
        int need = (target < 0 || w == target) ? 1 : 2;
        if (avail.count() < need) return false;
    }
    // The unvisited set must be reachable from the current end in one block
    // (a Hamilton path cannot leave and re-enter a component).
    {
        VertexSet zone = rest | VertexSet::single(cur);
        if (component_of(g, zone, cur) != zone) return false;
    }
    VertexSet cand = g.neighbors(cur) & rest;
    // Degree-2 forcing: a non-target candidate whose only remaining
    // neighbor is cur must be taken now.
    for (int w : iterate(cand)) {
        if (w == target) continue;
        VertexSet avail = g.neighbors(w) & (rest | VertexSet::single(cur));
        if (avail == VertexSet::single(cur) && rest.count() > 1) {
            cand = VertexSet::single(w);
            break;
        }
    }
    for (int w : iterate(cand)) {
        if (w == target && rest.count() > 1) continue;
        path.push_back(w);
        if (ham_extend(g, w, target, visited | VertexSet::single(w), path)) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace detail

// Hamilton cycle, returned as a vertex sequence of length n (closing edge
// back to the first entry implied). Exact backtracking, deterministic.
inline std::optional<std::vector<int>> hamilton_cycle(const SimpleGraph& g) {
    if (g.n() < 3) throw std::invalid_argument("hamilton_cycle: need n >= 3");
    if (!is_connected(g)) return std::nullopt;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) < 2) return std::nullopt;
    // Polynomial pre-refutation pays off once graphs outgrow the trivial
    // range; below that the backtracking is already instantaneous.
    if (g.n() > 12) {
        if (vertex_connectivity(g) < 2) return std::nullopt;
        if (detail::degree_constrained_refute(g, -1, -1)) return std::nullopt;
    }
    // Anchor at vertex 0 and try each neighbor as the predecessor on the
    // cycle; the second vertex is forced below the predecessor to halve work.
    for (int back : iterate(g.neighbors(0))) {
        std::vector<int> path{0};
        VertexSet visited = VertexSet::single(0);
        // Path from 0 to `back` covering everything = cycle through edge back-0.
        if (detail::ham_extend(g, 0, back, visited, path)) {
            if (path.size() >= 3 && path[1] < path.back()) return path;
            if (path.size() >= 3 && path[1] > path.back()) {
                std::reverse(path.begin() + 1, path.end());
                return path;
            }
        }
    }
    return std::nullopt;
}

// Hamilton path; with `constrained` the endpoints are exactly x and y,
// otherwise any Hamilton path is accepted (x, y ignored).
inline std::optional<std::vector<int>> hamilton_path_between(const SimpleGraph& g, int x, int y,
                                                             bool constrained) {
    if (constrained) {
        if (x < 0 || y < 0 || x >= g.n() || y >= g.n() || x == y)
            throw std::invalid_argument("hamilton_path_between: invalid endpoints");
        std::vector<int> path{x};
        if (detail::ham_extend(g, x, y, VertexSet::single(x), path)) return path;
        return std::nullopt;
    }
    if (g.n() == 1) return std::vector<int>{0};
    for (int s = 0; s < g.n(); ++s) {
        std::vector<int> path{s};
        if (detail::ham_extend(g, s, -1, VertexSet::single(s), path)) return path;
    }
    return std::nullopt;
}

// Two branch vertices and three internally disjoint u-v paths covering V(G).
struct ThetaCertificate {
    int u = 0, v = 0;
    std::vector<std::vector<int>> paths;  // each from u to v, endpoints included
};

// Independent validity check; shares no code with the search.
inline bool verify_theta(const SimpleGraph& g, const ThetaCertificate& cert) {
    if (cert.paths.size() != 3) return false;
    if (cert.u < 0 || cert.v < 0 || cert.u >= g.n() || cert.v >= g.n() || cert.u == cert.v)
        return false;
    for (const auto& p : cert.paths)
        for (int w : p)
            if (w < 0 || w >= g.n()) return false;
    VertexSet interior_seen;
    int edge_paths = 0;
    std::vector<std::pair<int, int>> all_edges;
    for (const auto& p : cert.paths) {
        if (p.size() < 2) return false;
        if (p.front() != cert.u || p.back() != cert.v) return false;
        if (p.size() == 2) {
            if (!g.adjacent(cert.u, cert.v)) return false;
            if (++edge_paths > 1) return false;  // simple host: one uv edge
            all_edges.emplace_back(cert.u, cert.v);
            continue;
        }
        for (size_t i = 0; i + 1 < p.size(); ++i) {
            if (p[i] < 0 || p[i] >= g.n() || !g.adjacent(p[i], p[i + 1])) return false;
            all_edges.emplace_back(std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1]));
        }
        for (size_t i = 1; i + 1 < p.size(); ++i) {
            int w = p[i];
            if (w == cert.u || w == cert.v) return false;
            if (interior_seen.test(w)) return false;
            interior_seen.set(w);
        }
    }
    if ((interior_seen.count() + 2) != g.n()) return false;
    std::sort(all_edges.begin(), all_edges.end());
    if (std::adjacent_find(all_edges.begin(), all_edges.end()) != all_edges.end()) return false;
    return static_cast<int>(all_edges.size()) == g.n() + 1;
}

namespace detail {

struct ThetaSearch {
    const SimpleGraph& g;
    int u, v;
    std::array<int, 3> starts{};  // second vertex of each path; == v for the uv edge
    std::vector<std::vector<int>> paths;

    ThetaSearch(const SimpleGraph& g_, int u_, int v_) : g(g_), u(u_), v(v_) {}

    // U = vertices not yet placed on any path; `idx` = path being extended,
    // `cur` = its current end.
    bool feasible(VertexSet u_set, int idx, int cur) const {
        VertexSet later;
        for (int j = idx + 1; j < 3; ++j)
            if (starts[j] != v) later.set(starts[j]);
        for (int w : iterate(u_set)) {
            VertexSet avail = g.neighbors(w) & (u_set | VertexSet::single(cur) | VertexSet::single(v));
            int have = avail.count() + (later.test(w) ? 1 : 0);  // u feeds a later start
            if (have < 2) return false;
        }
        auto comps = components(g, u_set);
        int segments = (3 - idx - 1) + 1;  // later paths + current continuation
        if (static_cast<int>(comps.size()) > segments) return false;
        for (const auto& c : comps) {
            bool entry = c.intersects(later) || c.intersects(g.neighbors(cur));
            bool exit = c.intersects(g.neighbors(v));
            if (!entry || !exit) return false;
        }
        return true;
    }

    bool extend(int idx, int cur, VertexSet u_set) {
        if (!feasible(u_set, idx, cur)) return false;
        // Option 1: close the current path at v.
        if (g.adjacent(cur, v)) {
            paths[idx].push_back(v);
            if (idx == 2) {
                if (u_set.empty()) return true;
            } else {
                int a = starts[idx + 1];
                if (a == v) {
                    paths[idx + 1] = {u, v};
                    if (extend_done(idx + 1, u_set)) return true;
                } else if (u_set.test(a)) {  // start must not already be placed
                    paths[idx + 1] = {u, a};
                    if (extend(idx + 1, a, u_set - VertexSet::single(a))) return true;
                }
            }
            paths[idx].pop_back();
        }
        // Option 2: keep walking through unplaced vertices.
        for (int w : iterate(g.neighbors(cur) & u_set)) {
            paths[idx].push_back(w);
            if (extend(idx, w, u_set - VertexSet::single(w))) return true;
            paths[idx].pop_back();
        }
        return false;
    }

    // Entered after writing a direct uv edge as path `idx`.
    bool extend_done(int idx, VertexSet u_set) {
        if (idx == 2) return u_set.empty();
        int a = starts[idx + 1];
        // starts are distinct, so at most one equals v; a != v here.
        if (!u_set.test(a)) return false;  // start already used by a prior path
        paths[idx + 1] = {u, a};
        return extend(idx + 1, a, u_set - VertexSet::single(a));
    }
};

}  // namespace detail

// Exact spanning-Theta decider. Branch pairs (u,v) ascend; the three path
// starts are chosen in ascending order, which with the final canonical sort
// makes the output deterministic.
inline std::optional<ThetaCertificate> spanning_theta(const SimpleGraph& g) {
    if (g.n() < 4) throw std::invalid_argument("spanning_theta: need n >= 4");
    if (!is_connected(g)) return std::nullopt;
    for (int w = 0; w < g.n(); ++w)
        if (g.degree(w) < 2) return std::nullopt;
    bool prerefute = g.n() > 12;
    if (prerefute && vertex_connectivity(g) < 2) return std::nullopt;
    for (int u = 0; u < g.n(); ++u) {
        if (g.degree(u) < 3) continue;
        for (int v = u + 1; v < g.n(); ++v) {
            if (g.degree(v) < 3) continue;
            if (prerefute && detail::degree_constrained_refute(g, u, v)) continue;
            std::vector<int> nb;
            for (int w : iterate(g.neighbors(u))) nb.push_back(w);
            int d = static_cast<int>(nb.size());
            for (int i = 0; i < d; ++i)
                for (int j = i + 1; j < d; ++j)
                    for (int k = j + 1; k < d; ++k) {
                        detail::ThetaSearch s(g, u, v);
                        s.starts = {nb[i], nb[j], nb[k]};
                        s.paths.assign(3, {});
                        VertexSet u_set = g.vertices();
                        u_set.reset(u);
                        u_set.reset(v);
                        bool ok;
                        if (s.starts[0] == v) {
                            s.paths[0] = {u, v};
                            ok = s.extend_done(0, u_set);
                        } else {
                            s.paths[0] = {u, s.starts[0]};
                            ok = s.extend(0, s.starts[0], u_set - VertexSet::single(s.starts[0]));
                        }
                        if (ok) {
                            ThetaCertificate cert{u, v, s.paths};
                            std::sort(cert.paths.begin(), cert.paths.end());
                            return cert;
                        }
                    }
        }
    }
    return std::nullopt;
}

// Link classification: Simple iff a Hamilton x-y path of the link exists;
// pure iff the link is a triangle through edge xy or is itself an x-y path
// of length >= 2.
struct LinkClassification {
    bool simple = false;
    std::optional<std::vector<int>> witness;
    bool pure = false;
};

inline LinkClassification classify_link(const Link& link) {
    const SimpleGraph& g = link.graph;
    if (!is_connected(g)) throw std::invalid_argument("classify_link: disconnected link");
    LinkClassification out;
    out.witness = hamilton_path_between(g, link.x, link.y, true);
    out.simple = out.witness.has_value();
    if (g.n() == 3 && g.edge_count() == 3 && g.adjacent(link.x, link.y)) {
        out.pure = true;
    } else if (g.n() >= 3) {
        bool path_shape = g.edge_count() == g.n() - 1 && g.degree(link.x) == 1 &&
                          g.degree(link.y) == 1;
        for (int w = 0; path_shape && w < g.n(); ++w)
            if (w != link.x && w != link.y && g.degree(w) != 2) path_shape = false;
        out.pure = path_shape;
    }
    return out;
}

// Text form: "theta u v | p1 | p2 | p3".
inline std::string theta_encode(const ThetaCertificate& cert) {
    std::ostringstream os;
    os << "theta " << cert.u << ' ' << cert.v;
    for (const auto& p : cert.paths) {
        os << " |";
        for (int w : p) os << ' ' << w;
    }
    return os.str();
}

inline ThetaCertificate theta_decode(const std::string& text) {
    std::istringstream is(text);
    std::string head;
    ThetaCertificate cert;
    if (!(is >> head >> cert.u >> cert.v) || head != "theta")
        throw std::invalid_argument("theta_decode: bad header");
    std::string tok;
    std::vector<int>* cur = nullptr;
    while (is >> tok) {
        if (tok == "|") {
            cert.paths.emplace_back();
            cur = &cert.paths.back();
        } else {
            if (!cur) throw std::invalid_argument("theta_decode: vertex before first path");
            cur->push_back(std::stoi(tok));
        }
    }
    if (cert.paths.size() != 3) throw std::invalid_argument("theta_decode: need three paths");
    return cert;
}

}  // namespace theta

#endif
