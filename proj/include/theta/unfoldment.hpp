#ifndef THETA_UNFOLDMENT_HPP
#define THETA_UNFOLDMENT_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "theta/forbidden.hpp"
#include "theta/multigraph.hpp"
#include "theta/simple_graph.hpp"

namespace theta {

enum class Color { Red, Blue, Black };

// A pure link is a triangle or a path of length >= 2 between its ends.
struct PureLinkSpec {
    enum class Shape { Triangle, PathOfLength };
    Shape shape = Shape::Triangle;
    int length = 0;  // path edge count, >= 2

    static PureLinkSpec triangle() { return {Shape::Triangle, 0}; }
    static PureLinkSpec path(int len) {
        if (len < 2) throw std::invalid_argument("PureLinkSpec: path length must be >= 2");
        return {Shape::PathOfLength, len};
    }
    int inner_count() const { return shape == Shape::Triangle ? 1 : length - 1; }
    bool ends_adjacent() const { return shape == Shape::Triangle; }
};

using LinkAssignment = std::vector<PureLinkSpec>;  // indexed by edge of F

struct EdgeTrace {
    int u_end = -1, v_end = -1;    // blue end realizing u^e / v^e
    std::vector<int> inner;        // red interior, in path order u_end -> v_end
};

struct UnfoldmentTrace {
    std::vector<EdgeTrace> edge_links;          // per F edge; empty slot for e0
    std::vector<std::vector<int>> cliques;      // K^u per F vertex
};

struct ColoredGraph {
    SimpleGraph graph;
    std::vector<Color> colors;
    UnfoldmentTrace trace;
};

struct ColoredLink {
    SimpleGraph graph;
    std::vector<Color> colors;
    int x0 = -1, y0 = -1;  // the two black end-vertices
    bool has_x0y0_edge = false;
    UnfoldmentTrace trace;
};

// --- construction ---

namespace detail {

struct UnfoldBuilder {
    int next = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<Color> colors;

    int add_vertex(Color c) {
        colors.push_back(c);
        return next++;
    }
    void add_edge(int u, int v) { edges.emplace_back(u, v); }

    // Builds L^e for one multigraph edge; returns its trace entry.
    EdgeTrace add_link(const PureLinkSpec& spec) {
        EdgeTrace t;
        t.u_end = add_vertex(Color::Blue);
        for (int i = 0; i < spec.inner_count(); ++i) t.inner.push_back(add_vertex(Color::Red));
        t.v_end = add_vertex(Color::Blue);
        int prev = t.u_end;
        for (int r : t.inner) {
            add_edge(prev, r);
            prev = r;
        }
        add_edge(prev, t.v_end);
        if (spec.ends_adjacent()) add_edge(t.u_end, t.v_end);
        return t;
    }
    void add_clique(const std::vector<int>& vs) {
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j) add_edge(vs[i], vs[j]);
    }
    SimpleGraph finish() const {
        SimpleGraph g(next);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }
};

}  // namespace detail

inline ColoredGraph unfold(const MultiGraph& f, const LinkAssignment& assign) {
    if (f.is_semi_loopless())
        throw std::invalid_argument("unfold: input must be loopless (no e0 label)");
    if (static_cast<int>(assign.size()) != f.edge_count())
        throw std::invalid_argument("unfold: assignment must cover every edge");
    detail::UnfoldBuilder b;
    UnfoldmentTrace trace;
    trace.cliques.resize(f.n());
    for (int e = 0; e < f.edge_count(); ++e) {
        EdgeTrace t = b.add_link(assign[e]);
        auto [u, v] = f.edge(e);
        trace.cliques[u].push_back(t.u_end);
        trace.cliques[v].push_back(t.v_end);
        trace.edge_links.push_back(std::move(t));
    }
    for (const auto& k : trace.cliques) b.add_clique(k);
    return {b.finish(), std::move(b.colors), std::move(trace)};
}

inline ColoredLink unfold_semi(const MultiGraph& f, const LinkAssignment& assign,
                               bool include_x0y0_edge) {
    if (!f.is_semi_loopless())
        throw std::invalid_argument("unfold_semi: input needs an e0 label");
    if (static_cast<int>(assign.size()) != f.edge_count())
        throw std::invalid_argument("unfold_semi: assignment must have one slot per edge");
    int e0 = *f.e0();
    if (f.e0_is_loop() && !include_x0y0_edge)
        throw std::invalid_argument("unfold_semi: loop e0 forces the x0y0 edge");
    auto [u0, v0] = f.edge(e0);
    detail::UnfoldBuilder b;
    UnfoldmentTrace trace;
    trace.cliques.resize(f.n());
    trace.edge_links.resize(f.edge_count());
    for (int e = 0; e < f.edge_count(); ++e) {
        if (e == e0) continue;
        EdgeTrace t = b.add_link(assign[e]);
        auto [u, v] = f.edge(e);
        trace.cliques[u].push_back(t.u_end);
        trace.cliques[v].push_back(t.v_end);
        trace.edge_links[e] = std::move(t);
    }
    int x0 = b.add_vertex(Color::Black);
    int y0 = b.add_vertex(Color::Black);
    trace.cliques[u0].push_back(x0);
    trace.cliques[v0].push_back(y0);
    for (const auto& k : trace.cliques) b.add_clique(k);
    if (include_x0y0_edge && !(f.e0_is_loop()))  // loop case: clique already added it
        b.add_edge(x0, y0);
    SimpleGraph g = b.finish();
    return {std::move(g), std::move(b.colors), x0, y0, include_x0y0_edge, std::move(trace)};
}

// --- recognition from colors alone ---

namespace detail {

inline void assoc_dfs(const SimpleGraph& g, const std::vector<Color>& col, int origin, int cur,
                      VertexSet used, std::set<std::pair<int, int>>& pairs) {
    for (int w : iterate(g.neighbors(cur))) {
        if (used.test(w)) continue;
        if (col[w] == Color::Blue) {
            if (w != origin) pairs.insert(std::minmax(origin, w));
        } else if (col[w] == Color::Red) {
            assoc_dfs(g, col, origin, w, used | VertexSet::single(w), pairs);
        }
    }
}

}  // namespace detail

// Pairs of blue vertices joined by a feasible path (blue ends, >= 1 red
// inner vertex), recomputed from colors only.
inline std::vector<std::pair<int, int>> associated_pairs(const SimpleGraph& g,
                                                         const std::vector<Color>& col) {
    std::set<std::pair<int, int>> pairs;
    for (int x = 0; x < g.n(); ++x) {
        if (col[x] != Color::Blue) continue;
        for (int r : iterate(g.neighbors(x)))
            if (col[r] == Color::Red)
                detail::assoc_dfs(g, col, x, r,
                                  VertexSet::single(x) | VertexSet::single(r), pairs);
    }
    return {pairs.begin(), pairs.end()};
}

struct ConditionResult {
    std::string name;
    bool pass = true;
    std::vector<int> witness;  // violating vertices, empty when passing
};

struct ConditionReport {
    std::vector<ConditionResult> conditions;
    bool pass = true;
    bool degenerate_black = false;  // a black end-vertex with no blue neighbors

    void add(std::string name, bool ok, std::vector<int> witness = {}) {
        pass = pass && ok;
        conditions.push_back({std::move(name), ok, std::move(witness)});
    }
};

namespace detail {

inline void check_common_conditions(const SimpleGraph& g, const std::vector<Color>& col,
                                    ConditionReport& rep) {
    {  // (1) claw-free
        auto hit = find_induced(g, make_forbidden(ForbiddenSpec::star(3)));
        rep.add("claw-free", !hit, hit ? hit->map : std::vector<int>{});
    }
    {  // (2) red vertices have degree 2
        ConditionResult c{"red-degree-2", true, {}};
        for (int v = 0; v < g.n() && c.pass; ++v)
            if (col[v] == Color::Red && g.degree(v) != 2) c = {c.name, false, {v}};
        rep.add(c.name, c.pass, c.witness);
    }
    {  // (3) every blue vertex has exactly one red neighbor
        ConditionResult c{"blue-unique-red-neighbor", true, {}};
        for (int v = 0; v < g.n() && c.pass; ++v) {
            if (col[v] != Color::Blue) continue;
            int reds = 0;
            for (int w : iterate(g.neighbors(v))) reds += col[w] == Color::Red;
            if (reds != 1) c = {c.name, false, {v}};
        }
        rep.add(c.name, c.pass, c.witness);
    }
    auto pairs = associated_pairs(g, col);
    {  // (4) associated blues share no blue (or black) neighbor
        ConditionResult c{"associated-no-common-blue", true, {}};
        for (auto [x, y] : pairs) {
            VertexSet common = g.neighbors(x) & g.neighbors(y);
            for (int z : iterate(common))
                if (col[z] != Color::Red) {
                    c = {c.name, false, {x, y, z}};
                    break;
                }
            if (!c.pass) break;
        }
        rep.add(c.name, c.pass, c.witness);
    }
    {  // (5) adjacent associated blues share a red neighbor
        ConditionResult c{"adjacent-associated-common-red", true, {}};
        for (auto [x, y] : pairs) {
            if (!g.adjacent(x, y)) continue;
            bool shared = false;
            for (int z : iterate(g.neighbors(x) & g.neighbors(y)))
                if (col[z] == Color::Red) shared = true;
            if (!shared) {
                c = {c.name, false, {x, y}};
                break;
            }
        }
        rep.add(c.name, c.pass, c.witness);
    }
}

}  // namespace detail

inline ConditionReport check_unfoldment(const SimpleGraph& g, const std::vector<Color>& col) {
    if (static_cast<int>(col.size()) != g.n())
        throw std::invalid_argument("check_unfoldment: one color per vertex required");
    for (Color c : col)
        if (c == Color::Black)
            throw std::invalid_argument("check_unfoldment: black is for colored links only");
    ConditionReport rep;
    detail::check_common_conditions(g, col, rep);
    return rep;
}

inline ConditionReport check_unfoldment(const ColoredGraph& g) {
    return check_unfoldment(g.graph, g.colors);
}

inline ConditionReport check_semi_unfoldment(const SimpleGraph& g,
                                             const std::vector<Color>& col) {
    if (static_cast<int>(col.size()) != g.n())
        throw std::invalid_argument("check_semi_unfoldment: one color per vertex required");
    std::vector<int> blacks;
    for (int v = 0; v < g.n(); ++v)
        if (col[v] == Color::Black) blacks.push_back(v);
    if (blacks.size() != 2)
        throw std::invalid_argument("check_semi_unfoldment: exactly two black vertices required");
    ConditionReport rep;
    detail::check_common_conditions(g, col, rep);
    {  // (6) black vertices: no red neighbors, blue neighbors pairwise adjacent
        ConditionResult c{"black-neighborhood", true, {}};
        for (int b : blacks) {
            std::vector<int> blue_nb;
            for (int w : iterate(g.neighbors(b))) {
                if (col[w] == Color::Red) c = {c.name, false, {b, w}};
                if (col[w] == Color::Blue) blue_nb.push_back(w);
            }
            for (size_t i = 0; i < blue_nb.size() && c.pass; ++i)
                for (size_t j = i + 1; j < blue_nb.size() && c.pass; ++j)
                    if (!g.adjacent(blue_nb[i], blue_nb[j]))
                        c = {c.name, false, {b, blue_nb[i], blue_nb[j]}};
            if (blue_nb.empty()) rep.degenerate_black = true;
            if (!c.pass) break;
        }
        rep.add(c.name, c.pass, c.witness);
    }
    return rep;
}

inline ConditionReport check_semi_unfoldment(const ColoredLink& link) {
    return check_semi_unfoldment(link.graph, link.colors);
}

// --- folding ---

namespace detail {

struct FoldParts {
    std::vector<int> comp_of;                      // blue vertex -> F vertex id
    std::vector<int> comp_label;                   // F vertex -> min original id
    std::vector<std::pair<int, int>> edges;        // F edges, feasible-path order
};

// Shared core: blue components after deleting associated-pair edges become
// F's vertices; feasible paths become its edges.
inline FoldParts fold_core(const SimpleGraph& g, const std::vector<Color>& col) {
    auto pairs = associated_pairs(g, col);
    std::set<std::pair<int, int>> assoc(pairs.begin(), pairs.end());

    // Blue components of the reduced graph.
    std::vector<int> comp_of(g.n(), -1);
    std::vector<int> labels;
    for (int v = 0; v < g.n(); ++v) {
        if (col[v] != Color::Blue || comp_of[v] >= 0) continue;
        int id = static_cast<int>(labels.size());
        labels.push_back(v);
        std::vector<int> stack{v};
        comp_of[v] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : iterate(g.neighbors(u))) {
                if (col[w] != Color::Blue || comp_of[w] >= 0) continue;
                if (assoc.count(std::minmax(u, w))) continue;  // removed edge
                comp_of[w] = id;
                stack.push_back(w);
            }
        }
    }
    // Feasible paths in discovery order: by ascending minimum red-interior id.
    // Each red component of a valid unfoldment is one path interior.
    std::vector<std::pair<int, std::pair<int, int>>> found;  // (min red id, (x,y))
    for (auto [x, y] : pairs) {
        // Recover the interior: reds reachable from x without leaving red,
        // restricted to the chain that reaches y.
        int min_red = g.n();
        for (int r : iterate(g.neighbors(x)))
            if (col[r] == Color::Red) {
                // walk the red chain
                VertexSet seen = VertexSet::single(r);
                std::vector<int> stack{r};
                bool hits_y = g.neighbors(r).test(y);
                int local_min = r;
                while (!stack.empty()) {
                    int u = stack.back();
                    stack.pop_back();
                    local_min = std::min(local_min, u);
                    if (g.neighbors(u).test(y)) hits_y = true;
                    for (int w : iterate(g.neighbors(u)))
                        if (col[w] == Color::Red && !seen.test(w)) {
                            seen.set(w);
                            stack.push_back(w);
                        }
                }
                if (hits_y) min_red = std::min(min_red, local_min);
            }
        found.push_back({min_red, {x, y}});
    }
    std::sort(found.begin(), found.end());
    FoldParts parts;
    parts.comp_of = comp_of;
    parts.comp_label = labels;
    for (const auto& [mr, xy] : found)
        parts.edges.emplace_back(comp_of[xy.first], comp_of[xy.second]);
    return parts;
}

}  // namespace detail

inline MultiGraph fold(const SimpleGraph& g, const std::vector<Color>& col) {
    ConditionReport rep = check_unfoldment(g, col);
    if (!rep.pass) throw std::invalid_argument("fold: input fails the unfoldment conditions");
    auto parts = detail::fold_core(g, col);
    return MultiGraph(static_cast<int>(parts.comp_label.size()), parts.edges);
}

inline MultiGraph fold(const ColoredGraph& g) { return fold(g.graph, g.colors); }

// Folds a colored link; the recovered e0 is appended as the last edge. When a
// black end has no blue neighbors, an extra vertex carries its side of e0.
inline MultiGraph fold_semi(const SimpleGraph& g, const std::vector<Color>& col) {
    ConditionReport rep = check_semi_unfoldment(g, col);
    if (!rep.pass)
        throw std::invalid_argument("fold_semi: input fails the unfoldment conditions");
    std::vector<int> blacks;
    for (int v = 0; v < g.n(); ++v)
        if (col[v] == Color::Black) blacks.push_back(v);
    auto parts = detail::fold_core(g, col);
    int n = static_cast<int>(parts.comp_label.size());
    auto side = [&](int black) {
        for (int w : iterate(g.neighbors(black)))
            if (col[w] == Color::Blue) return parts.comp_of[w];
        return n++;  // extra vertex
    };
    int u0 = side(blacks[0]);
    int v0 = side(blacks[1]);
    auto edges = parts.edges;
    edges.emplace_back(u0, v0);
    return MultiGraph(n, edges, static_cast<int>(edges.size()) - 1);
}

inline MultiGraph fold_semi(const ColoredLink& link) {
    return fold_semi(link.graph, link.colors);
}

// --- serialization: edge list plus a color line "colors: rbk..." ---

inline std::string colored_encode(const SimpleGraph& g, const std::vector<Color>& col) {
    std::ostringstream os;
    os << edge_list_encode(g);
    os << "colors: ";
    for (Color c : col)
        os << (c == Color::Red ? 'r' : c == Color::Blue ? 'b' : 'k');
    os << '\n';
    return os.str();
}

inline std::pair<SimpleGraph, std::vector<Color>> colored_decode(const std::string& text) {
    std::istringstream is(text);
    SimpleGraph g = edge_list_decode(is);
    std::string tag, chars;
    if (!(is >> tag >> chars) || tag != "colors:")
        throw std::invalid_argument("colored_decode: missing colors line");
    if (static_cast<int>(chars.size()) != g.n())
        throw std::invalid_argument("colored_decode: color count mismatch");
    std::vector<Color> col;
    for (char ch : chars) {
        switch (ch) {
            case 'r': col.push_back(Color::Red); break;
            case 'b': col.push_back(Color::Blue); break;
            case 'k': col.push_back(Color::Black); break;
            default: throw std::invalid_argument("colored_decode: bad color char");
        }
    }
    return {std::move(g), std::move(col)};
}

}  // namespace theta

#endif
