#ifndef THETA_FORBIDDEN_HPP
#define THETA_FORBIDDEN_HPP

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "theta/simple_graph.hpp"

namespace theta {

// Pattern catalog: stars/paths/cycles and the triangle-with-pendant-paths
// family. N(i,j,k) is a triangle with three pendant paths of lengths i,j,k;
// B(i,j) = N(i,j,0); Z(i) = B(i,0).
struct ForbiddenSpec {
    enum class Kind { Star, Path, Cycle, Z, B, N };
    Kind kind;
    int a = 0, b = 0, c = 0;

    static ForbiddenSpec star(int t) { return {Kind::Star, t}; }
    static ForbiddenSpec path(int t) { return {Kind::Path, t}; }
    static ForbiddenSpec cycle(int t) { return {Kind::Cycle, t}; }
    static ForbiddenSpec z(int i) { return {Kind::Z, i}; }
    static ForbiddenSpec bij(int i, int j) { return {Kind::B, i, j}; }
    static ForbiddenSpec nijk(int i, int j, int k) { return {Kind::N, i, j, k}; }
};

inline SimpleGraph make_forbidden(const ForbiddenSpec& spec) {
    using K = ForbiddenSpec::Kind;
    switch (spec.kind) {
        case K::Star: {
            if (spec.a < 1) throw std::invalid_argument("make_forbidden: Star needs t >= 1");
            SimpleGraph g(spec.a + 1);
            for (int v = 1; v <= spec.a; ++v) g.add_edge(0, v);
            return g;
        }
        case K::Path: {
            if (spec.a < 1) throw std::invalid_argument("make_forbidden: Path needs t >= 1");
            SimpleGraph g(spec.a);
            for (int v = 1; v < spec.a; ++v) g.add_edge(v - 1, v);
            return g;
        }
        case K::Cycle: {
            if (spec.a < 3) throw std::invalid_argument("make_forbidden: Cycle needs t >= 3");
            SimpleGraph g(spec.a);
            for (int v = 0; v < spec.a; ++v) g.add_edge(v, (v + 1) % spec.a);
            return g;
        }
        case K::Z:
            return make_forbidden(ForbiddenSpec::nijk(spec.a, 0, 0));
        case K::B:
            return make_forbidden(ForbiddenSpec::nijk(spec.a, spec.b, 0));
        case K::N: {
            int i = spec.a, j = spec.b, k = spec.c;
            if (i < 0 || j < 0 || k < 0)
                throw std::invalid_argument("make_forbidden: N needs i,j,k >= 0");
            SimpleGraph g(3 + i + j + k);
            g.add_edge(0, 1);
            g.add_edge(1, 2);
            g.add_edge(0, 2);
            int next = 3;
            for (int root = 0; root < 3; ++root) {
                int len = root == 0 ? i : root == 1 ? j : k;
                int prev = root;
                for (int s = 0; s < len; ++s) {
                    g.add_edge(prev, next);
                    prev = next++;
                }
            }
            return g;
        }
    }
    throw std::invalid_argument("make_forbidden: unknown kind");
}

// String grammar: K1,3 | P6 | C4 | Z3 | B1,5 | N1,2,3 (case-insensitive).
inline ForbiddenSpec parse_forbidden(const std::string& token) {
    if (token.empty()) throw std::invalid_argument("parse_forbidden: empty token");
    char head = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
    std::vector<int> nums;
    {
        std::string rest = token.substr(1);
        std::replace(rest.begin(), rest.end(), ',', ' ');
        std::istringstream is(rest);
        int x;
        while (is >> x) nums.push_back(x);
        if (!is.eof()) throw std::invalid_argument("parse_forbidden: bad parameters in " + token);
    }
    auto need = [&](size_t k) {
        if (nums.size() != k)
            throw std::invalid_argument("parse_forbidden: wrong arity in " + token);
    };
    switch (head) {
        case 'K':
            need(2);
            if (nums[0] != 1) throw std::invalid_argument("parse_forbidden: only K1,t stars");
            return ForbiddenSpec::star(nums[1]);
        case 'P': need(1); return ForbiddenSpec::path(nums[0]);
        case 'C': need(1); return ForbiddenSpec::cycle(nums[0]);
        case 'Z': need(1); return ForbiddenSpec::z(nums[0]);
        case 'B': need(2); return ForbiddenSpec::bij(nums[0], nums[1]);
        case 'N': need(3); return ForbiddenSpec::nijk(nums[0], nums[1], nums[2]);
        default: throw std::invalid_argument("parse_forbidden: unknown pattern " + token);
    }
}

inline std::vector<ForbiddenSpec> parse_forbidden_list(const std::string& text) {
    std::vector<ForbiddenSpec> out;
    // Patterns separated by ';' or whitespace; commas stay inside a token.
    std::string buf;
    auto flush = [&] {
        if (!buf.empty()) out.push_back(parse_forbidden(buf));
        buf.clear();
    };
    for (char ch : text) {
        if (ch == ';' || std::isspace(static_cast<unsigned char>(ch))) flush();
        else buf.push_back(ch);
    }
    flush();
    if (out.empty()) throw std::invalid_argument("parse_forbidden_list: no patterns");
    return out;
}

// Injective pattern -> host map preserving adjacency and non-adjacency.
struct Embedding {
    std::vector<int> map;  // indexed by pattern vertex
};

namespace detail {

inline bool find_induced_rec(const SimpleGraph& g, const SimpleGraph& f, std::vector<int>& map,
                             VertexSet used, int depth) {
    if (depth == f.n()) return true;
    for (int w = 0; w < g.n(); ++w) {
        if (used.test(w)) continue;
        if (g.degree(w) < f.degree(depth)) continue;
        bool ok = true;
        for (int p = 0; p < depth && ok; ++p)
            if (f.adjacent(p, depth) != g.adjacent(map[p], w)) ok = false;
        if (!ok) continue;
        map[depth] = w;
        used.set(w);
        if (find_induced_rec(g, f, map, used, depth + 1)) return true;
        used.reset(w);
    }
    return false;
}

}  // namespace detail

// Exact induced-subgraph search; returns the first embedding in
// lexicographic order of the mapped tuple (pattern vertices in id order).
inline std::optional<Embedding> find_induced(const SimpleGraph& g, const SimpleGraph& f) {
    if (f.n() > 16) throw std::invalid_argument("find_induced: pattern too large (> 16)");
    if (f.n() > g.n()) return std::nullopt;
    std::vector<int> map(f.n(), -1);
    if (detail::find_induced_rec(g, f, map, VertexSet{}, 0)) return Embedding{map};
    return std::nullopt;
}

inline bool is_free(const SimpleGraph& g, const std::vector<SimpleGraph>& patterns) {
    // Cheapest patterns first.
    std::vector<const SimpleGraph*> order;
    for (const auto& p : patterns) order.push_back(&p);
    std::stable_sort(order.begin(), order.end(),
                     [](const SimpleGraph* a, const SimpleGraph* b) { return a->n() < b->n(); });
    for (const SimpleGraph* p : order)
        if (find_induced(g, *p)) return false;
    return true;
}

inline bool is_free(const SimpleGraph& g, const std::vector<ForbiddenSpec>& specs) {
    std::vector<SimpleGraph> patterns;
    for (const auto& s : specs) patterns.push_back(make_forbidden(s));
    return is_free(g, patterns);
}

namespace detail {

inline void longest_path_rec(const SimpleGraph& g, int last, VertexSet on_path,
                             VertexSet excluded, int len, int& best) {
    best = std::max(best, len);
    // Extensions must avoid neighbors of interior path vertices to stay induced.
    VertexSet cand = g.neighbors(last) - excluded - on_path;
    for (int w : iterate(cand)) {
        VertexSet ex = excluded | g.neighbors(last);
        longest_path_rec(g, w, on_path | VertexSet::single(w), ex, len + 1, best);
    }
}

}  // namespace detail

// Vertex count of the longest induced path.
inline int longest_induced_path(const SimpleGraph& g) {
    int best = 0;
    for (int v = 0; v < g.n(); ++v)
        detail::longest_path_rec(g, v, VertexSet::single(v), VertexSet{}, 1, best);
    return best;
}

}  // namespace theta

#endif
