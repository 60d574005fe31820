#ifndef THETA_FAMILIES_HPP
#define THETA_FAMILIES_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "theta/forbidden.hpp"
#include "theta/metrics.hpp"
#include "theta/multigraph.hpp"
#include "theta/simple_graph.hpp"
#include "theta/unfoldment.hpp"

namespace theta {

using LabelMap = std::map<std::string, int>;

// --- the M/N multigraph catalog ---

enum class CatalogId { M1, M2, M3, M4, M5, M6, M7, N1, N2 };

inline CatalogId parse_catalog_id(const std::string& s) {
    static const std::map<std::string, CatalogId> table{
        {"M1", CatalogId::M1}, {"M2", CatalogId::M2}, {"M3", CatalogId::M3},
        {"M4", CatalogId::M4}, {"M5", CatalogId::M5}, {"M6", CatalogId::M6},
        {"M7", CatalogId::M7}, {"N1", CatalogId::N1}, {"N2", CatalogId::N2}};
    auto it = table.find(s);
    if (it == table.end()) throw std::invalid_argument("parse_catalog_id: unknown selector " + s);
    return it->second;
}

// Fixed vertex order x0..x3 (hub first where there is one) and a documented
// edge order; gen_H relies on this exact indexing for its label tables.
inline MultiGraph gen_catalog(CatalogId id) {
    using E = std::vector<std::pair<int, int>>;
    switch (id) {
        case CatalogId::M1:  // K4
            return MultiGraph(4, E{{0, 3}, {1, 3}, {2, 3}, {0, 1}, {1, 2}, {2, 0}});
        case CatalogId::M2:  // degrees (5,3,3,3)
            return MultiGraph(4, E{{1, 0}, {2, 0}, {2, 0}, {3, 0}, {3, 0}, {1, 2}, {3, 1}});
        case CatalogId::M3:  // degrees (7,3,3,3)
            return MultiGraph(4, E{{1, 0}, {1, 0}, {1, 0}, {2, 0}, {2, 0}, {3, 0}, {3, 0}, {2, 3}});
        case CatalogId::M4:  // degrees (9,3,3,3)
            return MultiGraph(4, E{{1, 0}, {1, 0}, {1, 0}, {2, 0}, {2, 0}, {2, 0}, {3, 0}, {3, 0}, {3, 0}});
        case CatalogId::M5:
            return MultiGraph(4, E{{0, 1}, {0, 1}, {0, 1}, {0, 2}, {0, 3}, {2, 3}, {2, 3}});
        case CatalogId::M6:
            return MultiGraph(4, E{{0, 3}, {1, 2}, {0, 1}, {0, 1}, {2, 3}, {2, 3}});
        case CatalogId::M7:
            return MultiGraph(4, E{{0, 1}, {0, 1}, {0, 1}, {2, 3}, {2, 3}, {2, 3}, {1, 2}, {1, 2}});
        case CatalogId::N1:  // triple edge plus loop e0 at the second vertex
            return MultiGraph(2, E{{0, 1}, {0, 1}, {0, 1}, {1, 1}}, 3);
        case CatalogId::N2:  // triple edge, e0 one of the three
            return MultiGraph(2, E{{0, 1}, {0, 1}, {0, 1}}, 2);
    }
    throw std::invalid_argument("gen_catalog: unknown selector");
}

// --- links L1, L2, L3 ---

namespace detail {

// Appends a pure link between existing vertices s and t.
inline void attach_pure_link(std::vector<std::pair<int, int>>& edges, int& n,
                             int s, int t, const PureLinkSpec& spec) {
    if (spec.shape == PureLinkSpec::Shape::Triangle) {
        int z = n++;
        edges.push_back({s, t});
        edges.push_back({s, z});
        edges.push_back({z, t});
    } else {
        int prev = s;
        for (int i = 0; i < spec.length - 1; ++i) {
            int z = n++;
            edges.push_back({prev, z});
            prev = z;
        }
        edges.push_back({prev, t});
    }
}

}  // namespace detail

// cls 1: 5-clique {x,y,a,b,c}, triangle {a',b',c'}, pure links a-a', b-b',
// c-c'. cls 2: triangles {x,a,b}, {y,a',b'}, pure links a-a', b-b'.
// cls 3: class 2 plus the edge xy.
inline Link gen_link(int cls, const std::vector<PureLinkSpec>& specs,
                     LabelMap* labels = nullptr) {
    std::vector<std::pair<int, int>> edges;
    int n = 0;
    LabelMap map;
    int x, y;
    if (cls == 1) {
        if (specs.size() != 3) throw std::invalid_argument("gen_link: L1 needs 3 pure-link specs");
        x = n++; y = n++;
        int a = n++, b = n++, c = n++;
        int a2 = n++, b2 = n++, c2 = n++;
        map = {{"x", x}, {"y", y}, {"a", a}, {"b", b}, {"c", c},
               {"a'", a2}, {"b'", b2}, {"c'", c2}};
        int five[] = {x, y, a, b, c};
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) edges.push_back({five[i], five[j]});
        edges.push_back({a2, b2});
        edges.push_back({b2, c2});
        edges.push_back({c2, a2});
        detail::attach_pure_link(edges, n, a, a2, specs[0]);
        detail::attach_pure_link(edges, n, b, b2, specs[1]);
        detail::attach_pure_link(edges, n, c, c2, specs[2]);
    } else if (cls == 2 || cls == 3) {
        if (specs.size() != 2)
            throw std::invalid_argument("gen_link: L2/L3 need 2 pure-link specs");
        x = n++;
        int a = n++, b = n++;
        y = n++;
        int a2 = n++, b2 = n++;
        map = {{"x", x}, {"y", y}, {"a", a}, {"b", b}, {"a'", a2}, {"b'", b2}};
        edges.push_back({x, a});
        edges.push_back({x, b});
        edges.push_back({a, b});
        edges.push_back({y, a2});
        edges.push_back({y, b2});
        edges.push_back({a2, b2});
        detail::attach_pure_link(edges, n, a, a2, specs[0]);
        detail::attach_pure_link(edges, n, b, b2, specs[1]);
        if (cls == 3) edges.push_back({x, y});
    } else {
        throw std::invalid_argument("gen_link: class must be 1, 2 or 3");
    }
    if (labels) *labels = map;
    return Link{build_graph(n, edges), x, y};
}

// --- chains ---

struct ChainPart {
    enum class Kind { Bipath, TriangleChain };
    Kind kind = Kind::Bipath;
    int l1 = 0, l2 = 0;  // bipath: the two path lengths (edge counts)
    int k = 0;           // triangle chain: vertex count, >= 3

    static ChainPart bipath(int l1, int l2) {
        if (l1 < 0 || l2 < 0) throw std::invalid_argument("ChainPart: negative path length");
        return {Kind::Bipath, l1, l2, 0};
    }
    static ChainPart triangle_chain(int k) {
        if (k < 3) throw std::invalid_argument("ChainPart: triangle chain needs k >= 3");
        return {Kind::TriangleChain, 0, 0, k};
    }
    bool trivial() const { return kind == Kind::Bipath && l1 == 0 && l2 == 0; }
};

enum class ChainType { BB, TB, BT, TT };

inline ChainType chain_type(const std::vector<ChainPart>& parts) {
    auto is_b = [](const ChainPart& p) { return p.kind == ChainPart::Kind::Bipath; };
    bool first_b = is_b(parts.front()), last_b = is_b(parts.back());
    if (first_b && last_b) return ChainType::BB;
    if (!first_b && last_b) return ChainType::TB;
    if (first_b) return ChainType::BT;
    return ChainType::TT;
}

struct ChainResult {
    SimpleGraph graph;
    int x1 = -1, y1 = -1;  // origin pair
    int x2 = -1, y2 = -1;  // terminus pair
    LabelMap labels;       // per pure chain: "H<t>.x_1" etc., "H<t>.a_<i>"
};

// Pure chains concatenated through 4-clique junctions on {terminus of part
// i} union {origin of part i+1}.
inline ChainResult gen_chain(const std::vector<ChainPart>& parts) {
    if (parts.empty()) throw std::invalid_argument("gen_chain: empty spec");
    for (size_t i = 0; i < parts.size(); ++i)
        if (parts[i].trivial() && parts.size() > 1)
            throw std::invalid_argument("gen_chain: trivial chain must stand alone");
    std::vector<std::pair<int, int>> edges;
    int n = 0;
    int px = -1, py = -1;  // terminus pair of the previous part
    ChainResult out;
    for (size_t idx = 0; idx < parts.size(); ++idx) {
        const ChainPart& p = parts[idx];
        std::string pre = "H" + std::to_string(idx + 1) + ".";
        int ox, oy, tx, ty;
        if (p.kind == ChainPart::Kind::Bipath) {
            std::vector<int> p1, p2;
            for (int i = 0; i <= p.l1; ++i) p1.push_back(n++);
            for (int i = 0; i <= p.l2; ++i) p2.push_back(n++);
            for (size_t i = 0; i + 1 < p1.size(); ++i) edges.push_back({p1[i], p1[i + 1]});
            for (size_t i = 0; i + 1 < p2.size(); ++i) edges.push_back({p2[i], p2[i + 1]});
            ox = p1.front();
            oy = p2.front();
            tx = p1.back();
            ty = p2.back();
        } else {
            std::vector<int> a;
            for (int i = 0; i < p.k; ++i) a.push_back(n++);
            for (int i = 0; i < p.k; ++i)
                for (int j = i + 1; j < p.k && j <= i + 2; ++j) edges.push_back({a[i], a[j]});
            for (int i = 0; i < p.k; ++i) out.labels[pre + "a_" + std::to_string(i + 1)] = a[i];
            ox = a[0];
            oy = a[1];
            tx = a[p.k - 2];
            ty = a[p.k - 1];
        }
        out.labels[pre + "x_1"] = ox;
        out.labels[pre + "y_1"] = oy;
        out.labels[pre + "x_2"] = tx;
        out.labels[pre + "y_2"] = ty;
        if (idx == 0) {
            out.x1 = ox;
            out.y1 = oy;
        } else {
            // junction 4-clique on {previous terminus} union {this origin}
            int quad[] = {px, py, ox, oy};
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) edges.push_back({quad[i], quad[j]});
        }
        px = tx;
        py = ty;
    }
    out.x2 = px;
    out.y2 = py;
    SimpleGraph g(n);
    for (auto [u, v] : edges)
        if (u != v && !g.adjacent(u, v)) g.add_edge(u, v);
    out.graph = g;
    return out;
}

// --- H families ---

struct HFamilySpec {
    int index = 1;                       // 1..7
    std::vector<PureLinkSpec> links;     // 1-4: per catalog edge (empty = all triangles);
                                         // 5-7: specs of link 1 then link 2
    std::vector<ChainPart> chain;        // 5-7 only (empty = trivial chain)
};

namespace detail {

// Label symbols of the two pure-link ends per catalog edge, for M1..M4.
inline const std::vector<std::pair<const char*, const char*>>& h_edge_symbols(int index) {
    static const std::vector<std::pair<const char*, const char*>> t1{
        {"x_1", "x'_1"}, {"y_2", "y'_2"}, {"z_3", "z'_3"},
        {"z_1", "z_2"}, {"x_2", "x_3"}, {"y_3", "y_1"}};
    static const std::vector<std::pair<const char*, const char*>> t2{
        {"x_1", "x'_1"}, {"x_2", "x'_2"}, {"y_2", "y'_2"}, {"x_3", "x'_3"},
        {"z_3", "z'_3"}, {"z_1", "z_2"}, {"y_3", "y_1"}};
    static const std::vector<std::pair<const char*, const char*>> t3{
        {"x_1", "x'_1"}, {"y_1", "y'_1"}, {"z_1", "z'_1"}, {"y_2", "y'_2"},
        {"z_2", "z'_2"}, {"y_3", "y'_3"}, {"z_3", "z'_3"}, {"x_2", "x_3"}};
    static const std::vector<std::pair<const char*, const char*>> t4{
        {"x_1", "x'_1"}, {"y_1", "y'_1"}, {"z_1", "z'_1"},
        {"x_2", "x'_2"}, {"y_2", "y'_2"}, {"z_2", "z'_2"},
        {"x_3", "x'_3"}, {"y_3", "y'_3"}, {"z_3", "z'_3"}};
    switch (index) {
        case 1: return t1;
        case 2: return t2;
        case 3: return t3;
        default: return t4;
    }
}

// Glues link ends onto two existing vertices, appending the rest of the
// link's vertices to the host graph.
inline void glue_link(const Link& link, int host_x, int host_y, int& n,
                      std::vector<std::pair<int, int>>& edges, const std::string& prefix,
                      const LabelMap& link_labels, LabelMap* labels) {
    std::vector<int> to_host(link.graph.n(), -1);
    to_host[link.x] = host_x;
    to_host[link.y] = host_y;
    for (int v = 0; v < link.graph.n(); ++v)
        if (to_host[v] < 0) to_host[v] = n++;
    for (auto [u, v] : link.graph.edges()) edges.push_back({to_host[u], to_host[v]});
    if (labels)
        for (const auto& [sym, v] : link_labels) (*labels)[prefix + sym] = to_host[v];
}

}  // namespace detail

inline SimpleGraph gen_H(const HFamilySpec& spec, LabelMap* labels = nullptr) {
    if (spec.index < 1 || spec.index > 7)
        throw std::invalid_argument("gen_H: family index must be 1..7");
    if (spec.index <= 4) {
        MultiGraph m = gen_catalog(static_cast<CatalogId>(spec.index - 1));
        LinkAssignment assign = spec.links;
        if (assign.empty()) assign.assign(m.edge_count(), PureLinkSpec::triangle());
        if (static_cast<int>(assign.size()) != m.edge_count())
            throw std::invalid_argument("gen_H: wrong pure-link spec count for this family");
        ColoredGraph g = unfold(m, assign);
        if (labels) {
            labels->clear();
            const auto& syms = detail::h_edge_symbols(spec.index);
            for (int e = 0; e < m.edge_count(); ++e) {
                (*labels)[syms[e].first] = g.trace.edge_links[e].u_end;
                (*labels)[syms[e].second] = g.trace.edge_links[e].v_end;
            }
        }
        return g.graph;
    }
    int cls1 = spec.index == 7 ? 2 : 1;
    int cls2 = spec.index == 5 ? 1 : 2;
    size_t need1 = cls1 == 1 ? 3 : 2, need2 = cls2 == 1 ? 3 : 2;
    std::vector<PureLinkSpec> l1spec, l2spec;
    if (spec.links.empty()) {
        l1spec.assign(need1, PureLinkSpec::triangle());
        l2spec.assign(need2, PureLinkSpec::triangle());
    } else {
        if (spec.links.size() != need1 + need2)
            throw std::invalid_argument("gen_H: wrong pure-link spec count for this family");
        l1spec.assign(spec.links.begin(), spec.links.begin() + need1);
        l2spec.assign(spec.links.begin() + need1, spec.links.end());
    }
    std::vector<ChainPart> chain = spec.chain;
    if (chain.empty()) chain = {ChainPart::bipath(0, 0)};
    ChainType type = chain_type(chain);
    if (spec.index == 6 && type != ChainType::BB && type != ChainType::TB)
        throw std::invalid_argument("gen_H: H6 chains must be of type BB or TB");
    if (spec.index == 7 && type != ChainType::BB)
        throw std::invalid_argument("gen_H: H7 chains must be of type BB");
    ChainResult ch = gen_chain(chain);
    int n = ch.graph.n();
    std::vector<std::pair<int, int>> edges = ch.graph.edges();
    LabelMap m1, m2;
    Link link1 = gen_link(cls1, l1spec, &m1);
    Link link2 = gen_link(cls2, l2spec, &m2);
    if (labels) {
        labels->clear();
        (*labels)["x_1"] = ch.x1;
        (*labels)["y_1"] = ch.y1;
        (*labels)["x_2"] = ch.x2;
        (*labels)["y_2"] = ch.y2;
    }
    detail::glue_link(link1, ch.x1, ch.y1, n, edges, "L1.", m1, labels);
    detail::glue_link(link2, ch.x2, ch.y2, n, edges, "L2.", m2, labels);
    SimpleGraph g(n);
    for (auto [u, v] : edges)
        if (!g.adjacent(u, v)) g.add_edge(u, v);
    return g;
}

// --- the nine counterexample graphs ---

inline int gen_G_min_k(int i) {
    static const int mins[] = {4, 4, 3, 4, 3, 5, 3, 3, 9};
    if (i < 1 || i > 9) throw std::invalid_argument("gen_G: index must be 1..9");
    return mins[i - 1];
}

namespace detail {

inline SimpleGraph build_G(int i, int k, LabelMap* labels) {
    std::vector<std::pair<int, int>> edges;
    auto lab = [&](const std::string& name, int v) {
        if (labels) (*labels)[name] = v;
    };
    auto lab_row = [&](const std::string& stem, const std::vector<int>& vs) {
        for (size_t j = 0; j < vs.size(); ++j) lab(stem + "_" + std::to_string(j + 1), vs[j]);
    };
    auto path = [&](const std::vector<int>& vs) {
        for (size_t j = 0; j + 1 < vs.size(); ++j) edges.push_back({vs[j], vs[j + 1]});
    };
    auto clique = [&](const std::vector<int>& vs) {
        for (size_t a = 0; a < vs.size(); ++a)
            for (size_t b = a + 1; b < vs.size(); ++b) edges.push_back({vs[a], vs[b]});
    };
    auto tri = [&](int a, int b, int c) { clique({a, b, c}); };
    auto range = [](int from, int count) {
        std::vector<int> vs;
        for (int j = 0; j < count; ++j) vs.push_back(from + j);
        return vs;
    };
    switch (i) {
        case 1:
        case 2: {  // K_{2,k}, plus the hub edge for G2
            int n = k + 2;
            lab("u_1", 0);
            lab("u_2", 1);
            for (int v = 2; v < n; ++v) {
                lab("v_" + std::to_string(v - 1), v);
                edges.push_back({0, v});
                edges.push_back({1, v});
            }
            if (i == 2) edges.push_back({0, 1});
            return build_graph(n, edges);
        }
        case 3: {  // K_k with v1,v2 = 0,1; u1,u2,u3 adjacent to both
            clique(range(0, k));
            lab("v_1", 0);
            lab("v_2", 1);
            for (int u = k; u < k + 3; ++u) {
                lab("u_" + std::to_string(u - k + 1), u);
                edges.push_back({u, 0});
                edges.push_back({u, 1});
            }
            return build_graph(k + 3, edges);
        }
        case 4: {  // K_k with v1..v4 = 0..3; u1,u2 on {v1,v2}; u3,u4 on {v3,v4}
            clique(range(0, k));
            lab_row("v", {0, 1, 2, 3});
            for (int u = k; u < k + 4; ++u) lab("u_" + std::to_string(u - k + 1), u);
            for (int u = k; u < k + 2; ++u) {
                edges.push_back({u, 0});
                edges.push_back({u, 1});
            }
            for (int u = k + 2; u < k + 4; ++u) {
                edges.push_back({u, 2});
                edges.push_back({u, 3});
            }
            return build_graph(k + 4, edges);
        }
        case 5: {  // paths x1x2x3 and y1y2y3, four connector rows
            int x1 = 0, x3 = 2, y1 = 3, y3 = 5;
            auto a = range(6, k), b = range(6 + k, 3), c = range(9 + k, 3), d = range(12 + k, 3);
            lab_row("x", {0, 1, 2});
            lab_row("y", {3, 4, 5});
            lab_row("v", a);
            lab_row("b", b);
            lab_row("c", c);
            lab_row("d", d);
            path({0, 1, 2});
            path({3, 4, 5});
            path(a);
            path(b);
            path(c);
            path(d);
            edges.push_back({x1, a.front()});
            edges.push_back({x1, b.front()});
            edges.push_back({x3, c.front()});
            edges.push_back({x3, d.front()});
            edges.push_back({y1, a.back()});
            edges.push_back({y1, b.back()});
            edges.push_back({y3, c.back()});
            edges.push_back({y3, d.back()});
            return build_graph(15 + k, edges);
        }
        case 6: {  // rows a (k long), b, c, d (5 long) with corner triangles
            int x1 = 0, x3 = 2, y1 = 3, y3 = 5;
            int z11 = 6, z12 = 7, z21 = 8, z22 = 9;
            auto a = range(10, k), b = range(10 + k, 5), c = range(15 + k, 5), d = range(20 + k, 5);
            lab_row("x", {0, 1, 2});
            lab_row("y", {3, 4, 5});
            lab("z_11", z11);
            lab("z_12", z12);
            lab("z_21", z21);
            lab("z_22", z22);
            lab_row("a", a);
            lab_row("b", b);
            lab_row("c", c);
            lab_row("d", d);
            path({z11, x1, 1, x3, z12});
            path({z21, y1, 4, y3, z22});
            path(a);
            path(b);
            path(c);
            path(d);
            tri(z11, a.front(), b.front());
            tri(z12, c.front(), d.front());
            tri(z21, a.back(), b.back());
            tri(z22, c.back(), d.back());
            return build_graph(25 + k, edges);
        }
        case 7: {  // K_k holds x1,y1; seven triangles around it
            int x1 = 0, y1 = 1;
            int x2 = k, x3 = k + 1, y2 = k + 2, y3 = k + 3;
            int z11 = k + 4, z12 = k + 5, z21 = k + 6, z22 = k + 7;
            int u1 = k + 8, u2 = k + 9, u3 = k + 10;
            lab_row("x", {x1, x2, x3});
            lab_row("y", {y1, y2, y3});
            lab("z_11", z11);
            lab("z_12", z12);
            lab("z_21", z21);
            lab("z_22", z22);
            lab_row("u", {u1, u2, u3});
            clique(range(0, k));
            tri(x1, x2, z11);
            tri(y1, y2, z12);
            tri(x2, x3, z21);
            tri(y2, y3, z22);
            tri(z11, z12, u1);
            tri(z21, z22, u2);
            tri(x3, y3, u3);
            return build_graph(k + 11, edges);
        }
        case 8: {  // K_k holds a0,e0; two rows rejoined through a 4-clique
            int a0 = 0, e0 = 1;
            int a2 = k, a3 = k + 1, a5 = k + 2;
            int e2 = k + 3, e3 = k + 4, e5 = k + 5;
            int b1 = k + 6, b4 = k + 7, d1 = k + 8, d4 = k + 9;
            int c1 = k + 10, c3 = k + 11, c4 = k + 12;
            lab("a_0", a0);
            lab("a_2", a2);
            lab("a_3", a3);
            lab("a_5", a5);
            lab("e_0", e0);
            lab("e_2", e2);
            lab("e_3", e3);
            lab("e_5", e5);
            lab("b_1", b1);
            lab("b_4", b4);
            lab("d_1", d1);
            lab("d_4", d4);
            lab("c_1", c1);
            lab("c_3", c3);
            lab("c_4", c4);
            clique(range(0, k));
            path({a0, a2, a3, a5});
            path({e0, e2, e3, e5});
            path({a0, b1, a2});
            path({a3, b4, a5});
            path({e0, d1, e2});
            path({e3, d4, e5});
            tri(b1, c1, d1);
            tri(b4, c3, d4);
            tri(a5, c4, e5);
            clique({a2, a3, e2, e3});
            return build_graph(k + 13, edges);
        }
        case 9: {  // K_k (k >= 9) with nine pendant triangles, y's tripled up
            clique(range(0, k));
            for (int j = 0; j < 9; ++j) {
                int x = j, y = k + j, z = k + 9 + j;
                lab("x_" + std::to_string(j + 1), x);
                lab("y_" + std::to_string(j + 1), y);
                lab("z_" + std::to_string(j + 1), z);
                tri(x, y, z);
            }
            tri(k + 0, k + 1, k + 2);
            tri(k + 3, k + 4, k + 5);
            tri(k + 6, k + 7, k + 8);
            return build_graph(k + 18, edges);
        }
    }
    throw std::invalid_argument("gen_G: index must be 1..9");
}

inline void validate_G(int i, int k, const SimpleGraph& g) {
    auto fail = [&](const std::string& what) {
        throw std::logic_error("gen_G: self-validation failed for G" + std::to_string(i) +
                               ": " + what);
    };
    if (vertex_connectivity(g) < 2) fail("not 2-connected");
    if (structural_metrics(g).is_cycle) fail("is a cycle");
    auto free_of = [&](const ForbiddenSpec& s) {
        return !find_induced(g, make_forbidden(s)).has_value();
    };
    if (i == 2 || i == 5 || i == 6)
        if (!free_of(ForbiddenSpec::cycle(4))) fail("contains induced C4");
    if (i == 3 || i == 5 || i == 6)
        if (!free_of(ForbiddenSpec::star(5))) fail("contains induced K1,5");
    if (i == 4 || i == 5 || i == 6)
        if (!free_of(ForbiddenSpec::star(4))) fail("contains induced K1,4");
    if (i >= 6)
        if (!free_of(ForbiddenSpec::star(3))) fail("contains induced claw");
    if (i == 7) {
        // Z6-freeness is special to the smallest member: for k >= 4 a clique
        // triangle plus the path x1 x2 z21 z22 y2 z12 u1 forms an induced Z6.
        if (k == 3 && !free_of(ForbiddenSpec::z(6))) fail("contains induced Z6");
        if (!free_of(ForbiddenSpec::nijk(1, 1, 5))) fail("contains induced N1,1,5");
        if (!free_of(ForbiddenSpec::nijk(2, 2, 2))) fail("contains induced N2,2,2");
    }
    if (i == 8)
        if (!free_of(ForbiddenSpec::bij(3, 3))) fail("contains induced B3,3");
    if (i == 9) {
        if (!free_of(ForbiddenSpec::bij(2, 5))) fail("contains induced B2,5");
        if (!free_of(ForbiddenSpec::nijk(1, 2, 4))) fail("contains induced N1,2,4");
    }
    if (i == 2 && longest_induced_path(g) != 3) fail("longest induced path != 3");
    if (i == 3 && longest_induced_path(g) != 3) fail("longest induced path != 3");
    if (i == 4 && longest_induced_path(g) != 4) fail("longest induced path != 4");
    if (i == 9 && longest_induced_path(g) != 8) fail("longest induced path != 8");
}

}  // namespace detail

inline SimpleGraph gen_G(int i, int k, LabelMap* labels = nullptr) {
    if (k < gen_G_min_k(i))
        throw std::invalid_argument("gen_G: k below the family minimum");
    if (labels) labels->clear();
    SimpleGraph g = detail::build_G(i, k, labels);
    detail::validate_G(i, k, g);
    return g;
}

// --- Brousek's P_{k1,k2,k3} ---

inline SimpleGraph gen_brousek(int k1, int k2, int k3, LabelMap* labels = nullptr) {
    int ks[] = {k1, k2, k3};
    for (int k : ks)
        if (k < 2) throw std::invalid_argument("gen_brousek: each k must be >= 2");
    if (labels) labels->clear();
    auto lab = [&](const std::string& name, int v) {
        if (labels) (*labels)[name] = v;
    };
    std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
    int n = 6;
    for (int j = 0; j < 3; ++j) {
        int a = j, b = 3 + j;
        std::string idx = std::to_string(j + 1);
        lab("a_" + idx, a);
        lab("b_" + idx, b);
        if (ks[j] == 2) {  // joining triangle a_j b_j c_j
            int c = n++;
            lab("c_" + idx, c);
            edges.push_back({a, b});
            edges.push_back({a, c});
            edges.push_back({c, b});
        } else {  // joining path a_j c^1_j ... c^{k-2}_j b_j
            int prev = a;
            for (int t = 0; t < ks[j] - 2; ++t) {
                int c = n++;
                lab("c^" + std::to_string(t + 1) + "_" + idx, c);
                edges.push_back({prev, c});
                prev = c;
            }
            edges.push_back({prev, b});
        }
    }
    return build_graph(n, edges);
}

}  // namespace theta

#endif
