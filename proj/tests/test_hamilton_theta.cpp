#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "theta/enumerate.hpp"
#include "theta/hamilton.hpp"
#include "theta/metrics.hpp"
#include "theta/simple_graph.hpp"

using namespace theta;

namespace {

SimpleGraph petersen() {
    return build_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                            {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                            {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

SimpleGraph complete(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

bool cycle_is_valid(const SimpleGraph& g, const std::vector<int>& cyc) {
    if (static_cast<int>(cyc.size()) != g.n()) return false;
    std::set<int> seen(cyc.begin(), cyc.end());
    if (static_cast<int>(seen.size()) != g.n()) return false;
    for (size_t i = 0; i + 1 < cyc.size(); ++i)
        if (!g.adjacent(cyc[i], cyc[i + 1])) return false;
    return g.adjacent(cyc.back(), cyc.front());
}

}  // namespace

TEST_CASE("hamilton cycle pins") {
    REQUIRE(hamilton_cycle(complete(4)).has_value());
    REQUIRE_FALSE(hamilton_cycle(petersen()).has_value());  // classic non-hamiltonian
    SimpleGraph path = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    REQUIRE_FALSE(hamilton_cycle(path).has_value());
}

TEST_CASE("hamilton cycle agrees with the permutation oracle on all 6-vertex graphs") {
    for (int n = 3; n <= 6; ++n) {
        for (const SimpleGraph& g : enumerate_graphs(n)) {
            auto cyc = hamilton_cycle(g);
            REQUIRE(cyc.has_value() == oracles::naive_hamilton_cycle(g));
            if (cyc) REQUIRE(cycle_is_valid(g, *cyc));
        }
    }
}

TEST_CASE("spanning theta agrees with the edge-subset oracle on all 6-vertex graphs") {
    for (int n = 4; n <= 6; ++n) {
        for (const SimpleGraph& g : enumerate_graphs(n)) {
            auto t = spanning_theta(g);
            REQUIRE(t.has_value() == oracles::naive_spanning_theta(g));
            if (t) REQUIRE(verify_theta(g, *t));
        }
    }
}

TEST_CASE("constrained hamilton path agrees with the permutation oracle") {
    for (int n = 2; n <= 5; ++n) {
        for (const SimpleGraph& g : enumerate_graphs(n)) {
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y) {
                    auto p = hamilton_path_between(g, x, y, true);
                    REQUIRE(p.has_value() == oracles::naive_hamilton_path_between(g, x, y));
                    if (p) {
                        REQUIRE(p->front() == x);
                        REQUIRE(p->back() == y);
                        REQUIRE(static_cast<int>(p->size()) == n);
                        for (size_t i = 0; i + 1 < p->size(); ++i)
                            REQUIRE(g.adjacent((*p)[i], (*p)[i + 1]));
                    }
                }
        }
    }
}

TEST_CASE("spanning theta implies a hamilton path") {
    for (const SimpleGraph& g : enumerate_graphs(6)) {
        if (g.n() < 4) continue;
        if (spanning_theta(g))
            REQUIRE(hamilton_path_between(g, 0, 0, false).has_value());
    }
}

TEST_CASE("hamiltonian non-cycles have spanning thetas") {
    for (const SimpleGraph& g : enumerate_graphs(6)) {
        if (g.n() < 4) continue;
        if (hamilton_cycle(g) && !structural_metrics(g).is_cycle)
            REQUIRE(spanning_theta(g).has_value());
    }
}

TEST_CASE("certificate crosses every 2-cut into its components") {
    // For each 2-cut {x1,x2} and each component H of G - {x1,x2}, the theta's
    // edge set contains an edge from each xi into H.
    for (const SimpleGraph& g : enumerate_graphs(6)) {
        if (g.n() < 4 || !is_connected(g)) continue;
        auto t = spanning_theta(g);
        if (!t) continue;
        std::set<std::pair<int, int>> cert_edges;
        for (const auto& p : t->paths)
            for (size_t i = 0; i + 1 < p.size(); ++i)
                cert_edges.insert(std::minmax(p[i], p[i + 1]));
        for (const TwoCut& c : list_two_cuts(g)) {
            auto [x1, x2] = c.cut;
            VertexSet rest = g.vertices() - VertexSet::single(x1) - VertexSet::single(x2);
            for (const VertexSet& comp : components(g, rest)) {
                for (int xi : {x1, x2}) {
                    bool crossed = false;
                    for (int z : iterate(comp))
                        if (cert_edges.count(std::minmax(xi, z))) crossed = true;
                    REQUIRE(crossed);
                }
            }
        }
    }
}

TEST_CASE("theta certificate text round trip") {
    auto t = spanning_theta(complete(5));
    REQUIRE(t.has_value());
    ThetaCertificate back = theta_decode(theta_encode(*t));
    REQUIRE(back.u == t->u);
    REQUIRE(back.v == t->v);
    REQUIRE(back.paths == t->paths);
    REQUIRE(verify_theta(complete(5), back));
}

TEST_CASE("verify_theta rejects corrupted certificates") {
    SimpleGraph g = complete(5);
    auto t = spanning_theta(g);
    REQUIRE(t.has_value());
    ThetaCertificate bad = *t;
    bad.paths[0].insert(bad.paths[0].begin() + 1, bad.paths[1][1]);  // duplicated interior
    REQUIRE_FALSE(verify_theta(g, bad));
    ThetaCertificate two = *t;
    two.paths.pop_back();
    REQUIRE_FALSE(verify_theta(g, two));
}

TEST_CASE("link classification") {
    // Triangle through xy: pure and simple.
    Link tri{build_graph(3, {{0, 1}, {0, 2}, {1, 2}}), 0, 1};
    auto c1 = classify_link(tri);
    REQUIRE(c1.pure);
    REQUIRE(c1.simple);
    // Path of length 3 between the ends: pure, and simple via its own path.
    Link path{build_graph(4, {{0, 2}, {2, 3}, {3, 1}}), 0, 1};
    auto c2 = classify_link(path);
    REQUIRE(c2.pure);
    REQUIRE(c2.simple);
    // K4 is simple (Hamilton x-y path exists) but not pure.
    Link k4{complete(4), 0, 3};
    auto c3 = classify_link(k4);
    REQUIRE(c3.simple);
    REQUIRE_FALSE(c3.pure);
}
