#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "oracles.hpp"
#include "theta/bitset128.hpp"
#include "theta/enumerate.hpp"
#include "theta/rng.hpp"
#include "theta/simple_graph.hpp"

using namespace theta;

TEST_CASE("VertexSet basic operations") {
    VertexSet s;
    REQUIRE(s.empty());
    s.set(0);
    s.set(63);
    s.set(64);
    s.set(127);
    REQUIRE(s.count() == 4);
    REQUIRE(s.test(63));
    REQUIRE(s.test(64));
    REQUIRE_FALSE(s.test(1));
    s.reset(64);
    REQUIRE(s.count() == 3);

    VertexSet t = VertexSet::single(63) | VertexSet::single(5);
    REQUIRE((s & t) == VertexSet::single(63));
    REQUIRE((s - VertexSet::single(63)).count() == 2);
    REQUIRE(VertexSet::single(63).subset_of(s));
    REQUIRE(s.intersects(t));
}

TEST_CASE("VertexSet iteration is ascending and complete") {
    VertexSet s;
    std::vector<int> want{3, 17, 63, 64, 99, 127};
    for (int v : want) s.set(v);
    std::vector<int> got;
    for (int v : iterate(s)) got.push_back(v);
    REQUIRE(got == want);
    REQUIRE(VertexSet::full(5).count() == 5);
    REQUIRE(VertexSet::full(70).count() == 70);
}

TEST_CASE("SimpleGraph edges, degrees, and idempotent insertion") {
    SimpleGraph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 0);  // duplicate collapses
    g.add_edge(2, 3);
    REQUIRE(g.edge_count() == 2);
    REQUIRE(g.degree(1) == 1);
    REQUIRE(g.adjacent(3, 2));
    REQUIRE_THROWS(g.add_edge(1, 1));
    g.remove_edge(0, 1);
    REQUIRE_FALSE(g.adjacent(0, 1));
    REQUIRE(g.edges() == std::vector<std::pair<int, int>>{{2, 3}});
}

TEST_CASE("components and connectivity") {
    SimpleGraph g = build_graph(5, {{0, 1}, {1, 2}, {3, 4}});
    REQUIRE_FALSE(is_connected(g));
    auto comps = components(g, g.vertices());
    REQUIRE(comps.size() == 2);
    g.add_edge(2, 3);
    REQUIRE(is_connected(g));
    REQUIRE(component_of(g, g.vertices(), 0) == g.vertices());
}

TEST_CASE("induced subgraph remaps indices and keeps edges") {
    SimpleGraph g = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    VertexSet keep;
    keep.set(1);
    keep.set(2);
    keep.set(4);
    std::vector<int> map;
    SimpleGraph h = induced_subgraph(g, keep, &map);
    REQUIRE(h.n() == 3);
    REQUIRE(map == std::vector<int>{1, 2, 4});
    REQUIRE(h.adjacent(0, 1));       // 1-2
    REQUIRE_FALSE(h.adjacent(0, 2)); // 1-4
}

TEST_CASE("graph6 round trip over all small graphs") {
    for (int n = 1; n <= 5; ++n) {
        for (const SimpleGraph& g : enumerate_graphs(n)) {
            SimpleGraph back = graph6_decode(graph6_encode(g));
            REQUIRE(back == g);
        }
    }
}

TEST_CASE("graph6 encodes known strings") {
    // K4's canonical graph6 form, cross-checked against the format spec.
    SimpleGraph k4 = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    REQUIRE(graph6_encode(k4) == "C~");
    REQUIRE(graph6_decode("C~") == k4);
}

TEST_CASE("edge list round trip including larger graphs") {
    SplitMix64 rng(7);
    SimpleGraph g(70);
    for (int t = 0; t < 200; ++t) {
        int a = static_cast<int>(rng.below(70)), b = static_cast<int>(rng.below(70));
        if (a != b) g.add_edge(a, b);
    }
    SimpleGraph back = edge_list_decode(edge_list_encode(g));
    REQUIRE(back == g);
}

TEST_CASE("random relabeling keeps connectivity (graph-core level)") {
    SplitMix64 rng(11);
    for (const SimpleGraph& g : enumerate_graphs(6)) {
        std::vector<int> perm(g.n());
        for (int i = 0; i < g.n(); ++i) perm[i] = i;
        for (int i = g.n() - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.below(i + 1)]);
        SimpleGraph h(g.n());
        for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
        REQUIRE(is_connected(h) == is_connected(g));
        REQUIRE(oracles::naive_connected(g) == is_connected(g));
    }
}
