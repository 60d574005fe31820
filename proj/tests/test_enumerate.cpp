#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "theta/enumerate.hpp"
#include "theta/forbidden.hpp"
#include "theta/metrics.hpp"
#include "theta/multigraph.hpp"
#include "theta/rng.hpp"
#include "theta/simple_graph.hpp"

using namespace theta;

TEST_CASE("graph class counts") {
    const int want[] = {1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n)
        REQUIRE(static_cast<int>(enumerate_graphs(n).size()) == want[n - 1]);
    REQUIRE(enumerate_graphs(4, [](const SimpleGraph& g) { return is_connected(g); }).size() == 6);
    REQUIRE_THROWS(enumerate_graphs(0));
    REQUIRE_THROWS(enumerate_graphs(10));
}

TEST_CASE("canonical form is exact on small graphs") {
    SplitMix64 rng(61);
    for (const SimpleGraph& g : enumerate_graphs(6)) {
        std::vector<int> perm(g.n());
        for (int i = 0; i < g.n(); ++i) perm[i] = i;
        for (int i = g.n() - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.below(i + 1)]);
        SimpleGraph h(g.n());
        for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
        REQUIRE(canonical_form(h) == canonical_form(g));
    }
    SimpleGraph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    SimpleGraph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    REQUIRE(canonical_form(c4) != canonical_form(p4));
}

TEST_CASE("dedup soundness and naive second-pass completeness") {
    for (int n = 1; n <= 5; ++n) {
        auto stream = enumerate_graphs(n);
        std::set<std::string> forms;
        for (const SimpleGraph& g : stream) REQUIRE(forms.insert(canonical_form(g)).second);
        // independent generator: all labeled edge sets, grouped by canonical form
        int pairs = n * (n - 1) / 2;
        std::vector<std::pair<int, int>> pl;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pl.emplace_back(i, j);
        std::set<std::string> naive;
        for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
            SimpleGraph g(n);
            for (int p = 0; p < pairs; ++p)
                if ((mask >> p) & 1) g.add_edge(pl[p].first, pl[p].second);
            naive.insert(canonical_form(g));
        }
        REQUIRE(naive == forms);
    }
}

TEST_CASE("hereditary pruning matches post-filtering") {
    auto claw_free = [](const SimpleGraph& g) {
        return is_free(g, std::vector<ForbiddenSpec>{ForbiddenSpec::star(3)});
    };
    for (int n = 4; n <= 6; ++n) {
        auto pruned = enumerate_graphs(n, claw_free, claw_free);
        auto filtered = enumerate_graphs(n, claw_free);
        REQUIRE(pruned.size() == filtered.size());
        std::set<std::string> a, b;
        for (const auto& g : pruned) a.insert(canonical_form(g));
        for (const auto& g : filtered) b.insert(canonical_form(g));
        REQUIRE(a == b);
    }
}

TEST_CASE("multigraph enumeration") {
    auto loopless = enumerate_multigraphs(4, 3);
    // pairwise distinct up to isomorphism
    for (size_t i = 0; i < loopless.size(); ++i)
        for (size_t j = i + 1; j < loopless.size(); ++j)
            REQUIRE_FALSE(multigraph_isomorphic(loopless[i], loopless[j]).has_value());
    // degree multisets: isomorphic relabelings must already be merged, so
    // every member with the same (n, degree multiset, edge count) that is
    // isomorphic to another would be a dedup failure -- covered above; here
    // check no isolated vertices and the caps.
    for (const MultiGraph& f : loopless) {
        REQUIRE(f.n() <= 4);
        REQUIRE_FALSE(f.is_semi_loopless());
        for (int v = 0; v < f.n(); ++v) REQUIRE(f.degree(v) >= 1);
        for (int a = 0; a < f.n(); ++a)
            for (int b = a + 1; b < f.n(); ++b) REQUIRE(f.multiplicity(a, b) <= 3);
    }
    // dipoles: exactly 3 classes on 2 vertices with multiplicity up to 3
    int dipoles = 0;
    for (const MultiGraph& f : enumerate_multigraphs(2, 3)) dipoles += f.n() == 2;
    REQUIRE(dipoles == 3);
    // semi-loopless mode: every member carries an e0 label
    for (const MultiGraph& f : enumerate_multigraphs(3, 3, true)) {
        REQUIRE(f.is_semi_loopless());
        REQUIRE(f.e0().has_value());
    }
    REQUIRE_THROWS(enumerate_multigraphs(5, 3));
    REQUIRE_THROWS(enumerate_multigraphs(4, 3, true));
    REQUIRE_THROWS(enumerate_multigraphs(3, 5));
}

TEST_CASE("minimality scan") {
    SimpleGraph k5(5);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) k5.add_edge(i, j);
    auto two_conn = [](const SimpleGraph& g) {
        return g.n() >= 3 && vertex_connectivity(g) >= 2;
    };
    auto verdict = minimality_scan(k5, two_conn);
    REQUIRE_FALSE(verdict.is_minimal);
    REQUIRE(verdict.witness.has_value());
    // the witness must satisfy the property when re-checked independently
    REQUIRE(two_conn(induced_subgraph(k5, *verdict.witness, nullptr)));
    REQUIRE(verdict.witness->count() < 5);

    SimpleGraph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    REQUIRE(minimality_scan(k3, two_conn).is_minimal);

    auto has_triangle = [](const SimpleGraph& g) {
        for (int a = 0; a < g.n(); ++a)
            for (int b = a + 1; b < g.n(); ++b)
                for (int c = b + 1; c < g.n(); ++c)
                    if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) return true;
        return false;
    };
    REQUIRE(minimality_scan(k3, has_triangle).is_minimal);
    auto v2 = minimality_scan(k5, has_triangle);
    REQUIRE_FALSE(v2.is_minimal);
    // decreasing-size scan: the first witness found has n-1 vertices
    REQUIRE(v2.witness->count() == 4);

    REQUIRE_THROWS(minimality_scan(SimpleGraph(17), has_triangle));
}

TEST_CASE("enumeration order is deterministic") {
    auto a = enumerate_graphs(5);
    auto b = enumerate_graphs(5);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) REQUIRE(a[i] == b[i]);
}
