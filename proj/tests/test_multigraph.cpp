#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "theta/enumerate.hpp"
#include "theta/families.hpp"
#include "theta/multigraph.hpp"

using namespace theta;

TEST_CASE("degrees, loops, and multiplicity") {
    MultiGraph f(2, {{0, 1}, {0, 1}, {1, 1}}, 2);  // e0 = loop at 1
    REQUIRE(f.degree(0) == 2);
    REQUIRE(f.degree(1) == 4);  // loop counts twice
    REQUIRE(f.multiplicity(0, 1) == 2);
    REQUIRE(f.e0_is_loop());
    REQUIRE(f.odd_degree_vertices().empty());
}

TEST_CASE("loops are rejected without an e0 label") {
    REQUIRE_THROWS(MultiGraph(2, {{0, 1}, {1, 1}}));
}

TEST_CASE("euler trail replay over all small multigraphs") {
    for (const MultiGraph& f : enumerate_multigraphs(4, 3)) {
        if (!f.connected()) continue;
        auto trail = find_euler_trail(f);
        int odd = f.odd_degree_vertices().count();
        bool expect = odd == 0 || odd == 2;
        REQUIRE(trail.has_value() == expect);
        if (trail) {
            // Replay: every edge index exactly once, consecutive edges share
            // the claimed intermediate vertices.
            std::set<int> used(trail->edges.begin(), trail->edges.end());
            REQUIRE(static_cast<int>(used.size()) == f.edge_count());
            REQUIRE(static_cast<int>(trail->edges.size()) == f.edge_count());
            REQUIRE(static_cast<int>(trail->vertices.size()) == f.edge_count() + 1);
            for (size_t i = 0; i < trail->edges.size(); ++i) {
                auto [a, b] = f.edge(trail->edges[i]);
                int from = trail->vertices[i], to = trail->vertices[i + 1];
                REQUIRE(((from == a && to == b) || (from == b && to == a)));
            }
            REQUIRE(has_euler_tour(f) == (trail->vertices.front() == trail->vertices.back() &&
                                          odd == 0));
        }
    }
}

TEST_CASE("edge connectivity agrees with exhaustive deletion for small k") {
    for (const MultiGraph& f : enumerate_multigraphs(4, 3)) {
        if (f.n() < 2) continue;
        int ec = edge_connectivity(f);
        // cross-check thresholds 1..3 by deleting all subsets of < k edges
        for (int k = 1; k <= 3; ++k) {
            bool no_small_cut = true;
            int m = f.edge_count();
            for (unsigned mask = 0; mask < (1u << m) && no_small_cut; ++mask) {
                if (__builtin_popcount(mask) >= k) continue;
                std::vector<std::pair<int, int>> kept;
                for (int e = 0; e < m; ++e)
                    if (!((mask >> e) & 1)) kept.push_back(f.edge(e));
                // connectivity of the reduced multigraph on the same vertices
                std::vector<int> parent(f.n());
                for (int v = 0; v < f.n(); ++v) parent[v] = v;
                auto find = [&](int v) {
                    while (parent[v] != v) v = parent[v] = parent[parent[v]];
                    return v;
                };
                for (auto [a, b] : kept) parent[find(a)] = find(b);
                int comps = 0;
                for (int v = 0; v < f.n(); ++v) comps += find(v) == v;
                if (comps > 1) no_small_cut = false;
            }
            REQUIRE((ec >= k) == no_small_cut);
        }
    }
}

TEST_CASE("catalog edge connectivity pins") {
    REQUIRE(edge_connectivity(gen_catalog(CatalogId::M1)) == 3);
    REQUIRE(edge_connectivity(gen_catalog(CatalogId::M4)) == 3);
    REQUIRE(edge_connectivity(gen_catalog(CatalogId::M6)) == 2);
}

TEST_CASE("isomorphism is reflexive and symmetric on the catalog") {
    std::vector<CatalogId> ids{CatalogId::M1, CatalogId::M2, CatalogId::M3, CatalogId::M4,
                               CatalogId::M5, CatalogId::M6, CatalogId::M7, CatalogId::N1,
                               CatalogId::N2};
    std::vector<MultiGraph> cat;
    for (CatalogId id : ids) cat.push_back(gen_catalog(id));
    for (size_t i = 0; i < cat.size(); ++i) {
        REQUIRE(multigraph_isomorphic(cat[i], cat[i]).has_value());
        for (size_t j = i + 1; j < cat.size(); ++j) {
            bool ij = multigraph_isomorphic(cat[i], cat[j]).has_value();
            bool ji = multigraph_isomorphic(cat[j], cat[i]).has_value();
            REQUIRE(ij == ji);
            REQUIRE_FALSE(ij);  // the catalog entries are pairwise distinct
        }
    }
}

TEST_CASE("multigraph text round trip") {
    for (const MultiGraph& f : enumerate_multigraphs(3, 3, true)) {
        MultiGraph back = multigraph_decode(multigraph_encode(f));
        REQUIRE(back.n() == f.n());
        REQUIRE(back.edge_count() == f.edge_count());
        REQUIRE(multigraph_isomorphic(back, f).has_value());
    }
}
