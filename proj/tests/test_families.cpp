#include <catch2/catch_amalgamated.hpp>

#include "theta/families.hpp"
#include "theta/forbidden.hpp"
#include "theta/hamilton.hpp"
#include "theta/metrics.hpp"
#include "theta/multigraph.hpp"
#include "theta/unfoldment.hpp"

using namespace theta;

namespace {

bool claw_free(const SimpleGraph& g) {
    return is_free(g, std::vector<ForbiddenSpec>{ForbiddenSpec::star(3)});
}

}  // namespace

TEST_CASE("link generators") {
    std::vector<PureLinkSpec> tri3(3, PureLinkSpec::triangle());
    std::vector<PureLinkSpec> tri2(2, PureLinkSpec::triangle());
    Link l1 = gen_link(1, tri3);
    REQUIRE(l1.graph.n() == 11);
    REQUIRE(l1.graph.adjacent(l1.x, l1.y));  // x,y sit in the 5-clique
    Link l2 = gen_link(2, tri2);
    REQUIRE(l2.graph.n() == 8);
    REQUIRE_FALSE(l2.graph.adjacent(l2.x, l2.y));
    Link l3 = gen_link(3, tri2);
    REQUIRE(l3.graph.n() == 8);
    REQUIRE(l3.graph.adjacent(l3.x, l3.y));
    REQUIRE(l3.graph.edge_count() == l2.graph.edge_count() + 1);
    REQUIRE_THROWS(gen_link(1, tri2));
    REQUIRE_THROWS(gen_link(4, tri2));
}

TEST_CASE("chain generator") {
    // lone triangle chain on k vertices: edges between indices at distance <= 2
    for (int k = 3; k <= 6; ++k) {
        ChainResult ch = gen_chain({ChainPart::triangle_chain(k)});
        REQUIRE(ch.graph.n() == k);
        REQUIRE(ch.graph.edge_count() == 2 * k - 3);
    }
    ChainResult t5 = gen_chain({ChainPart::triangle_chain(5)});
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) REQUIRE(t5.graph.adjacent(i, j) == (j - i <= 2));

    ChainResult triv = gen_chain({ChainPart::bipath(0, 0)});
    REQUIRE(triv.graph.n() == 2);
    REQUIRE(triv.graph.edge_count() == 0);
    REQUIRE(triv.x1 == triv.x2);
    REQUIRE(triv.y1 == triv.y2);
    REQUIRE_THROWS(gen_chain({ChainPart::bipath(0, 0), ChainPart::triangle_chain(3)}));

    // two parts meet in a 4-clique at the junction
    ChainResult mix = gen_chain({ChainPart::bipath(2, 1), ChainPart::triangle_chain(3)});
    REQUIRE(mix.graph.n() == 8);
    bool found_clique = false;
    for (int a = 0; a < 8 && !found_clique; ++a)
        for (int b = a + 1; b < 8 && !found_clique; ++b)
            for (int c = b + 1; c < 8 && !found_clique; ++c)
                for (int d = c + 1; d < 8 && !found_clique; ++d)
                    found_clique = mix.graph.adjacent(a, b) && mix.graph.adjacent(a, c) &&
                                   mix.graph.adjacent(a, d) && mix.graph.adjacent(b, c) &&
                                   mix.graph.adjacent(b, d) && mix.graph.adjacent(c, d);
    REQUIRE(found_clique);
}

TEST_CASE("gen_H smallest members") {
    SimpleGraph h1 = gen_H({1, {}, {}});
    REQUIRE(h1.n() == 18);
    SimpleGraph h7 = gen_H({7, {}, {}});
    REQUIRE(h7.n() == 14);
    SimpleGraph h6 = gen_H({6, {}, {}});
    REQUIRE(h6.n() == 17);
    for (const SimpleGraph* g : {&h1, &h7, &h6}) {
        REQUIRE(vertex_connectivity(*g) >= 2);
        REQUIRE(claw_free(*g));
        REQUIRE_FALSE(structural_metrics(*g).is_cycle);
        REQUIRE_FALSE(spanning_theta(*g).has_value());
    }
}

TEST_CASE("gen_H chain type constraints") {
    std::vector<ChainPart> tb{ChainPart::triangle_chain(3), ChainPart::bipath(1, 1)};
    REQUIRE_NOTHROW(gen_H({6, {}, tb}));
    // a lone triangle chain has triangle ends on both sides (type TT)
    REQUIRE_THROWS(gen_H({6, {}, {ChainPart::triangle_chain(3)}}));
    REQUIRE_THROWS(gen_H({7, {}, tb}));
    REQUIRE_NOTHROW(gen_H({7, {}, {ChainPart::bipath(2, 2)}}));
    REQUIRE_NOTHROW(gen_H({5, {}, {ChainPart::triangle_chain(4)}}));
    REQUIRE_THROWS(gen_H({8, {}, {}}));
}

TEST_CASE("families 1-4 fold back to their catalog multigraphs") {
    for (int i = 1; i <= 4; ++i) {
        MultiGraph m = gen_catalog(static_cast<CatalogId>(i - 1));
        LinkAssignment a(m.edge_count(), PureLinkSpec::triangle());
        ColoredGraph cg = unfold(m, a);
        REQUIRE(cg.graph == gen_H({i, {}, {}}));
        REQUIRE(check_unfoldment(cg).pass);
        REQUIRE(multigraph_isomorphic(fold(cg), m).has_value());
    }
}

TEST_CASE("gen_H exposes a label map") {
    LabelMap labels;
    gen_H({1, {}, {}}, &labels);
    REQUIRE(labels.count("x_1") == 1);
    REQUIRE(labels.count("x'_1") == 1);
    labels.clear();
    SimpleGraph h7 = gen_H({7, {}, {}}, &labels);
    REQUIRE(labels.count("x_1") == 1);
    for (const auto& [name, v] : labels) {
        REQUIRE(v >= 0);
        REQUIRE(v < h7.n());
    }
}

TEST_CASE("counterexample graph pins") {
    SimpleGraph g1 = gen_G(1, 4);  // K_{2,4}
    REQUIRE(g1.n() == 6);
    REQUIRE(g1.edge_count() == 8);
    REQUIRE_FALSE(spanning_theta(g1).has_value());
    REQUIRE(longest_induced_path(gen_G(2, 4)) == 3);
    REQUIRE(longest_induced_path(gen_G(3, 3)) == 3);
    REQUIRE(longest_induced_path(gen_G(4, 4)) == 4);
    SimpleGraph g6 = gen_G(6, 5);
    REQUIRE(claw_free(g6));
    REQUIRE(is_free(g6, std::vector<ForbiddenSpec>{ForbiddenSpec::cycle(4)}));
    SimpleGraph g9 = gen_G(9, 9);
    REQUIRE(claw_free(g9));
    REQUIRE(longest_induced_path(g9) == 8);
    REQUIRE_THROWS(gen_G(1, 3));   // below the family minimum
    REQUIRE_THROWS(gen_G(10, 5));  // no such family
}

TEST_CASE("counterexample graphs are 2-connected non-cycles without spanning thetas") {
    for (int i = 1; i <= 9; ++i) {
        int k = gen_G_min_k(i);
        SimpleGraph g = gen_G(i, k);  // gen_G self-validates the freeness facts
        REQUIRE(vertex_connectivity(g) >= 2);
        REQUIRE_FALSE(structural_metrics(g).is_cycle);
        REQUIRE_FALSE(spanning_theta(g).has_value());
    }
}

TEST_CASE("brousek graphs") {
    LabelMap labels;
    SimpleGraph p222 = gen_brousek(2, 2, 2, &labels);
    REQUIRE(p222.n() == 9);
    REQUIRE(claw_free(p222));
    REQUIRE_FALSE(hamilton_cycle(p222).has_value());
    REQUIRE(labels.count("a_1") == 1);
    // k = 2 joins by a triangle (one extra vertex); k >= 3 by a path with
    // k - 2 interior vertices, so (3,2,2) also has 6 + 1 + 1 + 1 = 9.
    REQUIRE(gen_brousek(3, 2, 2).n() == 9);
    REQUIRE(gen_brousek(4, 2, 2).n() == 10);
    REQUIRE_THROWS(gen_brousek(1, 2, 2));
}

TEST_CASE("catalog selector parsing") {
    REQUIRE(parse_catalog_id("M1") == CatalogId::M1);
    REQUIRE(parse_catalog_id("N2") == CatalogId::N2);
    REQUIRE_THROWS(parse_catalog_id("M8"));
}
