#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghs/planar.hpp"
#include "oracles.hpp"

using namespace ghs;

namespace {

// Random subdivision of a fixed graph: split random edges until the edge
// budget is reached.
Multigraph random_subdivision(testing::Rng& rng, Multigraph g, int max_edges) {
    int extra = rng.range(0, max_edges - g.edge_count());
    for (int i = 0; i < extra; ++i)
        g = subdivide_edge(g, rng.range(1, g.edge_count())).graph;
    return g;
}

// Random polygonal graph built by actually gluing cycles along paths; planar
// by construction.
Multigraph random_polygonal(testing::Rng& rng) {
    Multigraph g = cycle_graph(rng.range(1, 4));
    int polygons = rng.range(0, 3);
    for (int p = 0; p < polygons && g.edge_count() < 12; ++p) {
        // Glue a new cycle along a random path (here: a single edge).
        int e = rng.range(1, g.edge_count());
        int extra = rng.range(1, 3);  // new edges forming the ear
        int u = g.source(e), v = g.target(e);
        int prev = u;
        for (int k = 0; k < extra - 1; ++k) {
            int w = g.vertices++;
            g.edges.emplace_back(prev, w);
            prev = w;
        }
        g.edges.emplace_back(prev, v);
    }
    return g;
}

}  // namespace

TEST_CASE("subgraph betti numbers") {
    Multigraph g = wheel(3);
    CHECK(h1_of_subgraph(g, edge_bit(1) | edge_bit(2) | edge_bit(3)) == 0);
    Multigraph t = cycle_graph(3);
    CHECK(h1_of_subgraph(t, edge_bit(1) | edge_bit(2) | edge_bit(3)) == 1);
    CHECK(h1_of_subgraph(t, 0) == 0);
}

TEST_CASE("planarity of the standard examples") {
    auto w4 = is_planar(wheel(4));
    CHECK(w4.planar);
    REQUIRE(w4.witness.size() == 4);
    for (const auto& c : w4.witness) CHECK(edge_count(c.support) == 3);

    CHECK(is_planar(banana(4)).planar);
    CHECK(is_planar(wheel(5)).planar);
    CHECK(is_planar(diamond()).planar);
    CHECK(is_planar(figure_eight()).planar);
    CHECK(!is_planar(complete(5)).planar);
    CHECK(!is_planar(complete_bipartite(3, 3)).planar);

    // K5 minus one edge is planar.
    Multigraph k5e = delete_edge(complete(5), 1).graph;
    CHECK(is_planar(k5e).planar);

    Multigraph big = complete(7);
    CHECK_THROWS_AS(is_planar(big), std::domain_error);
}

TEST_CASE("planarity is preserved by subdivision and by construction") {
    testing::Rng rng;
    for (int i = 0; i < 20; ++i) {
        Multigraph planar_g = random_polygonal(rng);
        INFO(to_text(planar_g));
        CHECK(is_planar(planar_g).planar);
    }
    for (int i = 0; i < 6; ++i) {
        Multigraph k5 = random_subdivision(rng, complete(5), 14);
        CHECK(!is_planar(k5).planar);
        Multigraph k33 = random_subdivision(rng, complete_bipartite(3, 3), 14);
        CHECK(!is_planar(k33).planar);
    }
}

TEST_CASE("decompositions of a triangle") {
    auto ds = polygonal_decompositions(cycle_graph(3));
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].polygons.size() == 1);
    CHECK(ds[0].glued_edges == 0);
}

TEST_CASE("decompositions of the banana") {
    auto ds = polygonal_decompositions(banana(4));
    // Pair-path patterns over the four edges: 4!/2 = 12 polygon sets.
    CHECK(ds.size() == 12);
    for (const auto& d : ds) {
        CHECK(d.polygons.size() == 3);
        for (const auto& p : d.polygons) CHECK(edge_count(p.support) == 2);
        // Two parallel middle edges always form a cycle in E0.
        CHECK(h1_of_subgraph(banana(4), d.glued_edges) == 1);
    }
}

TEST_CASE("decomposition count respects h1") {
    testing::Rng rng;
    for (int i = 0; i < 25; ++i) {
        Multigraph g = testing::random_connected_multigraph(rng, 5, 6);
        auto [h0, h1] = betti(g);
        for (const auto& d : polygonal_decompositions(g)) {
            CHECK(int(d.polygons.size()) == h1);
            EdgeSet all = 0;
            for (const auto& p : d.polygons) all |= p.support;
            CHECK(all == (EdgeSet{1} << g.edge_count()) - 1);
            // Interfaces are non-empty, connected, proper after the first.
            for (size_t k = 1; k < d.interfaces.size(); ++k) {
                CHECK(d.interfaces[k] != 0);
                CHECK(edges_connected(g, d.interfaces[k]));
                CHECK(d.interfaces[k] != d.polygons[k].support);
            }
        }
    }
}

TEST_CASE("wheel decomposition into faces exists with star glue set") {
    auto ds = polygonal_decompositions(wheel(3));
    bool found = false;
    EdgeSet spokes = edge_bit(1) | edge_bit(2) | edge_bit(3);
    for (const auto& d : ds)
        if (d.polygons.size() == 3 && d.glued_edges == spokes) found = true;
    CHECK(found);
    for (const auto& d : ds)
        CHECK(h1_of_subgraph(wheel(3), d.glued_edges) == 0);
}

TEST_CASE("star graphs by the defining property") {
    CHECK(is_star_graph_definitional(wheel(3)).is_star);
    CHECK(is_star_graph_definitional(wheel(4)).is_star);
    CHECK(is_star_graph_definitional(cycle_graph(3)).is_star);
    CHECK(is_star_graph_definitional(diamond()).is_star);

    StarReport b4 = is_star_graph_definitional(banana(4));
    CHECK(b4.is_polygonal);
    CHECK(b4.is_planar);
    CHECK(!b4.is_star);
    REQUIRE(b4.failing_decomposition.has_value());
    CHECK(h1_of_subgraph(banana(4), b4.failing_decomposition->glued_edges) > 0);
}

TEST_CASE("star graphs by the matrix criterion") {
    StarReport w3 = is_star_graph_matrix(wheel(3));
    CHECK(w3.is_star);
    REQUIRE(w3.witness_basis.has_value());
    CHECK(w3.witness_basis->provenance == CycleBasis::Provenance::FaceBoundaries);

    StarReport b4 = is_star_graph_matrix(banana(4));
    CHECK(!b4.is_star);
    CHECK(b4.note == "every cycle basis has linearly dependent entries");

    CHECK(is_star_graph_matrix(diamond()).is_star);
    CHECK(is_star_graph_matrix(wheel(4)).is_star);
}

TEST_CASE("the two star routes agree on two-connected graphs") {
    testing::Rng rng;
    int done = 0;
    while (done < 30) {
        Multigraph g = testing::random_connected_multigraph(rng, 5, 6);
        if (!is_two_connected(g)) continue;
        ++done;
        INFO(to_text(g));
        StarReport def = is_star_graph_definitional(g);
        StarReport mat = is_star_graph_matrix(g);
        CHECK(def.is_star == mat.is_star);
        CHECK(def.is_polygonal == def.is_planar);
        // Polygon count equals h1 in every decomposition with a witness.
        if (def.witness_decomposition)
            CHECK(int(def.witness_decomposition->polygons.size()) ==
                  betti(g).second);
    }
}

TEST_CASE("witness bases with independent entries exclude inner cycles") {
    testing::Rng rng;
    int done = 0;
    while (done < 20) {
        Multigraph g = testing::random_connected_multigraph(rng, 5, 6);
        if (!is_two_connected(g)) continue;
        ++done;
        StarReport mat = is_star_graph_matrix(g);
        if (mat.is_star) {
            INFO(to_text(g));
            CHECK(inner_cycles(g).empty());
        }
    }
}

TEST_CASE("inner cycles") {
    CHECK(inner_cycles(cycle_graph(3)).empty());
    CHECK(inner_cycles(wheel(3)).empty());
    CHECK(!inner_cycles(complete(5)).empty());
    CHECK(!inner_cycles(complete_bipartite(3, 3)).empty());
}
