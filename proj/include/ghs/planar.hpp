#ifndef GHS_PLANAR_HPP
#define GHS_PLANAR_HPP

#include <optional>
#include <string>
#include <vector>

#include "ghs/cycles.hpp"
#include "ghs/multigraph.hpp"

namespace ghs {

// First Betti number of the subgraph induced by an edge subset (vertices are
// the endpoints of the chosen edges).
int h1_of_subgraph(const Multigraph& g, EdgeSet edges);

// Whether the edges of `s` form one connected subgraph (false for empty s).
bool edges_connected(const Multigraph& g, EdgeSet s);

struct PlanarityResult {
    bool planar = false;
    // h1 simple cycles, independent over F2, covering each edge at most
    // twice; empty when not planar (or when h1 = 0).
    std::vector<OrientedCycle> witness;
};

// Cycle-space planarity test: planar iff such a family of simple cycles
// exists.  Throws "search bound exceeded" above max_edges edges.
PlanarityResult is_planar(const Multigraph& g, int max_edges = 16);

/**
 * A decomposition of the graph into simple cycles glued one after another
 * along non-empty connected proper edge subsets, no edge glued twice.
 * interfaces[i] is the edge set along which polygons[i] attaches (empty for
 * i = 0); glued_edges is their union.
 */
struct PolygonalDecomposition {
    std::vector<OrientedCycle> polygons;
    std::vector<EdgeSet> interfaces;
    EdgeSet glued_edges = 0;
};

struct DecompositionOptions {
    int max_edges = 16;
    int max_results = 4096;     // cap on distinct decompositions
    long max_states = 1 << 20;  // cap on search states
};

// All decompositions up to polygon-multiset equivalence, in a deterministic
// order.  Throws "search bound exceeded" when a cap is hit.
std::vector<PolygonalDecomposition> polygonal_decompositions(
    const Multigraph& g, const DecompositionOptions& opt = {});

struct StarReport {
    bool is_polygonal = false;
    bool is_planar = false;
    bool is_star = false;
    // Route-specific witnesses.
    std::optional<PolygonalDecomposition> witness_decomposition;
    std::optional<PolygonalDecomposition> failing_decomposition;  // cyclic E0
    std::optional<CycleBasis> witness_basis;   // independent matrix entries
    std::string note;
};

// Star by the defining property: polygonal, and every decomposition has an
// acyclic glued-edge set.
StarReport is_star_graph_definitional(const Multigraph& g,
                                      const DecompositionOptions& opt = {});

struct MatrixStarOptions {
    int max_edges = 16;
    long max_bases = 200000;  // cap on candidate cycle bases examined
};

// Star by the matrix criterion: some cycle basis of simple cycles makes the
// non-zero upper-triangle entries of the cycle matrix linearly independent.
StarReport is_star_graph_matrix(const Multigraph& g,
                                const MatrixStarOptions& opt = {});

// Simple cycles D admitting a completion to a cycle basis in which D equals
// the F2-sum of its edge intersections with the other basis cycles.
std::vector<EdgeSet> inner_cycles(const Multigraph& g,
                                  const MatrixStarOptions& opt = {});

}  // namespace ghs

#endif
