#ifndef GHS_CYCLES_HPP
#define GHS_CYCLES_HPP

#include <string>
#include <vector>

#include "ghs/multigraph.hpp"

namespace ghs {

/**
 * An integer basis of the cycle space of a multigraph: h1 vectors in Z^n,
 * coordinates indexed by edge labels.  Every vector lies in the kernel of the
 * boundary map, is supported on a simple cycle with coefficients +-1, and the
 * family is independent over Q and over F2.
 */
struct CycleBasis {
    enum class Provenance { FundamentalFromTree, FaceBoundaries, UserSupplied };

    int n = 0;                             // edge count of the host graph
    std::vector<std::vector<int>> vectors; // h1 rows, each of length n
    Provenance provenance = Provenance::UserSupplied;

    int size() const { return static_cast<int>(vectors.size()); }
    EdgeSet support(int i) const;
};

// A simple cycle: its edge set plus one chosen traversal orientation.
struct OrientedCycle {
    EdgeSet support = 0;
    std::vector<int> vec;  // +-1 on support, 0 elsewhere
};

// True iff the support edges form a single simple cycle: connected, and every
// incident vertex has exactly two incident support edges (a loop counts
// twice).
bool is_simple_cycle_support(const Multigraph& g, EdgeSet support);

// Orientation vector (+-1 coefficients, kernel of the boundary map) for a
// simple cycle support; the lowest-labeled edge gets coefficient +1.
std::vector<int> orient_simple_cycle(const Multigraph& g, EdgeSet support);

// Fundamental cycles of a spanning tree: for every non-tree edge e in label
// order, the cycle through e and the tree path, signed so e has coefficient
// +1.  Throws "not a spanning tree" if t is not one.
CycleBasis cycle_basis(const Multigraph& g, EdgeSet tree);

// All simple cycles, ordered by (support size, support mask).  Throws
// "search bound exceeded" when the graph has more than max_edges edges.
std::vector<OrientedCycle> simple_cycles(const Multigraph& g,
                                         int max_edges = 20);

// Full validity check for a claimed basis; returns an empty string when the
// basis is valid and a reason otherwise.
std::string check_cycle_basis(const Multigraph& g, const CycleBasis& b);

// Cycle basis of the subdivided wheel graph whose matrix has diagonal
// supports {2,6,8}, {1,2,4,6,7}, {1,2,4,5}, {1,2,3}.
CycleBasis subdivided_wheel_basis();

// The triangle faces of wheel(h), oriented hub -> rim -> hub; cycle i is
// (+spoke_i, +rim_{h+i}, -spoke_{i+1}).
CycleBasis wheel_face_basis(int h);

}  // namespace ghs

#endif
