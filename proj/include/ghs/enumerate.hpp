#ifndef GHS_ENUMERATE_HPP
#define GHS_ENUMERATE_HPP

#include <functional>
#include <vector>

#include "ghs/multigraph.hpp"

namespace ghs {

// Exhaustive edge-list enumeration of connected multigraphs with 1..max_edges
// edges.  Edge lists are generated sorted (as (min,max) pairs) with vertices
// named in order of first appearance; every new edge touches an already-seen
// vertex, which forces connectivity.  Every connected multigraph appears
// under at least one such labeling; no isomorphism reduction is attempted.
void enumerate_connected_multigraphs(
    int max_edges, const std::function<void(const Multigraph&)>& fn);

// Oracle route for the same family: all sorted edge multisets over gap-free
// vertex sets, filtered to connected graphs without isolated vertices.
// Slower and with many more duplicate labelings; used for cross-checks.
void enumerate_connected_multigraphs_bruteforce(
    int max_edges, const std::function<void(const Multigraph&)>& fn);

// Canonical form under vertex relabeling: the lexicographically smallest
// sorted edge list over all vertex permutations, orientation dropped.
// Exponential in the vertex count; meant for small test graphs only.
std::vector<std::pair<int, int>> canonical_edge_list(const Multigraph& g);

}  // namespace ghs

#endif
