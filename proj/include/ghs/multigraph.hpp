#ifndef GHS_MULTIGRAPH_HPP
#define GHS_MULTIGRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ghs {

using Int = mpz_class;

// Edge subset as a bitmask over edge labels; bit (e-1) stands for the edge
// labeled e.  Label-based operations keep graphs with up to kMaxEdges edges.
using EdgeSet = std::uint32_t;
inline constexpr int kMaxEdges = 30;

inline bool edge_in(EdgeSet s, int label) { return (s >> (label - 1)) & 1u; }
inline EdgeSet edge_bit(int label) { return EdgeSet{1} << (label - 1); }
inline int edge_count(EdgeSet s) { return __builtin_popcount(s); }

/**
 * A finite multigraph with oriented, labeled edges.  Vertices are 0-based
 * indices; edge labels are implicitly 1..n in storage order.  Loops and
 * parallel edges are allowed.  Orientation is source -> target.
 */
struct Multigraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;  // (source, target)

    int edge_count() const { return static_cast<int>(edges.size()); }
    int source(int label) const { return edges[label - 1].first; }
    int target(int label) const { return edges[label - 1].second; }
    bool is_loop(int label) const { return source(label) == target(label); }

    // Throws std::invalid_argument if an endpoint is out of range.
    void validate() const;

    bool operator==(const Multigraph&) const = default;
};

// Generators.  Labeling conventions are fixed so downstream matrices come out
// in a reproducible shape.
//
// wheel(h): hub vertex 0, rim vertices 1..h.  Labels 1..h are the spokes
// (hub -> rim i), labels h+1..2h the rim edges (rim i -> rim i+1, wrapping).
Multigraph wheel(int h);
// banana(m): two vertices joined by m parallel edges 0 -> 1.
Multigraph banana(int m);
// cycle_graph(k): the k-cycle 0 -> 1 -> ... -> k-1 -> 0.
Multigraph cycle_graph(int k);
Multigraph complete(int n);
Multigraph complete_bipartite(int a, int b);
// Two triangles sharing one edge (K4 minus an edge).
Multigraph diamond();
// Two triangles sharing exactly one vertex.
Multigraph figure_eight();
// A wheel with three spokes carrying one extra subdivided triangle: five
// vertices, eight edges, first Betti number 4.  The edge labeling is chosen
// so the cycle basis from subdivided_wheel_basis() (see cycles.hpp) yields
// the standard symmetric matrix of this graph.
Multigraph subdivided_wheel();

// (h0, h1): connected components and independent cycles, h1 = E - V + h0.
std::pair<int, int> betti(const Multigraph& g);
int component_count(const Multigraph& g);
bool is_connected(const Multigraph& g);

// Connected, no cut vertex, and loop-free unless the graph is one single
// loop.  This is the class where polygon gluings can reach every edge.
bool is_two_connected(const Multigraph& g);

// Incidence matrix of the edge boundary map: column e carries +1 at the
// source and -1 at the target of e; a loop gives a zero column.
std::vector<std::vector<int>> boundary_matrix(const Multigraph& g);

// All spanning trees as edge subsets, in lexicographic order of their sorted
// label sets.  Loops never occur in a tree.  Throws if g is not connected.
std::vector<EdgeSet> spanning_trees(const Multigraph& g);

// Number of spanning trees by the matrix-tree determinant of a reduced
// Laplacian; independent of the enumeration above.
Int count_spanning_trees(const Multigraph& g);

bool is_spanning_tree(const Multigraph& g, EdgeSet t);
bool is_bridge(const Multigraph& g, int label);

// Edge surgery.  Survivor labels keep their relative order and are compacted
// to 1..n'; old_to_new[e] gives the new label of old edge e (0 = removed).
struct SurgeryResult {
    Multigraph graph;
    std::vector<int> old_to_new;  // index 1..n
};
SurgeryResult delete_edge(const Multigraph& g, int label);
SurgeryResult contract_edge(const Multigraph& g, int label);  // rejects loops

// Subdivision replaces edge e by e1 = e (same label, source -> new vertex)
// and e2 = n+1 (new vertex -> target); all other labels are unchanged.
struct SubdivideResult {
    Multigraph graph;
    int e1 = 0;
    int e2 = 0;
};
SubdivideResult subdivide_edge(const Multigraph& g, int label);

// Text format: one "u v" edge per line, 0-based vertices, '#' comments and
// blank lines ignored; the i-th edge line is the edge labeled i.  JSON form:
// {"vertices": k, "edges": [[u,v], ...]}.  parse_graph() auto-detects JSON
// by a leading '{'.
Multigraph parse_graph(const std::string& text);
std::string to_text(const Multigraph& g);
std::string to_json(const Multigraph& g);

// FNV-1a digest of the canonical JSON serialization, as fixed-width hex.
std::string graph_digest(const Multigraph& g);

}  // namespace ghs

#endif
