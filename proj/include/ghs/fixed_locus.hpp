#ifndef GHS_FIXED_LOCUS_HPP
#define GHS_FIXED_LOCUS_HPP

#include <vector>

#include "ghs/cycles.hpp"
#include "ghs/multigraph.hpp"
#include "ghs/torus.hpp"

namespace ghs {

/**
 * One component of the fixed locus of a diagonal torus on projective space:
 * the coordinate subspace on the indices sharing one character (the column of
 * values across the lattice basis rows).  Components partition 1..n.
 */
struct FixedComponent {
    std::vector<int> coordinates;  // 1-based, ascending
    ZVec character;                // one value per lattice basis row
    int dimension() const { return static_cast<int>(coordinates.size()) - 1; }
};

std::vector<FixedComponent> fixed_components(const WeightLattice& lattice);

/**
 * Fixed points of the conjugation torus on the hypersurface of a graph
 * matrix whose non-zero upper entries are independent.  Containment of each
 * fixed point in the hypersurface is evaluated on the determinant in
 * normalized coordinates.
 */
struct FixedLocusReport {
    int torus_rank = 0;
    std::vector<FixedComponent> components;
    std::vector<bool> is_point;       // per component
    std::vector<bool> contained;      // per component, det vanishes there
    bool all_points_contained = false;
};

// Requires h1 >= 2 and independent matrix entries; throws std::domain_error
// otherwise.
FixedLocusReport fixed_points_in_hypersurface(const Multigraph& g,
                                              const CycleBasis& b);

}  // namespace ghs

#endif
