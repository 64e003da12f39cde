#ifndef GHS_TORUS_HPP
#define GHS_TORUS_HPP

#include <optional>
#include <set>
#include <vector>

#include "ghs/intlinalg.hpp"
#include "ghs/kirchhoff.hpp"
#include "ghs/multipoly.hpp"

namespace ghs {

enum class WeightConvention {
    // Vectors whose pairing with every exponent vector takes one common
    // value; the all-ones vector always qualifies for homogeneous input.
    Constant,
    // Vectors pairing to zero with every exponent vector.
    Zero,
};

/**
 * A saturated integer lattice of diagonal coordinate weights, stored as HNF
 * basis rows.  rank() - 1 bounds the dimension of a faithful diagonal torus
 * on the projective hypersurface when the convention is Constant.
 */
struct WeightLattice {
    int n = 0;
    ZMat basis;  // HNF rows
    WeightConvention convention = WeightConvention::Constant;

    int rank() const { return static_cast<int>(basis.size()); }
    bool contains(const ZVec& v) const { return lattice_contains(basis, v); }
};

// Weight lattice of a non-zero polynomial under the chosen convention.
WeightLattice weight_lattice(const MultiPoly& f,
                             WeightConvention conv = WeightConvention::Constant);

// rank(constant-weight lattice) - 1: the maximal rank of a faithful diagonal
// torus action on {f = 0} in projective space, in the given coordinates.
// Requires f homogeneous and non-zero.
int projective_rank(const MultiPoly& f);

/**
 * Diagonal weights of an h x h symmetric-matrix action together with weights
 * for ambient variables and/or the off-diagonal entry positions.  Only the
 * fields a given operation documents are meaningful; unused ones stay empty.
 */
struct WeightSystem {
    int h = 0;
    ZVec diag;         // omega_11..omega_hh
    ZVec off_diag;     // entry weights omega_ij, i < j, row-major
    ZVec var_weights;  // ambient variable weights w_1..w_n
};

// Membership in the lattice of symmetric weight matrices with
// 2*omega_ij = omega_ii + omega_jj, checked on diag + off_diag.
bool lambda_h_member(const WeightSystem& ws);

// That lattice itself, on h + h(h-1)/2 coordinates ordered diagonal-first
// then off-diagonal row-major.  Its rank is h.
WeightLattice lambda_h_lattice(int h);

// Extend an (h-1)-system to an h-system by prepending a row/column: the new
// off-diagonal weights are (omega_11 + omega_ii)/2.  omega_11 defaults to
// omega_22 + 2 and must match the parity of the existing diagonal.
WeightSystem extend_weight_system(const WeightSystem& ws,
                                  std::optional<Int> omega11 = std::nullopt);
// Drop the first row/column again.
WeightSystem restrict_weight_system(const WeightSystem& ws);

/**
 * Clusters of the non-zero upper-triangle positions of a normalized matrix:
 * two positions are equivalent when their entries share a variable
 * (transitive closure).  A dependent position is excessive when its form
 * contains neither of its two diagonal variables.  The excess is
 * sum(|cluster| - 1) + #excessive.
 */
struct ClusterPartition {
    std::vector<std::vector<std::pair<int, int>>> clusters;
    std::set<std::pair<int, int>> excessive;
    int excess = 0;
};
ClusterPartition clusters(const NormalizedMatrix& nm);

// max(0, h - 1 + n - ell - excess): a lower bound for the rank of a faithful
// diagonal torus on the determinant hypersurface in normalized coordinates.
int rank_lower_bound(const NormalizedMatrix& nm);

/**
 * Exact rank of the diagonal torus in normalized coordinates obtained from
 * conjugation weights: integer solutions of 2*w_k = omega_ii + omega_jj over
 * all (variable k, position (i,j)) incidences, with unconstrained weights for
 * ambient variables outside the matrix.  rank = lattice rank - 1 (global
 * scaling is quotiented out).
 */
struct ExactRankResult {
    int rank = 0;
    ZMat lattice;  // HNF rows over (omega_1..omega_h, w_1..w_n)
    std::vector<WeightSystem> basis;
    // Whether `vw` (length n) occurs as the variable-weight part of a lattice
    // member.
    bool contains_variable_weights(const ZVec& vw) const;
};
ExactRankResult exact_diagonal_rank(const NormalizedMatrix& nm);

// True iff the pairing of `weights` with every exponent vector of f is one
// common value, i.e. the one-parameter diagonal action with these weights
// maps {f = 0} to itself.
bool verify_action(const MultiPoly& f, const ZVec& weights);

}  // namespace ghs

#endif
