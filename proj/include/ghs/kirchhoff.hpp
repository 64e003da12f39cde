#ifndef GHS_KIRCHHOFF_HPP
#define GHS_KIRCHHOFF_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ghs/cycles.hpp"
#include "ghs/multigraph.hpp"
#include "ghs/multipoly.hpp"
#include "ghs/symbolic_matrix.hpp"

namespace ghs {

// Graph polynomial: sum over spanning trees of the product of the variables
// of edges outside the tree.  Homogeneous of degree h1 with unit
// coefficients; disconnected graphs give the zero polynomial.
MultiPoly kirchhoff(const Multigraph& g);

// Same polynomial by deletion-contraction on the highest-labeled edge that is
// neither a loop nor a bridge; a remaining loop contributes a factor X_e, a
// bridge only its contraction.
MultiPoly kirchhoff_dc(const Multigraph& g);

// Gram matrix of the edge bilinear forms in the given cycle basis:
// entry (i,j) = sum_e b_i[e] * b_j[e] * X_e.
SymbolicMatrix build_cycle_matrix(const Multigraph& g, const CycleBasis& b);

struct VerifyReport {
    bool ok = false;
    MultiPoly det;
    MultiPoly tree_sum;
};
VerifyReport verify_det_equals_kirchhoff(const Multigraph& g,
                                         const CycleBasis& b);

// The h diagonal entries span an h-dimensional space.
bool check_diagonal_independent(const SymbolicMatrix& m);

/**
 * A symmetric matrix rewritten so that every non-zero entry is either a fresh
 * variable Y_1..Y_ell or a linear form in those variables.  Fresh variables
 * are chosen greedily: the h diagonal entries first, then off-diagonal
 * entries by band (distance |j-i|, top to bottom within a band) whenever they
 * enlarge the span.  Dependent entries store an integer presentation
 * scale * entry = sum_k coeffs[k] * Y_k with scale > 0.
 */
struct NormalizedMatrix {
    enum class Kind { Zero, Fresh, Dependent };
    struct Entry {
        Kind kind = Kind::Zero;
        int fresh_index = 0;      // 1..ell when Fresh
        Int scale = 1;            // Dependent only
        std::vector<Int> coeffs;  // over Y_1..Y_ell, Dependent only
    };

    int h = 0;
    int n = 0;    // ambient variable count of the original ring
    int ell = 0;  // span dimension of all non-zero upper-triangle entries
    SymbolicMatrix original;
    std::vector<std::pair<int, int>> fresh_positions;  // position of Y_k
    std::vector<LinearForm> fresh_forms;  // Y_k as a form in the X variables
    std::map<std::pair<int, int>, Entry> upper;  // non-zero entries, i <= j

    // Count of non-zero upper-triangle entries.
    int nonzero_count() const { return static_cast<int>(upper.size()); }
    // Fresh variable indices occurring in entry (i,j).
    std::vector<int> entry_support(int i, int j) const;
    // The rewritten matrix over the ambient n variables (Y_k = variable k).
    // Dependent entries appear scaled by their recorded scale.
    SymbolicMatrix scaled_matrix() const;
};

NormalizedMatrix normalize(const SymbolicMatrix& m);

// Determinant of the normalized matrix in the Y variables, as an integer
// polynomial over the ambient n variables.  `scale` reports the factor by
// which the integer output exceeds the true (possibly rational) determinant;
// it is 1 whenever every dependent presentation has scale 1.
struct ExpandedDet {
    MultiPoly det;
    Int scale = 1;
};
ExpandedDet expanded_determinant(const NormalizedMatrix& nm, int max_dim = 8);

}  // namespace ghs

#endif
