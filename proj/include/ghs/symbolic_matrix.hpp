#ifndef GHS_SYMBOLIC_MATRIX_HPP
#define GHS_SYMBOLIC_MATRIX_HPP

#include <vector>

#include "ghs/multipoly.hpp"

namespace ghs {

/**
 * Symmetric h x h matrix of linear forms in a common set of variables.
 * set() writes both (i,j) and (j,i); indices are 1-based.
 */
class SymbolicMatrix {
public:
    SymbolicMatrix() = default;
    SymbolicMatrix(int h, int nvars)
        : h_(h), nvars_(nvars), entries_(h * h, LinearForm(nvars)) {}

    int dim() const { return h_; }
    int nvars() const { return nvars_; }
    const LinearForm& at(int i, int j) const { return entries_[(i - 1) * h_ + (j - 1)]; }
    void set(int i, int j, const LinearForm& f);

    std::vector<LinearForm> diagonal() const;
    // Non-zero upper-triangle entries (i <= j), row-major.
    std::vector<LinearForm> upper_entries() const;

    bool operator==(const SymbolicMatrix&) const = default;

private:
    int h_ = 0;
    int nvars_ = 0;
    std::vector<LinearForm> entries_;
};

// Exact determinant by cofactor expansion with minors memoized on column
// subsets.  Throws when the dimension exceeds max_dim.  det of the empty
// matrix is 1.
MultiPoly determinant(const SymbolicMatrix& m, int max_dim = 8);

// Generic symmetric matrix: a fresh variable per upper-triangle position,
// diagonal positions first ((1,1)..(h,h)), then off-diagonal row-major.
SymbolicMatrix generic_symmetric_matrix(int h);

}  // namespace ghs

#endif
