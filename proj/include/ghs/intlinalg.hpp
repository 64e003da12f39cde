#ifndef GHS_INTLINALG_HPP
#define GHS_INTLINALG_HPP

#include <vector>

#include <gmpxx.h>

namespace ghs {

using ZVec = std::vector<mpz_class>;
using ZMat = std::vector<ZVec>;  // row-major

// Rank over Q (fraction-free elimination).
int zmat_rank(ZMat m);

// Row-style Hermite normal form: returns the nonzero rows, each pivot
// positive, entries above a pivot reduced into [0, pivot).  The row span over
// Z is unchanged.
ZMat hnf_rows(ZMat m);

// Basis of the integer kernel {x : m x = 0}, as HNF rows.  The result is
// saturated: it generates all integer points of the rational kernel.
ZMat kernel(const ZMat& m, int cols);

// Saturation of the row span: basis of span_Q(rows) intersected with Z^cols.
ZMat saturate(const ZMat& rows, int cols);

// Whether v lies in the Z-span of the rows.
bool lattice_contains(const ZMat& rows, const ZVec& v);

// Whether two row families span the same lattice.
bool same_lattice(const ZMat& a, const ZMat& b);

}  // namespace ghs

#endif
