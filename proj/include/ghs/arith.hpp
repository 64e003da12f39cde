#ifndef GHS_ARITH_HPP
#define GHS_ARITH_HPP

#include <optional>
#include <string>
#include <vector>

#include "ghs/multigraph.hpp"
#include "ghs/multipoly.hpp"

namespace ghs {

struct CountRecord {
    std::string graph_digest;
    unsigned q = 0;
    Int affine_count;      // zeros of the graph polynomial in A^n(F_q)
    Int projective_count;  // (affine - 1) / (q - 1)
};

struct CountOptions {
    // Cap on q^n, the number of evaluations.
    double work_bound = 1e8;
    // Enumerate points in reverse row-major order (consistency check).
    bool reversed = false;
    // Evaluate through the spanning-tree sum instead of the stored
    // polynomial (independent route; same counts).
    bool tree_route = false;
};

// Exhaustive count of zeros of the graph polynomial over F_q.  q must be
// prime and q^n within the work bound.
CountRecord count_points(const Multigraph& g, unsigned q,
                         const CountOptions& opt = {});

// Lagrange interpolation of the projective counts on all records except the
// largest prime; returns the coefficient list (lowest degree first) iff the
// interpolant has integer coefficients and predicts the held-out prime
// exactly.  Requires >= 2 records with pairwise distinct primes.
std::optional<std::vector<Int>> polynomial_fit(
    const std::vector<CountRecord>& records);

}  // namespace ghs

#endif
