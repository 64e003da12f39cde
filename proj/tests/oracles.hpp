// Test-only reference implementations, kept independent of the library code
// paths they are used to check.
#ifndef GHS_TESTS_ORACLES_HPP
#define GHS_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "ghs/multigraph.hpp"
#include "ghs/multipoly.hpp"
#include "ghs/symbolic_matrix.hpp"

namespace ghs::testing {

// Determinant as the signed sum over all permutations.
inline MultiPoly permanent_style_det(const SymbolicMatrix& m) {
    int h = m.dim();
    MultiPoly acc(m.nvars());
    std::vector<int> perm(h);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int sign = 1;
        for (int i = 0; i < h; ++i)
            for (int j = i + 1; j < h; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        MultiPoly term = MultiPoly::constant(m.nvars(), sign);
        for (int i = 0; i < h; ++i)
            term = term * m.at(i + 1, perm[i] + 1).to_poly();
        acc += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (h == 0) acc = MultiPoly::constant(m.nvars(), 1);
    return acc;
}

// Deterministic PRNG so failures reproduce.
struct Rng {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next() % (hi - lo + 1));
    }
};

inline MultiPoly random_poly(Rng& rng, int nvars, int max_terms, int max_deg,
                             int max_coeff) {
    MultiPoly p(nvars);
    int terms = rng.range(0, max_terms);
    for (int t = 0; t < terms; ++t) {
        Monomial m(nvars, 0);
        for (int i = 0; i < nvars; ++i)
            m[i] = static_cast<std::uint8_t>(rng.range(0, max_deg));
        p.add_term(m, rng.range(-max_coeff, max_coeff));
    }
    return p;
}

inline Multigraph random_connected_multigraph(Rng& rng, int max_vertices,
                                              int max_edges) {
    while (true) {
        Multigraph g;
        g.vertices = rng.range(1, max_vertices);
        int m = rng.range(1, max_edges);
        for (int e = 0; e < m; ++e)
            g.edges.emplace_back(rng.range(0, g.vertices - 1),
                                 rng.range(0, g.vertices - 1));
        if (is_connected(g)) return g;
    }
}

}  // namespace ghs::testing

#endif
