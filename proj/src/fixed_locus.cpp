#include "ghs/fixed_locus.hpp"

#include <map>
#include <stdexcept>

#include "ghs/kirchhoff.hpp"

namespace ghs {

std::vector<FixedComponent> fixed_components(const WeightLattice& lattice) {
    int n = lattice.n;
    std::map<ZVec, std::vector<int>> groups;
    for (int i = 1; i <= n; ++i) {
        ZVec character;
        for (const auto& row : lattice.basis) character.push_back(row[i - 1]);
        groups[character].push_back(i);
    }
    std::vector<FixedComponent> out;
    for (const auto& [ch, coords] : groups) out.push_back({coords, ch});
    // Deterministic order: by smallest coordinate.
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.coordinates.front() < b.coordinates.front();
    });
    return out;
}

FixedLocusReport fixed_points_in_hypersurface(const Multigraph& g,
                                              const CycleBasis& b) {
    auto [h0, h1] = betti(g);
    if (h1 < 2) throw std::domain_error("requires h1 >= 2");
    SymbolicMatrix m = build_cycle_matrix(g, b);
    NormalizedMatrix nm = normalize(m);
    if (nm.nonzero_count() != nm.ell)
        throw std::domain_error("matrix entries not linearly independent");

    ExactRankResult torus = exact_diagonal_rank(nm);
    FixedLocusReport r;
    r.torus_rank = torus.rank;

    // The torus acts on the n ambient coordinates through the variable-weight
    // parts of the solution lattice.
    WeightLattice action;
    action.n = nm.n;
    ZMat rows;
    for (const auto& row : torus.lattice)
        rows.emplace_back(row.begin() + nm.h, row.end());
    action.basis = hnf_rows(rows);
    r.components = fixed_components(action);

    ExpandedDet det = expanded_determinant(nm);
    r.all_points_contained = true;
    for (const auto& comp : r.components) {
        bool point = comp.dimension() == 0;
        r.is_point.push_back(point);
        ZVec coords(nm.n, 0);
        for (int c : comp.coordinates) coords[c - 1] = 1;
        // For a point this evaluates det at the coordinate point; for a
        // bigger component it probes the all-ones point of the subspace.
        bool inside = det.det.eval(coords) == 0;
        r.contained.push_back(inside);
        if (!point || !inside) r.all_points_contained = false;
    }
    return r;
}

}  // namespace ghs
