#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghs/kirchhoff.hpp"
#include "ghs/multigraph.hpp"
#include "ghs/torus.hpp"
#include "oracles.hpp"

using namespace ghs;

namespace {

MultiPoly x(int n, int i) { return MultiPoly::variable(n, i); }

NormalizedMatrix normalized_wheel(int h) {
    return normalize(build_cycle_matrix(wheel(h), wheel_face_basis(h)));
}

NormalizedMatrix normalized_subdivided_wheel() {
    return normalize(
        build_cycle_matrix(subdivided_wheel(), subdivided_wheel_basis()));
}

}  // namespace

TEST_CASE("weight lattice of a conic") {
    MultiPoly f = x(3, 1) * x(3, 2) - x(3, 3) * x(3, 3);
    WeightLattice lat = weight_lattice(f);
    CHECK(lat.rank() == 2);
    CHECK(lat.contains({1, 1, 1}));
    CHECK(lat.contains({1, -1, 0}));
    CHECK(same_lattice(lat.basis, ZMat{{1, 1, 1}, {1, -1, 0}}));
    CHECK(projective_rank(f) == 1);
}

TEST_CASE("weight lattice of a single monomial is everything") {
    MultiPoly f = x(4, 1) * x(4, 1) * x(4, 1);
    CHECK(weight_lattice(f).rank() == 4);
}

TEST_CASE("weight lattice conventions differ by one for homogeneous input") {
    testing::Rng rng;
    int done = 0;
    while (done < 20) {
        MultiPoly f = kirchhoff(
            testing::random_connected_multigraph(rng, 4, 6));
        if (f.is_zero() || *f.homogeneous_degree() == 0) continue;
        ++done;
        CHECK(weight_lattice(f, WeightConvention::Constant).rank() ==
              weight_lattice(f, WeightConvention::Zero).rank() + 1);
    }
    CHECK_THROWS_AS(weight_lattice(MultiPoly(2)), std::domain_error);
}

TEST_CASE("generic symmetric determinant has the full diagonal lattice") {
    SymbolicMatrix m = generic_symmetric_matrix(3);
    MultiPoly det = determinant(m);
    WeightLattice lat = weight_lattice(det);
    CHECK(lat.rank() == 3);
    CHECK(same_lattice(lat.basis, lambda_h_lattice(3).basis));
    CHECK(projective_rank(det) == 2);
}

TEST_CASE("projective rank examples") {
    CHECK(projective_rank(kirchhoff(wheel(3))) == 2);
    CHECK(projective_rank(kirchhoff(cycle_graph(3))) == 0);
    CHECK_THROWS_AS(projective_rank(x(2, 1) + x(2, 1) * x(2, 2)),
                    std::domain_error);
}

TEST_CASE("lambda_h membership") {
    WeightSystem ok{2, {0, 2}, {1}, {}};
    CHECK(lambda_h_member(ok));
    WeightSystem all_ones{3, {1, 1, 1}, {1, 1, 1}, {}};
    CHECK(lambda_h_member(all_ones));
    WeightSystem bad{2, {0, 2}, {2}, {}};
    CHECK(!lambda_h_member(bad));
}

TEST_CASE("lambda_h lattice has rank h") {
    for (int h = 1; h <= 6; ++h) {
        WeightLattice lat = lambda_h_lattice(h);
        CHECK(lat.rank() == h);
        // The diagonal vector lies inside.
        ZVec delta(h + h * (h - 1) / 2, 1);
        CHECK(lat.contains(delta));
    }
}

TEST_CASE("weight system extension") {
    WeightSystem base{2, {0, 2}, {1}, {}};
    WeightSystem ext = extend_weight_system(base, Int(4));
    CHECK(ext.h == 3);
    CHECK(ext.diag == ZVec{4, 0, 2});
    CHECK(ext.off_diag == ZVec{2, 3, 1});
    CHECK(lambda_h_member(ext));

    // Default choice keeps membership too.
    WeightSystem def = extend_weight_system(base);
    CHECK(def.diag[0] == 2);
    CHECK(lambda_h_member(def));

    // All-ones extends to all-ones.
    WeightSystem ones{2, {1, 1}, {1}, {}};
    WeightSystem ones3 = extend_weight_system(ones, Int(1));
    CHECK(ones3.diag == ZVec{1, 1, 1});
    CHECK(ones3.off_diag == ZVec{1, 1, 1});

    // Restriction inverts the extension.
    WeightSystem back = restrict_weight_system(ext);
    CHECK(back.diag == base.diag);
    CHECK(back.off_diag == base.off_diag);

    CHECK_THROWS_AS(extend_weight_system(base, Int(1)), std::domain_error);
}

TEST_CASE("clusters of the subdivided wheel matrix") {
    ClusterPartition cp = clusters(normalized_subdivided_wheel());
    std::vector<int> sizes;
    for (const auto& c : cp.clusters) sizes.push_back(int(c.size()));
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{1, 1, 1, 1, 1, 1, 2, 2});
    // The two excessive positions are the dependent ones.
    CHECK(cp.excessive ==
          std::set<std::pair<int, int>>{{1, 4}, {2, 4}});
    CHECK(cp.excess == 4);
}

TEST_CASE("clusters of the wheel matrix are singletons") {
    ClusterPartition cp = clusters(normalized_wheel(3));
    CHECK(cp.clusters.size() == 6);
    for (const auto& c : cp.clusters) CHECK(c.size() == 1);
    CHECK(cp.excessive.empty());
    CHECK(cp.excess == 0);
}

TEST_CASE("clusters of the banana matrix") {
    Multigraph g = banana(4);
    NormalizedMatrix nm = normalize(build_cycle_matrix(g, cycle_basis(g, edge_bit(1))));
    ClusterPartition cp = clusters(nm);
    // Off-diagonal positions all carry the same variable: one cluster of 3.
    std::vector<int> sizes;
    for (const auto& c : cp.clusters) sizes.push_back(int(c.size()));
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{1, 1, 1, 3});
    CHECK(cp.excessive.size() == 2);
    CHECK(cp.excess == 4);
}

TEST_CASE("rank lower bound") {
    CHECK(rank_lower_bound(normalized_wheel(3)) == 2);
    CHECK(rank_lower_bound(normalized_subdivided_wheel()) == 0);
    NormalizedMatrix gen3 = normalize(generic_symmetric_matrix(3));
    CHECK(rank_lower_bound(gen3) == 2);
}

TEST_CASE("exact diagonal rank of the subdivided wheel") {
    ExactRankResult r = exact_diagonal_rank(normalized_subdivided_wheel());
    CHECK(r.rank == 1);
    CHECK(r.contains_variable_weights({3, -1, -1, -1, 1, -1, -1, 1}));
    // The full 12-vector with the matching diagonal is a lattice member.
    CHECK(lattice_contains(r.lattice,
                           {3, -1, -1, -1, 3, -1, -1, -1, 1, -1, -1, 1}));
    // The weight vector really fixes the determinant hypersurface.
    ExpandedDet det = expanded_determinant(normalized_subdivided_wheel());
    CHECK(det.scale == 1);
    CHECK(verify_action(det.det, {3, -1, -1, -1, 1, -1, -1, 1}));
}

TEST_CASE("exact diagonal rank of wheels and diagonal matrices") {
    CHECK(exact_diagonal_rank(normalized_wheel(3)).rank == 2);
    CHECK(exact_diagonal_rank(normalized_wheel(4)).rank == 3);
    CHECK(exact_diagonal_rank(normalized_wheel(5)).rank == 4);

    for (int h = 2; h <= 4; ++h) {
        SymbolicMatrix d(h, h);
        for (int i = 1; i <= h; ++i) {
            LinearForm f(h);
            f.c[i - 1] = 1;
            d.set(i, i, f);
        }
        CHECK(exact_diagonal_rank(normalize(d)).rank == h - 1);
    }
}

TEST_CASE("free variables outside the matrix add to both bound and rank") {
    // Two disjoint triangle cycles joined by a bridge: the bridge variable
    // appears in no entry.
    Multigraph g;
    g.vertices = 6;
    g.edges = {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}};
    auto trees = spanning_trees(g);
    NormalizedMatrix nm = normalize(build_cycle_matrix(g, cycle_basis(g, trees.front())));
    CHECK(nm.n == 7);
    CHECK(nm.ell == 2);
    CHECK(rank_lower_bound(nm) == 6);
    CHECK(exact_diagonal_rank(nm).rank == 6);
    CHECK(projective_rank(expanded_determinant(nm).det) == 6);
}

TEST_CASE("verify action") {
    ExpandedDet det = expanded_determinant(normalized_subdivided_wheel());
    CHECK(verify_action(det.det, ZVec(8, 1)));
    CHECK(!verify_action(x(3, 1) * x(3, 2) - x(3, 3) * x(3, 3), {1, 0, 0}));
}

TEST_CASE("weight lattice saturation") {
    testing::Rng rng;
    int done = 0;
    while (done < 15) {
        MultiPoly f = kirchhoff(testing::random_connected_multigraph(rng, 4, 6));
        if (f.is_zero()) continue;
        ++done;
        WeightLattice lat = weight_lattice(f);
        if (lat.basis.empty()) continue;
        ZMat doubled = lat.basis;
        for (auto& v : doubled[0]) v *= 2;
        CHECK(same_lattice(saturate(doubled, lat.n), lat.basis));
    }
}

TEST_CASE("bound, exact rank and full lattice rank form a chain") {
    testing::Rng rng;
    int done = 0;
    while (done < 25) {
        Multigraph g = testing::random_connected_multigraph(rng, 5, 6);
        auto [h0, h1] = betti(g);
        if (h1 < 1 || h1 > 4) continue;
        ++done;
        auto trees = spanning_trees(g);
        NormalizedMatrix nm =
            normalize(build_cycle_matrix(g, cycle_basis(g, trees.front())));
        int bound = rank_lower_bound(nm);
        ExactRankResult ex = exact_diagonal_rank(nm);
        int full = projective_rank(expanded_determinant(nm).det);
        INFO(to_text(g));
        CHECK(bound <= ex.rank);
        CHECK(ex.rank <= full);
        // Every basis system preserves the determinant hypersurface.
        ExpandedDet det = expanded_determinant(nm);
        for (const auto& ws : ex.basis)
            CHECK(verify_action(det.det, ws.var_weights));
    }
}

TEST_CASE("independent-entry matrices satisfy the exact sequence ranks") {
    // For matrices whose non-zero entries are all independent, the lattice of
    // the expanded determinant has rank (n - ell) + (h - 1) + 1.
    for (int h = 3; h <= 5; ++h) {
        NormalizedMatrix nm = normalized_wheel(h);
        REQUIRE(nm.nonzero_count() == nm.ell);
        WeightLattice lat = weight_lattice(expanded_determinant(nm).det);
        CHECK(lat.rank() == (nm.n - nm.ell) + (nm.h - 1) + 1);
        CHECK(exact_diagonal_rank(nm).rank >= nm.h - 1 + nm.n - nm.ell);
    }
}
