#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ghs/kirchhoff.hpp"
#include "ghs/multigraph.hpp"
#include "oracles.hpp"

using namespace ghs;

namespace {

LinearForm form(int n, std::vector<std::pair<int, int>> terms) {
    LinearForm f(n);
    for (auto [var, coeff] : terms) f.c[var - 1] = coeff;
    return f;
}

}  // namespace

TEST_CASE("kirchhoff polynomial basics") {
    CHECK(kirchhoff(banana(2)).to_string() == "x1 + x2");
    CHECK(kirchhoff(cycle_graph(3)).to_string() == "x1 + x2 + x3");
    MultiPoly w3 = kirchhoff(wheel(3));
    CHECK(w3.term_count() == 16);
    CHECK(*w3.homogeneous_degree() == 3);

    // Disconnected input gives zero.
    Multigraph disc;
    disc.vertices = 3;
    disc.edges = {{0, 1}};
    CHECK(kirchhoff(disc).is_zero());

    // Trees give 1, a single loop gives x1.
    CHECK(kirchhoff(banana(1)).to_string() == "1");
    Multigraph loop;
    loop.vertices = 1;
    loop.edges = {{0, 0}};
    CHECK(kirchhoff(loop).to_string() == "x1");
}

TEST_CASE("deletion-contraction route agrees") {
    CHECK(kirchhoff_dc(banana(2)) == kirchhoff(banana(2)));
    CHECK(kirchhoff_dc(wheel(4)) == kirchhoff(wheel(4)));
    Multigraph loop;
    loop.vertices = 1;
    loop.edges = {{0, 0}};
    CHECK(kirchhoff_dc(loop).to_string() == "x1");

    testing::Rng rng;
    for (int i = 0; i < 50; ++i) {
        Multigraph g = testing::random_connected_multigraph(rng, 5, 7);
        INFO(to_text(g));
        CHECK(kirchhoff_dc(g) == kirchhoff(g));
    }
}

TEST_CASE("subdivision identity") {
    testing::Rng rng;
    for (int i = 0; i < 40; ++i) {
        Multigraph g = testing::random_connected_multigraph(rng, 4, 6);
        MultiPoly p = kirchhoff(g);
        for (int e = 1; e <= g.edge_count(); ++e) {
            auto sub = subdivide_edge(g, e);
            std::vector<Int> f(sub.graph.edge_count(), 0);
            f[sub.e1 - 1] = 1;
            f[sub.e2 - 1] = 1;
            CHECK(p.substitute(e, f) == kirchhoff(sub.graph));
        }
    }
}

TEST_CASE("cycle matrix of the triangle") {
    Multigraph g = cycle_graph(3);
    CycleBasis b = cycle_basis(g, edge_bit(1) | edge_bit(2));
    SymbolicMatrix m = build_cycle_matrix(g, b);
    CHECK(m.dim() == 1);
    CHECK(m.at(1, 1).to_string() == "x1 + x2 + x3");
}

TEST_CASE("cycle matrix of the wheel reproduces the standard shape") {
    for (int h = 3; h <= 5; ++h) {
        Multigraph g = wheel(h);
        SymbolicMatrix m = build_cycle_matrix(g, wheel_face_basis(h));
        int n = 2 * h;
        for (int i = 1; i <= h; ++i) {
            // Diagonal: X_i + X_{i+1} + X_{h+i} with i+1 wrapping to 1.
            CHECK(m.at(i, i) ==
                  form(n, {{i, 1}, {i % h + 1, 1}, {h + i, 1}}));
        }
        for (int i = 1; i <= h; ++i)
            for (int j = i + 1; j <= h; ++j) {
                if (j == i + 1)
                    CHECK(m.at(i, j) == form(n, {{j, -1}}));
                else if (i == 1 && j == h)
                    CHECK(m.at(i, j) == form(n, {{1, -1}}));
                else
                    CHECK(m.at(i, j).is_zero());
            }
    }
}

TEST_CASE("cycle matrix of the banana from a fundamental basis") {
    Multigraph g = banana(3);
    SymbolicMatrix m = build_cycle_matrix(g, cycle_basis(g, edge_bit(1)));
    CHECK(m.at(1, 1) == form(3, {{1, 1}, {2, 1}}));
    CHECK(m.at(2, 2) == form(3, {{1, 1}, {3, 1}}));
    CHECK(m.at(1, 2) == form(3, {{1, 1}}));
}

TEST_CASE("invalid bases are rejected") {
    Multigraph g = cycle_graph(3);
    CycleBasis bad;
    bad.n = 3;
    bad.vectors = {{1, 1, 0}};  // not a cycle vector
    CHECK_THROWS_AS(build_cycle_matrix(g, bad), std::domain_error);
}

TEST_CASE("determinant equals the tree sum") {
    for (int h = 3; h <= 5; ++h) {
        auto r = verify_det_equals_kirchhoff(wheel(h), wheel_face_basis(h));
        CHECK(r.ok);
    }
    auto t = verify_det_equals_kirchhoff(
        cycle_graph(3), cycle_basis(cycle_graph(3), edge_bit(1) | edge_bit(2)));
    CHECK(t.ok);

    testing::Rng rng;
    for (int i = 0; i < 30; ++i) {
        Multigraph g = testing::random_connected_multigraph(rng, 5, 6);
        for (EdgeSet tree : spanning_trees(g)) {
            INFO(to_text(g));
            CHECK(verify_det_equals_kirchhoff(g, cycle_basis(g, tree)).ok);
        }
    }
}

TEST_CASE("the subdivided wheel matrix matches entry by entry") {
    Multigraph g = subdivided_wheel();
    SymbolicMatrix m = build_cycle_matrix(g, subdivided_wheel_basis());
    int n = 8;
    CHECK(m.at(1, 1) == form(n, {{2, 1}, {6, 1}, {8, 1}}));
    CHECK(m.at(2, 2) == form(n, {{1, 1}, {2, 1}, {4, 1}, {6, 1}, {7, 1}}));
    CHECK(m.at(3, 3) == form(n, {{1, 1}, {2, 1}, {4, 1}, {5, 1}}));
    CHECK(m.at(4, 4) == form(n, {{1, 1}, {2, 1}, {3, 1}}));
    CHECK(m.at(1, 2) == form(n, {{2, 1}, {6, 1}}));
    CHECK(m.at(1, 3) == form(n, {{2, -1}}));
    CHECK(m.at(1, 4) == form(n, {{2, 1}}));
    CHECK(m.at(2, 3) == form(n, {{1, -1}, {2, -1}, {4, -1}}));
    CHECK(m.at(2, 4) == form(n, {{1, 1}, {2, 1}}));
    CHECK(m.at(3, 4) == form(n, {{1, -1}, {2, -1}}));

    CHECK(verify_det_equals_kirchhoff(g, subdivided_wheel_basis()).ok);
}

TEST_CASE("diagonal independence check") {
    CHECK(check_diagonal_independent(
        build_cycle_matrix(wheel(3), wheel_face_basis(3))));
    Multigraph b4 = banana(4);
    CHECK(check_diagonal_independent(
        build_cycle_matrix(b4, cycle_basis(b4, edge_bit(1)))));

    SymbolicMatrix bad(2, 1);
    LinearForm f(1);
    f.c = {1};
    bad.set(1, 1, f);
    bad.set(2, 2, f);
    CHECK(!check_diagonal_independent(bad));
}

TEST_CASE("normalization of the wheel matrix") {
    NormalizedMatrix nm =
        normalize(build_cycle_matrix(wheel(3), wheel_face_basis(3)));
    CHECK(nm.h == 3);
    CHECK(nm.n == 6);
    CHECK(nm.ell == 6);
    CHECK(nm.nonzero_count() == 6);  // every non-zero entry is fresh
    for (const auto& [pos, e] : nm.upper)
        CHECK(e.kind == NormalizedMatrix::Kind::Fresh);
    // Band order: diagonals take Y1..Y3, then (1,2),(2,3) in the first band,
    // then the corner (1,3).
    CHECK(nm.fresh_positions[3] == std::pair{1, 2});
    CHECK(nm.fresh_positions[4] == std::pair{2, 3});
    CHECK(nm.fresh_positions[5] == std::pair{1, 3});
}

TEST_CASE("normalization of the subdivided wheel matrix") {
    Multigraph g = subdivided_wheel();
    NormalizedMatrix nm =
        normalize(build_cycle_matrix(g, subdivided_wheel_basis()));
    CHECK(nm.ell == 8);
    // Fresh variables: Y1..Y4 on the diagonal, then Y5 = (1,2), Y6 = (2,3),
    // Y7 = (3,4) on the first band, then Y8 = (1,3).
    CHECK(nm.fresh_positions ==
          std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 3}, {4, 4},
                                           {1, 2}, {2, 3}, {3, 4}, {1, 3}});
    // Dependent entries: (1,4) = -Y8 and (2,4) = -Y7, both with scale 1.
    const auto& e14 = nm.upper.at({1, 4});
    REQUIRE(e14.kind == NormalizedMatrix::Kind::Dependent);
    CHECK(e14.scale == 1);
    CHECK(e14.coeffs == ZVec{0, 0, 0, 0, 0, 0, 0, -1});
    const auto& e24 = nm.upper.at({2, 4});
    REQUIRE(e24.kind == NormalizedMatrix::Kind::Dependent);
    CHECK(e24.scale == 1);
    CHECK(e24.coeffs == ZVec{0, 0, 0, 0, 0, 0, -1, 0});
}

TEST_CASE("normalization of a diagonal matrix") {
    SymbolicMatrix d(2, 2);
    LinearForm f1(2), f2(2);
    f1.c = {1, 0};
    f2.c = {0, 1};
    d.set(1, 1, f1);
    d.set(2, 2, f2);
    NormalizedMatrix nm = normalize(d);
    CHECK(nm.ell == 2);
    CHECK(nm.nonzero_count() == 2);
}

TEST_CASE("normalize rejects dependent diagonals") {
    SymbolicMatrix bad(2, 2);
    LinearForm f(2);
    f.c = {1, 1};
    bad.set(1, 1, f);
    bad.set(2, 2, f);
    CHECK_THROWS_AS(normalize(bad), std::domain_error);
}

TEST_CASE("expanded determinant substitutes back to the original") {
    // For the wheel matrix the normalized determinant is the generic
    // symmetric determinant; substituting the recorded fresh forms back
    // recovers the graph polynomial.
    Multigraph g = wheel(3);
    SymbolicMatrix m = build_cycle_matrix(g, wheel_face_basis(3));
    NormalizedMatrix nm = normalize(m);
    ExpandedDet det = expanded_determinant(nm);
    CHECK(det.scale == 1);
    MultiPoly back = det.det;
    // Substitute Y_k -> fresh_forms[k] one variable at a time; the fresh
    // forms live over the original X variables, so shift them into fresh
    // slots first.  Here n = ell so reuse variables 1..6 via a temporary
    // doubling of the ring.
    int n = nm.n;
    MultiPoly wide(2 * n);
    for (const auto& [mon, c] : back.terms()) {
        Monomial w(2 * n, 0);
        for (int i = 0; i < n; ++i) w[i] = mon[i];
        wide.add_term(w, c);
    }
    for (int k = 0; k < nm.ell; ++k) {
        std::vector<Int> f(2 * n, 0);
        for (int i = 0; i < n; ++i) f[n + i] = nm.fresh_forms[k].c[i];
        wide = wide.substitute(k + 1, f);
    }
    MultiPoly original = kirchhoff(g);
    MultiPoly shifted(2 * n);
    for (const auto& [mon, c] : original.terms()) {
        Monomial w(2 * n, 0);
        for (int i = 0; i < n; ++i) w[n + i] = mon[i];
        shifted.add_term(w, c);
    }
    CHECK(wide == shifted);
}
