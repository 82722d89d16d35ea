/* Assorted per-operation examples that do not fit the larger suites. */

#include <doctest.h>

#include "lssa/appendix.hpp"

using namespace lssa;

namespace {

AlgebraPtr sl21() {
    static AlgebraPtr g = LieSuperalgebra::make(AlgebraKind::sl, 2, 1);
    return g;
}

} // namespace

TEST_CASE("rank of the defining action list of family A, assembled by hand") {
    // the eight image vectors of ev_a in the basis
    // {v0, v1, w0, w1, E32v0, E21E32v0, E21^2E32v0, E31v0}, written down
    // independently of the module machinery, have full rank over Q(k)
    auto ctx = context_A();
    Scalar k = Scalar::param(ctx, 0);
    Matrix q(8, 8);
    auto set = [&](int col, int row, Scalar v) { q.at(row, col) = std::move(v); };
    // columns in the order x1..x4, y1..y4 = E12, E21, h, z, E31, E32, E13, E23
    set(0, 2, Scalar(1));                       // E12.a = w0
    set(1, 1, Scalar(1));                       // E21.a = v1
    set(2, 0, Scalar(1)), set(2, 3, Scalar(-1)); // h.a = v0 - w1
    set(3, 0, k), set(3, 3, k + 2);             // z.a = k v0 + (k+2) w1
    set(4, 7, Scalar(1));                       // E31.a = E31 v0
    set(5, 4, Scalar(1));                       // E32.a = E32 v0
    set(6, 5, (k + 1) / Scalar(2));             // E13.a
    set(6, 7, (k - 1) / Scalar(2));
    set(7, 6, (k + 3) / Scalar(4));             // E23.a
    CHECK(rank(q) == 8);
    // ... and rank drops exactly at the excluded values
    CHECK(rank(q.substitute({{"k", Rational(-1)}})) < 8);
    CHECK(rank(q.substitute({{"k", Rational(-3)}})) < 8);
    CHECK(rank(q.substitute({{"k", Rational(0)}})) == 8);
}

TEST_CASE("z-eigenvalue of the even part of PiK(0,k)") {
    auto g = sl21();
    Scalar k = Scalar::param(context_A(), 0);
    Representation pk = parity_shift(kac_module(g, 0, k));
    const Matrix& z = pk.act(g->index_of("x4"));
    for (int i = 0; i < pk.space.even_dim(); ++i) CHECK(z.at(i, i) == k + 1);
}

TEST_CASE("the trivial module is fixed by the -st twist") {
    auto g = sl21();
    Representation v0 = trivial_rep(g);
    CHECK(twist(v0, g->neg_supertranspose_map()) == v0);
}

TEST_CASE("highest weight vector of a typical Kac module generates everything") {
    auto g = sl21();
    Representation kac = kac_module(g, 1, Scalar(5));
    Vec hw(static_cast<size_t>(kac.dim()));
    hw[static_cast<size_t>(kac.space.index_of("u0"))] = Scalar(1);
    CHECK(submodule_generated(kac, hw).superdim() == "4|4");
}

TEST_CASE("even highest vectors of the standard module") {
    auto g = LieSuperalgebra::make(AlgebraKind::sl, 3, 1);
    Representation s = standard_rep(g);
    int even_count = 0;
    for (const auto& hv : even_highest_vectors(s)) {
        if (hv.parity != Parity::even) continue;
        ++even_count;
        // the highest vector is e1
        CHECK(!hv.vector[0].is_zero());
    }
    CHECK(even_count == 1);
}

TEST_CASE("(left_regular(table B), id) is a cocycle") {
    auto g = sl21();
    ProductTable b = reference_table(g, Family::B);
    Representation rho = left_regular(b);
    CHECK(check_cocycle(Cocycle{rho, Matrix::identity(g->dim())}));
}

TEST_CASE("zeroing the odd part of ev_a breaks the cocycle identity for A_0") {
    auto g = sl21();
    FamilyInstance f = build_family(g, Family::A, {Scalar(0)});
    Matrix q = f.cocycle.q;
    for (int j = 0; j < g->dim(); ++j)
        if (g->parity(j) == Parity::odd)
            for (int i = 0; i < q.rows(); ++i) q.at(i, j) = Scalar();
    CHECK(!check_cocycle(Cocycle{f.module, q}));
}

TEST_CASE("a singular square cocycle cannot be inverted") {
    auto g = sl21();
    Representation ad = adjoint_rep(g);
    Cocycle zero = evaluation_map(ad, Vec(static_cast<size_t>(g->dim())));
    CHECK_THROWS_AS(lssa_from_cocycle(zero), not_bijective);
}

TEST_CASE("cocycles of distinct family modules are never equivalent") {
    auto g = sl21();
    FamilyInstance fa = build_family(g, Family::A, {Scalar(0)});
    FamilyInstance fb = build_family(g, Family::B, {Scalar(1), Scalar(1)});
    // sampled witnesses: phi = identity / a permutation-free scaling,
    // T = identity / the -st map
    std::vector<Matrix> phis = {Matrix::identity(8), Matrix::identity(8).scaled(Scalar(2))};
    std::vector<Matrix> ts = {Matrix::identity(8), g->neg_supertranspose_map()};
    for (const auto& phi : phis)
        for (const auto& t : ts) CHECK(!check_equivalence(fa.cocycle, fb.cocycle, phi, t));
}

TEST_CASE("no left unit for the B and C family products") {
    auto g = sl21();
    CHECK(!find_left_unit(build_family(g, Family::B, {Scalar(1), Scalar(2)}).table).has_value());
    CHECK(!find_left_unit(build_family(g, Family::C, {Scalar(2)}).table).has_value());
}

TEST_CASE("Phi(Psi(L)) = L for the theorem-4 product at m = 1") {
    Thm4Instance inst = build_thm4(1);
    Representation rho = left_regular(inst.table);
    ProductTable back =
        lssa_from_cocycle(Cocycle{rho, Matrix::identity(inst.algebra->dim())});
    CHECK(back == inst.table);
}

TEST_CASE("left regular representation of the zero product is zero") {
    auto g1 = LieSuperalgebra::make(AlgebraKind::gl, 1, 0);
    ProductTable zero(g1, {Matrix(1, 1)});
    CHECK(check_lssa(zero));
    Representation rho = left_regular(zero);
    CHECK(rho.act(0).is_zero());
}
