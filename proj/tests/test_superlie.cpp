#include <doctest.h>

#include <random>

#include "lssa/algebra.hpp"

using namespace lssa;

namespace {

SuperMatrix random_homogeneous(std::mt19937_64& rng, int m, int n, Parity p) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    SuperMatrix x(m, n);
    for (int i = 0; i < m + n; ++i)
        for (int j = 0; j < m + n; ++j)
            if ((x.row_parity(i) + x.row_parity(j)) == p) x.at(i, j) = Scalar(Rational(coeff(rng)));
    return x;
}

int z_degree(const LieSuperalgebra& g, int i) {
    const auto& b = g.element(i);
    if (b.parity == Parity::even) return 0;
    // odd: upper block (row < m) has degree +1, lower block -1
    for (int r = 0; r < g.m() + g.n(); ++r)
        for (int c = 0; c < g.m() + g.n(); ++c)
            if (!b.mat.at(r, c).is_zero()) return r < g.m() ? 1 : -1;
    return 0;
}

} // namespace

TEST_CASE("algebra dimensions") {
    auto sl21 = LieSuperalgebra::make(AlgebraKind::sl, 2, 1);
    CHECK(sl21->space().superdim() == "4|4");

    for (int m = 1; m <= 2; ++m) {
        auto g = LieSuperalgebra::make(AlgebraKind::sl, m + 1, m);
        CHECK(g->space().even_dim() == 2 * m * (m + 1));
        CHECK(g->space().odd_dim() == 2 * m * (m + 1));
    }

    auto gl2 = LieSuperalgebra::make(AlgebraKind::gl, 2, 0);
    CHECK(gl2->space().superdim() == "4|0");
}

TEST_CASE("supercommutator") {
    // [E12, E21] = E11 - E22 in gl(2|1)
    SuperMatrix e12 = SuperMatrix::unit(2, 1, 1, 2);
    SuperMatrix e21 = SuperMatrix::unit(2, 1, 2, 1);
    CHECK(e12.supercommutator(e21) ==
          SuperMatrix::unit(2, 1, 1, 1) - SuperMatrix::unit(2, 1, 2, 2));

    // both odd: anticommutator. [E13, E31] = E11 + E33
    SuperMatrix e13 = SuperMatrix::unit(2, 1, 1, 3);
    SuperMatrix e31 = SuperMatrix::unit(2, 1, 3, 1);
    SuperMatrix expect = SuperMatrix::unit(2, 1, 1, 1) + SuperMatrix::unit(2, 1, 3, 3);
    CHECK(e13.supercommutator(e31) == expect);

    // ... which is (x3 + x4)/2 in the sl(2|1) basis
    auto g = LieSuperalgebra::make(AlgebraKind::sl, 2, 1);
    Vec coords = g->coordinates(expect);
    CHECK(coords[g->index_of("x3")] == Scalar(Rational(1, 2)));
    CHECK(coords[g->index_of("x4")] == Scalar(Rational(1, 2)));

    CHECK(e13.supercommutator(e13).is_zero());
    CHECK_THROWS_AS(e13.supercommutator(e12 + e13), mixed_parity_input);
}

TEST_CASE("supertrace") {
    int m = 3, n = 2;
    SuperMatrix id(m, n);
    for (int i = 0; i < m + n; ++i) id.at(i, i) = Scalar(1);
    CHECK(id.supertrace() == Scalar(m - n));

    auto g = LieSuperalgebra::make(AlgebraKind::sl, 2, 1);
    CHECK(g->element(g->index_of("x4")).mat.supertrace().is_zero());
    for (const auto& b : g->basis()) CHECK(b.mat.supertrace().is_zero());

    std::mt19937_64 rng(31);
    for (int t = 0; t < 100; ++t) {
        Parity pa = (t % 2 == 0) ? Parity::even : Parity::odd;
        Parity pb = (t % 3 == 0) ? Parity::even : Parity::odd;
        SuperMatrix x = random_homogeneous(rng, 2, 2, pa);
        SuperMatrix y = random_homogeneous(rng, 2, 2, pb);
        CHECK(x.supercommutator(y).supertrace().is_zero());
    }
}

TEST_CASE("neg supertranspose") {
    SuperMatrix e12 = SuperMatrix::unit(2, 1, 1, 2);
    CHECK(e12.neg_supertranspose() == -SuperMatrix::unit(2, 1, 2, 1));

    SuperMatrix e13 = SuperMatrix::unit(2, 1, 1, 3);
    CHECK(e13.neg_supertranspose().neg_supertranspose() == -e13);

    std::mt19937_64 rng(77);
    for (int t = 0; t < 100; ++t) {
        Parity pa = (t % 2 == 0) ? Parity::even : Parity::odd;
        Parity pb = (t % 5 < 2) ? Parity::even : Parity::odd;
        SuperMatrix x = random_homogeneous(rng, 2, 1, pa);
        SuperMatrix y = random_homogeneous(rng, 2, 1, pb);
        CHECK(x.neg_supertranspose().supercommutator(y.neg_supertranspose()) ==
              x.supercommutator(y).neg_supertranspose());
    }
}

TEST_CASE("neg supertranspose as basis map") {
    auto g = LieSuperalgebra::make(AlgebraKind::sl, 3, 1);
    Matrix theta = g->neg_supertranspose_map();
    Matrix theta2 = theta * theta;
    // involution on the even part, order 4 on the odd part
    for (int j = 0; j < g->dim(); ++j)
        for (int i = 0; i < g->dim(); ++i) {
            Scalar expect = (i == j) ? (g->parity(j) == Parity::even ? Scalar(1) : Scalar(-1))
                                     : Scalar(0);
            CHECK(theta2.at(i, j) == expect);
        }
    // root spaces map to their negatives
    for (int j = 0; j < g->dim(); ++j) {
        const auto& b = g->element(j);
        if (!b.root) continue;
        for (int i = 0; i < g->dim(); ++i) {
            if (theta.at(i, j).is_zero()) continue;
            REQUIRE(g->element(i).root.has_value());
            CHECK(g->element(i).root->sl_equal(-*b.root));
        }
    }
}

TEST_CASE("weight pairing") {
    int m = 2, n = 1;
    WeightMN a = WeightMN::eps(m, n, 1) - WeightMN::eps(m, n, 2);
    CHECK(weight_pairing(a, a) == Rational(2));

    WeightMN b = WeightMN::eps(m, n, 1) - WeightMN::delta(m, n, 1);
    CHECK(weight_pairing(b, b) == Rational(0)); // isotropic odd root

    // sl(2|1), lambda = (i, k) with i = 1, k = 5: (lambda + rho, eps2 - delta) = (k-i)/2
    auto g = LieSuperalgebra::make(AlgebraKind::sl, 2, 1);
    int i = 1, k = 5;
    WeightMN lambda(WeightMN({Rational(k + i, 2), Rational(k - i, 2)}, {Rational(0)}));
    WeightMN alpha = WeightMN::eps(m, n, 2) - WeightMN::delta(m, n, 1);
    CHECK(weight_pairing(lambda + g->rho(), alpha) == Rational(k - i, 2));
    CHECK(weight_pairing(lambda + g->rho(), WeightMN::eps(m, n, 1) - WeightMN::delta(m, n, 1)) ==
          Rational(k + i, 2) + Rational(1));

    // the pairing against roots does not depend on the chosen lift
    WeightMN rel = WeightMN({Rational(1), Rational(1)}, {Rational(-1)});
    CHECK(weight_pairing(lambda + rel.scaled(Rational(7)), alpha) == weight_pairing(lambda, alpha));
}

TEST_CASE("super Jacobi on all basis triples") {
    for (auto [kind, m, n] : {std::tuple{AlgebraKind::sl, 2, 1}, {AlgebraKind::sl, 3, 1},
                              {AlgebraKind::sl, 3, 2}, {AlgebraKind::gl, 2, 1}}) {
        auto g = LieSuperalgebra::make(kind, m, n);
        int d = g->dim();
        auto unitv = [&](int i) {
            Vec v(static_cast<size_t>(d));
            v[static_cast<size_t>(i)] = Scalar(1);
            return v;
        };
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y)
                for (int z = 0; z < d; ++z) {
                    auto sgn = [&](int a, int b) {
                        return Scalar(sign_factor(g->parity(a), g->parity(b)));
                    };
                    Vec t1 = scaled(bracket_apply(*g, unitv(x), bracket_apply(*g, unitv(y), unitv(z))),
                                    sgn(x, z));
                    Vec t2 = scaled(bracket_apply(*g, unitv(y), bracket_apply(*g, unitv(z), unitv(x))),
                                    sgn(y, x));
                    Vec t3 = scaled(bracket_apply(*g, unitv(z), bracket_apply(*g, unitv(x), unitv(y))),
                                    sgn(z, y));
                    CHECK(is_zero(t1 + t2 + t3));
                }
    }
}

TEST_CASE("[g,g] = g and Z-grading compatibility") {
    for (auto [m, n] : {std::pair{2, 1}, {3, 1}, {3, 2}}) {
        auto g = LieSuperalgebra::make(AlgebraKind::sl, m, n);
        SpanBuilder span(g->dim());
        for (int i = 0; i < g->dim(); ++i)
            for (int j = 0; j < g->dim(); ++j) {
                Vec v(static_cast<size_t>(g->dim()));
                for (const auto& [l, c] : g->bracket(i, j)) v[static_cast<size_t>(l)] = c;
                span.insert(v);
                // grading: [g_a, g_b] lands in g_{a+b}
                int want = z_degree(*g, i) + z_degree(*g, j);
                for (const auto& [l, c] : g->bracket(i, j)) {
                    (void)c;
                    CHECK(z_degree(*g, l) == want);
                }
            }
        CHECK(span.dim_span() == g->dim());
    }
}

TEST_CASE("structure constants respect parity and super skew-symmetry") {
    auto g = LieSuperalgebra::make(AlgebraKind::sl, 2, 1);
    for (int i = 0; i < g->dim(); ++i)
        for (int j = 0; j < g->dim(); ++j) {
            Parity want = g->parity(i) + g->parity(j);
            for (const auto& [l, c] : g->bracket(i, j)) {
                (void)c;
                CHECK(g->parity(l) == want);
            }
            // [x,y] = -(-1)^{|x||y|}[y,x]
            Vec a(static_cast<size_t>(g->dim())), b(static_cast<size_t>(g->dim()));
            for (const auto& [l, c] : g->bracket(i, j)) a[static_cast<size_t>(l)] = c;
            for (const auto& [l, c] : g->bracket(j, i)) b[static_cast<size_t>(l)] = c;
            CHECK(is_zero(a + scaled(b, Scalar(sign_factor(g->parity(i), g->parity(j))))));
        }
}

TEST_CASE("coordinates round trip and rejection") {
    auto g = LieSuperalgebra::make(AlgebraKind::sl, 2, 1);
    SuperMatrix x = g->element(2).mat + g->element(5).mat.scaled(Scalar(Rational(3, 2)));
    Vec coords = g->coordinates(x);
    CHECK(g->from_coordinates(coords) == x);
    // E11 is not traceless, so not in sl(2|1)
    CHECK_THROWS_AS(g->coordinates(SuperMatrix::unit(2, 1, 1, 1)), error);
}
