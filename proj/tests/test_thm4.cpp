#include <doctest.h>

#include <random>

#include "lssa/kac21.hpp"
#include "lssa/thm4.hpp"

using namespace lssa;

TEST_CASE("module shape and base point") {
    auto g = LieSuperalgebra::make(AlgebraKind::sl, 2, 1);
    Representation u = thm4_module(g);
    CHECK(u.space.superdim() == "4|4");
    CHECK(check_representation(u));

    auto g32 = LieSuperalgebra::make(AlgebraKind::sl, 3, 2);
    Representation u2 = thm4_module(g32);
    CHECK(u2.space.superdim() == "12|12");
    CHECK(check_representation(u2));
}

TEST_CASE("m = 1: bijective evaluation map and the induced product") {
    Thm4Instance inst = build_thm4(1);
    CHECK(rank(inst.cocycle.q) == 8);
    CHECK(check_lssa(inst.table));
    CHECK(bracket_matches_algebra(inst.table));
}

TEST_CASE("kernel system at m = 1 and m = 2") {
    for (int m : {1, 2}) {
        KernelSystemReport rep = kernel_system_check(m);
        INFO(rep.details);
        CHECK(rep.pass);
        CHECK(rep.gl_kernel_dim == 1);
        CHECK(rep.supertrace_value == Rational(2 * m + 1));
    }
}

TEST_CASE("ev_a expansion matches the explicit coefficient formula") {
    // coefficient of e'_i xi'_s in ev_a(X) is a_{i,s+1} + d_{s,i-1} (the
    // second term only for i >= 2); of e''_i xi''_s it is a_{i,s} + d_{s,i}
    // for i <= m and a_{m+1,s} for i = m+1
    const int m = 2;
    auto g = LieSuperalgebra::make(AlgebraKind::sl, m + 1, m);
    Representation u = thm4_module(g);
    Vec a = thm4_base_point(u, m);

    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        Vec x(static_cast<size_t>(g->dim()));
        for (auto& e : x) e = Scalar(Rational(coeff(rng)));
        SuperMatrix xm = g->from_coordinates(x);
        Vec ev = u.act_coords(x, a);

        for (int i = 1; i <= m + 1; ++i)
            for (int s = 1; s <= m; ++s) {
                Scalar want = xm.at(i - 1, s + 1 - 1); // a_{i,s+1}
                if (i >= 2) want += xm.at(m + 1 + s - 1, m + 1 + (i - 1) - 1); // d_{s,i-1}
                int idx = u.space.index_of("e" + std::to_string(i) + "xi" + std::to_string(s) + "'");
                CHECK(ev[static_cast<size_t>(idx)] == want);

                Scalar want2 = xm.at(i - 1, s - 1); // a_{i,s}
                if (i <= m) want2 += xm.at(m + 1 + s - 1, m + 1 + i - 1); // d_{s,i}
                int idx2 =
                    u.space.index_of("e" + std::to_string(i) + "xi" + std::to_string(s) + "''");
                CHECK(ev[static_cast<size_t>(idx2)] == want2);
            }
    }
}

TEST_CASE("full verification for m = 1 and m = 2") {
    for (int m : {1, 2}) {
        Report rep = verify_thm4(m);
        for (const auto& c : rep.checks) {
            INFO(c.name, ": ", c.details);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("the m = 1 instance is the B(2,2) member of the classification") {
    Thm4Instance inst = build_thm4(1);
    auto g = inst.algebra;

    Representation mb = family_module(g, Family::B, {Scalar(2), Scalar(2)});
    auto iso = invertible_in_span(intertwiners(inst.module, mb));
    CHECK(iso.has_value());

    // and not the A- or C-family modules at matching parameters
    Representation ma = family_module(g, Family::A, {Scalar(2)});
    CHECK(max_rank_of_span(intertwiners(inst.module, ma)) < 8);
    Representation mc = family_module(g, Family::C, {Scalar(2)});
    CHECK(max_rank_of_span(intertwiners(inst.module, mc)) < 8);
}
