#include <doctest.h>

#include "lssa/appendix.hpp"

using namespace lssa;

namespace {

AlgebraPtr sl21() {
    static AlgebraPtr g = LieSuperalgebra::make(AlgebraKind::sl, 2, 1);
    return g;
}

} // namespace

TEST_CASE("reference tables are left-symmetric and recover the brackets") {
    auto g = sl21();
    for (Family f : {Family::A, Family::B, Family::C}) {
        ProductTable t = reference_table(g, f);
        CHECK(check_lssa(t));
        CHECK(bracket_matches_algebra(t));
    }
}

TEST_CASE("full symbolic appendix reproduction: 192 products") {
    auto g = sl21();
    AppendixReport rep = verify_appendix(g);
    CHECK(rep.a.total == 64);
    CHECK(rep.b.total == 64);
    CHECK(rep.c.total == 64);
    CHECK(rep.total_matches() == 192);
    for (const auto& m : rep.a.mismatches) MESSAGE("A: ", m);
    for (const auto& m : rep.b.mismatches) MESSAGE("B: ", m);
    for (const auto& m : rep.c.mismatches) MESSAGE("C: ", m);
    CHECK(rep.all());
}

TEST_CASE("harness self-test: a corrupted entry is reported exactly once") {
    auto g = sl21();
    Scalar k = Scalar::param(context_A(), 0);
    FamilyInstance fa = build_family(g, Family::A, {k});
    ProductTable ref = reference_table(g, Family::A);

    std::vector<Matrix> lm = ref.left_mult();
    int i = g->index_of("x1"), j = g->index_of("x2");
    // zero the x1*x2 entry
    for (int l = 0; l < g->dim(); ++l) lm[static_cast<size_t>(i)].at(l, j) = Scalar();
    ProductTable corrupted(g, std::move(lm));

    TableComparison cmp = compare_tables(fa.table, corrupted);
    CHECK(cmp.total == 64);
    CHECK(cmp.matches == 63);
    REQUIRE(cmp.mismatches.size() == 1);
    CHECK(cmp.mismatches[0].substr(0, 5) == "x1*x2");

    // and the corrupted table is no longer left-symmetric
    CHECK(!check_lssa(corrupted));
}

TEST_CASE("specialized comparison at rational parameters") {
    auto g = sl21();
    CHECK(verify_table_at(g, Family::A, {{"k", Rational(0)}}).all());
    CHECK(verify_table_at(g, Family::B, {{"k1", Rational(1)}, {"k2", Rational(2)}}).all());
    CHECK(verify_table_at(g, Family::C, {{"k", Rational(2)}}).all());
    CHECK_THROWS_AS(verify_table_at(g, Family::A, {{"k", Rational(-1)}}), denominator_vanishes);
}

TEST_CASE("negst isomorphism relations") {
    Report rep = verify_negst_relations(sl21());
    for (const auto& c : rep.checks) {
        INFO(c.name, ": ", c.details);
        CHECK(c.pass);
    }
}

TEST_CASE("degenerate parameter boundaries") {
    Report rep = verify_degenerate_failures(sl21());
    for (const auto& c : rep.checks) {
        INFO(c.name, ": ", c.details);
        CHECK(c.pass);
    }
}

TEST_CASE("kac dimension grid") {
    Report rep = verify_kac_grid(sl21());
    for (const auto& c : rep.checks) {
        INFO(c.name, ": ", c.details);
        CHECK(c.pass);
    }
}
