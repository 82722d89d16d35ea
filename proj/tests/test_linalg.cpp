#include <doctest.h>

#include <random>

#include "lssa/matrix.hpp"

using namespace lssa;

namespace {

Matrix from_ints(const std::vector<std::vector<long>>& rows) {
    Matrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m.at(static_cast<int>(i), static_cast<int>(j)) = Scalar(Rational(rows[i][j]));
    return m;
}

Matrix random_matrix(std::mt19937_64& rng, const ParamContextPtr& ctx, int r, int c) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> pick(0, 3);
    Matrix m(r, c);
    Scalar k = Scalar::param(ctx, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            Scalar v(Rational(coeff(rng)));
            if (pick(rng) == 0) v = v * k + Rational(coeff(rng));
            m.at(i, j) = v;
        }
    return m;
}

} // namespace

TEST_CASE("rank basics") {
    CHECK(rank(Matrix::identity(8)) == 8);
    CHECK(rank(Matrix(3, 4)) == 0);
    CHECK(rank(from_ints({{1, 1}, {1, 1}})) == 1);
}

TEST_CASE("kernel basics") {
    CHECK(kernel(Matrix::identity(5)).empty());

    auto ker = kernel(from_ints({{1, 1}, {1, 1}}));
    REQUIRE(ker.size() == 1);
    // span{(1,-1)} up to normalization
    CHECK(ker[0][0] * Scalar(-1) == ker[0][1]);
}

TEST_CASE("solve basics") {
    Vec b{Scalar(4), Scalar(9)};
    auto x = solve(from_ints({{2, 0}, {0, 3}}), b);
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Scalar(2));
    CHECK((*x)[1] == Scalar(3));

    CHECK(solve(Matrix::identity(2), b).value() == b);

    // inconsistent
    CHECK(!solve(from_ints({{1, 1}, {1, 1}}), Vec{Scalar(0), Scalar(1)}).has_value());
}

TEST_CASE("inverse and linear solver") {
    Matrix m = from_ints({{2, 1}, {1, 1}});
    Matrix inv = inverse(m);
    CHECK(m * inv == Matrix::identity(2));
    LinearSolver ls(m);
    Vec b{Scalar(3), Scalar(2)};
    Vec x = ls.solve(b);
    CHECK(m.apply(x) == b);
    CHECK_THROWS_AS(inverse(from_ints({{1, 1}, {1, 1}})), not_invertible);
}

TEST_CASE("rank-nullity, exactness of kernel and solve (random, seeded)") {
    auto ctx = ParamContext::make({"k"});
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> dim(1, 6);
    for (int iter = 0; iter < 60; ++iter) {
        int r = dim(rng), c = dim(rng);
        Matrix m = random_matrix(rng, ctx, r, c);
        int rk = rank(m);
        auto ker = kernel(m);
        CHECK(rk + static_cast<int>(ker.size()) == c);
        for (const auto& v : ker) CHECK(is_zero(m.apply(v)));

        Vec x(static_cast<size_t>(c));
        std::uniform_int_distribution<int> coeff(-3, 3);
        for (auto& e : x) e = Scalar(Rational(coeff(rng)));
        Vec b = m.apply(x);
        auto sol = solve(m, b);
        REQUIRE(sol.has_value());
        CHECK(m.apply(*sol) == b);
    }
}

TEST_CASE("specialization can only drop rank (random, seeded)") {
    auto ctx = ParamContext::make({"k"});
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> dim(1, 5);
    std::uniform_int_distribution<int> pt(-5, 5);
    for (int iter = 0; iter < 40; ++iter) {
        Matrix m = random_matrix(rng, ctx, dim(rng), dim(rng));
        int symbolic = rank(m);
        std::map<std::string, Rational> at{{"k", Rational(pt(rng))}};
        bool pole = false;
        for (int i = 0; i < m.rows() && !pole; ++i)
            for (int j = 0; j < m.cols() && !pole; ++j)
                if (m.at(i, j).denominator_vanishes_at(at)) pole = true;
        if (pole) continue;
        CHECK(rank(m.substitute(at)) <= symbolic);
    }
}

TEST_CASE("max rank over affine family") {
    // constant family
    CHECK(max_rank_over_affine_family({Matrix::identity(2)}) == 2);

    // 0 + t1*E11 + t2*E22 is generically invertible
    Matrix z(2, 2);
    Matrix e11(2, 2), e22(2, 2);
    e11.at(0, 0) = Scalar(1);
    e22.at(1, 1) = Scalar(1);
    CHECK(max_rank_over_affine_family({z, e11, e22}) == 2);

    // but every member of 0 + t*(rank-1 matrix) has rank <= 1
    CHECK(max_rank_over_affine_family({z, from_ints({{1, 1}, {1, 1}})}) == 1);
}

TEST_CASE("span builder") {
    SpanBuilder sb(3);
    CHECK(sb.insert(Vec{Scalar(1), Scalar(2), Scalar(0)}));
    CHECK(!sb.insert(Vec{Scalar(2), Scalar(4), Scalar(0)}));
    CHECK(sb.insert(Vec{Scalar(0), Scalar(1), Scalar(1)}));
    CHECK(sb.dim_span() == 2);
    CHECK(sb.contains(Vec{Scalar(1), Scalar(3), Scalar(1)}));
    CHECK(!sb.contains(Vec{Scalar(0), Scalar(0), Scalar(1)}));
}
