#pragma once

#include <optional>
#include <vector>

#include "lssa/scalar.hpp"

namespace lssa {

using Vec = std::vector<Scalar>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec scaled(const Vec& v, const Scalar& c);
bool is_zero(const Vec& v);

/* Dense matrix of Scalars, row-major. All algorithms use exact arithmetic
 * with deterministic pivoting (first nonzero entry in column order). */
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * size_t(cols)) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int r, int c) { return e_[size_t(r) * size_t(cols_) + size_t(c)]; }
    const Scalar& at(int r, int c) const { return e_[size_t(r) * size_t(cols_) + size_t(c)]; }

    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const; // skips zero entries
    Matrix operator-() const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;

    Vec apply(const Vec& v) const;    // matrix * column vector
    Vec column(int c) const;
    void set_column(int c, const Vec& v);
    Vec row(int r) const;

    Matrix substitute(const std::map<std::string, Rational>& bindings) const;
    Matrix lifted(const ParamContextPtr& target) const;

    /* Supertrace-style helpers live with the callers; plain trace here. */
    Scalar trace() const;

private:
    int rows_, cols_;
    std::vector<Scalar> e_;
};

int rank(const Matrix& m);

/* Basis of the right null space; dim = cols - rank. Deterministic:
 * free variables in column order, each basis vector has a 1 in its free slot. */
std::vector<Vec> kernel(const Matrix& m);

/* One exact solution of m * x = b, or nullopt when the system is
 * inconsistent. Unique when rank(m) = cols(m). */
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/* Inverse of a square matrix; throws not_invertible. */
Matrix inverse(const Matrix& m);

/* Factors a square invertible matrix once so that many systems m*x = b can
 * be solved cheaply; throws not_invertible on construction. */
class LinearSolver {
public:
    explicit LinearSolver(const Matrix& m) : inv_(inverse(m)) {}
    Vec solve(const Vec& b) const { return inv_.apply(b); }
    const Matrix& inverse_matrix() const { return inv_; }

private:
    Matrix inv_;
};

/* Maximum rank of B_0 + t_1 B_1 + ... + t_d B_d as the t_i range over the
 * field, certified symbolically: the t_i become fresh parameters and the
 * rank is computed over the extended rational-function field. Specialization
 * can only drop rank, so this bounds every member of the family. */
int max_rank_over_affine_family(const std::vector<Matrix>& family);

/* Incremental row-reduced span of vectors; used for submodule generation and
 * independence tests. */
class SpanBuilder {
public:
    explicit SpanBuilder(int dim) : dim_(dim) {}

    /* Returns true when v enlarged the span. */
    bool insert(const Vec& v);
    bool contains(const Vec& v) const;
    int dim_span() const { return static_cast<int>(rows_.size()); }
    const std::vector<Vec>& basis() const { return rows_; }

private:
    int dim_;
    std::vector<Vec> rows_;   // reduced, each with a leading 1
    std::vector<int> pivots_; // pivot column of each row
    Vec reduce(Vec v) const;
};

} // namespace lssa
