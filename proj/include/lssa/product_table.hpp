#pragma once

#include "lssa/rep.hpp"

namespace lssa {

/* Candidate left-symmetric product on the underlying space of a Lie
 * superalgebra, stored through its left-multiplication matrices:
 * column j of left_mult[i] holds the coordinates of b_i * b_j.
 * Construction enforces parity additivity of the coefficients. */
class ProductTable {
public:
    ProductTable(AlgebraPtr algebra, std::vector<Matrix> left_mult);

    const AlgebraPtr& algebra() const { return algebra_; }
    int dim() const { return algebra_->dim(); }
    const Matrix& left_mult(int i) const { return left_mult_[static_cast<size_t>(i)]; }
    const std::vector<Matrix>& left_mult() const { return left_mult_; }

    /* Coordinates of b_i * b_j. */
    Vec product(int i, int j) const { return left_mult_[static_cast<size_t>(i)].column(j); }
    const Scalar& coeff(int i, int j, int l) const {
        return left_mult_[static_cast<size_t>(i)].at(l, j);
    }

    /* u * v for arbitrary coordinate vectors. */
    Vec multiply(const Vec& u, const Vec& v) const;

    ProductTable substitute(const std::map<std::string, Rational>& bindings) const;

    bool operator==(const ProductTable& o) const { return left_mult_ == o.left_mult_; }
    bool operator!=(const ProductTable& o) const { return !(*this == o); }

private:
    AlgebraPtr algebra_;
    std::vector<Matrix> left_mult_;
};

/* Left-symmetry axiom, exactly, over all ordered basis triples:
 * (x.y).z - x.(y.z) = (-1)^{|x||y|} ((y.x).z - y.(x.z)).
 * Checked in the equivalent operator form per basis pair; large tables with
 * constant coefficients go through a scaled integer path. */
bool check_lssa(const ProductTable& p);

/* Table of x.y - (-1)^{|x||y|} y.x in coordinates. */
std::vector<std::vector<Vec>> associated_bracket(const ProductTable& p);

/* Whether the associated bracket coincides with the algebra's structure
 * constants. */
bool bracket_matches_algebra(const ProductTable& p);

/* Left regular representation rho(x)y = x.y; requires check_lssa. */
Representation left_regular(const ProductTable& p);

/* Right multiplication operator gamma(x) = rho(x) - ad_x of a basis
 * element. */
Matrix right_mul(const ProductTable& p, int i);

/* Even 1-cocycle (f, q): q maps the algebra to the module of f and satisfies
 * q([x,y]) = f(x)q(y) - (-1)^{|x||y|} f(y)q(x). */
struct Cocycle {
    Representation rep;
    Matrix q; // dim V x dim g
};

bool check_cocycle(const Cocycle& c);

/* ev_a(x) = f(x)a for an even base point a. */
Cocycle evaluation_map(const Representation& f, const Vec& a);

/* The linear family {ev_a columns : a in the even part}, as matrices
 * M(t) = sum t_i M_i suitable for max_rank_over_affine_family; entry 0 is
 * the zero offset. */
std::vector<Matrix> evaluation_family(const Representation& f);

/* x.y = q^{-1}(f(x) q(y)); throws not_bijective when q is singular. */
ProductTable lssa_from_cocycle(const Cocycle& c);

/* Equivalence of cocycles under the witness pair (phi, T):
 * f2(x) = phi^{-1} f1(T x) phi and q2 = phi^{-1} q1 T. */
bool check_equivalence(const Cocycle& c1, const Cocycle& c2, const Matrix& phi, const Matrix& t);

/* Solution set of x.e = x over the even part of e; empty when no right
 * identity exists. The homogeneous part is nonempty only for degenerate
 * tables. */
struct RightIdentitySet {
    bool exists = false;
    Vec point;                         // one solution, coordinates in g
    std::vector<Vec> homogeneous;      // solution-space directions
    bool unique() const { return exists && homogeneous.empty(); }
};

RightIdentitySet find_right_identities(const ProductTable& p);

/* Solves rho(e) = id; no solution for any LSSA on a simple algebra. */
std::optional<Vec> find_left_unit(const ProductTable& p);

} // namespace lssa
