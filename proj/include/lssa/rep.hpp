#pragma once

#include "lssa/algebra.hpp"

namespace lssa {

/* Finite-dimensional module over a LieSuperalgebra: one even action matrix
 * per algebra basis element, in the even-then-odd basis order of `space`. */
struct Representation {
    AlgebraPtr algebra;
    SuperSpace space;
    std::vector<Matrix> action;

    int dim() const { return space.dim(); }
    const Matrix& act(int i) const { return action[static_cast<size_t>(i)]; }

    /* Apply the image of the algebra element with coordinates g to v. */
    Vec act_coords(const Vec& g, const Vec& v) const;

    Representation substitute(const std::map<std::string, Rational>& bindings) const;

    bool operator==(const Representation& o) const {
        return space == o.space && action == o.action;
    }
};

/* Exact bracket-compatibility check on all basis pairs:
 * f([x,y]) = f(x)f(y) - (-1)^{|x||y|} f(y)f(x). */
bool check_representation(const Representation& r);

/* Every action matrix of an even (odd) element preserves (swaps) the
 * grading. */
bool check_action_parities(const Representation& r);

Representation standard_rep(const AlgebraPtr& g);
Representation trivial_rep(const AlgebraPtr& g);        // 1|0
Representation trivial_odd_rep(const AlgebraPtr& g);    // 0|1
Representation adjoint_rep(const AlgebraPtr& g);
Representation dual_rep(const Representation& r);
Representation parity_shift(const Representation& r);
Representation direct_sum(const std::vector<Representation>& parts,
                          std::vector<std::string> tags = {});
Representation tensor_product(const Representation& a, const Representation& b);
Representation exterior_square(const Representation& r);
Representation symmetric_square(const Representation& r);

/* Twist by an algebra automorphism given as a coordinate matrix
 * (columns = images of basis elements); verifies the automorphism property
 * and throws not_an_automorphism otherwise. */
Representation twist(const Representation& r, const Matrix& theta);

/* Basis of the space of even linear maps phi: V1 -> V2 with
 * phi f1(x) = f2(x) phi for all basis x. */
std::vector<Matrix> intertwiners(const Representation& r1, const Representation& r2);

/* Maximum rank over the linear span of the given matrices, certified
 * symbolically; < dim means no invertible element exists at all. */
int max_rank_of_span(const std::vector<Matrix>& mats);

/* Deterministic search for an invertible element in the span; returns
 * nullopt when max_rank_of_span < dim. */
std::optional<Matrix> invertible_in_span(const std::vector<Matrix>& mats);

struct GeneratedSubmodule {
    std::vector<Vec> basis;
    int even_dim = 0, odd_dim = 0;
    std::string superdim() const {
        return std::to_string(even_dim) + "|" + std::to_string(odd_dim);
    }
};

/* Smallest action-invariant subspace containing the homogeneous vector v. */
GeneratedSubmodule submodule_generated(const Representation& r, const Vec& v);

struct WeightVector {
    std::vector<Scalar> weight; // eigenvalues under the Cartan basis elements
    Parity parity;
    Vec vector;
};

/* Vectors annihilated by all positive even root vectors, organized by the
 * diagonal weight. Requires the Cartan action matrices to be diagonal in the
 * module basis. */
std::vector<WeightVector> even_highest_vectors(const Representation& r);

/* As above, but annihilated by the positive odd root vectors as well;
 * locates highest weight and singular vectors of the full superalgebra. */
std::vector<WeightVector> super_highest_vectors(const Representation& r);

/* Unipotent module map exp(c f(x)) for a nilpotent action f(x); exact since
 * the series terminates. */
Matrix unipotent_exp(const Matrix& a, const Scalar& c);

} // namespace lssa
