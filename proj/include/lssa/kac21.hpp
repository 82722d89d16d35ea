#pragma once

#include "lssa/product_table.hpp"

namespace lssa {

/* Dominant integral weight of sl(2|1): lambda(h) = i, lambda(z) = k with
 * h = E11 - E22 and z = E11 + E22 + 2 E33. */
struct Weight21 {
    int i;
    Scalar k;
};

/* (i,k) is typical iff k is not i and not -i-2. A symbolic k is typical. */
bool is_typical(const Weight21& w);

/* Highest weight of the unique proper submodule of an atypical Kac module:
 * (i,i) -> (i+1,i+1); (i,-i-2) -> (i-1,-i-1) for i > 0; (0,-2) -> (0,0).
 * Throws typical_weight on typical input. */
Weight21 t_minus(const Weight21& w);
/* Inverse of t_minus on the atypical chain. */
Weight21 t_plus(const Weight21& w);

/* The atypical weights indexed by Z: lambda_j = (j, j) for j >= 0 and
 * (-j-1, j-1) for j < 0; t_minus steps the index by one. */
Weight21 atypical_weight(int j);
int atypical_index(const Weight21& w);

/* Kac module K(i,k) of sl(2|1): induced from the (i+1)-dimensional
 * irreducible sl2-module with z acting by k, with an even highest weight
 * space. Basis monomials y1^a y2^b tensor u_j in the order
 * u_j, y1y2.u_j (even), then y1.u_j, y2.u_j (odd); z acts on the
 * y-degree-d piece by k + d. */
Representation kac_module(const AlgebraPtr& sl21, int i, const Scalar& k);

/* K(0,k)^{(2)}: induced from the two-dimensional module with trivial
 * sl2-action on which z acts by k plus a nilpotent shift u0 -> u1. */
Representation kac_double(const AlgebraPtr& sl21, const Scalar& k);

enum class Family { A, B, C };

std::string family_name(Family f);

/* Construction data of one family member: module M, base point a with
 * bijective ev_a, and the resulting product table. */
struct FamilyInstance {
    Family family;
    Representation module;
    Vec base_point;
    Cocycle cocycle;
    ProductTable table;
};

/* Family modules without the product (usable at excluded parameters too):
 * A: K(1,k); B: PiK(0,k1) + PiK(0,k2); C: PiK(0,k)^{(2)}. */
Representation family_module(const AlgebraPtr& g, Family fam, const std::vector<Scalar>& params);

/* Designated base point a = v0 + w1 of the family module. */
Vec family_base_point(const Representation& module, Family fam);

/* Full construction. Parameters may be symbolic (field parameters) or
 * rational; at an excluded rational value the evaluation map drops rank and
 * excluded_parameter is thrown. */
FamilyInstance build_family(const AlgebraPtr& g, Family fam, const std::vector<Scalar>& params);

ParamContextPtr context_A(); // Q(k)
ParamContextPtr context_B(); // Q(k1, k2)

} // namespace lssa
