#pragma once

#include <string>
#include <vector>

#include "lssa/rational.hpp"

namespace lssa {

/* Multivariate polynomial over Q in a fixed number of variables.
 *
 * Terms are kept sorted in descending graded-lexicographic order (total
 * degree first, then lexicographic on the exponent vector), with no zero
 * coefficients. This makes equality a plain term-by-term comparison and
 * gives deterministic canonical strings. */
class Polynomial {
public:
    struct Term {
        std::vector<int> exps; // length == nvars
        Rational coeff;
    };

    explicit Polynomial(int nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(int nvars, Rational c);
    static Polynomial variable(int nvars, int index);

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /* Value of a constant polynomial; zero polynomial gives 0. */
    Rational constant_value() const;

    /* Total degree; -1 for the zero polynomial. */
    int degree() const;
    int degree_in(int var) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /* Leading coefficient under the graded-lexicographic order. */
    const Rational& leading_coeff() const;
    /* Divide all coefficients so the leading one becomes 1. */
    Polynomial monic() const;

    Rational evaluate(const std::vector<Rational>& point) const;

    /* Partially evaluate: variables with bound[i] set are replaced by
     * point[i]; the result lives in the same variable space. */
    Polynomial evaluate_partial(const std::vector<bool>& bound,
                                const std::vector<Rational>& point) const;

    /* Reinterpret in a larger variable space; var_map[i] is the new index of
     * old variable i. */
    Polynomial remap(int new_nvars, const std::vector<int>& var_map) const;

    /* Exact division; throws if the division is not exact. */
    Polynomial divide_exact(const Polynomial& d) const;

    /* Monic gcd. gcd(0, p) = monic(p); gcd of constants is 1. */
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    std::string str(const std::vector<std::string>& names) const;

    /* Descending graded-lexicographic comparison of exponent vectors. */
    static bool exps_after(const std::vector<int>& a, const std::vector<int>& b);

private:
    friend class PolyBuilder;
    int nvars_;
    std::vector<Term> terms_;

    void sort_and_combine();
};

} // namespace lssa
