#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lssa/polynomial.hpp"

namespace lssa {

/* Ordered list of parameter names defining a rational-function field
 * Q(p_1, ..., p_r). Scalars carry a shared pointer to their context; a null
 * context means plain Q. */
class ParamContext {
public:
    explicit ParamContext(std::vector<std::string> names) : names_(std::move(names)) {}

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    int index_of(const std::string& name) const; // -1 if absent

    static std::shared_ptr<const ParamContext> make(std::vector<std::string> names);

private:
    std::vector<std::string> names_;
};

using ParamContextPtr = std::shared_ptr<const ParamContext>;

/* Element of Q or of Q(p_1, ..., p_r): a ratio of multivariate polynomials in
 * canonical form. Invariants: gcd(num, den) = 1 and den is monic under the
 * graded-lexicographic order; zero is 0/1. Immutable value type. */
class Scalar {
public:
    Scalar() : num_(0), den_(Polynomial::constant(0, 1)) {}
    Scalar(long n) : Scalar(Rational(n)) {}    // NOLINT: implicit by design
    Scalar(const Rational& r)                  // NOLINT: implicit by design
        : num_(Polynomial::constant(0, r)), den_(Polynomial::constant(0, 1)) {}
    Scalar(ParamContextPtr ctx, Polynomial num, Polynomial den);

    static Scalar param(const ParamContextPtr& ctx, int index);
    static Scalar param(const ParamContextPtr& ctx, const std::string& name);

    /* Parses an expression over integers and context parameters with
     * + - * / ^ and parentheses. Accepts the canonical grammar and ordinary
     * hand-written forms like "(k+2)/(2*(k+1))". */
    static Scalar parse(const ParamContextPtr& ctx, const std::string& text);

    const ParamContextPtr& context() const { return ctx_; }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /* Value of a constant scalar. */
    Rational rational_value() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /* Exact evaluation at a full binding of the context parameters; the
     * result is context-free. Throws denominator_vanishes when the binding
     * hits a pole. */
    Scalar substitute(const std::map<std::string, Rational>& bindings) const;

    /* Whether the denominator vanishes at the given full binding. */
    bool denominator_vanishes_at(const std::map<std::string, Rational>& bindings) const;

    /* Reinterpret in a context extending this one; old parameters keep their
     * names. var_map[i] gives the index in `target` of old variable i. */
    Scalar lift(const ParamContextPtr& target, const std::vector<int>& var_map) const;

    /* Canonical string, e.g. "(k^2+2*k+2)/(k+1)"; plain polynomials print
     * without the denominator. */
    std::string str() const;

private:
    ParamContextPtr ctx_; // null for plain rationals
    Polynomial num_, den_;

    void canonicalize();
    static const ParamContextPtr& merge_contexts(const Scalar& a, const Scalar& b);
    Polynomial promote(const Polynomial& p, const ParamContextPtr& target) const;
};

inline Scalar operator+(long a, const Scalar& b) { return Scalar(a) + b; }
inline Scalar operator-(long a, const Scalar& b) { return Scalar(a) - b; }
inline Scalar operator*(long a, const Scalar& b) { return Scalar(a) * b; }
inline Scalar operator/(long a, const Scalar& b) { return Scalar(a) / b; }

/* Builds the union context and lifts; used when mixing context-free scalars
 * into a parametric computation. */
Scalar lift_to(const Scalar& s, const ParamContextPtr& target);

} // namespace lssa
