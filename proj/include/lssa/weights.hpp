#pragma once

#include <string>
#include <vector>

#include "lssa/rational.hpp"

namespace lssa {

/* Weight of gl(m|n)/sl(m|n): coefficients of eps_1..eps_m and delta_1..delta_n.
 *
 * For sl(m|n) weights are functionals modulo the relation
 * eps_1 + ... + eps_m = delta_1 + ... + delta_n. Coefficients are stored as
 * plain gl-lifts (the pairing below depends on the lift); equality modulo the
 * relation goes through canonical(), which eliminates the delta_n
 * coefficient. */
class WeightMN {
public:
    WeightMN(int m, int n)
        : eps_(static_cast<size_t>(m), Rational(0)), delta_(static_cast<size_t>(n), Rational(0)) {}
    WeightMN(std::vector<Rational> eps, std::vector<Rational> delta)
        : eps_(std::move(eps)), delta_(std::move(delta)) {}

    static WeightMN eps(int m, int n, int i) { // 1-based
        WeightMN w(m, n);
        w.eps_[static_cast<size_t>(i - 1)] = Rational(1);
        return w;
    }
    static WeightMN delta(int m, int n, int j) {
        WeightMN w(m, n);
        w.delta_[static_cast<size_t>(j - 1)] = Rational(1);
        return w;
    }

    int m() const { return static_cast<int>(eps_.size()); }
    int n() const { return static_cast<int>(delta_.size()); }
    const std::vector<Rational>& eps_coeffs() const { return eps_; }
    const std::vector<Rational>& delta_coeffs() const { return delta_; }

    WeightMN operator+(const WeightMN& o) const {
        WeightMN r = *this;
        for (size_t i = 0; i < eps_.size(); ++i) r.eps_[i] += o.eps_[i];
        for (size_t j = 0; j < delta_.size(); ++j) r.delta_[j] += o.delta_[j];
        return r;
    }
    WeightMN operator-(const WeightMN& o) const {
        WeightMN r = *this;
        for (size_t i = 0; i < eps_.size(); ++i) r.eps_[i] -= o.eps_[i];
        for (size_t j = 0; j < delta_.size(); ++j) r.delta_[j] -= o.delta_[j];
        return r;
    }
    WeightMN operator-() const {
        WeightMN r(m(), n());
        return r - *this;
    }
    WeightMN scaled(const Rational& c) const {
        WeightMN r = *this;
        for (auto& e : r.eps_) e *= c;
        for (auto& d : r.delta_) d *= c;
        return r;
    }

    /* Exact equality of the stored lifts. */
    bool operator==(const WeightMN& o) const { return eps_ == o.eps_ && delta_ == o.delta_; }
    bool operator!=(const WeightMN& o) const { return !(*this == o); }

    /* Representative with the delta_n coefficient reduced to zero against the
     * spanning relation; use for sl-weight equality. */
    WeightMN canonical() const {
        if (delta_.empty()) return *this;
        Rational c = delta_.back();
        WeightMN r = *this;
        for (auto& e : r.eps_) e += c;
        for (auto& d : r.delta_) d -= c;
        return r;
    }
    bool sl_equal(const WeightMN& o) const { return canonical() == o.canonical(); }

    bool is_zero() const {
        for (const auto& e : eps_)
            if (!e.is_zero()) return false;
        for (const auto& d : delta_)
            if (!d.is_zero()) return false;
        return true;
    }

    std::string str() const {
        std::string s;
        auto app = [&](const Rational& c, const std::string& sym) {
            if (c.is_zero()) return;
            if (!s.empty() && c.sign() > 0) s += "+";
            if (c == Rational(-1))
                s += "-";
            else if (!c.is_one())
                s += c.str() + "*";
            s += sym;
        };
        for (size_t i = 0; i < eps_.size(); ++i) app(eps_[i], "e" + std::to_string(i + 1));
        for (size_t j = 0; j < delta_.size(); ++j) app(delta_[j], "d" + std::to_string(j + 1));
        return s.empty() ? "0" : s;
    }

private:
    std::vector<Rational> eps_, delta_;
};

/* Bilinear form with (eps_i, eps_i) = 1, (delta_j, delta_j) = -1 and all
 * other generator pairings zero, evaluated on the stored lifts. */
inline Rational weight_pairing(const WeightMN& a, const WeightMN& b) {
    Rational r(0);
    for (size_t i = 0; i < a.eps_coeffs().size(); ++i)
        r += a.eps_coeffs()[i] * b.eps_coeffs()[i];
    for (size_t j = 0; j < a.delta_coeffs().size(); ++j)
        r -= a.delta_coeffs()[j] * b.delta_coeffs()[j];
    return r;
}

} // namespace lssa
