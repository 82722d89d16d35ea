#include "lssa/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>

namespace lssa {

namespace {

int total_degree(const std::vector<int>& exps) {
    return std::accumulate(exps.begin(), exps.end(), 0);
}

} // namespace

bool Polynomial::exps_after(const std::vector<int>& a, const std::vector<int>& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial Polynomial::constant(int nvars, Rational c) {
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_.push_back({std::vector<int>(nvars, 0), std::move(c)});
    return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
    assert(index >= 0 && index < nvars);
    Polynomial p(nvars);
    std::vector<int> e(nvars, 0);
    e[index] = 1;
    p.terms_.push_back({std::move(e), Rational(1)});
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && total_degree(terms_[0].exps) == 0;
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    assert(is_constant());
    return terms_[0].coeff;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_[0].exps); // leading term has maximal total degree
}

int Polynomial::degree_in(int var) const {
    int d = is_zero() ? -1 : 0;
    for (const auto& t : terms_) d = std::max(d, t.exps[var]);
    return d;
}

void Polynomial::sort_and_combine() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return exps_after(a.exps, b.exps); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().exps == t.exps)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.exps, -t.coeff});
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    assert(nvars_ == o.nvars_);
    // merge of two sorted term lists
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() ||
            (i < terms_.size() && exps_after(terms_[i].exps, o.terms_[j].exps))) {
            r.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || exps_after(o.terms_[j].exps, terms_[i].exps)) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Rational c = terms_[i].coeff + o.terms_[j].coeff;
            if (!c.is_zero()) r.terms_.push_back({terms_[i].exps, std::move(c)});
            ++i, ++j;
        }
    }
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    assert(nvars_ == o.nvars_);
    if (is_zero() || o.is_zero()) return Polynomial(nvars_);
    std::map<std::vector<int>, Rational> acc;
    std::vector<int> e(nvars_);
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            for (int v = 0; v < nvars_; ++v) e[v] = a.exps[v] + b.exps[v];
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(e, a.coeff * b.coeff);
            else
                it->second += a.coeff * b.coeff;
        }
    }
    Polynomial r(nvars_);
    r.terms_.reserve(acc.size());
    for (auto& [exps, c] : acc)
        if (!c.is_zero()) r.terms_.push_back({exps, std::move(c)});
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& a, const Term& b) { return exps_after(a.exps, b.exps); });
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return Polynomial(nvars_);
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.exps, t.coeff * c});
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(nvars_, 1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exps != o.terms_[i].exps || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

const Rational& Polynomial::leading_coeff() const {
    assert(!terms_.empty());
    return terms_[0].coeff;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inverse());
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    assert(static_cast<int>(point.size()) == nvars_);
    Rational acc(0);
    for (const auto& t : terms_) {
        Rational m = t.coeff;
        for (int v = 0; v < nvars_; ++v)
            for (int e = 0; e < t.exps[v]; ++e) m *= point[v];
        acc += m;
    }
    return acc;
}

Polynomial Polynomial::evaluate_partial(const std::vector<bool>& bound,
                                        const std::vector<Rational>& point) const {
    Polynomial r(nvars_);
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        std::vector<int> e(nvars_, 0);
        for (int v = 0; v < nvars_; ++v) {
            if (bound[v]) {
                for (int i = 0; i < t.exps[v]; ++i) c *= point[v];
            } else {
                e[v] = t.exps[v];
            }
        }
        if (!c.is_zero()) r.terms_.push_back({std::move(e), std::move(c)});
    }
    r.sort_and_combine();
    return r;
}

Polynomial Polynomial::remap(int new_nvars, const std::vector<int>& var_map) const {
    assert(static_cast<int>(var_map.size()) == nvars_);
    Polynomial r(new_nvars);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<int> e(new_nvars, 0);
        for (int v = 0; v < nvars_; ++v) e[var_map[v]] = t.exps[v];
        r.terms_.push_back({std::move(e), t.coeff});
    }
    r.sort_and_combine(); // order may change under the remap
    return r;
}

Polynomial Polynomial::divide_exact(const Polynomial& d) const {
    if (d.is_zero()) throw division_by_zero();
    if (is_zero()) return Polynomial(nvars_);
    assert(nvars_ == d.nvars_);
    Polynomial rem = *this;
    Polynomial quot(nvars_);
    const auto& dl = d.terms_[0];
    while (!rem.is_zero()) {
        const auto& rl = rem.terms_[0];
        std::vector<int> e(nvars_);
        for (int v = 0; v < nvars_; ++v) {
            e[v] = rl.exps[v] - dl.exps[v];
            if (e[v] < 0) throw error("polynomial division is not exact");
        }
        Polynomial t(nvars_);
        t.terms_.push_back({std::move(e), rl.coeff / dl.coeff});
        quot = quot + t;
        rem = rem - t * d;
    }
    return quot;
}

/* Assembles a polynomial from raw terms; sorts and combines once. */
class PolyBuilder {
public:
    explicit PolyBuilder(int nvars) : p_(nvars) {}
    void add(std::vector<int> exps, Rational coeff) {
        p_.terms_.push_back({std::move(exps), std::move(coeff)});
    }
    Polynomial take() {
        p_.sort_and_combine();
        return std::move(p_);
    }

private:
    Polynomial p_;
};

namespace {

/* View of p as a univariate polynomial in `var` with Polynomial coefficients
 * (still in the full variable space, with exponent 0 in `var`). */
std::vector<Polynomial> coeffs_in(const Polynomial& p, int var) {
    int d = p.degree_in(var);
    std::vector<PolyBuilder> bs(static_cast<size_t>(d + 1), PolyBuilder(p.nvars()));
    for (const auto& t : p.terms()) {
        std::vector<int> e = t.exps;
        int dv = e[var];
        e[var] = 0;
        bs[static_cast<size_t>(dv)].add(std::move(e), t.coeff);
    }
    std::vector<Polynomial> cs;
    cs.reserve(bs.size());
    for (auto& b : bs) cs.push_back(b.take());
    return cs;
}

/* Pseudo-remainder of a by b with respect to `var`:
 * lc(b)^(da-db+1) * a = q*b + r with deg_var(r) < deg_var(b). */
Polynomial prem(const Polynomial& a, const Polynomial& b, int var) {
    int db = b.degree_in(var);
    assert(db >= 0);
    std::vector<Polynomial> bc = coeffs_in(b, var);
    const Polynomial& blc = bc.back();
    Polynomial r = a;
    int dr = r.degree_in(var);
    while (!r.is_zero() && (dr = r.degree_in(var)) >= db) {
        std::vector<Polynomial> rc = coeffs_in(r, var);
        const Polynomial& rlc = rc.back();
        Polynomial xshift = Polynomial::variable(a.nvars(), var).pow(static_cast<unsigned>(dr - db));
        r = r * blc - b * rlc * xshift;
    }
    return r;
}

int first_used_var(const Polynomial& a, const Polynomial& b) {
    for (int v = 0; v < a.nvars(); ++v)
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
    return -1;
}

/* Content of p with respect to var: gcd of its coefficients. */
Polynomial content_in(const Polynomial& p, int var) {
    std::vector<Polynomial> cs = coeffs_in(p, var);
    Polynomial g(p.nvars());
    for (const auto& c : cs) g = Polynomial::gcd(g, c);
    return g;
}

} // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    int var = first_used_var(a, b);
    if (var < 0) return constant(a.nvars(), 1); // both constants, coefficients in a field
    if (a.degree_in(var) == 0 || b.degree_in(var) == 0) {
        // one argument does not involve the main variable: gcd divides its content
        const Polynomial& flat = a.degree_in(var) == 0 ? a : b;
        const Polynomial& other = a.degree_in(var) == 0 ? b : a;
        return gcd(flat, content_in(other, var)).monic();
    }
    Polynomial ca = content_in(a, var);
    Polynomial cb = content_in(b, var);
    Polynomial pa = a.divide_exact(ca);
    Polynomial pb = b.divide_exact(cb);
    Polynomial cg = gcd(ca, cb);
    // primitive pseudo-remainder sequence
    Polynomial r0 = pa, r1 = pb;
    if (r0.degree_in(var) < r1.degree_in(var)) std::swap(r0, r1);
    while (!r1.is_zero()) {
        Polynomial r = prem(r0, r1, var);
        if (!r.is_zero()) {
            Polynomial c = content_in(r, var);
            r = r.divide_exact(c);
        }
        r0 = r1;
        r1 = r;
    }
    if (r0.degree_in(var) > 0) {
        Polynomial c0 = content_in(r0, var);
        r0 = r0.divide_exact(c0);
    } else {
        r0 = constant(a.nvars(), 1);
    }
    return (cg * r0).monic();
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c.sign() < 0) os << "-", c = -c;
        } else {
            os << (c.sign() < 0 ? "-" : "+");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        bool has_var = total_degree(t.exps) > 0;
        if (!has_var || !c.is_one()) {
            os << c.str();
            if (has_var) os << "*";
        }
        bool first_var = true;
        for (int v = 0; v < nvars_; ++v) {
            if (t.exps[v] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << names[static_cast<size_t>(v)];
            if (t.exps[v] > 1) os << "^" << t.exps[v];
        }
    }
    return os.str();
}

} // namespace lssa
