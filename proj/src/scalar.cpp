#include "lssa/scalar.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>

#include "lssa/errors.hpp"

namespace lssa {

int ParamContext::index_of(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

std::shared_ptr<const ParamContext> ParamContext::make(std::vector<std::string> names) {
    return std::make_shared<const ParamContext>(std::move(names));
}

Scalar::Scalar(ParamContextPtr ctx, Polynomial num, Polynomial den)
    : ctx_(std::move(ctx)), num_(std::move(num)), den_(std::move(den)) {
    int nv = ctx_ ? ctx_->size() : 0;
    if (num_.nvars() != nv || den_.nvars() != nv)
        throw error("scalar polynomials do not match their context");
    if (den_.is_zero()) throw division_by_zero();
    canonicalize();
}

Scalar Scalar::param(const ParamContextPtr& ctx, int index) {
    return Scalar(ctx, Polynomial::variable(ctx->size(), index),
                  Polynomial::constant(ctx->size(), 1));
}

Scalar Scalar::param(const ParamContextPtr& ctx, const std::string& name) {
    int i = ctx->index_of(name);
    if (i < 0) throw error("unknown parameter: " + name);
    return param(ctx, i);
}

bool Scalar::is_one() const { return num_ == den_; }

Rational Scalar::rational_value() const {
    if (!is_constant()) throw error("scalar is not constant: " + str());
    return num_.constant_value() / den_.constant_value();
}

void Scalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(den_.nvars(), 1);
        return;
    }
    if (den_.is_constant()) {
        if (!den_.constant_value().is_one()) {
            num_ = num_.scaled(den_.constant_value().inverse());
            den_ = Polynomial::constant(den_.nvars(), 1);
        }
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    Rational lc = den_.leading_coeff();
    if (!lc.is_one()) {
        Rational inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

const ParamContextPtr& Scalar::merge_contexts(const Scalar& a, const Scalar& b) {
    if (!a.ctx_) return b.ctx_;
    if (!b.ctx_) return a.ctx_;
    if (a.ctx_ == b.ctx_ || a.ctx_->names() == b.ctx_->names()) return a.ctx_;
    throw error("scalars from incompatible parameter contexts");
}

Polynomial Scalar::promote(const Polynomial& p, const ParamContextPtr& target) const {
    int nv = target ? target->size() : 0;
    if (p.nvars() == nv) return p;
    assert(p.nvars() == 0);
    return p.remap(nv, {});
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (is_constant() && o.is_constant())
        return Scalar(rational_value() + o.rational_value());
    const ParamContextPtr& ctx = merge_contexts(*this, o);
    Polynomial an = promote(num_, ctx), ad = promote(den_, ctx);
    Polynomial bn = promote(o.num_, ctx), bd = promote(o.den_, ctx);
    return Scalar(ctx, an * bd + bn * ad, ad * bd);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_constant() && o.is_constant())
        return Scalar(rational_value() * o.rational_value());
    if (is_zero() || o.is_zero()) return Scalar();
    const ParamContextPtr& ctx = merge_contexts(*this, o);
    Polynomial an = promote(num_, ctx), ad = promote(den_, ctx);
    Polynomial bn = promote(o.num_, ctx), bd = promote(o.den_, ctx);
    return Scalar(ctx, an * bn, ad * bd);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw division_by_zero();
    if (is_constant() && o.is_constant())
        return Scalar(rational_value() / o.rational_value());
    const ParamContextPtr& ctx = merge_contexts(*this, o);
    Polynomial an = promote(num_, ctx), ad = promote(den_, ctx);
    Polynomial bn = promote(o.num_, ctx), bd = promote(o.den_, ctx);
    return Scalar(ctx, an * bd, ad * bn);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw division_by_zero();
    Scalar r = *this;
    std::swap(r.num_, r.den_);
    r.canonicalize();
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (is_constant() && o.is_constant()) return rational_value() == o.rational_value();
    const ParamContextPtr& ctx = merge_contexts(*this, o);
    return promote(num_, ctx) == promote(o.num_, ctx) && promote(den_, ctx) == promote(o.den_, ctx);
}

Scalar Scalar::substitute(const std::map<std::string, Rational>& bindings) const {
    if (!ctx_) return *this;
    std::vector<Rational> point;
    point.reserve(static_cast<size_t>(ctx_->size()));
    for (const auto& name : ctx_->names()) {
        auto it = bindings.find(name);
        if (it == bindings.end()) throw error("missing binding for parameter " + name);
        point.push_back(it->second);
    }
    Rational d = den_.evaluate(point);
    if (d.is_zero()) throw denominator_vanishes(str());
    return Scalar(num_.evaluate(point) / d);
}

bool Scalar::denominator_vanishes_at(const std::map<std::string, Rational>& bindings) const {
    if (!ctx_) return false;
    std::vector<Rational> point;
    for (const auto& name : ctx_->names()) {
        auto it = bindings.find(name);
        if (it == bindings.end()) throw error("missing binding for parameter " + name);
        point.push_back(it->second);
    }
    return den_.evaluate(point).is_zero();
}

Scalar Scalar::lift(const ParamContextPtr& target, const std::vector<int>& var_map) const {
    if (!ctx_) {
        Scalar r;
        r.ctx_ = target;
        r.num_ = num_.remap(target->size(), {});
        r.den_ = den_.remap(target->size(), {});
        return r;
    }
    Scalar r;
    r.ctx_ = target;
    r.num_ = num_.remap(target->size(), var_map);
    r.den_ = den_.remap(target->size(), var_map);
    return r;
}

Scalar lift_to(const Scalar& s, const ParamContextPtr& target) {
    if (!s.context()) return s.lift(target, {});
    std::vector<int> var_map;
    for (const auto& name : s.context()->names()) {
        int idx = target->index_of(name);
        if (idx < 0) throw error("target context lacks parameter " + name);
        var_map.push_back(idx);
    }
    return s.lift(target, var_map);
}

std::string Scalar::str() const {
    static const std::vector<std::string> no_names;
    const std::vector<std::string>& names = ctx_ ? ctx_->names() : no_names;
    if (den_.is_constant()) return num_.str(names);
    return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
}

/* ---- expression parser ---------------------------------------------- */

namespace {

class Parser {
public:
    Parser(const ParamContextPtr& ctx, const std::string& text) : ctx_(ctx), s_(text) {}

    Scalar run() {
        Scalar v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing characters");
        return v;
    }

private:
    const ParamContextPtr& ctx_;
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) {
        throw error("parse error in scalar \"" + s_ + "\" at position " +
                    std::to_string(pos_) + ": " + why);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }

    Scalar term() {
        Scalar v = factor();
        for (;;) {
            if (eat('*'))
                v = v * factor();
            else if (eat('/'))
                v = v / factor();
            else
                return v;
        }
    }

    Scalar factor() {
        skip_ws();
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        Scalar base = atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected integer exponent");
            unsigned e = static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
            Scalar r(1);
            for (unsigned i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }

    Scalar atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Scalar(Rational::parse(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (!ctx_) fail("parameter " + name + " used without a context");
            int idx = ctx_->index_of(name);
            if (idx < 0) fail("unknown parameter " + name);
            return Scalar::param(ctx_, idx);
        }
        fail("unexpected character");
    }
};

} // namespace

Scalar Scalar::parse(const ParamContextPtr& ctx, const std::string& text) {
    return Parser(ctx, text).run();
}

} // namespace lssa
