#include "lssa/product_table.hpp"

#include <gmpxx.h>

#include <cassert>

namespace lssa {

ProductTable::ProductTable(AlgebraPtr algebra, std::vector<Matrix> left_mult)
    : algebra_(std::move(algebra)), left_mult_(std::move(left_mult)) {
    int d = algebra_->dim();
    if (static_cast<int>(left_mult_.size()) != d) throw error("product table has wrong size");
    for (int i = 0; i < d; ++i) {
        const Matrix& li = left_mult_[static_cast<size_t>(i)];
        if (li.rows() != d || li.cols() != d) throw error("product table has wrong size");
        for (int j = 0; j < d; ++j)
            for (int l = 0; l < d; ++l)
                if (!li.at(l, j).is_zero() &&
                    algebra_->parity(l) != algebra_->parity(i) + algebra_->parity(j))
                    throw error("product violates parity additivity at " +
                                algebra_->element(i).label + "*" + algebra_->element(j).label);
    }
}

Vec ProductTable::multiply(const Vec& u, const Vec& v) const {
    Vec r(static_cast<size_t>(dim()));
    for (int i = 0; i < dim(); ++i) {
        if (u[static_cast<size_t>(i)].is_zero()) continue;
        r = r + scaled(left_mult_[static_cast<size_t>(i)].apply(v), u[static_cast<size_t>(i)]);
    }
    return r;
}

ProductTable ProductTable::substitute(const std::map<std::string, Rational>& bindings) const {
    std::vector<Matrix> ms;
    ms.reserve(left_mult_.size());
    for (const auto& m : left_mult_) ms.push_back(m.substitute(bindings));
    return ProductTable(algebra_, std::move(ms));
}

namespace {

/* Scaled-integer check of L_{[x,y]} = L_x L_y - (-1)^{|x||y|} L_y L_x for all
 * basis pairs, where [x,y] is the table's own associated bracket. Evaluating
 * the operator identity on basis elements z is literally the axiom for the
 * ordered triples (x,y,z), and the (y,x,...) triples follow by the super-
 * symmetry of the identity. Requires constant coefficients. */
bool check_lssa_integer(const ProductTable& p) {
    const auto& g = *p.algebra();
    const int d = g.dim();
    const size_t dd = static_cast<size_t>(d) * static_cast<size_t>(d);

    // common denominator
    mpz_class lambda(1);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int l = 0; l < d; ++l) {
                const Scalar& s = p.coeff(i, j, l);
                if (s.is_zero()) continue;
                mpz_class den = s.rational_value().denominator();
                mpz_lcm(lambda.get_mpz_t(), lambda.get_mpz_t(), den.get_mpz_t());
            }

    // scaled integer left-multiplication matrices
    std::vector<std::vector<mpz_class>> lm(static_cast<size_t>(d),
                                           std::vector<mpz_class>(dd));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int l = 0; l < d; ++l) {
                const Scalar& s = p.coeff(i, j, l);
                if (s.is_zero()) continue;
                Rational r = s.rational_value();
                mpz_class v = r.numerator() * (lambda / r.denominator());
                lm[static_cast<size_t>(i)][static_cast<size_t>(l) * d + static_cast<size_t>(j)] = v;
            }

    std::vector<mpz_class> acc(dd);
    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            bool both_odd = g.parity(i) == Parity::odd && g.parity(j) == Parity::odd;
            const auto& li = lm[static_cast<size_t>(i)];
            const auto& lj = lm[static_cast<size_t>(j)];
            // acc = L_i L_j -+ L_j L_i   (lambda^2 scale)
            for (auto& a : acc) a = 0;
            for (int r = 0; r < d; ++r)
                for (int t = 0; t < d; ++t) {
                    const mpz_class& a = li[static_cast<size_t>(r) * d + static_cast<size_t>(t)];
                    if (sgn(a) == 0) continue;
                    const mpz_class* bron = &lj[static_cast<size_t>(t) * d];
                    mpz_class* out = &acc[static_cast<size_t>(r) * d];
                    for (int c = 0; c < d; ++c)
                        if (sgn(bron[c]) != 0)
                            mpz_addmul(out[c].get_mpz_t(), a.get_mpz_t(), bron[c].get_mpz_t());
                }
            for (int r = 0; r < d; ++r)
                for (int t = 0; t < d; ++t) {
                    const mpz_class& a = lj[static_cast<size_t>(r) * d + static_cast<size_t>(t)];
                    if (sgn(a) == 0) continue;
                    const mpz_class* bron = &li[static_cast<size_t>(t) * d];
                    mpz_class* out = &acc[static_cast<size_t>(r) * d];
                    for (int c = 0; c < d; ++c)
                        if (sgn(bron[c]) != 0) {
                            if (both_odd)
                                mpz_addmul(out[c].get_mpz_t(), a.get_mpz_t(), bron[c].get_mpz_t());
                            else
                                mpz_submul(out[c].get_mpz_t(), a.get_mpz_t(), bron[c].get_mpz_t());
                        }
                }
            // acc -= L_{x_i.x_j -+ x_j.x_i}  (the table's own bracket; sparse
            // for genuine products). Scale: bracket entries carry lambda, the
            // L matrices carry lambda, so the combination carries lambda^2.
            for (int l = 0; l < d; ++l) {
                mpz_class b = li[static_cast<size_t>(l) * d + static_cast<size_t>(j)];
                const mpz_class& ji = lj[static_cast<size_t>(l) * d + static_cast<size_t>(i)];
                if (both_odd)
                    b += ji;
                else
                    b -= ji;
                if (sgn(b) == 0) continue;
                const auto& ll = lm[static_cast<size_t>(l)];
                for (size_t idx = 0; idx < dd; ++idx)
                    if (sgn(ll[idx]) != 0)
                        mpz_submul(acc[idx].get_mpz_t(), b.get_mpz_t(), ll[idx].get_mpz_t());
            }
            for (const auto& a : acc)
                if (sgn(a) != 0) return false;
        }
    }
    return true;
}

} // namespace

bool check_lssa(const ProductTable& p) {
    const auto& g = *p.algebra();
    const int d = g.dim();

    bool constant = true;
    for (int i = 0; i < d && constant; ++i)
        for (int j = 0; j < d && constant; ++j)
            for (int l = 0; l < d && constant; ++l)
                if (!p.coeff(i, j, l).is_constant()) constant = false;
    if (constant && d > 16) return check_lssa_integer(p);

    for (int i = 0; i < d; ++i) {
        for (int j = i; j < d; ++j) {
            Scalar eps(sign_factor(g.parity(i), g.parity(j)));
            // L_{x.y - eps y.x}
            Vec br = p.product(i, j) - scaled(p.product(j, i), eps);
            Matrix lhs(d, d);
            for (int l = 0; l < d; ++l)
                if (!br[static_cast<size_t>(l)].is_zero())
                    lhs = lhs + p.left_mult(l).scaled(br[static_cast<size_t>(l)]);
            Matrix rhs = p.left_mult(i) * p.left_mult(j) -
                         (p.left_mult(j) * p.left_mult(i)).scaled(eps);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

std::vector<std::vector<Vec>> associated_bracket(const ProductTable& p) {
    const auto& g = *p.algebra();
    int d = g.dim();
    std::vector<std::vector<Vec>> table(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        table[static_cast<size_t>(i)].reserve(static_cast<size_t>(d));
        for (int j = 0; j < d; ++j) {
            Scalar eps(sign_factor(g.parity(i), g.parity(j)));
            table[static_cast<size_t>(i)].push_back(p.product(i, j) -
                                                    scaled(p.product(j, i), eps));
        }
    }
    return table;
}

bool bracket_matches_algebra(const ProductTable& p) {
    const auto& g = *p.algebra();
    int d = g.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Scalar eps(sign_factor(g.parity(i), g.parity(j)));
            Vec got = p.product(i, j) - scaled(p.product(j, i), eps);
            Vec want(static_cast<size_t>(d));
            for (const auto& [l, c] : g.bracket(i, j)) want[static_cast<size_t>(l)] = c;
            if (got != want) return false;
        }
    return true;
}

Representation left_regular(const ProductTable& p) {
    if (!check_lssa(p)) throw not_left_symmetric();
    return Representation{p.algebra(), p.algebra()->space(), p.left_mult()};
}

Matrix right_mul(const ProductTable& p, int i) { return p.left_mult(i) - p.algebra()->ad(i); }

bool check_cocycle(const Cocycle& c) {
    const auto& g = *c.rep.algebra;
    int d = g.dim(), dv = c.rep.dim();
    if (c.q.rows() != dv || c.q.cols() != d) return false;
    // q is even
    for (int i = 0; i < dv; ++i)
        for (int j = 0; j < d; ++j)
            if (!c.q.at(i, j).is_zero() && c.rep.space.parity(i) != g.parity(j)) return false;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec lhs(static_cast<size_t>(dv));
            for (const auto& [l, cf] : g.bracket(i, j))
                lhs = lhs + scaled(c.q.column(l), cf);
            Vec rhs = c.rep.act(i).apply(c.q.column(j)) -
                      scaled(c.rep.act(j).apply(c.q.column(i)),
                             Scalar(sign_factor(g.parity(i), g.parity(j))));
            if (lhs != rhs) return false;
        }
    return true;
}

Cocycle evaluation_map(const Representation& f, const Vec& a) {
    for (int i = f.space.even_dim(); i < f.dim(); ++i)
        if (!a[static_cast<size_t>(i)].is_zero()) throw odd_base_point();
    Matrix q(f.dim(), f.algebra->dim());
    for (int j = 0; j < f.algebra->dim(); ++j) q.set_column(j, f.act(j).apply(a));
    return Cocycle{f, std::move(q)};
}

std::vector<Matrix> evaluation_family(const Representation& f) {
    std::vector<Matrix> family;
    family.push_back(Matrix(f.dim(), f.algebra->dim()));
    for (int t = 0; t < f.space.even_dim(); ++t) {
        Vec a(static_cast<size_t>(f.dim()));
        a[static_cast<size_t>(t)] = Scalar(1);
        family.push_back(evaluation_map(f, a).q);
    }
    return family;
}

ProductTable lssa_from_cocycle(const Cocycle& c) {
    const auto& g = *c.rep.algebra;
    int d = g.dim();
    if (c.q.rows() != d || c.q.cols() != d)
        throw not_bijective("q is not square (" + std::to_string(c.q.rows()) + "x" +
                            std::to_string(c.q.cols()) + ")");
    Matrix qinv;
    try {
        qinv = inverse(c.q);
    } catch (const not_invertible&) {
        throw not_bijective("q has a nontrivial kernel");
    }
    std::vector<Matrix> lm;
    lm.reserve(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) lm.push_back(qinv * (c.rep.act(i) * c.q));
    return ProductTable(c.rep.algebra, std::move(lm));
}

bool check_equivalence(const Cocycle& c1, const Cocycle& c2, const Matrix& phi, const Matrix& t) {
    const auto& g = *c1.rep.algebra;
    if (c2.rep.algebra != c1.rep.algebra) return false;
    int d = g.dim();
    if (rank(phi) != phi.rows()) return false;
    // verify T is an automorphism
    try {
        (void)twist(c1.rep, t);
    } catch (const not_an_automorphism&) {
        return false;
    }
    // phi f2(x) = f1(T x) phi for all basis x
    for (int i = 0; i < d; ++i) {
        Matrix f1t(c1.rep.dim(), c1.rep.dim());
        for (int l = 0; l < d; ++l)
            if (!t.at(l, i).is_zero()) f1t = f1t + c1.rep.act(l).scaled(t.at(l, i));
        if (phi * c2.rep.act(i) != f1t * phi) return false;
    }
    // phi q2 = q1 T
    return phi * c2.q == c1.q * t;
}

RightIdentitySet find_right_identities(const ProductTable& p) {
    const auto& g = *p.algebra();
    int d = g.dim(), pe = g.space().even_dim();
    // unknowns: even coordinates of e; equations: b_i * e = b_i for all i
    Matrix sys(d * d, pe);
    Vec rhs(static_cast<size_t>(d) * static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        const Matrix& li = p.left_mult(i);
        for (int l = 0; l < d; ++l) {
            int row = i * d + l;
            for (int j = 0; j < pe; ++j) sys.at(row, j) = li.at(l, j);
            rhs[static_cast<size_t>(row)] = (l == i) ? Scalar(1) : Scalar(0);
        }
    }
    RightIdentitySet out;
    auto sol = solve(sys, rhs);
    if (!sol) return out;
    out.exists = true;
    out.point.assign(static_cast<size_t>(d), Scalar());
    for (int j = 0; j < pe; ++j) out.point[static_cast<size_t>(j)] = (*sol)[static_cast<size_t>(j)];
    for (const auto& h : kernel(sys)) {
        Vec dir(static_cast<size_t>(d));
        for (int j = 0; j < pe; ++j) dir[static_cast<size_t>(j)] = h[static_cast<size_t>(j)];
        out.homogeneous.push_back(std::move(dir));
    }
    return out;
}

std::optional<Vec> find_left_unit(const ProductTable& p) {
    const auto& g = *p.algebra();
    int d = g.dim();
    // sum_j e_j rho(b_j) = id
    Matrix sys(d * d, d);
    Vec rhs(static_cast<size_t>(d) * static_cast<size_t>(d));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            int row = r * d + c;
            for (int j = 0; j < d; ++j) sys.at(row, j) = p.left_mult(j).at(r, c);
            rhs[static_cast<size_t>(row)] = (r == c) ? Scalar(1) : Scalar(0);
        }
    return solve(sys, rhs);
}

} // namespace lssa
