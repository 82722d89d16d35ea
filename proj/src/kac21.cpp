#include "lssa/kac21.hpp"

#include <cassert>
#include <map>

namespace lssa {

bool is_typical(const Weight21& w) {
    return w.k != Scalar(w.i) && w.k != Scalar(-w.i - 2);
}

Weight21 t_minus(const Weight21& w) {
    if (w.k == Scalar(w.i)) return {w.i + 1, Scalar(w.i + 1)};
    if (w.k == Scalar(-w.i - 2)) {
        if (w.i > 0) return {w.i - 1, Scalar(-w.i - 1)};
        return {0, Scalar(0)}; // i = 0, k = -2
    }
    throw typical_weight("(" + std::to_string(w.i) + ", " + w.k.str() + ")");
}

Weight21 atypical_weight(int j) {
    if (j >= 0) return {j, Scalar(j)};
    return {-j - 1, Scalar(j - 1)};
}

int atypical_index(const Weight21& w) {
    if (w.k == Scalar(w.i)) return w.i;
    if (w.k == Scalar(-w.i - 2)) return -w.i - 1;
    throw typical_weight("(" + std::to_string(w.i) + ", " + w.k.str() + ")");
}

Weight21 t_plus(const Weight21& w) { return atypical_weight(atypical_index(w) - 1); }

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        default: return "C";
    }
}

ParamContextPtr context_A() { return ParamContext::make({"k"}); }
ParamContextPtr context_B() { return ParamContext::make({"k1", "k2"}); }

namespace {

/* Element of the induced module during construction: monomial
 * (mask, j) -> coefficient, where mask bit 0 marks a y1 factor and bit 1 a
 * y2 factor of the wedge monomial y1^a y2^b acting on u_j. */
using Elem = std::map<std::pair<int, int>, Scalar>;

void add_to(Elem& e, int mask, int j, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(mask, j);
    auto it = e.find(key);
    if (it == e.end())
        e.emplace(key, c);
    else {
        it->second += c;
        if (it->second.is_zero()) e.erase(it);
    }
}

/* Wedge y1 or y2 onto the front of a monomial; sign from moving y2 past an
 * existing y1 factor. */
bool wedge(int y_bit, int mask, int& out_mask, int& out_sign) {
    if (mask & y_bit) return false; // y^2 = 0
    out_mask = mask | y_bit;
    out_sign = (y_bit == 2 && (mask & 1)) ? -1 : 1;
    return true;
}

struct Induction {
    const LieSuperalgebra& g;
    int ldim;
    std::array<Matrix, 4> base; // actions of x1..x4 on the inducing module L

    // indices of y1, y2 in the sl(2|1) basis
    int iy1, iy2;

    Elem act(int gi, int mask, int j) const {
        Elem out;
        if (gi == iy1 || gi == iy2) {
            int bit = gi == iy1 ? 1 : 2;
            int nm, sg;
            if (wedge(bit, mask, nm, sg)) add_to(out, nm, j, Scalar(sg));
            return out;
        }
        if (mask == 0) {
            if (g.parity(gi) == Parity::even) {
                const Matrix& b = base[static_cast<size_t>(gi)];
                for (int r = 0; r < ldim; ++r)
                    if (!b.at(r, j).is_zero()) add_to(out, 0, r, b.at(r, j));
            }
            // g_1 (y3, y4) annihilates the inducing module
            return out;
        }
        // peel the leftmost y factor: y1 when present, else y2
        int bit = (mask & 1) ? 1 : 2;
        int y_idx = bit == 1 ? iy1 : iy2;
        int rest = mask & ~bit;
        // x (y v) = [x, y] v + (-1)^{|x|} y (x v)
        for (const auto& [l, c] : g.bracket(gi, y_idx)) {
            Elem sub = act(l, rest, j);
            for (const auto& [key, val] : sub) add_to(out, key.first, key.second, val * c);
        }
        int xsign = g.parity(gi) == Parity::odd ? -1 : 1;
        Elem sub = act(gi, rest, j);
        for (const auto& [key, val] : sub) {
            int nm, sg;
            if (wedge(bit, key.first, nm, sg))
                add_to(out, nm, key.second, xsign * sg < 0 ? -val : val);
        }
        return out;
    }
};

/* Basis layout of the induced module: even part u_j then y1y2.u_j, odd part
 * y1.u_j then y2.u_j. */
int monomial_index(int ldim, int mask, int j) {
    switch (mask) {
        case 0: return j;
        case 3: return ldim + j;
        case 1: return 2 * ldim + j;
        default: return 3 * ldim + j;
    }
}

Representation induce(const AlgebraPtr& g, int ldim, std::array<Matrix, 4> base,
                      const std::vector<std::string>& lnames) {
    if (g->name() != "sl(2|1)") throw error("Kac induction implemented for sl(2|1) only");
    Induction ind{*g, ldim, std::move(base), g->index_of("y1"), g->index_of("y2")};

    std::vector<std::string> even, odd;
    for (int j = 0; j < ldim; ++j) even.push_back(lnames[static_cast<size_t>(j)]);
    for (int j = 0; j < ldim; ++j) even.push_back("y1y2." + lnames[static_cast<size_t>(j)]);
    for (int j = 0; j < ldim; ++j) odd.push_back("y1." + lnames[static_cast<size_t>(j)]);
    for (int j = 0; j < ldim; ++j) odd.push_back("y2." + lnames[static_cast<size_t>(j)]);

    Representation r{g, SuperSpace(std::move(even), std::move(odd)), {}};
    int dim = 4 * ldim;
    r.action.reserve(static_cast<size_t>(g->dim()));
    for (int gi = 0; gi < g->dim(); ++gi) {
        Matrix m(dim, dim);
        for (int mask : {0, 3, 1, 2})
            for (int j = 0; j < ldim; ++j) {
                Elem image = ind.act(gi, mask, j);
                int col = monomial_index(ldim, mask, j);
                for (const auto& [key, val] : image)
                    m.at(monomial_index(ldim, key.first, key.second), col) = val;
            }
        r.action.push_back(std::move(m));
    }
    return r;
}

} // namespace

Representation kac_module(const AlgebraPtr& sl21, int i, const Scalar& k) {
    if (i < 0) throw error("highest weight label i must be nonnegative");
    int ldim = i + 1;
    std::array<Matrix, 4> base{Matrix(ldim, ldim), Matrix(ldim, ldim), Matrix(ldim, ldim),
                               Matrix(ldim, ldim)};
    // S_i basis u_j = f^j u_0: e u_j = j(i-j+1) u_{j-1}, f u_j = u_{j+1},
    // h u_j = (i-2j) u_j; z acts by k
    for (int j = 0; j <= i; ++j) {
        if (j > 0) base[0].at(j - 1, j) = Scalar(Rational(static_cast<long>(j) * (i - j + 1)));
        if (j < i) base[1].at(j + 1, j) = Scalar(1);
        base[2].at(j, j) = Scalar(i - 2 * j);
        base[3].at(j, j) = k;
    }
    std::vector<std::string> lnames;
    for (int j = 0; j <= i; ++j) lnames.push_back("u" + std::to_string(j));
    return induce(sl21, ldim, std::move(base), lnames);
}

Representation kac_double(const AlgebraPtr& sl21, const Scalar& k) {
    std::array<Matrix, 4> base{Matrix(2, 2), Matrix(2, 2), Matrix(2, 2), Matrix(2, 2)};
    // trivial sl2-action; z = k I + N with N u0 = u1
    base[3].at(0, 0) = k;
    base[3].at(1, 1) = k;
    base[3].at(1, 0) = Scalar(1);
    return induce(sl21, 2, std::move(base), {"u0", "u1"});
}

Representation family_module(const AlgebraPtr& g, Family fam, const std::vector<Scalar>& params) {
    switch (fam) {
        case Family::A:
            if (params.size() != 1) throw error("family A takes one parameter");
            return kac_module(g, 1, params[0]);
        case Family::B: {
            if (params.size() != 2) throw error("family B takes two parameters");
            Representation m1 = parity_shift(kac_module(g, 0, params[0]));
            Representation m2 = parity_shift(kac_module(g, 0, params[1]));
            return direct_sum({m1, m2});
        }
        default:
            if (params.size() != 1) throw error("family C takes one parameter");
            return parity_shift(kac_double(g, params[0]));
    }
}

Vec family_base_point(const Representation& module, Family fam) {
    Vec a(static_cast<size_t>(module.dim()));
    auto set = [&](const std::string& label, Rational c) {
        a[static_cast<size_t>(module.space.index_of(label))] = Scalar(c);
    };
    switch (fam) {
        case Family::A:
            // a = v0 + w1 with v0 the highest weight vector and
            // w1 = -1/2 E21 E31 E32 v0; this scaling of the lowest weight
            // vector is the one the reference multiplication table is
            // written against
            set("u0", Rational(1));
            set("y1y2.u1", Rational(-1, 2));
            break;
        case Family::B:
            // v0 = highest weight vector of M1, w1 = E21 (highest of M2)
            set("y2.u0'", Rational(1));
            set("y1.u0''", Rational(-1));
            break;
        default:
            // v0 = preimage (first C^(2) coordinate) of the highest weight
            // vector of M1; w1 = E21 (y2.u1) = -y1.u1
            set("y2.u0", Rational(1));
            set("y1.u1", Rational(-1));
            break;
    }
    return a;
}

FamilyInstance build_family(const AlgebraPtr& g, Family fam, const std::vector<Scalar>& params) {
    Representation module = family_module(g, fam, params);
    Vec a = family_base_point(module, fam);
    Cocycle ev = evaluation_map(module, a);
    bool constant = true;
    for (const auto& p : params)
        if (!p.is_constant()) constant = false;
    if (constant && rank(ev.q) < g->dim()) {
        std::string vals;
        for (const auto& p : params) vals += (vals.empty() ? "" : ", ") + p.str();
        throw excluded_parameter("evaluation map of family " + family_name(fam) +
                                 " degenerates at (" + vals + ")");
    }
    ProductTable table = lssa_from_cocycle(ev);
    return FamilyInstance{fam, std::move(module), std::move(a), std::move(ev), std::move(table)};
}

} // namespace lssa
