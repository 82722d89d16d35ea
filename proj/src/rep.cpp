#include "lssa/rep.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace lssa {

Vec Representation::act_coords(const Vec& g, const Vec& v) const {
    Vec r(static_cast<size_t>(dim()));
    for (int i = 0; i < algebra->dim(); ++i) {
        if (g[static_cast<size_t>(i)].is_zero()) continue;
        Vec av = act(i).apply(v);
        r = r + scaled(av, g[static_cast<size_t>(i)]);
    }
    return r;
}

Representation Representation::substitute(const std::map<std::string, Rational>& bindings) const {
    Representation r{algebra, space, {}};
    r.action.reserve(action.size());
    for (const auto& a : action) r.action.push_back(a.substitute(bindings));
    return r;
}

bool check_representation(const Representation& r) {
    const auto& g = *r.algebra;
    for (int i = 0; i < g.dim(); ++i)
        for (int j = i; j < g.dim(); ++j) {
            Matrix lhs(r.dim(), r.dim());
            for (const auto& [l, c] : g.bracket(i, j)) lhs = lhs + r.act(l).scaled(c);
            Matrix rhs = r.act(i) * r.act(j);
            Matrix ji = r.act(j) * r.act(i);
            if (sign_factor(g.parity(i), g.parity(j)) < 0)
                rhs = rhs + ji;
            else
                rhs = rhs - ji;
            if (lhs != rhs) return false;
        }
    return true;
}

bool check_action_parities(const Representation& r) {
    const auto& g = *r.algebra;
    for (int x = 0; x < g.dim(); ++x) {
        Parity p = g.parity(x);
        const Matrix& a = r.act(x);
        for (int i = 0; i < r.dim(); ++i)
            for (int j = 0; j < r.dim(); ++j)
                if (!a.at(i, j).is_zero() && r.space.parity(i) != r.space.parity(j) + p)
                    return false;
    }
    return true;
}

Representation standard_rep(const AlgebraPtr& g) {
    std::vector<std::string> even, odd;
    for (int i = 1; i <= g->m(); ++i) even.push_back("e" + std::to_string(i));
    for (int j = 1; j <= g->n(); ++j) odd.push_back("xi" + std::to_string(j));
    Representation r{g, SuperSpace(std::move(even), std::move(odd)), {}};
    r.action.reserve(static_cast<size_t>(g->dim()));
    for (int i = 0; i < g->dim(); ++i) r.action.push_back(g->element(i).mat.matrix());
    return r;
}

Representation trivial_rep(const AlgebraPtr& g) {
    Representation r{g, SuperSpace({"1"}, {}), {}};
    r.action.assign(static_cast<size_t>(g->dim()), Matrix(1, 1));
    return r;
}

Representation trivial_odd_rep(const AlgebraPtr& g) { return parity_shift(trivial_rep(g)); }

Representation adjoint_rep(const AlgebraPtr& g) {
    Representation r{g, g->space(), {}};
    r.action.reserve(static_cast<size_t>(g->dim()));
    for (int i = 0; i < g->dim(); ++i) r.action.push_back(g->ad(i));
    return r;
}

Representation dual_rep(const Representation& r) {
    std::vector<std::string> even, odd;
    for (const auto& l : r.space.even_labels()) even.push_back(l + "*");
    for (const auto& l : r.space.odd_labels()) odd.push_back(l + "*");
    Representation d{r.algebra, SuperSpace(std::move(even), std::move(odd)), {}};
    d.action.reserve(r.action.size());
    const auto& g = *r.algebra;
    for (int x = 0; x < g.dim(); ++x) {
        const Matrix& a = r.act(x);
        Matrix b(r.dim(), r.dim());
        for (int i = 0; i < r.dim(); ++i)
            for (int j = 0; j < r.dim(); ++j) {
                // (x.phi)(v) = -(-1)^{|x||phi|} phi(x.v)
                const Scalar& v = a.at(j, i);
                if (v.is_zero()) continue;
                int s = sign_factor(g.parity(x), r.space.parity(j));
                b.at(i, j) = s < 0 ? v : -v;
            }
        d.action.push_back(std::move(b));
    }
    return d;
}

Representation parity_shift(const Representation& r) {
    int p = r.space.even_dim(), q = r.space.odd_dim();
    SuperSpace s(r.space.odd_labels(), r.space.even_labels());
    // old index -> new index: old odd j goes to new even slot, old even i after
    auto remap = [&](int old) { return old < p ? q + old : old - p; };
    Representation out{r.algebra, s, {}};
    out.action.reserve(r.action.size());
    for (const auto& a : r.action) {
        Matrix b(p + q, p + q);
        for (int i = 0; i < p + q; ++i)
            for (int j = 0; j < p + q; ++j)
                if (!a.at(i, j).is_zero()) b.at(remap(i), remap(j)) = a.at(i, j);
        out.action.push_back(std::move(b));
    }
    return out;
}

Representation direct_sum(const std::vector<Representation>& parts, std::vector<std::string> tags) {
    assert(!parts.empty());
    for (const auto& p : parts)
        if (p.algebra != parts[0].algebra) throw algebra_mismatch();
    if (tags.empty()) {
        if (parts.size() == 2) {
            tags = {"'", "''"};
        } else {
            for (size_t s = 0; s < parts.size(); ++s) tags.push_back("@" + std::to_string(s + 1));
        }
    }
    assert(tags.size() == parts.size());

    std::vector<std::string> even, odd;
    std::vector<int> even_off, odd_off;
    for (size_t s = 0; s < parts.size(); ++s) {
        even_off.push_back(static_cast<int>(even.size()));
        odd_off.push_back(static_cast<int>(odd.size()));
        for (const auto& l : parts[s].space.even_labels()) even.push_back(l + tags[s]);
        for (const auto& l : parts[s].space.odd_labels()) odd.push_back(l + tags[s]);
    }
    int total_even = static_cast<int>(even.size());
    int total = total_even + static_cast<int>(odd.size());

    auto global_index = [&](size_t s, int local) {
        int pe = parts[s].space.even_dim();
        return local < pe ? even_off[s] + local : total_even + odd_off[s] + (local - pe);
    };

    Representation out{parts[0].algebra, SuperSpace(std::move(even), std::move(odd)), {}};
    const auto& g = *parts[0].algebra;
    out.action.reserve(static_cast<size_t>(g.dim()));
    for (int x = 0; x < g.dim(); ++x) {
        Matrix b(total, total);
        for (size_t s = 0; s < parts.size(); ++s) {
            const Matrix& a = parts[s].act(x);
            for (int i = 0; i < parts[s].dim(); ++i)
                for (int j = 0; j < parts[s].dim(); ++j)
                    if (!a.at(i, j).is_zero())
                        b.at(global_index(s, i), global_index(s, j)) = a.at(i, j);
        }
        out.action.push_back(std::move(b));
    }
    return out;
}

Representation tensor_product(const Representation& ra, const Representation& rb) {
    if (ra.algebra != rb.algebra) throw algebra_mismatch();
    const auto& g = *ra.algebra;
    int da = ra.dim(), db = rb.dim();

    // pairs (i,j) in lex order, bucketed into even-then-odd
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::string> even, odd;
    std::vector<int> index(static_cast<size_t>(da * db), -1);
    for (int pass = 0; pass < 2; ++pass) {
        Parity want = pass == 0 ? Parity::even : Parity::odd;
        for (int i = 0; i < da; ++i)
            for (int j = 0; j < db; ++j) {
                if (ra.space.parity(i) + rb.space.parity(j) != want) continue;
                index[static_cast<size_t>(i * db + j)] = static_cast<int>(pairs.size());
                pairs.emplace_back(i, j);
                (pass == 0 ? even : odd).push_back(ra.space.label(i) + "." + rb.space.label(j));
            }
    }

    Representation out{ra.algebra, SuperSpace(std::move(even), std::move(odd)), {}};
    out.action.reserve(static_cast<size_t>(g.dim()));
    for (int x = 0; x < g.dim(); ++x) {
        const Matrix& a = ra.act(x);
        const Matrix& b = rb.act(x);
        Matrix m(static_cast<int>(pairs.size()), static_cast<int>(pairs.size()));
        for (size_t col = 0; col < pairs.size(); ++col) {
            auto [i, j] = pairs[col];
            // x.(u (x) v) = (x.u) (x) v + (-1)^{|x||u|} u (x) (x.v)
            for (int r = 0; r < da; ++r)
                if (!a.at(r, i).is_zero())
                    m.at(index[static_cast<size_t>(r * db + j)], static_cast<int>(col)) += a.at(r, i);
            int s = sign_factor(g.parity(x), ra.space.parity(i));
            for (int r = 0; r < db; ++r)
                if (!b.at(r, j).is_zero()) {
                    Scalar v = b.at(r, j);
                    if (s < 0) v = -v;
                    m.at(index[static_cast<size_t>(i * db + r)], static_cast<int>(col)) += v;
                }
        }
        out.action.push_back(std::move(m));
    }
    return out;
}

namespace {

/* Shared construction for the exterior and symmetric squares. `sym` selects
 * uv = +(-1)^{|u||v|} vu (symmetric) versus uv = -(-1)^{|u||v|} vu. */
Representation square_rep(const Representation& r, bool sym) {
    const auto& g = *r.algebra;
    int p = r.space.even_dim(), d = r.dim();

    // canonical pairs (a,b), a <= b in the global order; diagonal pairs
    // survive exactly when the sign rule allows them
    auto diagonal_ok = [&](int a) {
        bool odd = r.space.parity(a) == Parity::odd;
        return sym ? !odd : odd;
    };
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> index(static_cast<size_t>(d * d), -1);
    std::vector<std::string> even, odd;
    // even block: e e pairs first, then xi xi; odd block: e xi in lex order
    auto push = [&](int a, int b) {
        index[static_cast<size_t>(a * d + b)] = static_cast<int>(pairs.size());
        pairs.emplace_back(a, b);
        std::string lbl = r.space.label(a) + r.space.label(b);
        (r.space.parity(a) + r.space.parity(b) == Parity::even ? even : odd).push_back(lbl);
    };
    for (int a = 0; a < p; ++a)
        for (int b = a; b < p; ++b)
            if (a != b || diagonal_ok(a)) push(a, b);
    for (int a = p; a < d; ++a)
        for (int b = a; b < d; ++b)
            if (a != b || diagonal_ok(a)) push(a, b);
    for (int a = 0; a < p; ++a)
        for (int b = p; b < d; ++b) push(a, b);

    int dim2 = static_cast<int>(pairs.size());
    // normalize (u,v) -> coefficient * canonical pair, or zero
    auto canonical = [&](int u, int v) -> std::pair<int, int> { // (index, sign), index -1 if zero
        if (u > v) {
            int s = sign_factor(r.space.parity(u), r.space.parity(v));
            s = sym ? s : -s;
            return {index[static_cast<size_t>(v * d + u)], s};
        }
        int idx = index[static_cast<size_t>(u * d + v)];
        return {idx, 1}; // idx == -1 for a vanishing diagonal pair
    };

    Representation out{r.algebra, SuperSpace(std::move(even), std::move(odd)), {}};
    out.action.reserve(static_cast<size_t>(g.dim()));
    for (int x = 0; x < g.dim(); ++x) {
        const Matrix& a = r.act(x);
        Matrix m(dim2, dim2);
        for (int col = 0; col < dim2; ++col) {
            auto [u, v] = pairs[static_cast<size_t>(col)];
            // x.(uv) = (x.u)v + (-1)^{|x||u|} u(x.v)
            for (int w = 0; w < d; ++w) {
                if (!a.at(w, u).is_zero()) {
                    auto [idx, s] = canonical(w, v);
                    if (idx >= 0) {
                        Scalar val = a.at(w, u);
                        if (s < 0) val = -val;
                        m.at(idx, col) += val;
                    }
                }
                if (!a.at(w, v).is_zero()) {
                    int s0 = sign_factor(g.parity(x), r.space.parity(u));
                    auto [idx, s] = canonical(u, w);
                    if (idx >= 0) {
                        Scalar val = a.at(w, v);
                        if (s0 * s < 0) val = -val;
                        m.at(idx, col) += val;
                    }
                }
            }
        }
        out.action.push_back(std::move(m));
    }
    return out;
}

} // namespace

Representation exterior_square(const Representation& r) { return square_rep(r, false); }
Representation symmetric_square(const Representation& r) { return square_rep(r, true); }

Representation twist(const Representation& r, const Matrix& theta) {
    const auto& g = *r.algebra;
    int d = g.dim();
    if (theta.rows() != d || theta.cols() != d) throw not_an_automorphism("wrong size");
    // parity preserving
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (!theta.at(i, j).is_zero() && g.parity(i) != g.parity(j))
                throw not_an_automorphism("does not preserve parity");
    if (rank(theta) != d) throw not_an_automorphism("not invertible");
    // bracket preserving on basis pairs
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec lhs(static_cast<size_t>(d));
            for (const auto& [l, c] : g.bracket(i, j)) lhs[static_cast<size_t>(l)] = c;
            Vec want = bracket_apply(g, theta.column(i), theta.column(j));
            if (theta.apply(lhs) != want) throw not_an_automorphism("does not preserve brackets");
        }

    Representation out{r.algebra, r.space, {}};
    out.action.reserve(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        Matrix m(r.dim(), r.dim());
        for (int l = 0; l < d; ++l)
            if (!theta.at(l, i).is_zero()) m = m + r.act(l).scaled(theta.at(l, i));
        out.action.push_back(std::move(m));
    }
    return out;
}

std::vector<Matrix> intertwiners(const Representation& r1, const Representation& r2) {
    if (r1.algebra != r2.algebra) throw algebra_mismatch();
    const auto& g = *r1.algebra;
    int d1 = r1.dim(), d2 = r2.dim();

    // unknowns: even entries phi[i][j], parity_V2(i) == parity_V1(j)
    std::vector<std::pair<int, int>> slots;
    std::vector<int> slot_index(static_cast<size_t>(d2 * d1), -1);
    for (int i = 0; i < d2; ++i)
        for (int j = 0; j < d1; ++j)
            if (r2.space.parity(i) == r1.space.parity(j)) {
                slot_index[static_cast<size_t>(i * d1 + j)] = static_cast<int>(slots.size());
                slots.emplace_back(i, j);
            }

    Matrix sys(g.dim() * d2 * d1, static_cast<int>(slots.size()));
    int row = 0;
    for (int x = 0; x < g.dim(); ++x) {
        const Matrix& a1 = r1.act(x);
        const Matrix& a2 = r2.act(x);
        // (phi a1 - a2 phi)[i][j] = 0
        for (int i = 0; i < d2; ++i)
            for (int j = 0; j < d1; ++j) {
                for (int t = 0; t < d1; ++t) {
                    int s = slot_index[static_cast<size_t>(i * d1 + t)];
                    if (s >= 0 && !a1.at(t, j).is_zero()) sys.at(row, s) += a1.at(t, j);
                }
                for (int t = 0; t < d2; ++t) {
                    int s = slot_index[static_cast<size_t>(t * d1 + j)];
                    if (s >= 0 && !a2.at(i, t).is_zero()) sys.at(row, s) -= a2.at(i, t);
                }
                ++row;
            }
    }
    std::vector<Vec> ker = kernel(sys);
    std::vector<Matrix> basis;
    basis.reserve(ker.size());
    for (const auto& v : ker) {
        Matrix phi(d2, d1);
        for (size_t s = 0; s < slots.size(); ++s) phi.at(slots[s].first, slots[s].second) = v[s];
        basis.push_back(std::move(phi));
    }
    return basis;
}

int max_rank_of_span(const std::vector<Matrix>& mats) {
    if (mats.empty()) return 0;
    std::vector<Matrix> family;
    family.push_back(Matrix(mats[0].rows(), mats[0].cols()));
    for (const auto& m : mats) family.push_back(m);
    return max_rank_over_affine_family(family);
}

std::optional<Matrix> invertible_in_span(const std::vector<Matrix>& mats) {
    if (mats.empty()) return std::nullopt;
    int n = mats[0].rows();
    if (n != mats[0].cols() || max_rank_of_span(mats) < n) return std::nullopt;
    // deterministic search: single elements, then small integer combinations
    for (const auto& m : mats)
        if (rank(m) == n) return m;
    for (long bound = 1; bound <= 8; ++bound) {
        std::vector<long> c(mats.size(), -bound);
        for (;;) {
            Matrix acc(n, n);
            for (size_t i = 0; i < mats.size(); ++i)
                if (c[i] != 0) acc = acc + mats[i].scaled(Scalar(c[i]));
            if (rank(acc) == n) return acc;
            size_t pos = 0;
            while (pos < c.size() && c[pos] == bound) c[pos++] = -bound;
            if (pos == c.size()) break;
            ++c[pos];
        }
    }
    return std::nullopt; // not reached for the spans arising here
}

GeneratedSubmodule submodule_generated(const Representation& r, const Vec& v) {
    SpanBuilder span(r.dim());
    std::vector<Vec> frontier;
    if (span.insert(v)) frontier.push_back(v);
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const auto& u : frontier)
            for (int x = 0; x < r.algebra->dim(); ++x) {
                Vec w = r.act(x).apply(u);
                if (span.insert(w)) next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    GeneratedSubmodule out;
    out.basis = span.basis();
    for (const auto& b : out.basis) {
        bool even = true;
        for (int i = 0; i < r.dim(); ++i)
            if (!b[static_cast<size_t>(i)].is_zero()) {
                even = r.space.parity(i) == Parity::even;
                break;
            }
        (even ? out.even_dim : out.odd_dim)++;
    }
    return out;
}

namespace {

std::vector<WeightVector> highest_vectors(const Representation& r, bool include_odd_roots) {
    const auto& g = *r.algebra;
    // diagonal weights of the module basis
    std::vector<std::vector<Scalar>> weights(static_cast<size_t>(r.dim()));
    for (int c : g.cartan_indices()) {
        const Matrix& a = r.act(c);
        for (int i = 0; i < r.dim(); ++i)
            for (int j = 0; j < r.dim(); ++j)
                if (i != j && !a.at(i, j).is_zero())
                    throw error("even_highest_vectors requires a diagonal Cartan action");
        for (int i = 0; i < r.dim(); ++i) weights[static_cast<size_t>(i)].push_back(a.at(i, i));
    }

    std::vector<int> raising = g.positive_even_roots();
    if (include_odd_roots)
        for (int x : g.positive_odd_roots()) raising.push_back(x);

    // group basis indices by weight, then solve the kernel weight by weight
    std::vector<WeightVector> out;
    std::vector<bool> seen(static_cast<size_t>(r.dim()), false);
    for (int i = 0; i < r.dim(); ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        std::vector<int> group;
        for (int j = i; j < r.dim(); ++j)
            if (!seen[static_cast<size_t>(j)] && weights[static_cast<size_t>(j)] == weights[static_cast<size_t>(i)] &&
                r.space.parity(j) == r.space.parity(i)) {
                seen[static_cast<size_t>(j)] = true;
                group.push_back(j);
            }
        Matrix sys(static_cast<int>(raising.size()) * r.dim(), static_cast<int>(group.size()));
        int row = 0;
        for (int x : raising) {
            const Matrix& a = r.act(x);
            for (int out_row = 0; out_row < r.dim(); ++out_row) {
                for (size_t c = 0; c < group.size(); ++c)
                    sys.at(row, static_cast<int>(c)) = a.at(out_row, group[c]);
                ++row;
            }
        }
        for (const auto& kv : kernel(sys)) {
            Vec v(static_cast<size_t>(r.dim()));
            for (size_t c = 0; c < group.size(); ++c) v[static_cast<size_t>(group[c])] = kv[c];
            out.push_back({weights[static_cast<size_t>(i)], r.space.parity(i), std::move(v)});
        }
    }
    return out;
}

} // namespace

std::vector<WeightVector> even_highest_vectors(const Representation& r) {
    return highest_vectors(r, false);
}

std::vector<WeightVector> super_highest_vectors(const Representation& r) {
    return highest_vectors(r, true);
}

Matrix unipotent_exp(const Matrix& a, const Scalar& c) {
    int n = a.rows();
    Matrix result = Matrix::identity(n);
    Matrix power = Matrix::identity(n);
    Scalar cpow(1);
    Rational fact(1);
    for (int i = 1; i <= n; ++i) {
        power = power * a;
        if (power.is_zero()) break;
        cpow = cpow * c;
        fact *= Rational(i);
        result = result + power.scaled(cpow * Scalar(fact.inverse()));
    }
    return result;
}

} // namespace lssa
