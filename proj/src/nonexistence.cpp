#include "lssa/nonexistence.hpp"

namespace lssa {

Representation build_P(int m) {
    auto g = LieSuperalgebra::make(AlgebraKind::sl, m, 1);
    Representation s = standard_rep(g);
    Representation t = trivial_odd_rep(g);
    std::vector<Representation> parts;
    std::vector<std::string> tags;
    for (int i = 0; i < m; ++i) {
        parts.push_back(s);
        tags.push_back("@" + std::to_string(i + 1));
    }
    for (int i = 0; i < m; ++i) {
        parts.push_back(t);
        tags.push_back("@" + std::to_string(m + i + 1));
    }
    return direct_sum(parts, tags);
}

Representation build_P_dual(int m) { return dual_rep(build_P(m)); }

Representation build_Q3() {
    auto g = LieSuperalgebra::make(AlgebraKind::sl, 3, 1);
    Representation s = standard_rep(g);
    return direct_sum({s, s, parity_shift(exterior_square(s))}, {"@1", "@2", "@3"});
}

Representation build_Q3_dual() { return dual_rep(build_Q3()); }

namespace {

/* True when f(x) restricted to the even part of V is the zero map. */
bool annihilates_even_part(const Representation& v, int x) {
    const Matrix& a = v.act(x);
    for (int j = 0; j < v.space.even_dim(); ++j)
        for (int i = 0; i < v.dim(); ++i)
            if (!a.at(i, j).is_zero()) return false;
    return true;
}

/* Generic rank of the designated columns of ev_a: a runs over the full even
 * part symbolically, so the bound holds for every base point. */
int generic_column_rank(const Representation& v, const std::vector<int>& columns) {
    std::vector<Matrix> family;
    family.push_back(Matrix(v.dim(), static_cast<int>(columns.size())));
    for (int t = 0; t < v.space.even_dim(); ++t) {
        Vec a(static_cast<size_t>(v.dim()));
        a[static_cast<size_t>(t)] = Scalar(1);
        Matrix m(v.dim(), static_cast<int>(columns.size()));
        for (size_t c = 0; c < columns.size(); ++c)
            m.set_column(static_cast<int>(c), v.act(columns[c]).apply(a));
        family.push_back(std::move(m));
    }
    return max_rank_over_affine_family(family);
}

} // namespace

WitnessReport certify_no_bijective_ev(const Representation& v, const std::string& name) {
    const auto& g = *v.algebra;
    WitnessReport rep;
    rep.module_name = name;
    rep.superdim = v.space.superdim();

    // single odd root vector annihilating the even part
    int m = g.m();
    for (const std::string& label :
         {"E_1_" + std::to_string(m + 1), "E_" + std::to_string(m + 1) + "_1"}) {
        int x = g.index_of(label);
        if (annihilates_even_part(v, x)) {
            rep.failing_elements = {label};
            rep.certified_generic_rank = 0;
            rep.required_rank = 1;
            rep.certified = true;
            rep.obstruction = "f(" + label + ") annihilates the even part, so ev_a(" + label +
                              ") = 0 for every base point a";
            return rep;
        }
    }

    // deficient generic rank of the odd columns on one side
    for (bool upper : {true, false}) {
        std::vector<int> cols;
        std::vector<std::string> labels;
        for (int i = 1; i <= m; ++i) {
            std::string label = upper ? "E_" + std::to_string(i) + "_" + std::to_string(m + 1)
                                      : "E_" + std::to_string(m + 1) + "_" + std::to_string(i);
            labels.push_back(label);
            cols.push_back(g.index_of(label));
        }
        int r = generic_column_rank(v, cols);
        if (r < m) {
            rep.failing_elements = labels;
            rep.certified_generic_rank = r;
            rep.required_rank = m;
            rep.certified = true;
            rep.obstruction = "generic rank of the ev_a columns at the listed odd root vectors is " +
                              std::to_string(r) + " < " + std::to_string(m);
            return rep;
        }
    }
    throw certification_failed(name);
}

Report verify_nonexistence(int m) {
    if (m < 3) throw error("nonexistence witnesses require m >= 3");
    Report rep{"nonexist(m=" + std::to_string(m) + ")", {}};
    auto record = [&](const std::string& name, const Representation& v,
                      const std::string& want_dim) {
        run_check(rep, name, [&]() -> std::pair<bool, std::string> {
            WitnessReport w = certify_no_bijective_ev(v, name);
            bool ok = w.certified && w.superdim == want_dim;
            return {ok, w.obstruction + " (superdim " + w.superdim + ")"};
        });
    };
    std::string pdim = std::to_string(m * m) + "|" + std::to_string(2 * m);
    record("P_" + std::to_string(m), build_P(m), pdim);
    record("P_" + std::to_string(m) + "*", build_P_dual(m), pdim);
    record("Q_3", build_Q3(), "9|6");
    record("Q_3*", build_Q3_dual(), "9|6");
    return rep;
}

} // namespace lssa
