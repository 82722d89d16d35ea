#include "lssa/thm4.hpp"

namespace lssa {

Representation thm4_module(const AlgebraPtr& g) {
    Representation w = standard_rep(g);
    Representation e2 = parity_shift(exterior_square(w));
    return direct_sum({e2, e2});
}

Vec thm4_base_point(const Representation& u, int m) {
    Vec a(static_cast<size_t>(u.dim()));
    for (int i = 1; i <= m; ++i) {
        std::string first = "e" + std::to_string(i + 1) + "xi" + std::to_string(i) + "'";
        std::string second = "e" + std::to_string(i) + "xi" + std::to_string(i) + "''";
        a[static_cast<size_t>(u.space.index_of(first))] = Scalar(1);
        a[static_cast<size_t>(u.space.index_of(second))] = Scalar(1);
    }
    return a;
}

Thm4Instance build_thm4(int m) {
    if (m < 1) throw error("m must be positive");
    auto g = LieSuperalgebra::make(AlgebraKind::sl, m + 1, m);
    Representation u = thm4_module(g);
    Vec a = thm4_base_point(u, m);
    Cocycle ev = evaluation_map(u, a);
    ProductTable table = lssa_from_cocycle(ev); // throws not_bijective on rank drop
    return Thm4Instance{m, g, std::move(u), std::move(a), std::move(ev), std::move(table)};
}

KernelSystemReport kernel_system_check(int m) {
    auto ggl = LieSuperalgebra::make(AlgebraKind::gl, m + 1, m);
    Representation u = thm4_module(ggl);
    Vec a = thm4_base_point(u, m);
    Cocycle ev = evaluation_map(u, a);

    KernelSystemReport rep;
    std::vector<Vec> ker = kernel(ev.q);
    rep.gl_kernel_dim = static_cast<int>(ker.size());
    if (rep.gl_kernel_dim != 1) {
        rep.details = "gl-kernel dimension " + std::to_string(rep.gl_kernel_dim) + ", expected 1";
        return rep;
    }

    // expected generator: identity on the even block, minus identity on the
    // odd block
    Vec expected(static_cast<size_t>(ggl->dim()));
    for (int i = 1; i <= m + 1; ++i)
        expected[static_cast<size_t>(
            ggl->index_of("E_" + std::to_string(i) + "_" + std::to_string(i)))] = Scalar(1);
    for (int j = 1; j <= m; ++j)
        expected[static_cast<size_t>(ggl->index_of("E_" + std::to_string(m + 1 + j) + "_" +
                                                   std::to_string(m + 1 + j)))] = Scalar(-1);

    SpanBuilder span(ggl->dim());
    span.insert(expected);
    if (!span.contains(ker[0]) || is_zero(ker[0])) {
        rep.details = "kernel generator is not proportional to (I, 0; 0, -I)";
        return rep;
    }

    SuperMatrix gen = ggl->from_coordinates(expected);
    Scalar str = gen.supertrace();
    rep.supertrace_value = str.rational_value();
    if (rep.supertrace_value != Rational(2 * m + 1)) {
        rep.details = "supertrace of the generator is " + str.str();
        return rep;
    }
    rep.pass = true;
    rep.details = "gl-kernel = span{(I_" + std::to_string(m + 1) + ", 0; 0, -I_" +
                  std::to_string(m) + ")}, supertrace " + std::to_string(2 * m + 1) +
                  "c forces c = 0 over sl";
    return rep;
}

Report verify_thm4(int m) {
    Report rep{"thm4(m=" + std::to_string(m) + ")", {}};
    std::optional<Thm4Instance> built;
    run_check(rep, "ev_a is bijective", [&]() -> std::pair<bool, std::string> {
        built = build_thm4(m);
        int r = rank(built->cocycle.q);
        return {r == built->algebra->dim(),
                "rank " + std::to_string(r) + " = dim sl(" + std::to_string(m + 1) + "|" +
                    std::to_string(m) + ") = " + std::to_string(built->algebra->dim())};
    });
    if (!rep.checks.back().pass || !built) return rep;
    Thm4Instance& inst = *built;

    run_check(rep, "kernel system over gl", [&]() -> std::pair<bool, std::string> {
        KernelSystemReport k = kernel_system_check(m);
        return {k.pass, k.details};
    });
    run_check(rep, "induced product is left-symmetric", [&]() -> std::pair<bool, std::string> {
        return {check_lssa(inst.table), "all ordered basis triples"};
    });
    run_check(rep, "associated bracket recovers sl(m+1|m)", [&]() -> std::pair<bool, std::string> {
        return {bracket_matches_algebra(inst.table), ""};
    });
    run_check(rep, "left and right multiplications are supertraceless",
              [&]() -> std::pair<bool, std::string> {
                  const auto& g = *inst.algebra;
                  auto str_of = [&](const Matrix& op) {
                      Scalar t;
                      for (int d = 0; d < g.dim(); ++d)
                          t += (g.parity(d) == Parity::even ? op.at(d, d) : -op.at(d, d));
                      return t;
                  };
                  for (int i = 0; i < g.dim(); ++i) {
                      if (!str_of(inst.table.left_mult(i)).is_zero()) return {false, "rho"};
                      if (!str_of(right_mul(inst.table, i)).is_zero()) return {false, "gamma"};
                  }
                  return {true, ""};
              });
    return rep;
}

} // namespace lssa
