#include "lssa/property_suites.hpp"

#include <random>

#include "lssa/kac21.hpp"

namespace lssa {

namespace {

using Rng = std::mt19937_64;

Vec random_homogeneous(Rng& rng, const LieSuperalgebra& g, Parity p) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    Vec v(static_cast<size_t>(g.dim()));
    for (int i = 0; i < g.dim(); ++i)
        if (g.parity(i) == p) v[static_cast<size_t>(i)] = Scalar(Rational(coeff(rng)));
    return v;
}

SuperMatrix random_homogeneous_supermatrix(Rng& rng, int m, int n, Parity p) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    SuperMatrix x(m, n);
    for (int i = 0; i < m + n; ++i)
        for (int j = 0; j < m + n; ++j)
            if ((x.row_parity(i) + x.row_parity(j)) == p)
                x.at(i, j) = Scalar(Rational(coeff(rng)));
    return x;
}

Parity random_parity(Rng& rng) {
    return std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? Parity::even : Parity::odd;
}

/* Random family member at a non-excluded rational parameter point. */
FamilyInstance random_family(Rng& rng, const AlgebraPtr& g) {
    std::uniform_int_distribution<int> which(0, 2);
    std::uniform_int_distribution<long> num(-8, 8);
    std::uniform_int_distribution<long> den(1, 3);
    auto pick = [&] { return Rational(num(rng), den(rng)); };
    for (;;) {
        try {
            switch (which(rng)) {
                case 0: return build_family(g, Family::A, {Scalar(pick())});
                case 1: return build_family(g, Family::B, {Scalar(pick()), Scalar(pick())});
                default: return build_family(g, Family::C, {Scalar(pick())});
            }
        } catch (const excluded_parameter&) {
            // resample
        }
    }
}

/* Right identity of the even-part LSA: solves x.e = x over even x and even
 * e; the even part of every family product is an LSA on gl_2, which has a
 * unique right identity. */
std::optional<Vec> even_right_identity(const ProductTable& p) {
    const auto& g = *p.algebra();
    int pe = g.space().even_dim();
    Matrix sys(pe * pe, pe);
    Vec rhs(static_cast<size_t>(pe) * static_cast<size_t>(pe));
    for (int i = 0; i < pe; ++i) {
        const Matrix& li = p.left_mult(i);
        for (int l = 0; l < pe; ++l) {
            int row = i * pe + l;
            for (int j = 0; j < pe; ++j) sys.at(row, j) = li.at(l, j);
            rhs[static_cast<size_t>(row)] = (l == i) ? Scalar(1) : Scalar(0);
        }
    }
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    Vec e(static_cast<size_t>(g.dim()));
    for (int j = 0; j < pe; ++j) e[static_cast<size_t>(j)] = (*sol)[static_cast<size_t>(j)];
    return e;
}

} // namespace

Report property_suites(const PropertyOptions& opt) {
    Report rep{"properties(seed=" + std::to_string(opt.seed) + ")", {}};

    std::vector<AlgebraPtr> pool = {
        LieSuperalgebra::make(AlgebraKind::sl, 2, 1),
        LieSuperalgebra::make(AlgebraKind::sl, 3, 1),
        LieSuperalgebra::make(AlgebraKind::gl, 2, 1),
        LieSuperalgebra::make(AlgebraKind::sl, 3, 2),
    };

    run_check(rep, "super-Jacobi identity (" + std::to_string(opt.cases) + " cases)",
              [&]() -> std::pair<bool, std::string> {
                  Rng rng(opt.seed);
                  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
                  for (int t = 0; t < opt.cases; ++t) {
                      const auto& g = *pool[pick(rng)];
                      Parity px = random_parity(rng), py = random_parity(rng),
                             pz = random_parity(rng);
                      Vec x = random_homogeneous(rng, g, px);
                      Vec y = random_homogeneous(rng, g, py);
                      Vec z = random_homogeneous(rng, g, pz);
                      Vec t1 = scaled(bracket_apply(g, x, bracket_apply(g, y, z)),
                                      Scalar(sign_factor(px, pz)));
                      Vec t2 = scaled(bracket_apply(g, y, bracket_apply(g, z, x)),
                                      Scalar(sign_factor(py, px)));
                      Vec t3 = scaled(bracket_apply(g, z, bracket_apply(g, x, y)),
                                      Scalar(sign_factor(pz, py)));
                      if (!is_zero(t1 + t2 + t3)) return {false, "case " + std::to_string(t)};
                  }
                  return {true, ""};
              });

    run_check(rep, "supertrace of supercommutators (" + std::to_string(opt.cases) + " cases)",
              [&]() -> std::pair<bool, std::string> {
                  Rng rng(opt.seed + 1);
                  std::uniform_int_distribution<int> mn(1, 3);
                  for (int t = 0; t < opt.cases; ++t) {
                      int m = mn(rng), n = mn(rng);
                      SuperMatrix x = random_homogeneous_supermatrix(rng, m, n, random_parity(rng));
                      SuperMatrix y = random_homogeneous_supermatrix(rng, m, n, random_parity(rng));
                      if (!x.supercommutator(y).supertrace().is_zero())
                          return {false, "case " + std::to_string(t)};
                  }
                  return {true, ""};
              });

    run_check(rep, "-st is an automorphism (" + std::to_string(opt.cases) + " cases)",
              [&]() -> std::pair<bool, std::string> {
                  Rng rng(opt.seed + 2);
                  std::uniform_int_distribution<int> mn(1, 3);
                  for (int t = 0; t < opt.cases; ++t) {
                      int m = mn(rng), n = mn(rng);
                      SuperMatrix x = random_homogeneous_supermatrix(rng, m, n, random_parity(rng));
                      SuperMatrix y = random_homogeneous_supermatrix(rng, m, n, random_parity(rng));
                      if (x.neg_supertranspose().supercommutator(y.neg_supertranspose()) !=
                          x.supercommutator(y).neg_supertranspose())
                          return {false, "case " + std::to_string(t)};
                  }
                  return {true, ""};
              });

    run_check(rep, "Phi(Psi(L)) = L for family members (" + std::to_string(opt.cases) + " cases)",
              [&]() -> std::pair<bool, std::string> {
                  Rng rng(opt.seed + 3);
                  for (int t = 0; t < opt.cases; ++t) {
                      FamilyInstance f = random_family(rng, pool[0]);
                      Representation rho = left_regular(f.table);
                      ProductTable back =
                          lssa_from_cocycle(Cocycle{rho, Matrix::identity(pool[0]->dim())});
                      if (back != f.table) return {false, "case " + std::to_string(t)};
                  }
                  return {true, ""};
              });

    run_check(rep,
              "cocycle vanishing on the even part is a g0-map on the odd part (" +
                  std::to_string(opt.cases) + " cases)",
              [&]() -> std::pair<bool, std::string> {
                  Rng rng(opt.seed + 4);
                  const auto& g = *pool[0];
                  for (int t = 0; t < opt.cases; ++t) {
                      FamilyInstance f = random_family(rng, pool[0]);
                      Representation rho = left_regular(f.table);
                      auto e = even_right_identity(f.table);
                      if (!e) return {false, "no even right identity at case " + std::to_string(t)};
                      // p = id - ev_e is a cocycle of rho vanishing on the
                      // even subalgebra
                      Cocycle ev = evaluation_map(rho, *e);
                      Matrix p = Matrix::identity(g.dim()) - ev.q;
                      if (!check_cocycle(Cocycle{rho, p}))
                          return {false, "difference is not a cocycle at case " + std::to_string(t)};
                      for (int j = 0; j < g.dim(); ++j)
                          if (g.parity(j) == Parity::even && !is_zero(p.column(j)))
                              return {false, "does not vanish on g0 at case " + std::to_string(t)};
                      // p([x,y]) = rho(x) p(y) for even x, odd y
                      for (int x = 0; x < g.dim(); ++x) {
                          if (g.parity(x) != Parity::even) continue;
                          for (int y = 0; y < g.dim(); ++y) {
                              if (g.parity(y) != Parity::odd) continue;
                              Vec lhs(static_cast<size_t>(g.dim()));
                              for (const auto& [l, c] : g.bracket(x, y))
                                  lhs = lhs + scaled(p.column(l), c);
                              if (lhs != rho.act(x).apply(p.column(y)))
                                  return {false, "case " + std::to_string(t)};
                          }
                      }
                  }
                  return {true, ""};
              });

    return rep;
}

} // namespace lssa
