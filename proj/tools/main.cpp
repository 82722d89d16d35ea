#include <CLI11.hpp>

#include <iostream>

#include "lssa/appendix.hpp"
#include "lssa/json_io.hpp"
#include "lssa/property_suites.hpp"
#include "lssa/thm4.hpp"

using namespace lssa;

namespace {

std::map<std::string, Rational> parse_bindings(const std::string& at) {
    std::map<std::string, Rational> out;
    size_t pos = 0;
    while (pos < at.size()) {
        size_t comma = at.find(',', pos);
        std::string item = at.substr(pos, comma == std::string::npos ? comma : comma - pos);
        size_t eq = item.find('=');
        if (eq == std::string::npos) throw error("bad binding (expected name=value): " + item);
        out[item.substr(0, eq)] = Rational::parse(item.substr(eq + 1));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw error("empty binding list");
    return out;
}

int finish(const Report& rep, bool as_json) {
    if (as_json)
        std::cout << report_to_json(rep).dump(2) << "\n";
    else
        rep.print(std::cout);
    return rep.pass() ? 0 : 1;
}

AlgebraPtr sl21() { return algebra_from_name("sl(2|1)"); }

Family family_from_string(const std::string& s) {
    if (s == "A" || s == "a") return Family::A;
    if (s == "B" || s == "b") return Family::B;
    if (s == "C" || s == "c") return Family::C;
    throw error("unknown family: " + s + " (expected A, B or C)");
}

std::vector<Scalar> family_params(Family fam, const std::map<std::string, Rational>& bindings) {
    if (fam == Family::B) return {Scalar(bindings.at("k1")), Scalar(bindings.at("k2"))};
    return {Scalar(bindings.at("k"))};
}

std::vector<Scalar> symbolic_params(Family fam) {
    if (fam == Family::B) {
        auto ctx = context_B();
        return {Scalar::param(ctx, 0), Scalar::param(ctx, 1)};
    }
    return {Scalar::param(context_A(), 0)};
}

int cmd_verify_tables(const std::string& at, const std::string& family_opt, bool as_json) {
    Report rep{"verify-tables", {}};
    auto g = sl21();
    if (at.empty()) {
        // full symbolic run against the reference tables
        for (Family fam : {Family::A, Family::B, Family::C}) {
            run_check(rep, "table " + family_name(fam) + " (symbolic)",
                      [&]() -> std::pair<bool, std::string> {
                          FamilyInstance f = build_family(g, fam, symbolic_params(fam));
                          TableComparison cmp =
                              compare_tables(f.table, reference_table(g, fam));
                          std::string details = std::to_string(cmp.matches) + "/" +
                                                std::to_string(cmp.total) + " products match";
                          for (const auto& m : cmp.mismatches) details += "; " + m;
                          return {cmp.all(), details};
                      });
        }
        return finish(rep, as_json);
    }

    std::map<std::string, Rational> bindings = parse_bindings(at);
    std::vector<Family> fams;
    if (!family_opt.empty()) {
        fams.push_back(family_from_string(family_opt));
    } else {
        if (bindings.count("k")) {
            fams.push_back(Family::A);
            fams.push_back(Family::C);
        }
        if (bindings.count("k1") && bindings.count("k2")) fams.push_back(Family::B);
    }
    if (fams.empty()) throw error("bindings match no family (use k=... or k1=...,k2=...)");
    for (Family fam : fams) {
        run_check(rep, "table " + family_name(fam) + " at " + at,
                  [&]() -> std::pair<bool, std::string> {
                      TableComparison cmp = verify_table_at(g, fam, bindings);
                      return {cmp.all(), std::to_string(cmp.matches) + "/" +
                                             std::to_string(cmp.total) + " products match"};
                  });
    }
    return finish(rep, as_json);
}

int cmd_build(const std::string& family_opt, const std::string& params, bool symbolic,
              const std::string& out, bool as_json) {
    Family fam = family_from_string(family_opt);
    std::vector<Scalar> ps =
        symbolic ? symbolic_params(fam) : family_params(fam, parse_bindings(params));
    FamilyInstance f = build_family(sl21(), fam, ps);
    json j = table_to_json(f.table);
    if (!out.empty()) {
        write_json_file(out, j);
        Report rep{"build", {}};
        rep.checks.push_back({"family " + family_name(fam) + " written to " + out, true, "", 0});
        return finish(rep, as_json);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_check_product(const std::string& path, bool as_json) {
    Report rep{"check-product(" + path + ")", {}};
    ProductTable t = table_from_json(read_json_file(path));
    run_check(rep, "left-symmetry axiom on all ordered basis triples",
              [&]() -> std::pair<bool, std::string> { return {check_lssa(t), ""}; });
    run_check(rep, "associated bracket equals the structure constants",
              [&]() -> std::pair<bool, std::string> { return {bracket_matches_algebra(t), ""}; });
    run_check(rep, "left and right multiplications are supertraceless",
              [&]() -> std::pair<bool, std::string> {
                  const auto& g = *t.algebra();
                  for (int i = 0; i < g.dim(); ++i) {
                      Scalar s1, s2;
                      Matrix gm = right_mul(t, i);
                      for (int d = 0; d < g.dim(); ++d) {
                          Scalar sign(g.parity(d) == Parity::even ? 1 : -1);
                          s1 += sign * t.left_mult(i).at(d, d);
                          s2 += sign * gm.at(d, d);
                      }
                      if (!s1.is_zero() || !s2.is_zero())
                          return {false, "at " + g.element(i).label};
                  }
                  return {true, ""};
              });
    return finish(rep, as_json);
}

int cmd_check_cocycle(const std::string& path, bool as_json) {
    Report rep{"check-cocycle(" + path + ")", {}};
    Cocycle c = cocycle_from_json(read_json_file(path));
    run_check(rep, "representation property", [&]() -> std::pair<bool, std::string> {
        return {check_representation(c.rep), ""};
    });
    run_check(rep, "1-cocycle identity on all basis pairs",
              [&]() -> std::pair<bool, std::string> { return {check_cocycle(c), ""}; });
    run_check(rep, "bijectivity", [&]() -> std::pair<bool, std::string> {
        if (c.q.rows() != c.q.cols())
            return {true, "not square (" + std::to_string(c.q.rows()) + "x" +
                              std::to_string(c.q.cols()) + "), not bijective"};
        int r = rank(c.q);
        return {true, r == c.q.rows() ? "bijective (rank " + std::to_string(r) + ")"
                                      : "singular (rank " + std::to_string(r) + ")"};
    });
    return finish(rep, as_json);
}

int cmd_thm4(int m, int max_m, const std::string& emit, bool as_json) {
    if (m > max_m)
        throw error("m = " + std::to_string(m) + " above the practical ceiling " +
                    std::to_string(max_m) + " (raise with --max-m)");
    Report rep = verify_thm4(m);
    if (!emit.empty() && rep.pass()) {
        Thm4Instance inst = build_thm4(m);
        write_json_file(emit, table_to_json(inst.table));
        rep.checks.push_back({"product table written to " + emit, true, "", 0});
    }
    return finish(rep, as_json);
}

int cmd_nonexist(int m, bool as_json) {
    if (as_json) {
        json out = json::array();
        bool all = true;
        for (const auto& [name, v] :
             std::vector<std::pair<std::string, Representation>>{
                 {"P_" + std::to_string(m), build_P(m)},
                 {"P_" + std::to_string(m) + "*", build_P_dual(m)},
                 {"Q_3", build_Q3()},
                 {"Q_3*", build_Q3_dual()}}) {
            WitnessReport w = certify_no_bijective_ev(v, name);
            all = all && w.certified;
            out.push_back(witness_to_json(w));
        }
        std::cout << out.dump(2) << "\n";
        return all ? 0 : 1;
    }
    Report rep = verify_nonexistence(m);
    return finish(rep, false);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of left-symmetric superalgebras on sl(m|n)"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit reports as JSON");

    auto* vt = app.add_subcommand("verify-tables",
                                  "reproduce the family multiplication tables");
    std::string vt_at, vt_family;
    bool vt_symbolic = false;
    vt->add_flag("--symbolic", vt_symbolic, "full symbolic run (default when --at is absent)");
    vt->add_option("--at", vt_at, "rational parameter bindings, e.g. k=0 or k1=1,k2=2");
    vt->add_option("--family", vt_family, "restrict to one family (A, B or C)");

    auto* bd = app.add_subcommand("build", "construct a family member and emit its table");
    std::string bd_family, bd_params, bd_out;
    bool bd_symbolic = false;
    bd->add_option("--family", bd_family, "A, B or C")->required();
    bd->add_option("--params", bd_params, "k=... or k1=...,k2=...");
    bd->add_flag("--symbolic", bd_symbolic, "build over the symbolic parameter field");
    bd->add_option("--out", bd_out, "output file (stdout otherwise)");

    auto* cp = app.add_subcommand("check-product", "verify a product table file");
    std::string cp_path;
    cp->add_option("file", cp_path, "ProductTable JSON")->required();

    auto* cc = app.add_subcommand("check-cocycle", "verify a cocycle file");
    std::string cc_path;
    cc->add_option("file", cc_path, "Cocycle JSON")->required();

    auto* t4 = app.add_subcommand("thm4", "bijective evaluation map on sl(m+1|m)");
    int t4_m = 1, t4_max = 6;
    std::string t4_emit;
    t4->add_option("--m", t4_m, "the m in sl(m+1|m)")->required();
    t4->add_option("--max-m", t4_max, "practical ceiling (default 6)");
    t4->add_option("--emit", t4_emit, "write the product table JSON here");

    auto* nx = app.add_subcommand("nonexist", "nonexistence witnesses for sl(m|1)");
    int nx_m = 3;
    nx->add_option("--m", nx_m, "m >= 3")->required();

    auto* kd = app.add_subcommand("kacdim", "Kac module dimension grid");
    auto* ng = app.add_subcommand("negst", "-st twist isomorphism relations");

    auto* pr = app.add_subcommand("props", "randomized exact property suites");
    PropertyOptions popt;
    pr->add_option("--seed", popt.seed, "RNG seed (default fixed)");
    pr->add_option("--cases", popt.cases, "cases per suite (default 1000)");

    auto* gf = app.add_subcommand("gen-fixtures", "write the reference tables as JSON fixtures");
    std::string gf_dir = "fixtures";
    gf->add_option("--dir", gf_dir, "output directory");

    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (vt->parsed()) return cmd_verify_tables(vt_at, vt_family, as_json);
        if (bd->parsed()) return cmd_build(bd_family, bd_params, bd_symbolic, bd_out, as_json);
        if (cp->parsed()) return cmd_check_product(cp_path, as_json);
        if (cc->parsed()) return cmd_check_cocycle(cc_path, as_json);
        if (t4->parsed()) return cmd_thm4(t4_m, t4_max, t4_emit, as_json);
        if (nx->parsed()) return cmd_nonexist(nx_m, as_json);
        if (kd->parsed()) return finish(verify_kac_grid(sl21()), as_json);
        if (ng->parsed()) return finish(verify_negst_relations(sl21()), as_json);
        if (pr->parsed()) return finish(property_suites(popt), as_json);
        if (gf->parsed()) {
            auto g = sl21();
            write_json_file(gf_dir + "/table_A.json", table_to_json(reference_table(g, Family::A)));
            write_json_file(gf_dir + "/table_B.json", table_to_json(reference_table(g, Family::B)));
            write_json_file(gf_dir + "/table_C.json", table_to_json(reference_table(g, Family::C)));
            std::cout << "wrote table_A.json, table_B.json, table_C.json to " << gf_dir << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
