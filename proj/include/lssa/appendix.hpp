#pragma once

#include "lssa/kac21.hpp"
#include "lssa/report.hpp"

namespace lssa {

/* Reference multiplication table of a family over its symbolic parameter
 * field, entered as literal coefficient data independently of the
 * construction pipeline. */
ProductTable reference_table(const AlgebraPtr& g, Family fam);

struct TableComparison {
    int matches = 0, total = 0;
    std::vector<std::string> mismatches;
    bool all() const { return matches == total && total > 0; }
};

/* Entry-by-entry comparison of two product tables over the same algebra;
 * one entry per ordered basis pair. Mismatches record both values. */
TableComparison compare_tables(const ProductTable& built, const ProductTable& expected);

/* Builds all three families symbolically and compares against the reference
 * tables (3 x 64 products, exact field equality). */
struct AppendixReport {
    TableComparison a, b, c;
    int total_matches() const { return a.matches + b.matches + c.matches; }
    int total() const { return a.total + b.total + c.total; }
    bool all() const { return a.all() && b.all() && c.all(); }
};

AppendixReport verify_appendix(const AlgebraPtr& g);

/* Specializes the reference table at a rational parameter point and compares
 * against the direct construction there. Throws excluded_parameter when the
 * point is excluded. */
TableComparison verify_table_at(const AlgebraPtr& g, Family fam,
                                const std::map<std::string, Rational>& bindings);

/* Module-level -st isomorphisms (invertible intertwiners between the
 * twisted module and its mirror) plus the absence of isomorphisms across
 * families at sample points. */
Report verify_negst_relations(const AlgebraPtr& g);

/* Excluded-parameter boundaries: the generic evaluation map stays singular
 * for K(1,-1), PiK(0,k1)+PiK(0,-2-k1) and PiK(0,-1)^{(2)}. */
Report verify_degenerate_failures(const AlgebraPtr& g);

/* Kac module dimension grid, submodule extraction at atypical weights and
 * the t_minus table. */
Report verify_kac_grid(const AlgebraPtr& g);

} // namespace lssa
