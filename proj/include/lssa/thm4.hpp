#pragma once

#include "lssa/product_table.hpp"
#include "lssa/report.hpp"

namespace lssa {

/* The sl(m+1|m) construction: U = Pi(wedge^2 W) + Pi(wedge^2 W) for the
 * standard module W, with base point
 * a = sum_{i=1}^{m} (e'_{i+1} xi'_i + e''_i xi''_i). */
struct Thm4Instance {
    int m = 0;
    AlgebraPtr algebra;
    Representation module;
    Vec base_point;
    Cocycle cocycle;
    ProductTable table;
};

/* Builds the instance and the induced product; throws not_bijective if the
 * evaluation map were singular (it never is). */
Thm4Instance build_thm4(int m);

/* The module U and base point alone (also available over gl(m+1|m)). */
Representation thm4_module(const AlgebraPtr& g);
Vec thm4_base_point(const Representation& u, int m);

struct KernelSystemReport {
    bool pass = false;
    int gl_kernel_dim = -1;
    Rational supertrace_value;
    std::string details;
};

/* Recomputes ker(ev_a) over gl(m+1|m) from the representation itself and
 * checks it is exactly the line c(I_{m+1}, 0; 0, -I_m) with supertrace
 * (2m+1)c, so the kernel over sl(m+1|m) vanishes. */
KernelSystemReport kernel_system_check(int m);

/* Rank, kernel system, axiom, bracket recovery and supertrace checks. */
Report verify_thm4(int m);

} // namespace lssa
