#pragma once

#include "lssa/product_table.hpp"
#include "lssa/report.hpp"

namespace lssa {

/* Candidate sl(m|1)-modules of dimension m^2|2m whose even part is a sum of
 * copies of the (dual) standard sl_m-module. */
Representation build_P(int m);      // m C^{m|1} + m tr~
Representation build_P_dual(int m);
Representation build_Q3();          // 2 C^{3|1} + Pi wedge^2 C^{3|1}
Representation build_Q3_dual();

struct WitnessReport {
    std::string module_name;
    std::string superdim;
    std::vector<std::string> failing_elements; // odd root vectors carrying the obstruction
    int certified_generic_rank = 0;
    int required_rank = 0;
    bool certified = false;
    std::string obstruction;
};

/* Certifies that the module admits no bijective evaluation map, universally
 * over the base point: either a single odd root vector annihilates the whole
 * even part (so ev_a kills it for every a), or the designated odd columns of
 * ev_a have deficient rank for a fully symbolic base point. Throws
 * certification_failed when no obstruction is found. */
WitnessReport certify_no_bijective_ev(const Representation& v, const std::string& name);

/* The four witnesses P_m, P_m*, Q_3, Q_3*. */
Report verify_nonexistence(int m);

} // namespace lssa
