#pragma once

#include <cstdint>

#include "lssa/report.hpp"

namespace lssa {

struct PropertyOptions {
    std::uint64_t seed = 20240;
    int cases = 1000;
};

/* Seeded randomized identity checks: super-Jacobi, supertrace of brackets,
 * the -st automorphism, Phi(Psi(L)) = L for the constructed families, and
 * the cocycle-difference consequence of a cocycle vanishing on the even
 * part. All exact. */
Report property_suites(const PropertyOptions& opt);

} // namespace lssa
