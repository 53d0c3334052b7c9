#pragma once

#include "ellint2/core.hpp"

namespace ellint2::baseline {

/// First-order logarithmic approximation with two published bound pairs on
/// r = E - value.
struct BaselineResult {
    double value;
    double lopez_lower;
    double lopez_upper;
    double cg_lower;
    double cg_upper;
};

[[nodiscard]] BaselineResult cg_lopez_approx(const EvalPoint& p);

/// Bound widths divided by E.
struct DeltaStar {
    double lopez;
    double cg;
};

[[nodiscard]] DeltaStar delta_star(const EvalPoint& p, double oracle_E);

}  // namespace ellint2::baseline
