#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "ellint2/core.hpp"

namespace ellint2::aux {

struct AuxResult {
    double value;
    double remainder_bound;
    int terms_used;
    bool condition_ok;
};

/// Closed form of integral_0^lambda t^{2j} / (1 - t^2)^j dt, j >= 1, 0 <= lambda < 1.
[[nodiscard]] double lemma1_integral(int j, double lambda);

/// Binomial expansion in (1-k^2) t^2/(1-t^2), integrated termwise.
/// Requires beta > lambda^2, otherwise throws RegionError.
[[nodiscard]] AuxResult expansion_bf(const EvalPoint& p, ExpansionOrder order);

/// Expansion around the complete integral with F_m(1/(1-k^2)) coefficients.
/// Requires beta k^2 < 1, otherwise throws RegionError.
[[nodiscard]] AuxResult expansion_carlson(const EvalPoint& p, ExpansionOrder order);

/// E(k) - sqrt(1-k^2) * integral_0^asin(sqrt(1-lambda^2)) sqrt(1 + k^2/(1-k^2) sin^2) dphi.
[[nodiscard]] double reflection_E(const EvalPoint& p);

struct RegionCell {
    double lambda;
    double k;
    RegionFlags flags;
};

/// Interior lattice (i/r, j/r), i, j = 1 .. r-1, for resolution r >= 2.
[[nodiscard]] std::vector<RegionCell> region_grid(int resolution);

struct RegionCounts {
    long cond1_only = 0;
    long cond2_only = 0;
    long both = 0;
    long neither = 0;
};

[[nodiscard]] RegionCounts count_regions(std::span<const RegionCell> cells);

/// CSV with header `lambda,k,cond1,cond2`, 17 significant digits, 0/1 flags.
void write_region_csv(std::ostream& out, std::span<const RegionCell> cells);
[[nodiscard]] std::vector<RegionCell> read_region_csv(std::istream& in);

}  // namespace ellint2::aux
