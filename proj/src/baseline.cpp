#include "ellint2/baseline.hpp"

#include <cmath>

#include "ellint2/numeric.hpp"

namespace ellint2::baseline {

BaselineResult cg_lopez_approx(const EvalPoint& p)
{
    if (!p.interior()) throw DomainError("baseline needs an interior point");
    const Wide lambda = p.lambda();
    const Wide k2 = Wide(p.k()) * p.k();
    const Wide l2 = lambda * lambda;
    const Wide l3 = l2 * lambda;
    const Wide y = numeric::one_minus_sq(lambda);  // 1 - lambda^2
    const Wide x = 1 - k2 * l2;                     // 1 - k^2 lambda^2
    const Wide root_sum = std::sqrt(y) + std::sqrt(x);
    const Wide log4 = std::log(4 / root_sum);
    const Wide log2 = std::log(2 / root_sum);

    const Wide value = lambda * x * log4 + k2 * l3;

    const Wide u = 2 - l2 - k2 * l2;
    const Wide lopez_log = std::log((4 - l2 - k2 * l2) / u) + 2;
    const Wide lopez_lower = -3 * k2 * l3 * u / 8 * lopez_log;
    const Wide lopez_upper = lambda * u / 8 * lopez_log;

    const Wide q = std::sqrt(y * x);
    const Wide s = l2 * (1 + k2);
    const Wide cg_lower = (lambda * q / (2 * (1 - q)) - 3 * k2 * l3 * (2 - s) / (2 * l2 * (1 + k2))) * log2;
    const Wide cg_upper = lambda * (2 - s) / (2 + s) * log4 - k2 * l3 * q / (1 - q) * log2;

    return {static_cast<double>(value), static_cast<double>(lopez_lower), static_cast<double>(lopez_upper),
            static_cast<double>(cg_lower), static_cast<double>(cg_upper)};
}

DeltaStar delta_star(const EvalPoint& p, double oracle_E)
{
    if (!(oracle_E > 0)) throw DomainError("delta_star: E must be positive");
    const auto r = cg_lopez_approx(p);
    return {(r.lopez_upper - r.lopez_lower) / oracle_E, (r.cg_upper - r.cg_lower) / oracle_E};
}

}  // namespace ellint2::baseline
