#include <cmath>
#include <limits>

#include "ellint2/core.hpp"
#include "ellint2/first_expansion.hpp"
#include "ellint2/second_expansion.hpp"
#include "ellint2/special.hpp"

namespace ellint2 {

namespace {

Enclosure exact(double value, int ulps)
{
    double lo = value;
    double hi = value;
    for (int i = 0; i < ulps; ++i) {
        lo = std::nextafter(lo, -std::numeric_limits<double>::infinity());
        hi = std::nextafter(hi, std::numeric_limits<double>::infinity());
    }
    return {value, lo, hi, Method::Oracle, std::nullopt};
}

}  // namespace

Enclosure evaluate(const EvalPoint& p, ExpansionOrder order, MethodPolicy policy)
{
    if (p.lambda() == 0) return exact(0.0, 0);
    if (p.k() == 1) return exact(p.lambda(), 0);
    if (p.lambda() == 1) return exact(special::complete_E(p.k()), 4);
    if (p.k() == 0) return exact(std::asin(p.lambda()), 1);

    const bool use_second = policy == MethodPolicy::Second ||
                            (policy == MethodPolicy::Auto && (1 - p.lambda()) <= (1 - p.k()));
    // The refined approximants sit inside the same certified interval as the partial sums.
    return use_second ? second::refined_E_bar(p, order) : first::refined_E_hat(p, order);
}

}  // namespace ellint2
