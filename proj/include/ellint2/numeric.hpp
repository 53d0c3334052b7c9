#pragma once

#include <cmath>
#include <limits>
#include <utility>

#include "ellint2/core.hpp"

namespace ellint2::numeric {

template <class Real>
inline constexpr Real eps = std::numeric_limits<Real>::epsilon();

// (1 - x)(1 + x), exact-ish for x near 1.
template <class Real>
[[nodiscard]] Real one_minus_sq(Real x)
{
    return (1 - x) * (1 + x);
}

// ln((1 - lambda)/(1 + lambda)) without forming the ratio.
template <class Real>
[[nodiscard]] Real log_ratio(Real lambda)
{
    using std::atanh;
    return -2 * atanh(lambda);
}

// Rising factorial (a)_n.
template <class Real>
[[nodiscard]] Real pochhammer(Real a, int n)
{
    Real r = 1;
    for (int i = 0; i < n; ++i) r *= a + i;
    return r;
}

template <class Real>
struct PartialSum {
    Real value;
    Real magnitude;  // sum of absolute values of the terms
};

struct Interval {
    double lower;
    double upper;
};

// Rounds a wide interval to double, pushing each end outward by a slack that
// covers the accumulated rounding of a sum whose terms total `magnitude`.
[[nodiscard]] inline Interval outward(Wide lower, Wide upper, Wide magnitude)
{
    const Wide slack = 256 * eps<Wide> * magnitude;
    double lo = static_cast<double>(lower - slack);
    double hi = static_cast<double>(upper + slack);
    for (int i = 0; i < 2; ++i) {
        lo = std::nextafter(lo, -std::numeric_limits<double>::infinity());
        hi = std::nextafter(hi, std::numeric_limits<double>::infinity());
    }
    return {lo, hi};
}

}  // namespace ellint2::numeric
