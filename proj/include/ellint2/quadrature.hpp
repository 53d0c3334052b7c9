#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "ellint2/core.hpp"
#include "ellint2/numeric.hpp"

namespace ellint2::quadrature {

template <class Real, int Points>
struct GaussLegendreRule {
    std::array<Real, Points> nodes{};
    std::array<Real, Points> weights{};
};

// Nodes on [-1, 1] by Newton iteration on P_n in the target precision.
template <class Real, int Points>
[[nodiscard]] GaussLegendreRule<Real, Points> make_gauss_legendre()
{
    GaussLegendreRule<Real, Points> rule;
    const Real pi = std::numbers::pi_v<Real>;
    for (int i = 0; i < (Points + 1) / 2; ++i) {
        Real x = std::cos(pi * (i + Real(0.75)) / (Points + Real(0.5)));
        Real derivative = 0;
        for (int iter = 0; iter < 100; ++iter) {
            Real p0 = 1;
            Real p1 = x;
            for (int n = 2; n <= Points; ++n) {
                const Real p2 = ((2 * n - 1) * x * p1 - (n - 1) * p0) / n;
                p0 = p1;
                p1 = p2;
            }
            derivative = Points * (x * p1 - p0) / (x * x - 1);
            const Real step = p1 / derivative;
            x -= step;
            if (std::fabs(step) <= numeric::eps<Real>) break;
        }
        const Real w = 2 / ((1 - x * x) * derivative * derivative);
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.nodes[Points - 1 - i] = x;
        rule.weights[Points - 1 - i] = w;
    }
    return rule;
}

inline constexpr int kRulePoints = 20;

template <class Real>
[[nodiscard]] const GaussLegendreRule<Real, kRulePoints>& gauss_legendre()
{
    static const auto rule = make_gauss_legendre<Real, kRulePoints>();
    return rule;
}

template <class Real, class F>
[[nodiscard]] Real apply_rule(const F& f, Real a, Real b)
{
    const auto& rule = gauss_legendre<Real>();
    const Real half = (b - a) / 2;
    const Real mid = (a + b) / 2;
    Real sum = 0;
    for (int i = 0; i < kRulePoints; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return sum * half;
}

namespace detail {

template <class Real, class F>
Real refine(const F& f, Real a, Real b, Real whole, Real abs_tol, int depth)
{
    const Real mid = (a + b) / 2;
    const Real left = apply_rule(f, a, mid);
    const Real right = apply_rule(f, mid, b);
    const Real sum = left + right;
    const Real diff = std::fabs(sum - whole);
    const Real roundoff = 64 * numeric::eps<Real> * (std::fabs(left) + std::fabs(right));
    if (diff <= abs_tol || diff <= roundoff) return sum;
    if (depth <= 0) throw ConvergenceError("adaptive quadrature: tolerance not reached at max depth");
    return refine(f, a, mid, left, abs_tol / 2, depth - 1) + refine(f, mid, b, right, abs_tol / 2, depth - 1);
}

}  // namespace detail

/// Adaptive Gauss-Legendre on [a, b] by recursive bisection.
/// Throws ConvergenceError when `abs_tol` is not met within `max_depth` halvings.
template <class Real, class F>
[[nodiscard]] Real integrate(const F& f, Real a, Real b, Real abs_tol, int max_depth = 60)
{
    if (!(abs_tol > 0)) throw DomainError("quadrature tolerance must be positive");
    if (a == b) return 0;
    return detail::refine(f, a, b, apply_rule(f, a, b), abs_tol, max_depth);
}

}  // namespace ellint2::quadrature
