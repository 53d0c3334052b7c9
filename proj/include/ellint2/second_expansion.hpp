#pragma once

#include <cmath>

#include "ellint2/core.hpp"
#include "ellint2/numeric.hpp"
#include "ellint2/quadrature.hpp"
#include "ellint2/special.hpp"

namespace ellint2::second {

inline constexpr double kDefaultDelta = 67.0 / 187.0;

enum class CnSource { ClosedForm, IntegralRep, Series };

struct ABPair {
    double a;
    double b;
};

struct CnValue {
    int n;
    double x;
    double a;
    double b;
    double c;  // a + beta k^2 b
    CnSource source;
};

/// Terminating 2F1(-n, 1/2; 1; x), any real x.
[[nodiscard]] double F_n_poly(int n, double x);

/// C_0 and C_1 from their elementary closed forms. x = 0 gives the limit values;
/// C1_closed falls back to the power series below x = 1e-3.
[[nodiscard]] double C0_closed(double x, double beta_k2);
[[nodiscard]] double C1_closed(double x, double beta_k2);

/// A_n, B_n from the closed forms, n <= 1, x > 0.
[[nodiscard]] ABPair AB_closed(int n, double x);

/// A_n, B_n by adaptive quadrature of the integral representation, x > 0.
[[nodiscard]] ABPair AB_integral(int n, double x, double tol);

/// A_n, B_n by their power series, 0 <= x < 1.
[[nodiscard]] ABPair AB_series(int n, double x, double tol);

/// The coefficient used in the expansion: series for x < 0.5, closed forms for
/// n <= 1, quadrature otherwise.
[[nodiscard]] CnValue C_value(int n, double x, double beta_k2);

[[nodiscard]] double partial_sum_E_tilde(const EvalPoint& p, ExpansionOrder order);

/// Two-sided bounds lower <= -R_N <= upper on the (negative) remainder.
struct RemainderBounds {
    double lower;
    double upper;
};

[[nodiscard]] RemainderBounds remainder_bounds(const EvalPoint& p, ExpansionOrder order);

/// estimate = the partial sum; interval [sum - upper, sum - lower].
[[nodiscard]] Enclosure enclose_second(const EvalPoint& p, ExpansionOrder order);

/// estimate = sum - (delta upper + (1 - delta) lower), inside the same interval.
[[nodiscard]] Enclosure refined_E_bar(const EvalPoint& p, ExpansionOrder order, double delta = kDefaultDelta);

namespace kernel {

inline constexpr double kSeriesBelow = 0.5;

template <class Real>
[[nodiscard]] Real F_poly(int n, Real x)
{
    Real term = 1;
    Real sum = 1;
    for (int j = 0; j < n; ++j) {
        term *= Real(j - n) * (Real(0.5) + j) / Real((j + 1) * (j + 1)) * x;
        sum += term;
    }
    return sum;
}

// F_n(s/(1+s)) as (1+s)^-n F_n(-s); every term of F_n(-s) is positive.
template <class Real>
[[nodiscard]] Real F_pfaff(int n, Real s)
{
    return F_poly(n, -s) / std::pow(1 + s, n);
}

template <class Real>
struct AB {
    Real a;
    Real b;
};

template <class Real>
[[nodiscard]] AB<Real> ab_series(int n, Real x, Real tol)
{
    Real u = 1;  // C(n+j, j) (-1)^j (1/2)_j / j! x^j
    Real a = 0;
    Real b = 0;
    for (int j = 0; j < 1000000; ++j) {
        const Real ta = u / (2 * (n + j) + 1);
        const Real tb = u / (2 * (n + j) + 3);
        a += ta;
        b += tb;
        const Real ratio = Real(n + j + 1) / (j + 1) * (Real(0.5) + j) / (j + 1) * x;
        if (ratio < 1 && std::fabs(ta) <= tol * std::fabs(a) && std::fabs(tb) <= tol * std::fabs(b)) return {a, b};
        u *= -ratio;
    }
    throw ConvergenceError("ab_series: no convergence");
}

template <class Real>
[[nodiscard]] AB<Real> ab_closed(int n, Real x)
{
    const Real rx = std::sqrt(x);
    const Real r1 = std::sqrt(1 + x);
    const Real arc = std::asinh(rx) / rx;
    switch (n) {
    case 0: return {arc, (rx * r1 - std::asinh(rx)) / (2 * x * rx)};
    case 1: return {(arc - (1 - x) / r1) / (4 * x), (-9 * arc + (9 + 3 * x + 2 * x * x) / r1) / (16 * x * x)};
    default: throw DomainError("closed forms for A_n, B_n exist here only for n = 0, 1");
    }
}

// After t = x v^2 both integrands are smooth on [0, 1].
template <class Real>
[[nodiscard]] AB<Real> ab_integral(int n, Real x, Real tol, int max_depth = 60)
{
    const auto weight = [n, x](Real v) {
        const Real s = x * v * v;
        return std::pow(v, 2 * n) * F_pfaff(n, s) / std::sqrt(1 + s);
    };
    const Real a = quadrature::integrate<Real>(weight, Real(0), Real(1), tol, max_depth);
    const Real b = quadrature::integrate<Real>([&weight](Real v) { return v * v * weight(v); }, Real(0), Real(1),
                                               tol, max_depth);
    return {a, b};
}

template <class Real>
[[nodiscard]] AB<Real> ab_value(int n, Real x)
{
    if (x < Real(kSeriesBelow)) return ab_series(n, x, numeric::eps<Real>);
    if (n <= 1) return ab_closed(n, x);
    return ab_integral(n, x, 8 * numeric::eps<Real>);
}

// sqrt(beta (1 + beta)) - asinh(sqrt(beta)) = 2 beta^{3/2} B_0(beta).
template <class Real>
[[nodiscard]] Real sqrt_excess(Real beta)
{
    const Real root = std::sqrt(beta);
    if (beta < Real(kSeriesBelow)) return 2 * beta * root * ab_series(0, beta, numeric::eps<Real>).b;
    return root * std::sqrt(1 + beta) - std::asinh(root);
}

template <class Real>
[[nodiscard]] numeric::PartialSum<Real> partial_sum(Real lambda, Real k, int order)
{
    const Real ql = numeric::one_minus_sq(lambda);
    const Real qk = numeric::one_minus_sq(k);
    const Real beta = ql / qk;
    const Real bk2 = beta * k * k;
    const Real complete = special::kernel::complete_E(k);
    const Real scale = std::sqrt(ql * qk);
    Real value = complete;
    Real magnitude = complete;
    Real power = scale;
    for (int n = 0; n < order; ++n) {
        const auto ab = ab_value(n, beta);
        const Real term = power * (ab.a + bk2 * ab.b);
        value -= term;
        magnitude += std::fabs(term);
        power *= ql;
    }
    return {value, magnitude};
}

template <class Real>
struct Bounds {
    Real lower;
    Real upper;
};

template <class Real>
[[nodiscard]] Bounds<Real> remainder(Real lambda, Real k, int order)
{
    const Real ql = numeric::one_minus_sq(lambda);
    const Real beta = ql / numeric::one_minus_sq(k);
    const Real common = std::pow(ql, order + 1) * (lambda * lambda + beta + Real(1) / order) / (2 * (order + 1));
    Real ratio = 1;  // (1/2)_N / N!
    for (int i = 0; i < order; ++i) ratio *= (Real(0.5) + i) / (i + 1);
    const Real lower = common * ratio * sqrt_excess(beta) / (beta * beta);
    const Real upper = common / (lambda * lambda * std::sqrt(beta * (1 + beta)));
    return {lower, upper};
}

}  // namespace kernel

}  // namespace ellint2::second
