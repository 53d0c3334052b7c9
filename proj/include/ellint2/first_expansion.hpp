#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "ellint2/core.hpp"
#include "ellint2/numeric.hpp"

namespace ellint2::first {

// Highest supported truncation order.
inline constexpr int kMaxOrder = 12;

enum class SnSource { ClosedForm, Recurrence, Series };

struct SnValue {
    int n;
    double x;
    double value;
    SnSource source;
};

/// s_0, s_1, s_2 from their elementary closed forms; x > 0.
[[nodiscard]] double s_closed(int n, double x);

/// Direct summation of the defining hypergeometric tail; 0 < x < 1.
[[nodiscard]] double s_series(int n, double x, double tol);

/// Third-order inhomogeneous recurrence seeded by the closed forms; n >= 3, x > 0.
[[nodiscard]] double s_rec(int n, double x);

/// The value used inside the expansion: series for x < 0.9, closed form or
/// recurrence otherwise.
[[nodiscard]] SnValue s_value(int n, double x);

[[nodiscard]] double partial_sum_E_N(const EvalPoint& p, ExpansionOrder order);

/// Bound function f at a real order (N + eps allowed), order > 1/2.
[[nodiscard]] double f_N(const EvalPoint& p, double order);
[[nodiscard]] double f_N(const EvalPoint& p, ExpansionOrder order);

struct FirstEnclosureParts {
    double partial_sum;
    double fN;
    double fN1;
    double prefactor;
};

[[nodiscard]] FirstEnclosureParts enclosure_parts(const EvalPoint& p, ExpansionOrder order);

/// estimate = E_N; [E_N - P f_N, E_N - P f_{N+1}] with P the Pochhammer prefactor.
[[nodiscard]] Enclosure enclose_first(const EvalPoint& p, ExpansionOrder order);

/// estimate = E_N - P f_{N+eps}; same certified interval as `enclose_first`.
[[nodiscard]] Enclosure refined_E_hat(const EvalPoint& p, ExpansionOrder order, double eps = 0.5);

namespace kernel {

// Switch point between the series and the closed-form/recurrence route.
inline constexpr double kSeriesBelow = 0.9;

// g(n, j) = (-1/2)_j (1/2 - j)_n / (j! (1 - j)_n) (-x)^j, j > n.
template <class Real>
[[nodiscard]] Real g_term(int n, int j, Real x)
{
    Real r = 1;
    for (int i = 0; i < j; ++i) r *= (Real(-0.5) + i) / (i + 1) * (-x);
    for (int i = 0; i < n; ++i) r *= (Real(0.5) - j + i) / (1 - j + i);
    return r;
}

template <class Real>
[[nodiscard]] Real s_closed(int n, Real x)
{
    using std::log;
    using std::sqrt;
    const Real root = sqrt(1 + x);
    const Real ln2 = std::numbers::ln2_v<Real>;
    switch (n) {
    case 0: return x / (root + 1);
    case 1: return (-2 + 2 * root + x * (2 * ln2 - 1 - 2 * log(1 + root))) / 4;
    case 2: {
        const Real lx = log(x);
        const Real bracket = -(x - Real(8) / 3) * (1 + root) * log(1 + root) / 2 +
                             x * (1 + root) * log(root - 1) / 2 +
                             ((x - Real(4) / 3) * ln2 - x * lx / 2 - Real(13) / 12 * x + 1) * root +
                             (x - Real(4) / 3) * ln2 - x * lx / 2 - x / 12 - 1;
        return -3 * x * x / (16 * (1 + root) * (1 + root) * (root - 1)) * bracket;
    }
    default: throw DomainError("s_closed: closed forms exist only for n = 0, 1, 2");
    }
}

template <class Real>
[[nodiscard]] Real s_series(int n, Real x, Real tol)
{
    Real term = g_term(n, n + 1, x);
    Real sum = term;
    for (int j = n + 1; j < 1000000; ++j) {
        term *= (j - Real(0.5)) / (j + 1) * (j + Real(0.5)) / (j + Real(0.5) - n) * Real(j - n) / j * (-x);
        sum += term;
        if (std::fabs(term) < tol * std::fabs(sum)) return sum;
    }
    throw ConvergenceError("s_series: no convergence");
}

// s_0 .. s_{count-1} by the recurrence seeded with the closed forms.
template <class Real>
[[nodiscard]] std::vector<Real> s_recurrence(int count, Real x)
{
    std::vector<Real> s;
    s.reserve(static_cast<std::size_t>(std::max(count, 3)));
    for (int n = 0; n < 3; ++n) s.push_back(s_closed(n, x));
    for (int n = 0; n + 3 < count; ++n) {
        const Real a = -(2 * n + 3) * (2 * n * x + 5 * x - 4 * n - 8);
        const Real b = (2 * n + 3) * (4 * n * x + 4 * x - 2 * n - 1);
        const Real c = -4 * n * (1 + n) * x;
        Real h = Real(-7) / 4;
        for (int i = 0; i < n + 4; ++i) h *= (Real(-0.5) + i) * (-x);
        for (int i = 0; i < n + 2; ++i) h /= i + 1;
        for (int i = 0; i < n; ++i) h *= (Real(-3.5) - n + i) / (-3 - n + i);
        const Real d = -a * g_term(n + 2, n + 3, x) - b * (g_term(n + 1, n + 2, x) + g_term(n + 1, n + 3, x)) -
                       c * (g_term(n, n + 1, x) + g_term(n, n + 2, x) + g_term(n, n + 3, x)) - h;
        s.push_back((a * s[n + 2] + b * s[n + 1] + c * s[n] + d) / (4 * (n + 2) * (n + 3)));
    }
    s.resize(static_cast<std::size_t>(count));
    return s;
}

template <class Real>
[[nodiscard]] std::vector<Real> s_values(int count, Real x)
{
    if (x < Real(kSeriesBelow)) {
        std::vector<Real> s;
        for (int n = 0; n < count; ++n) s.push_back(s_series(n, x, numeric::eps<Real>));
        return s;
    }
    return s_recurrence(count, x);
}

// (1/2)_N (1/2)_{N+1} (1 - k^2)^N / (2 N! (N+1)!)
template <class Real>
[[nodiscard]] Real prefactor(int order, Real k)
{
    const Real q = numeric::one_minus_sq(k);
    Real p = Real(0.5);
    for (int i = 0; i < order; ++i) p *= (Real(0.5) + i) / (i + 1) * q;
    for (int i = 0; i <= order; ++i) p *= (Real(0.5) + i) / (i + 1);
    return p;
}

// z atanh(z) - z^2, by its Taylor series where the subtraction would cancel.
template <class Real>
[[nodiscard]] Real atanh_excess(Real z)
{
    const Real z2 = z * z;
    if (z >= Real(0.5)) return z * std::atanh(z) - z2;
    Real power = z2 * z2;
    Real sum = 0;
    for (int m = 1; m < 200; ++m) {
        const Real term = power / (2 * m + 1);
        sum += term;
        if (term <= numeric::eps<Real> * sum) break;
        power *= z2;
    }
    return sum;
}

template <class Real>
[[nodiscard]] Real f(Real lambda, Real k, Real order)
{
    const Real q = numeric::one_minus_sq(k);
    const Real beta = numeric::one_minus_sq(lambda) / q;
    const Real th = theta_at(order);
    const Real r2 = lambda * lambda + beta * th;
    const Real a = lambda / std::sqrt(r2);
    const Real l4 = lambda * lambda * lambda * lambda;
    const Real bracket =
        2 / lambda * (l4 * (th - q) / r2 + th * atanh_excess(a) - q * atanh_excess(lambda));
    return th / (th - q) * bracket;
}

template <class Real>
[[nodiscard]] numeric::PartialSum<Real> partial_sum(Real lambda, Real k, int order)
{
    const Real q = numeric::one_minus_sq(k);
    const Real lambda2 = lambda * lambda;
    const Real x = lambda2 * q / numeric::one_minus_sq(lambda);

    const Real lead = lambda * std::sqrt(1 + x);
    Real value = lead;
    Real magnitude = std::fabs(lead);

    const Real log_term = numeric::log_ratio(lambda);
    Real coeff = Real(-0.25) * q;
    for (int j = 1; j <= order; ++j) {
        value += log_term * coeff;
        magnitude += std::fabs(log_term * coeff);
        coeff *= (j - Real(0.5)) * (j + Real(0.5)) / ((j + 1) * j) * q;
    }

    const auto s = s_values(order, x);
    const Real ratio = -numeric::one_minus_sq(lambda) / lambda2;
    Real power = 1;
    for (int n = 0; n < order; ++n) {
        const Real term = power * s[static_cast<std::size_t>(n)] / lambda;
        value -= term;
        magnitude += std::fabs(term);
        power *= ratio;
    }
    return {value, magnitude};
}

}  // namespace kernel

}  // namespace ellint2::first
