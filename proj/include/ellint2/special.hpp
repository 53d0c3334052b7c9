#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ellint2/core.hpp"
#include "ellint2/quadrature.hpp"

namespace ellint2::special {

struct OracleConfig {
    double abs_tol = 1e-14;
    int max_depth = 60;
};

/// E(lambda, k) = integral_0^lambda sqrt(1 - k^2 t^2)/sqrt(1 - t^2) dt by adaptive quadrature
/// after t = sin(phi). Throws ConvergenceError if `cfg.abs_tol` is not reached.
[[nodiscard]] double oracle_E(const EvalPoint& p, const OracleConfig& cfg = {});

/// integral_0^asin(lambda) sqrt(1 - m sin^2 phi) dphi for any parameter m <= 1,
/// including negative m (imaginary modulus).
[[nodiscard]] double oracle_E_parameter(double lambda, double m, const OracleConfig& cfg = {});

/// Complete integral E(k) by the arithmetic-geometric mean.
[[nodiscard]] double complete_E(double k);

[[nodiscard]] double carlson_RF(double x, double y, double z);
[[nodiscard]] double carlson_RD(double x, double y, double z);

/// lambda R_F(1-lambda^2, 1-k^2 lambda^2, 1) - (k^2 lambda^3 / 3) R_D(same).
[[nodiscard]] double bridge_E(const EvalPoint& p);

/// Appell F1(alpha; b1, b2; gamma; x, y) summed over m + n <= terms.
[[nodiscard]] double appell_F1_partial(double alpha, double b1, double b2, double gamma, double x, double y,
                                       int terms);

namespace kernel {

template <class Real>
[[nodiscard]] Real incomplete_E(Real lambda, Real m, Real abs_tol, int max_depth = 60)
{
    if (lambda == 0) return 0;
    const Real upper = lambda >= 1 ? std::numbers::pi_v<Real> / 2 : std::asin(lambda);
    const auto integrand = [m](Real phi) {
        const Real s = std::sin(phi);
        return std::sqrt(1 - m * s * s);
    };
    return quadrature::integrate<Real>(integrand, Real(0), upper, abs_tol, max_depth);
}

template <class Real>
[[nodiscard]] Real complete_E(Real k)
{
    if (k >= 1) return 1;
    Real a = 1;
    Real b = std::sqrt((1 - k) * (1 + k));
    Real c = k;
    Real weight = Real(0.5);
    Real sum = weight * c * c;
    for (int i = 0; i < 64 && c > numeric::eps<Real> * a; ++i) {
        const Real an = (a + b) / 2;
        c = (a - b) / 2;
        b = std::sqrt(a * b);
        a = an;
        weight *= 2;
        sum += weight * c * c;
    }
    return std::numbers::pi_v<Real> / (2 * a) * (1 - sum);
}

// Duplication runs until the relative spread of the arguments drops below this.
inline constexpr double kCarlsonSpread = 1e-8;

template <class Real>
[[nodiscard]] Real carlson_RF(Real x, Real y, Real z)
{
    if (x < 0 || y < 0 || z < 0) throw DomainError("carlson_RF: negative argument");
    if ((x == 0) + (y == 0) + (z == 0) > 1) throw DomainError("carlson_RF: more than one zero argument");
    for (;;) {
        const Real mean = (x + y + z) / 3;
        const Real dx = (mean - x) / mean;
        const Real dy = (mean - y) / mean;
        const Real dz = (mean - z) / mean;
        if (std::max({std::fabs(dx), std::fabs(dy), std::fabs(dz)}) < Real(kCarlsonSpread)) {
            const Real e2 = dx * dy - dz * dz;
            const Real e3 = dx * dy * dz;
            return (1 + (e2 / 24 - Real(0.1) - 3 * e3 / 44) * e2 + e3 / 14) / std::sqrt(mean);
        }
        const Real sx = std::sqrt(x);
        const Real sy = std::sqrt(y);
        const Real sz = std::sqrt(z);
        const Real lam = sx * (sy + sz) + sy * sz;
        x = (x + lam) / 4;
        y = (y + lam) / 4;
        z = (z + lam) / 4;
    }
}

template <class Real>
[[nodiscard]] Real carlson_RD(Real x, Real y, Real z)
{
    if (x < 0 || y < 0 || !(z > 0)) throw DomainError("carlson_RD: need x, y >= 0 and z > 0");
    if (x == 0 && y == 0) throw DomainError("carlson_RD: x and y both zero");
    Real sum = 0;
    Real scale = 1;
    for (;;) {
        const Real mean = (x + y + 3 * z) / 5;
        const Real dx = (mean - x) / mean;
        const Real dy = (mean - y) / mean;
        const Real dz = (mean - z) / mean;
        if (std::max({std::fabs(dx), std::fabs(dy), std::fabs(dz)}) < Real(kCarlsonSpread)) {
            const Real ea = dx * dy;
            const Real eb = dz * dz;
            const Real ec = ea - eb;
            const Real ed = ea - 6 * eb;
            const Real ee = ed + 2 * ec;
            const Real series = 1 + ed * (-Real(3) / 14 + Real(9) / 88 * ed - Real(9) / 52 * dz * ee) +
                                dz * (ee / 6 + dz * (-Real(9) / 22 * ec + dz * Real(3) / 26 * ea));
            return 3 * sum + scale * series / (mean * std::sqrt(mean));
        }
        const Real sx = std::sqrt(x);
        const Real sy = std::sqrt(y);
        const Real sz = std::sqrt(z);
        const Real lam = sx * (sy + sz) + sy * sz;
        sum += scale / (sz * (z + lam));
        scale /= 4;
        x = (x + lam) / 4;
        y = (y + lam) / 4;
        z = (z + lam) / 4;
    }
}

}  // namespace kernel

}  // namespace ellint2::special
