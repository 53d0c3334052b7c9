#include <catch_amalgamated.hpp>

#include <boost/math/special_functions/ellint_2.hpp>
#include <cmath>
#include <numbers>

#include "ellint2/quadrature.hpp"
#include "ellint2/special.hpp"
#include "reference_values.hpp"

using namespace ellint2;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("Gauss-Legendre rule integrates polynomials exactly", "[quadrature]")
{
    const auto cube = quadrature::integrate<double>([](double x) { return x * x * x - 2 * x + 1; }, 0.0, 2.0, 1e-14);
    CHECK_THAT(cube, WithinAbs(2.0, 1e-14));
    const auto wide = quadrature::integrate<long double>([](long double x) { return std::exp(x); }, 0.0L, 1.0L,
                                                         1e-18L);
    CHECK(std::fabs(wide - (std::exp(1.0L) - 1)) < 1e-18L);
}

TEST_CASE("quadrature rejects a non-positive tolerance", "[quadrature]")
{
    CHECK_THROWS_AS(quadrature::integrate<double>([](double) { return 1.0; }, 0.0, 1.0, 0.0), DomainError);
}

TEST_CASE("oracle matches 40-digit reference values", "[special][oracle]")
{
    for (const auto& r : ref::kIncompleteE) {
        INFO("lambda " << r.lambda << " k " << r.k);
        CHECK_THAT(special::oracle_E(EvalPoint(r.lambda, r.k)), WithinAbs(static_cast<double>(r.e), 2e-15));
    }
}

TEST_CASE("oracle agrees with Boost.Math", "[special][oracle]")
{
    for (int i = 1; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) {
            const double lambda = i / 20.0;
            const double k = j / 20.0;
            const double boost_value = boost::math::ellint_2(k, std::asin(lambda));
            CHECK_THAT(special::oracle_E(EvalPoint(lambda, k)), WithinAbs(boost_value, 1e-14));
        }
    }
}

TEST_CASE("oracle edge values", "[special][oracle]")
{
    CHECK(special::oracle_E(EvalPoint(0.0, 0.3)) == 0.0);
    CHECK_THAT(special::oracle_E(EvalPoint(0.37, 1.0)), WithinAbs(0.37, 1e-15));
    CHECK_THAT(special::oracle_E(EvalPoint(1.0, 0.8)), WithinAbs(special::complete_E(0.8), 1e-14));
    for (double lambda : {0.1, 0.5, 0.9, 0.999})
        CHECK_THAT(special::oracle_E(EvalPoint(lambda, 0.0)), WithinAbs(std::asin(lambda), 1e-15));
}

TEST_CASE("quadrature reports an unreachable tolerance", "[quadrature]")
{
    const auto singular = [](double x) { return 1 / std::sqrt(x); };
    CHECK_THROWS_AS(quadrature::integrate<double>(singular, 0.0, 1.0, 1e-14, 4), ConvergenceError);
}

TEST_CASE("oracle argument checks", "[special][oracle]")
{
    CHECK_THROWS_AS(special::oracle_E(EvalPoint(0.9, 0.5), {0.0, 60}), DomainError);
    CHECK_THROWS_AS(special::oracle_E_parameter(0.5, 1.5), DomainError);
}

TEST_CASE("oracle is monotone in both arguments", "[special][oracle]")
{
    for (int j = 0; j <= 10; ++j) {
        const double k = j / 10.0;
        double previous = -1;
        for (int i = 0; i <= 40; ++i) {
            const double value = special::oracle_E(EvalPoint(i / 40.0, k));
            CHECK(value > previous);
            previous = value;
        }
    }
    for (int i = 1; i <= 10; ++i) {
        const double lambda = i / 10.0;
        double previous = 10;
        for (int j = 0; j <= 40; ++j) {
            const double value = special::oracle_E(EvalPoint(lambda, j / 40.0));
            CHECK(value < previous);
            previous = value;
        }
    }
}

TEST_CASE("complete_E", "[special][agm]")
{
    CHECK_THAT(special::complete_E(0.0), WithinAbs(std::numbers::pi / 2, 1e-15));
    CHECK(special::complete_E(1.0) == 1.0);
    for (const auto& r : ref::kCompleteE)
        CHECK_THAT(special::complete_E(r.k), WithinAbs(static_cast<double>(r.e), 1e-15));
    CHECK_THAT(special::complete_E(0.8), WithinAbs(special::oracle_E(EvalPoint(1.0, 0.8)), 1e-12));
    for (int i = 0; i <= 100; ++i) {
        const double value = special::complete_E(i / 100.0);
        CHECK(value >= 1.0);
        CHECK(value <= std::numbers::pi / 2);
    }
}

TEST_CASE("Carlson R_F", "[special][carlson]")
{
    for (double x : {0.5, 1.0, 7.0}) CHECK_THAT(special::carlson_RF(x, x, x), WithinRel(1 / std::sqrt(x), 1e-14));
    CHECK_THAT(special::carlson_RF(0.0, 1.0, 1.0), WithinRel(std::numbers::pi / 2, 1e-14));
    CHECK_THAT(special::carlson_RF(1.0, 2.0, 3.0), WithinRel(static_cast<double>(ref::kRF_123), 1e-14));
    CHECK_THROWS_AS(special::carlson_RF(0.0, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(special::carlson_RF(-1.0, 1.0, 1.0), DomainError);
}

TEST_CASE("Carlson R_D", "[special][carlson]")
{
    for (double x : {0.5, 1.0, 7.0})
        CHECK_THAT(special::carlson_RD(x, x, x), WithinRel(std::pow(x, -1.5), 1e-14));
    CHECK_THAT(special::carlson_RD(1.0, 2.0, 3.0), WithinRel(static_cast<double>(ref::kRD_123), 1e-14));

    // R_D(0,2,1) = 3/2 int_0^inf dt / (sqrt(t) sqrt(t+2) (t+1)^{3/2}); t = s^2, s = u/(1-u).
    const auto integrand = [](double u) {
        const double s = u / (1 - u);
        return 3 / (std::sqrt(s * s + 2) * std::pow(s * s + 1, 1.5)) / ((1 - u) * (1 - u));
    };
    const double quad = quadrature::integrate<double>(integrand, 0.0, 1.0, 1e-13);
    CHECK_THAT(special::carlson_RD(0.0, 2.0, 1.0), WithinRel(quad, 1e-10));
    CHECK_THAT(special::carlson_RD(0.0, 2.0, 1.0), WithinRel(static_cast<double>(ref::kRD_021), 1e-14));
    CHECK_THROWS_AS(special::carlson_RD(0.0, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(special::carlson_RD(1.0, 1.0, 0.0), DomainError);
}

TEST_CASE("symmetric-integral bridge equals the oracle", "[special][bridge]")
{
    CHECK_THAT(special::bridge_E(EvalPoint(0.8, 0.8)), WithinAbs(0.85017691577636894685, 1e-14));
    CHECK_THAT(special::bridge_E(EvalPoint(0.99, 0.95)), WithinAbs(1.05720085761954388277, 1e-14));
    CHECK_THAT(special::bridge_E(EvalPoint(0.5, 0.0)), WithinAbs(std::asin(0.5), 1e-15));
    for (int i = 1; i < 10; ++i) {
        for (int j = 1; j < 10; ++j) {
            const EvalPoint p(i / 10.0, j / 10.0);
            CHECK_THAT(special::bridge_E(p), WithinAbs(special::oracle_E(p), 1e-10));
        }
    }
}

TEST_CASE("Appell F1 series", "[special][appell]")
{
    CHECK(special::appell_F1_partial(0.5, 0.5, -0.5, 1.5, 0.0, 0.0, 10) == 1.0);
    const double lambda = 0.3;
    const double k = 0.4;
    const double series = lambda * special::appell_F1_partial(0.5, 0.5, -0.5, 1.5, lambda * lambda,
                                                              k * k * lambda * lambda, 60);
    CHECK_THAT(series, WithinAbs(special::oracle_E(EvalPoint(lambda, k)), 1e-12));

    // With b2 = 0 the double sum collapses to 2F1(a, b1; c; x); 2F1(-3, 1/2; 1; x) terminates.
    for (double x : {0.1, 0.6, 0.9}) {
        const double collapsed = special::appell_F1_partial(-3.0, 0.5, 0.0, 1.0, x, 0.7, 30);
        const double poly = 1 - 1.5 * x + 1.125 * x * x - 0.3125 * x * x * x;
        CHECK_THAT(collapsed, WithinAbs(poly, 1e-14));
    }
    CHECK_THROWS_AS(special::appell_F1_partial(0.5, 0.5, -0.5, 1.5, 0.1, 0.1, -1), DomainError);
}

TEST_CASE("oracle, bridge and Appell routes agree on a small grid", "[special][triangulation]")
{
    for (int i = 1; i <= 10; ++i) {
        for (int j = 1; j <= 10; ++j) {
            const double lambda = 0.05 * i;
            const double k = 0.09 * j;
            const EvalPoint p(lambda, k);
            const double oracle = special::oracle_E(p);
            CHECK_THAT(special::bridge_E(p), WithinAbs(oracle, 1e-10));
            const double appell =
                lambda * special::appell_F1_partial(0.5, 0.5, -0.5, 1.5, lambda * lambda, k * k * lambda * lambda, 80);
            CHECK_THAT(appell, WithinAbs(oracle, 1e-10));
        }
    }
}
