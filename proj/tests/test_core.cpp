#include <catch_amalgamated.hpp>

#include <cmath>

#include "ellint2/core.hpp"
#include "ellint2/special.hpp"
#include "reference_values.hpp"

using namespace ellint2;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("EvalPoint rejects values outside the unit square", "[core]")
{
    CHECK_THROWS_AS(EvalPoint(-0.1, 0.5), DomainError);
    CHECK_THROWS_AS(EvalPoint(0.5, 1.5), DomainError);
    CHECK_THROWS_AS(EvalPoint(std::nan(""), 0.5), DomainError);
    CHECK_THROWS_AS(EvalPoint(0.5, INFINITY), DomainError);
    CHECK_NOTHROW(EvalPoint(0.0, 1.0));
}

TEST_CASE("interior excludes every edge", "[core]")
{
    CHECK(EvalPoint(0.5, 0.5).interior());
    CHECK_FALSE(EvalPoint(0.0, 0.5).interior());
    CHECK_FALSE(EvalPoint(1.0, 0.5).interior());
    CHECK_FALSE(EvalPoint(0.5, 0.0).interior());
    CHECK_FALSE(EvalPoint(0.5, 1.0).interior());
}

TEST_CASE("ExpansionOrder must be at least one", "[core]")
{
    CHECK_THROWS_AS(ExpansionOrder(0), DomainError);
    CHECK(ExpansionOrder(3).value() == 3);
    CHECK(ExpansionOrder(2) == ExpansionOrder(2));
}

TEST_CASE("beta_of", "[core]")
{
    CHECK(beta_of(EvalPoint(0.8, 0.8)).value == 1.0);
    CHECK_THAT(beta_of(EvalPoint(0.95, 0.99)).value, WithinRel(static_cast<double>(ref::kBeta_095_099), 1e-14));
    CHECK_THAT(beta_of(EvalPoint(0.0, 0.5)).value, WithinRel(4.0 / 3.0, 1e-15));
    CHECK_THROWS_AS(beta_of(EvalPoint(0.5, 1.0)), DomainError);
}

TEST_CASE("theta decreases from 8/3 toward 1", "[core]")
{
    CHECK_THAT(theta(ExpansionOrder(1)), WithinRel(8.0 / 3.0, 1e-15));
    CHECK_THAT(theta(ExpansionOrder(2)), WithinRel(1.6, 1e-15));
    for (int n = 1; n < 40; ++n) {
        CHECK(theta(ExpansionOrder(n)) > theta(ExpansionOrder(n + 1)));
        CHECK(theta(ExpansionOrder(n + 1)) > 1.0);
    }
}

TEST_CASE("classify", "[core]")
{
    CHECK(classify(EvalPoint(0.5, 0.5)) == RegionFlags{true, true});
    CHECK(classify(EvalPoint(0.99, 0.1)) == RegionFlags{false, true});
    CHECK(classify(EvalPoint(0.1, 0.99)) == RegionFlags{true, false});
}

TEST_CASE("cond1 matches its unscaled form", "[core]")
{
    for (int i = 1; i < 50; ++i) {
        for (int j = 1; j < 50; ++j) {
            const double lambda = i / 50.0;
            const double k = j / 50.0;
            const double lhs = 1 - lambda * lambda * k * k;
            const double rhs = 2 * (1 - lambda * lambda);
            if (std::fabs(lhs - rhs) < 1e-12) continue;
            CHECK(classify(EvalPoint(lambda, k)).cond1 == (lhs < rhs));
        }
    }
}

TEST_CASE("method names", "[core]")
{
    CHECK(to_string(Method::FirstExpansion) == "first");
    CHECK(to_string(Method::SecondExpansion) == "second");
    CHECK(to_string(Method::AuxByrdFriedman) == "aux-bf");
    CHECK(to_string(Method::AuxCarlson) == "aux-carlson");
    CHECK(to_string(Method::Baseline) == "baseline");
    CHECK(to_string(Method::Oracle) == "oracle");
}

TEST_CASE("evaluate handles the edges exactly", "[core][evaluate]")
{
    const ExpansionOrder n(2);
    const auto origin = evaluate(EvalPoint(0.0, 0.5), n);
    CHECK(origin.estimate == 0.0);
    CHECK(origin.method == Method::Oracle);

    CHECK(evaluate(EvalPoint(0.6, 1.0), n).estimate == 0.6);

    const auto top = evaluate(EvalPoint(1.0, 0.7), n);
    CHECK_THAT(top.estimate, WithinRel(special::complete_E(0.7), 1e-15));
    CHECK(top.contains(top.estimate));

    const auto flat = evaluate(EvalPoint(0.5, 0.0), n);
    CHECK_THAT(flat.estimate, WithinRel(std::asin(0.5), 1e-15));
}

TEST_CASE("evaluate encloses the reference values", "[core][evaluate]")
{
    for (const auto& r : ref::kIncompleteE) {
        const EvalPoint p(r.lambda, r.k);
        for (int n = 1; n <= 4; ++n) {
            for (auto policy : {MethodPolicy::Auto, MethodPolicy::First, MethodPolicy::Second}) {
                const auto enc = evaluate(p, ExpansionOrder(n), policy);
                INFO("lambda " << r.lambda << " k " << r.k << " N " << n);
                CHECK(enc.lower <= enc.upper);
                CHECK(enc.contains(static_cast<double>(r.e)));
                CHECK(enc.contains(enc.estimate));
            }
        }
    }
    // Tabulated as the truncated 1.0056.
    const auto table_point = evaluate(EvalPoint(0.99, 0.99), ExpansionOrder(2));
    CHECK(table_point.lower >= 1.0056);
    CHECK(table_point.upper < 1.0057);
}

TEST_CASE("Auto picks the expansion by the region ratio", "[core][evaluate]")
{
    CHECK(evaluate(EvalPoint(0.99, 0.9), ExpansionOrder(1)).method == Method::SecondExpansion);
    CHECK(evaluate(EvalPoint(0.9, 0.99), ExpansionOrder(1)).method == Method::FirstExpansion);
}

TEST_CASE("evaluate is continuous at the edges", "[core][evaluate]")
{
    const double near_one = 1 - 1e-12;
    for (double lambda : {0.2, 0.5, 0.9}) {
        const auto e = evaluate(EvalPoint(lambda, near_one), ExpansionOrder(3));
        CHECK_THAT(e.estimate - lambda, WithinAbs(0.0, 1e-6));
    }
    // E(k) - E(lambda, k) ~ sqrt(2 (1 - k^2) (1 - lambda)), about 1.4e-6 at 1 - 1e-12.
    for (double k : {0.2, 0.5, 0.9}) {
        const double gap = special::complete_E(k) - evaluate(EvalPoint(near_one, k), ExpansionOrder(3)).estimate;
        CHECK_THAT(gap, WithinRel(std::sqrt(2 * (1 - k * k) * 1e-12), 1e-3));
        const auto closer = evaluate(EvalPoint(1 - 1e-14, k), ExpansionOrder(3));
        CHECK_THAT(closer.estimate - special::complete_E(k), WithinAbs(0.0, 1e-6));
    }
}
