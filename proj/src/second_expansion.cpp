#include "ellint2/second_expansion.hpp"

#include <cmath>

namespace ellint2::second {

namespace {

void require_order(int n)
{
    if (n < 0) throw DomainError("coefficient index must be >= 0");
}

void require_positive(double x)
{
    if (!(x > 0) || !std::isfinite(x)) throw DomainError("argument must be positive and finite");
}

void require_tolerance(double tol)
{
    if (!(tol > 0)) throw DomainError("tolerance must be positive");
}

void require_interior(const EvalPoint& p)
{
    if (!p.interior()) throw DomainError("second expansion needs an interior point");
}

}  // namespace

double F_n_poly(int n, double x)
{
    require_order(n);
    return static_cast<double>(kernel::F_poly<Wide>(n, x));
}

double C0_closed(double x, double beta_k2)
{
    if (x == 0) return 1 + beta_k2 / 3;
    require_positive(x);
    const auto ab = kernel::ab_closed<Wide>(0, x);
    return static_cast<double>(ab.a + beta_k2 * ab.b);
}

double C1_closed(double x, double beta_k2)
{
    if (x < 0 || !std::isfinite(x)) throw DomainError("argument must be non-negative and finite");
    const auto ab = x < 1e-3 ? kernel::ab_series<Wide>(1, x, numeric::eps<Wide>) : kernel::ab_closed<Wide>(1, x);
    return static_cast<double>(ab.a + beta_k2 * ab.b);
}

ABPair AB_closed(int n, double x)
{
    require_positive(x);
    const auto ab = kernel::ab_closed<Wide>(n, x);
    return {static_cast<double>(ab.a), static_cast<double>(ab.b)};
}

ABPair AB_integral(int n, double x, double tol)
{
    require_order(n);
    require_positive(x);
    require_tolerance(tol);
    const auto ab = kernel::ab_integral<Wide>(n, x, tol);
    return {static_cast<double>(ab.a), static_cast<double>(ab.b)};
}

ABPair AB_series(int n, double x, double tol)
{
    require_order(n);
    require_tolerance(tol);
    if (!(x >= 0 && x < 1)) throw DomainError("AB_series converges only for 0 <= x < 1");
    const auto ab = kernel::ab_series<Wide>(n, x, tol);
    return {static_cast<double>(ab.a), static_cast<double>(ab.b)};
}

CnValue C_value(int n, double x, double beta_k2)
{
    require_order(n);
    require_positive(x);
    const auto ab = kernel::ab_value<Wide>(n, x);
    const CnSource source = x < kernel::kSeriesBelow ? CnSource::Series
                            : n <= 1                 ? CnSource::ClosedForm
                                                     : CnSource::IntegralRep;
    return {n, x, static_cast<double>(ab.a), static_cast<double>(ab.b), static_cast<double>(ab.a + beta_k2 * ab.b),
            source};
}

double partial_sum_E_tilde(const EvalPoint& p, ExpansionOrder order)
{
    require_interior(p);
    return static_cast<double>(kernel::partial_sum<Wide>(p.lambda(), p.k(), order.value()).value);
}

RemainderBounds remainder_bounds(const EvalPoint& p, ExpansionOrder order)
{
    require_interior(p);
    const auto rem = kernel::remainder<Wide>(p.lambda(), p.k(), order.value());
    return {static_cast<double>(rem.lower), static_cast<double>(rem.upper)};
}

namespace {

Enclosure second_enclosure(const EvalPoint& p, ExpansionOrder order, std::optional<double> delta)
{
    require_interior(p);
    const Wide lambda = p.lambda();
    const Wide k = p.k();
    const auto sum = kernel::partial_sum<Wide>(lambda, k, order.value());
    const auto rem = kernel::remainder<Wide>(lambda, k, order.value());
    const auto bounds = numeric::outward(sum.value - rem.upper, sum.value - rem.lower, sum.magnitude + rem.upper);
    const Wide estimate = delta ? sum.value - (*delta * rem.upper + (1 - Wide(*delta)) * rem.lower) : sum.value;
    return {static_cast<double>(estimate), bounds.lower, bounds.upper, Method::SecondExpansion, order};
}

}  // namespace

Enclosure enclose_second(const EvalPoint& p, ExpansionOrder order)
{
    return second_enclosure(p, order, std::nullopt);
}

Enclosure refined_E_bar(const EvalPoint& p, ExpansionOrder order, double delta)
{
    if (!(delta > 0 && delta < 1)) throw DomainError("refined_E_bar: delta must lie in (0, 1)");
    return second_enclosure(p, order, delta);
}

}  // namespace ellint2::second
