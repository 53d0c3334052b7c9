#include "ellint2/first_expansion.hpp"

#include <cmath>

#include "ellint2/numeric.hpp"

namespace ellint2::first {

namespace {

void require_positive(double x)
{
    if (!(x > 0) || !std::isfinite(x)) throw DomainError("s_n: argument must be positive and finite");
}

void require_expansion_point(const EvalPoint& p, ExpansionOrder order)
{
    if (!p.interior()) throw DomainError("first expansion needs an interior point");
    if (order.value() > kMaxOrder) throw OrderTooHigh("first expansion order above supported maximum");
}

}  // namespace

double s_closed(int n, double x)
{
    require_positive(x);
    return static_cast<double>(kernel::s_closed<Wide>(n, x));
}

double s_series(int n, double x, double tol)
{
    if (n < 0) throw DomainError("s_series: n must be >= 0");
    if (!(x > 0 && x < 1)) throw DomainError("s_series: converges only for 0 < x < 1");
    if (!(tol > 0)) throw DomainError("s_series: tolerance must be positive");
    return static_cast<double>(kernel::s_series<Wide>(n, x, tol));
}

double s_rec(int n, double x)
{
    if (n < 3) throw DomainError("s_rec: use s_closed for n < 3");
    require_positive(x);
    return static_cast<double>(kernel::s_recurrence<Wide>(n + 1, x).back());
}

SnValue s_value(int n, double x)
{
    if (n < 0) throw DomainError("s_value: n must be >= 0");
    require_positive(x);
    if (x < kernel::kSeriesBelow)
        return {n, x, static_cast<double>(kernel::s_series<Wide>(n, x, numeric::eps<Wide>)), SnSource::Series};
    if (n < 3) return {n, x, s_closed(n, x), SnSource::ClosedForm};
    return {n, x, s_rec(n, x), SnSource::Recurrence};
}

double partial_sum_E_N(const EvalPoint& p, ExpansionOrder order)
{
    require_expansion_point(p, order);
    return static_cast<double>(kernel::partial_sum<Wide>(p.lambda(), p.k(), order.value()).value);
}

double f_N(const EvalPoint& p, double order)
{
    if (!p.interior()) throw DomainError("f_N needs an interior point");
    if (!(order > 0.5)) throw DomainError("f_N: order must exceed 1/2");
    return static_cast<double>(kernel::f<Wide>(p.lambda(), p.k(), order));
}

double f_N(const EvalPoint& p, ExpansionOrder order)
{
    return f_N(p, static_cast<double>(order.value()));
}

FirstEnclosureParts enclosure_parts(const EvalPoint& p, ExpansionOrder order)
{
    require_expansion_point(p, order);
    const int n = order.value();
    const Wide lambda = p.lambda();
    const Wide k = p.k();
    return {
        static_cast<double>(kernel::partial_sum<Wide>(lambda, k, n).value),
        static_cast<double>(kernel::f<Wide>(lambda, k, n)),
        static_cast<double>(kernel::f<Wide>(lambda, k, n + 1)),
        static_cast<double>(kernel::prefactor<Wide>(n, k)),
    };
}

namespace {

Enclosure first_enclosure(const EvalPoint& p, ExpansionOrder order, std::optional<double> eps)
{
    require_expansion_point(p, order);
    const int n = order.value();
    const Wide lambda = p.lambda();
    const Wide k = p.k();
    const auto sum = kernel::partial_sum<Wide>(lambda, k, n);
    const Wide scale = kernel::prefactor<Wide>(n, k);
    const Wide lower_rem = scale * kernel::f<Wide>(lambda, k, n);
    const Wide upper_rem = scale * kernel::f<Wide>(lambda, k, n + 1);
    const auto bounds = numeric::outward(sum.value - lower_rem, sum.value - upper_rem, sum.magnitude + lower_rem);
    const Wide estimate = eps ? sum.value - scale * kernel::f<Wide>(lambda, k, n + Wide(*eps)) : sum.value;
    return {static_cast<double>(estimate), bounds.lower, bounds.upper, Method::FirstExpansion, order};
}

}  // namespace

Enclosure enclose_first(const EvalPoint& p, ExpansionOrder order)
{
    return first_enclosure(p, order, std::nullopt);
}

Enclosure refined_E_hat(const EvalPoint& p, ExpansionOrder order, double eps)
{
    if (!(eps > 0 && eps < 1)) throw DomainError("refined_E_hat: eps must lie in (0, 1)");
    return first_enclosure(p, order, eps);
}

}  // namespace ellint2::first
