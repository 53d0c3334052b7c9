#include "ellint2/core.hpp"

#include <cmath>

#include "ellint2/numeric.hpp"

namespace ellint2 {

EvalPoint::EvalPoint(double lambda, double k) : lambda_(lambda), k_(k)
{
    if (!std::isfinite(lambda) || !std::isfinite(k))
        throw DomainError("lambda and k must be finite");
    if (lambda < 0.0 || lambda > 1.0 || k < 0.0 || k > 1.0)
        throw DomainError("lambda and k must lie in [0, 1]");
}

ExpansionOrder::ExpansionOrder(int n) : n_(n)
{
    if (n < 1) throw DomainError("expansion order must be >= 1");
}

BetaParam beta_of(const EvalPoint& p)
{
    if (p.k() >= 1.0) throw DomainError("beta is undefined at k = 1");
    const Wide lambda = p.lambda();
    const Wide k = p.k();
    return {static_cast<double>(numeric::one_minus_sq(lambda) / numeric::one_minus_sq(k))};
}

double theta(ExpansionOrder n)
{
    return static_cast<double>(theta_at<Wide>(n.value()));
}

RegionFlags classify(const EvalPoint& p)
{
    const Wide lambda = p.lambda();
    const Wide k = p.k();
    const Wide beta = numeric::one_minus_sq(lambda) / numeric::one_minus_sq(k);
    return {beta > lambda * lambda, beta * k * k < 1};
}

std::string_view to_string(Method m)
{
    switch (m) {
    case Method::FirstExpansion: return "first";
    case Method::SecondExpansion: return "second";
    case Method::AuxByrdFriedman: return "aux-bf";
    case Method::AuxCarlson: return "aux-carlson";
    case Method::Baseline: return "baseline";
    case Method::Oracle: return "oracle";
    }
    return "unknown";
}

}  // namespace ellint2
