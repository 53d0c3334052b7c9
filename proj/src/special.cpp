#include "ellint2/special.hpp"

#include <cmath>

#include "ellint2/numeric.hpp"

namespace ellint2::special {

double oracle_E(const EvalPoint& p, const OracleConfig& cfg)
{
    return oracle_E_parameter(p.lambda(), p.k() * p.k(), cfg);
}

double oracle_E_parameter(double lambda, double m, const OracleConfig& cfg)
{
    if (!(cfg.abs_tol > 0)) throw DomainError("oracle tolerance must be positive");
    if (!std::isfinite(lambda) || !std::isfinite(m)) throw DomainError("oracle arguments must be finite");
    if (lambda < 0 || lambda > 1) throw DomainError("lambda must lie in [0, 1]");
    if (m > 1) throw DomainError("parameter m must be <= 1");
    return static_cast<double>(
        kernel::incomplete_E<Wide>(lambda, m, static_cast<Wide>(cfg.abs_tol), cfg.max_depth));
}

double complete_E(double k)
{
    if (!(k >= 0 && k <= 1)) throw DomainError("k must lie in [0, 1]");
    return static_cast<double>(kernel::complete_E<Wide>(k));
}

double carlson_RF(double x, double y, double z)
{
    return static_cast<double>(kernel::carlson_RF<Wide>(x, y, z));
}

double carlson_RD(double x, double y, double z)
{
    return static_cast<double>(kernel::carlson_RD<Wide>(x, y, z));
}

double bridge_E(const EvalPoint& p)
{
    const Wide lambda = p.lambda();
    const Wide k2 = Wide(p.k()) * p.k();
    const Wide x = numeric::one_minus_sq(lambda);
    const Wide y = 1 - k2 * lambda * lambda;
    if (x == 0 && y == 0) return static_cast<double>(lambda);
    return static_cast<double>(lambda * kernel::carlson_RF<Wide>(x, y, 1) -
                               k2 * lambda * lambda * lambda / 3 * kernel::carlson_RD<Wide>(x, y, 1));
}

double appell_F1_partial(double alpha, double b1, double b2, double gamma, double x, double y, int terms)
{
    if (terms < 0) throw DomainError("appell_F1_partial: negative term count");
    Wide row = 1;  // coefficient of x^m y^0
    Wide total = 0;
    for (int m = 0; m <= terms; ++m) {
        Wide term = row;
        for (int n = 0; m + n <= terms; ++n) {
            total += term;
            term *= (alpha + m + n) * (b2 + n) / ((gamma + m + n) * (n + 1)) * Wide(y);
        }
        row *= (alpha + m) * (b1 + m) / ((gamma + m) * (m + 1)) * Wide(x);
    }
    return static_cast<double>(total);
}

}  // namespace ellint2::special
