#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ellint2 {

// Extended type used by every kernel behind the double API.
using Wide = long double;

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Point lies outside the region where an expansion's bound is proven.
class RegionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OrderTooHigh : public DomainError {
public:
    using DomainError::DomainError;
};

/// A (lambda, k) pair in the closed unit square.
class EvalPoint {
public:
    EvalPoint(double lambda, double k);

    [[nodiscard]] double lambda() const noexcept { return lambda_; }
    [[nodiscard]] double k() const noexcept { return k_; }
    [[nodiscard]] bool interior() const noexcept
    {
        return lambda_ > 0.0 && lambda_ < 1.0 && k_ > 0.0 && k_ < 1.0;
    }

private:
    double lambda_;
    double k_;
};

/// Truncation order N >= 1.
class ExpansionOrder {
public:
    explicit ExpansionOrder(int n);

    [[nodiscard]] int value() const noexcept { return n_; }

    friend bool operator==(ExpansionOrder, ExpansionOrder) = default;

private:
    int n_;
};

/// beta = (1 - lambda^2) / (1 - k^2).
struct BetaParam {
    double value;
};

[[nodiscard]] BetaParam beta_of(const EvalPoint& p);

/// theta_N = N(N+1) / ((N - 1/2)(N + 1/2)), in (1, 8/3] for integer N >= 1.
[[nodiscard]] double theta(ExpansionOrder n);

// Real-order theta, used for the shifted orders N + eps of the refined approximant.
template <class Real>
[[nodiscard]] Real theta_at(Real order)
{
    const Real half = Real(1) / 2;
    return order * (order + 1) / ((order - half) * (order + half));
}

struct RegionFlags {
    bool cond1;  // beta > lambda^2
    bool cond2;  // beta k^2 < 1

    friend bool operator==(RegionFlags, RegionFlags) = default;
};

[[nodiscard]] RegionFlags classify(const EvalPoint& p);

enum class Method { FirstExpansion, SecondExpansion, AuxByrdFriedman, AuxCarlson, Baseline, Oracle };

[[nodiscard]] std::string_view to_string(Method m);

/// Approximant plus a certified interval [lower, upper] for E(lambda, k).
///
/// For the plain partial sums `estimate` is the approximant itself, which may lie
/// outside the interval (both expansions have one-signed remainders).
struct Enclosure {
    double estimate;
    double lower;
    double upper;
    Method method;
    std::optional<ExpansionOrder> order;

    [[nodiscard]] double width() const noexcept { return upper - lower; }
    [[nodiscard]] bool contains(double value) const noexcept { return lower <= value && value <= upper; }
};

enum class MethodPolicy { Auto, First, Second };

/// Boundary points are exact special cases; interior points go to an expansion.
/// Auto picks the second expansion when (1 - lambda)/(1 - k) <= 1.
[[nodiscard]] Enclosure evaluate(const EvalPoint& p, ExpansionOrder order,
                                 MethodPolicy policy = MethodPolicy::Auto);

}  // namespace ellint2
