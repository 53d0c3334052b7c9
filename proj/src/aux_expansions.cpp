#include "ellint2/aux_expansions.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

#include "ellint2/numeric.hpp"
#include "ellint2/second_expansion.hpp"
#include "ellint2/special.hpp"

namespace ellint2::aux {

namespace {

void require_interior(const EvalPoint& p)
{
    if (!p.interior()) throw DomainError("auxiliary expansions need an interior point");
}

}  // namespace

double lemma1_integral(int j, double lambda_in)
{
    if (j < 1) throw DomainError("lemma1_integral: j must be >= 1");
    if (!(lambda_in >= 0 && lambda_in < 1)) throw DomainError("lemma1_integral: lambda must lie in [0, 1)");
    if (lambda_in == 0) return 0;
    const Wide lambda = lambda_in;
    const Wide ql = numeric::one_minus_sq(lambda);
    const Wide ratio = lambda * lambda / ql;

    Wide value = lambda * std::pow(ratio, j);
    // (-1)^j (1/2)_j / (j-1)!
    Wide coeff = (j % 2 == 0) ? 1 : -1;
    for (int i = 0; i < j; ++i) coeff *= Wide(0.5) + i;
    for (int i = 1; i < j; ++i) coeff /= i;
    value += coeff * numeric::log_ratio(lambda);

    Wide sum = 0;
    Wide poch = 1;  // (1/2 - j)_n / (1 - j)_n
    for (int n = 0; n < j; ++n) {
        const Wide sign = (n % 2 == 0) ? -1 : 1;
        sum += sign * poch * std::pow(ratio, j - n);
        poch *= (Wide(0.5) - j + n) / (1 - j + n);
    }
    value += sum / lambda;
    return static_cast<double>(value);
}

AuxResult expansion_bf(const EvalPoint& p, ExpansionOrder order)
{
    require_interior(p);
    if (!classify(p).cond1) throw RegionError("expansion_bf requires beta > lambda^2");
    const int big_n = order.value();
    const Wide lambda = p.lambda();
    const Wide k = p.k();
    const Wide ql = numeric::one_minus_sq(lambda);
    const Wide qk = numeric::one_minus_sq(k);
    const Wide x = lambda * lambda * qk / ql;  // lambda^2 / beta
    const Wide inner_ratio = ql / (lambda * lambda);

    // binom(1/2, j) = (-1)^j (-1/2)_j / j!
    Wide head = 0;
    Wide binom = 1;
    Wide xpow = 1;
    for (int j = 0; j <= big_n; ++j) {
        head += binom * xpow;
        binom *= (Wide(0.5) - j) / (j + 1);
        xpow *= x;
    }

    Wide log_sum = 0;
    Wide coeff = Wide(-0.25) * qk;
    for (int j = 1; j <= big_n; ++j) {
        log_sum += coeff;
        coeff *= (j - Wide(0.5)) * (j + Wide(0.5)) / ((j + 1) * j) * qk;
    }

    Wide tail = 0;
    Wide xj = 1;
    Wide lead = 1;  // (-1/2)_j / j!
    for (int j = 1; j <= big_n; ++j) {
        xj *= x;
        lead *= (j - Wide(1.5)) / j;
        Wide inner = 0;
        Wide poch = 1;  // (1/2 - j)_n / (1 - j)_n
        Wide rpow = 1;
        for (int n = 0; n < j; ++n) {
            const Wide sign = ((j + n - 1) % 2 == 0) ? 1 : -1;
            inner += sign * poch * rpow;
            poch *= (Wide(0.5) - j + n) / (1 - j + n);
            rpow *= inner_ratio;
        }
        tail += xj * lead * inner;
    }

    const Wide value = lambda * head + numeric::log_ratio(lambda) * log_sum + tail / lambda;

    // lambda (1 - lambda^2) (2N-1)!! / (N 2^{N+2} (N+1)!) x^{N+1}
    Wide bound = lambda * ql / (big_n * Wide(4));
    for (int i = 1; i <= big_n; ++i) bound *= (2 * i - 1) / Wide(2 * (i + 1));
    bound *= std::pow(x, big_n + 1);
    return {static_cast<double>(value), static_cast<double>(bound), big_n, true};
}

AuxResult expansion_carlson(const EvalPoint& p, ExpansionOrder order)
{
    require_interior(p);
    if (!classify(p).cond2) throw RegionError("expansion_carlson requires beta k^2 < 1");
    const int big_n = order.value();
    const Wide lambda = p.lambda();
    const Wide k = p.k();
    const Wide ql = numeric::one_minus_sq(lambda);
    const Wide qk = numeric::one_minus_sq(k);
    const Wide beta = ql / qk;
    const Wide bk2 = beta * k * k;
    const Wide scale = std::sqrt(ql * qk);

    Wide sum = 0;
    Wide power = 1;
    for (int m = 0; m < big_n; ++m) {
        sum += (1 / Wide(2 * m + 1) + bk2 / (2 * m + 3)) * power * second::kernel::F_poly<Wide>(m, 1 / qk);
        power *= ql;
    }
    const Wide value = special::kernel::complete_E(k) - scale * sum;

    const Wide shape = (big_n + 1) / ((big_n + Wide(0.5)) * (big_n + Wide(1.5)));
    const Wide bound = (k * k >= Wide(0.5)) ? shape * std::pow(bk2, big_n) * scale / (1 - bk2)
                                            : shape * std::pow(ql, big_n) / (lambda * lambda) * scale;
    return {static_cast<double>(value), static_cast<double>(bound), big_n, true};
}

double reflection_E(const EvalPoint& p)
{
    if (p.k() >= 1) throw DomainError("reflection_E needs k < 1");
    const Wide lambda = p.lambda();
    const Wide k = p.k();
    const Wide qk = numeric::one_minus_sq(k);
    const Wide inner = special::kernel::incomplete_E<Wide>(std::sqrt(numeric::one_minus_sq(lambda)), -k * k / qk,
                                                           Wide(1e-19));
    return static_cast<double>(special::kernel::complete_E(k) - std::sqrt(qk) * inner);
}

std::vector<RegionCell> region_grid(int resolution)
{
    if (resolution < 2) throw DomainError("region_grid: resolution must be >= 2");
    std::vector<RegionCell> cells;
    cells.reserve(static_cast<std::size_t>(resolution - 1) * static_cast<std::size_t>(resolution - 1));
    for (int i = 1; i < resolution; ++i) {
        for (int j = 1; j < resolution; ++j) {
            const double lambda = static_cast<double>(i) / resolution;
            const double k = static_cast<double>(j) / resolution;
            cells.push_back({lambda, k, classify(EvalPoint(lambda, k))});
        }
    }
    return cells;
}

RegionCounts count_regions(std::span<const RegionCell> cells)
{
    RegionCounts counts;
    for (const auto& c : cells) {
        if (c.flags.cond1 && c.flags.cond2) ++counts.both;
        else if (c.flags.cond1) ++counts.cond1_only;
        else if (c.flags.cond2) ++counts.cond2_only;
        else ++counts.neither;
    }
    return counts;
}

namespace {

std::string format_double(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view text)
{
    double v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw DomainError("region CSV: bad number '" + std::string(text) + "'");
    return v;
}

bool parse_flag(std::string_view text)
{
    if (text == "1") return true;
    if (text == "0") return false;
    throw DomainError("region CSV: bad flag '" + std::string(text) + "'");
}

}  // namespace

void write_region_csv(std::ostream& out, std::span<const RegionCell> cells)
{
    out << "lambda,k,cond1,cond2\n";
    for (const auto& c : cells) {
        out << format_double(c.lambda) << ',' << format_double(c.k) << ',' << (c.flags.cond1 ? 1 : 0) << ','
            << (c.flags.cond2 ? 1 : 0) << '\n';
    }
}

std::vector<RegionCell> read_region_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line != "lambda,k,cond1,cond2") throw DomainError("region CSV: missing header");
    std::vector<RegionCell> cells;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::string_view rest = line;
        std::string_view fields[4];
        for (int i = 0; i < 4; ++i) {
            const auto comma = rest.find(',');
            if ((comma == std::string_view::npos) != (i == 3)) throw DomainError("region CSV: expected 4 fields");
            fields[i] = rest.substr(0, comma);
            if (i < 3) rest.remove_prefix(comma + 1);
        }
        cells.push_back({parse_double(fields[0]), parse_double(fields[1]), {parse_flag(fields[2]), parse_flag(fields[3])}});
    }
    return cells;
}

}  // namespace ellint2::aux
