#include "ellint2/tables.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "ellint2/baseline.hpp"
#include "ellint2/first_expansion.hpp"
#include "ellint2/special.hpp"

namespace ellint2::tables {

namespace {

struct Point {
    double lambda;
    double k;
};

constexpr std::array<Point, 6> kFirstPoints{{{0.8, 0.8}, {0.9, 0.9}, {0.95, 0.95}, {0.99, 0.99}, {0.95, 0.99}, {0.99, 0.999}}};
constexpr std::array<Point, 6> kSecondPoints{{{0.8, 0.8}, {0.9, 0.9}, {0.95, 0.95}, {0.99, 0.95}, {0.99, 0.99}, {0.999, 0.99}}};
constexpr std::array<Point, 7> kBaselinePoints{
    {{0.8, 0.8}, {0.9, 0.9}, {0.95, 0.95}, {0.99, 0.95}, {0.99, 0.99}, {0.999, 0.99}, {0.999, 0.999}}};

constexpr std::array<std::string_view, 6> kExpansionColumns{"E", "approx", "refined", "rel_err", "rel_err_refined", "range"};
constexpr std::array<std::string_view, 5> kBaselineColumns{"E", "approx", "rel_err", "delta1_star", "delta2_star"};

template <std::size_t Rows, std::size_t Cols>
constexpr std::array<PrintedCell, Rows * Cols> make_cells(const std::array<std::array<std::string_view, Cols>, Rows>& text,
                                                          const std::array<std::string_view, Cols>& columns)
{
    std::array<PrintedCell, Rows * Cols> cells{};
    for (std::size_t r = 0; r < Rows; ++r)
        for (std::size_t c = 0; c < Cols; ++c) cells[r * Cols + c] = {static_cast<int>(r), columns[c], text[r][c]};
    return cells;
}

constexpr std::array<std::array<std::string_view, 6>, 12> kTable1Text{{
    {".8501", ".8714", ".8496", "-.02504", ".6011e-3", ".002446"},
    {".9504", ".9669", ".9500", "-.01734", ".4455e-3", ".001972"},
    {".9900", "1.0003", ".9897", "-.01044", ".2712e-3", ".001250"},
    {"1.0056", "1.0081", "1.0055", "-.002531", ".6475e-4", ".3072e-3"},
    {".9586", ".9591", ".9586", "-.5674e-3", ".5651e-7", ".1743e-4"},
    {".9916", ".9916", ".9916", "-.3417e-4", ".1902e-8", ".5445e-8"},
    {".8501", ".8547", ".8501", "-.005413", ".4975e-4", ".1990e-3"},
    {".9504", ".9523", ".9504", "-.001966", ".1837e-4", ".8270e-4"},
    {".9900", ".9906", ".9900", "-.6056e-3", ".5978e-7", ".2661e-4"},
    {"1.0056", "1.0056", "1.0056", "-.2995e-4", ".2667e-8", ".1324e-7"},
    {".9586", ".9586", ".9586", "-.6968e-7", ".3090e-10", ".8609e-9"},
    {".9916", ".9916", ".9916", "-.4240e-9", ".1081e-11", ".2810e-11"},
}};

constexpr std::array<std::array<std::string_view, 6>, 12> kTable2Text{{
    {".8501", ".8976", ".8491", "-.05586", ".001162", ".08435"},
    {".9504", ".9532", ".9509", "-.01343", "-.5311e-3", ".01618"},
    {".9900", ".9933", ".9909", "-.003344", "-.9083e-3", ".003602"},
    {"1.0572", "1.0574", "1.0572", "-.2771e-3", "-.3481e-4", ".2784e-3"},
    {"1.0056", "1.0057", "1.0056", "-.1355e-3", "-.3648e-4", ".1335e-3"},
    {"1.0220", "1.0220", "1.0220", "-.4114e-7", "-.5547e-8", ".4085e-7"},
    {".8501", ".8589", ".8501", "-.01028", "-.2378e-4", ".01771"},
    {".9504", ".9516", ".9505", "-.001286", "-.6168e-4", ".001870"},
    {".9900", ".9901", ".9900", "-.1633e-3", "-.1004e-4", ".2188e-3"},
    {"1.0572", "1.0572", "1.0572", "-.3110e-7", "-.8657e-8", ".3212e-7"},
    {"1.0056", "1.0056", "1.0056", "-.1345e-7", "-.9252e-9", ".1689e-7"},
    {"1.0220", "1.0220", "1.0220", "-.4774e-10", "-.1502e-10", ".4679e-10"},
}};

constexpr std::array<std::array<std::string_view, 5>, 7> kTable3Text{{
    {".8501", ".8343", ".01864", ".78055", ".23538"},
    {".9504", "1.0127", "-.06551", ".66727", ".17444"},
    {".9900", "1.0704", "-.08121", ".44780", ".12025"},
    {"1.0572", "1.1178", "-.05736", ".27546", ".105"},
    {"1.0056", "1.0472", "-.04136", ".15715", ".03994"},
    {"1.0220", "1.0434", "-.02088", ".07386", ".03581"},
    {"1.0017", "1.0094", "-.007712", ".02327", ".006137"},
}};

constexpr auto kTable1 = make_cells(kTable1Text, kExpansionColumns);
constexpr auto kTable2 = make_cells(kTable2Text, kExpansionColumns);
constexpr auto kTable3 = make_cells(kTable3Text, kBaselineColumns);

constexpr int kScientificDigits = 2;

long parse_digits(std::string_view digits)
{
    long v = 0;
    const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (res.ec != std::errc() || res.ptr != digits.data() + digits.size())
        throw std::invalid_argument("malformed printed value");
    return v;
}

}  // namespace

std::vector<TableRow> table1(double eps)
{
    std::vector<TableRow> rows;
    for (int order = 1; order <= 2; ++order) {
        for (const auto& pt : kFirstPoints) {
            const EvalPoint p(pt.lambda, pt.k);
            const ExpansionOrder n(order);
            const double e = special::oracle_E(p);
            const auto parts = first::enclosure_parts(p, n);
            const double refined = first::refined_E_hat(p, n, eps).estimate;
            rows.push_back({pt.lambda, pt.k, order, e, parts.partial_sum, refined, (e - parts.partial_sum) / e,
                            (e - refined) / e, parts.prefactor * (parts.fN - parts.fN1) / e});
        }
    }
    return rows;
}

std::vector<TableRow> table2(double delta)
{
    std::vector<TableRow> rows;
    for (int order = 1; order <= 2; ++order) {
        for (const auto& pt : kSecondPoints) {
            const EvalPoint p(pt.lambda, pt.k);
            const ExpansionOrder n(order);
            const double e = special::oracle_E(p);
            const double approx = second::partial_sum_E_tilde(p, n);
            const double refined = second::refined_E_bar(p, n, delta).estimate;
            const auto rem = second::remainder_bounds(p, n);
            rows.push_back({pt.lambda, pt.k, order, e, approx, refined, (e - approx) / e, (e - refined) / e,
                            (rem.upper - rem.lower) / e});
        }
    }
    return rows;
}

std::vector<BaselineRow> table3()
{
    std::vector<BaselineRow> rows;
    for (const auto& pt : kBaselinePoints) {
        const EvalPoint p(pt.lambda, pt.k);
        const double e = special::oracle_E(p);
        const auto b = baseline::cg_lopez_approx(p);
        const auto d = baseline::delta_star(p, e);
        rows.push_back({pt.lambda, pt.k, e, b.value, (e - b.value) / e, d.lopez, d.cg});
    }
    return rows;
}

std::span<const PrintedCell> printed_table(int which)
{
    switch (which) {
    case 1: return kTable1;
    case 2: return kTable2;
    case 3: return kTable3;
    default: throw DomainError("tables are numbered 1 to 3");
    }
}

bool matches_printed(std::string_view printed, double computed)
{
    const bool negative = !printed.empty() && printed.front() == '-';
    if (negative) printed.remove_prefix(1);

    int exponent = 0;
    if (const auto e = printed.find('e'); e != std::string_view::npos) {
        const auto exp_text = printed.substr(e + 1);
        const bool neg_exp = !exp_text.empty() && exp_text.front() == '-';
        exponent = static_cast<int>(parse_digits(neg_exp ? exp_text.substr(1) : exp_text));
        if (neg_exp) exponent = -exponent;
        printed = printed.substr(0, e);
    }
    const bool scientific = exponent != 0;

    const auto dot = printed.find('.');
    std::string digits(printed.substr(0, dot));
    int decimals = 0;
    if (dot != std::string_view::npos) {
        digits += printed.substr(dot + 1);
        decimals = static_cast<int>(printed.size() - dot - 1);
    }
    if (scientific && decimals > kScientificDigits) {
        const auto drop = static_cast<std::size_t>(decimals - kScientificDigits);
        digits = digits.substr(0, digits.size() > drop ? digits.size() - drop : 0);
        decimals = kScientificDigits;
    }
    const long units = parse_digits(digits.empty() ? std::string_view("0") : std::string_view(digits));
    const double unit = std::pow(10.0, exponent - decimals);
    const double low = static_cast<double>(units) * unit;

    if (negative != (computed < 0) && computed != 0) return false;
    const double magnitude = std::fabs(computed);
    const double fuzz = 1e-9 * unit;
    // Printed digits are either rounded or truncated, so accept both readings.
    return magnitude >= low - 0.5 * unit - fuzz && magnitude <= low + unit + fuzz;
}

double column_value(const TableRow& row, std::string_view column)
{
    if (column == "E") return row.exactE;
    if (column == "approx") return row.approx;
    if (column == "refined") return row.refined;
    if (column == "rel_err") return row.rel_err;
    if (column == "rel_err_refined") return row.rel_err_refined;
    if (column == "range") return row.range;
    throw DomainError("unknown table column");
}

double column_value(const BaselineRow& row, std::string_view column)
{
    if (column == "E") return row.exactE;
    if (column == "approx") return row.approx;
    if (column == "rel_err") return row.rel_err;
    if (column == "delta1_star") return row.delta1_star;
    if (column == "delta2_star") return row.delta2_star;
    throw DomainError("unknown table column");
}

std::vector<Mismatch> check_table(int which)
{
    std::vector<Mismatch> out;
    const auto cells = printed_table(which);
    const auto collect = [&](const auto& rows) {
        for (const auto& cell : cells) {
            const double v = column_value(rows[static_cast<std::size_t>(cell.row)], cell.column);
            if (!matches_printed(cell.text, v))
                out.push_back({cell.row, std::string(cell.column), std::string(cell.text), v});
        }
    };
    if (which == 3) collect(table3());
    else collect(which == 1 ? table1() : table2());
    return out;
}

}  // namespace ellint2::tables
