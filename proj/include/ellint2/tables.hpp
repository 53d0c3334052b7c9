#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ellint2/second_expansion.hpp"

namespace ellint2::tables {

/// One row of the expansion tables: relative errors are (E - approx)/E and
/// `range` is the certified interval width divided by E.
struct TableRow {
    double lambda;
    double k;
    int order;
    double exactE;
    double approx;
    double refined;
    double rel_err;
    double rel_err_refined;
    double range;
};

struct BaselineRow {
    double lambda;
    double k;
    double exactE;
    double approx;
    double rel_err;
    double delta1_star;
    double delta2_star;
};

/// First expansion, orders 1 and 2, refined with shift `eps`.
[[nodiscard]] std::vector<TableRow> table1(double eps = 0.5);

/// Second expansion, orders 1 and 2, refined with weight `delta`.
[[nodiscard]] std::vector<TableRow> table2(double delta = second::kDefaultDelta);

/// Logarithmic baseline with both bound widths.
[[nodiscard]] std::vector<BaselineRow> table3();

/// Published value of one cell, verbatim, e.g. "-.02504" or ".6011e-3".
struct PrintedCell {
    int row;
    std::string_view column;
    std::string_view text;
};

[[nodiscard]] std::span<const PrintedCell> printed_table(int which);

/// Published entries are truncated or rounded: the computed value must fall in
/// [printed - unit/2, printed + unit] by magnitude with matching sign, where
/// unit is one step of the last printed digit. Scientific-notation entries are compared at two significant
/// digits of the mantissa.
[[nodiscard]] bool matches_printed(std::string_view printed, double computed);

struct Mismatch {
    int row;
    std::string column;
    std::string printed;
    double computed;
};

[[nodiscard]] std::vector<Mismatch> check_table(int which);

/// Column value by name for rows of tables 1 and 2: E, approx, refined, rel_err,
/// rel_err_refined, range.
[[nodiscard]] double column_value(const TableRow& row, std::string_view column);

/// Column value by name for table 3: E, approx, rel_err, delta1_star, delta2_star.
[[nodiscard]] double column_value(const BaselineRow& row, std::string_view column);

}  // namespace ellint2::tables
