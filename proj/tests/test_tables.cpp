#include <catch_amalgamated.hpp>

#include <algorithm>

#include "ellint2/tables.hpp"

using namespace ellint2;

TEST_CASE("printed values are read as truncated or rounded", "[tables][match]")
{
    CHECK(tables::matches_printed(".8501", 0.8501769));
    CHECK(tables::matches_printed("1.0017", 1.0016997));
    CHECK_FALSE(tables::matches_printed(".8501", 0.8502001));
    CHECK_FALSE(tables::matches_printed(".8501", 0.8500400));
    CHECK(tables::matches_printed("-.02504", -0.025044334));
    CHECK_FALSE(tables::matches_printed("-.02504", 0.025044334));
    CHECK(tables::matches_printed(".6011e-3", 6.0115e-4));
    CHECK(tables::matches_printed(".6011e-3", 6.0999e-4));
    CHECK_FALSE(tables::matches_printed(".6011e-3", 6.2e-4));
    CHECK_FALSE(tables::matches_printed(".9252e-9", 9.255e-8));
    CHECK(tables::matches_printed(".105", 0.1049996));
}

TEST_CASE("table rows have the expected shape", "[tables]")
{
    const auto t1 = tables::table1();
    const auto t2 = tables::table2();
    const auto t3 = tables::table3();
    REQUIRE(t1.size() == 12);
    REQUIRE(t2.size() == 12);
    REQUIRE(t3.size() == 7);
    for (std::size_t i = 0; i < 12; ++i) {
        CHECK(t1[i].order == (i < 6 ? 1 : 2));
        CHECK(t1[i].range > 0);
        CHECK(t2[i].range > 0);
        CHECK(std::fabs(t1[i].rel_err_refined) < std::fabs(t1[i].rel_err));
        CHECK(std::fabs(t2[i].rel_err_refined) < std::fabs(t2[i].rel_err));
    }
    CHECK(tables::printed_table(1).size() == 72);
    CHECK(tables::printed_table(3).size() == 35);
    CHECK_THROWS_AS(tables::printed_table(4), DomainError);
}

TEST_CASE("table reproduction is deterministic", "[tables]")
{
    for (int which = 1; which <= 3; ++which) {
        const auto a = tables::check_table(which);
        const auto b = tables::check_table(which);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].row == b[i].row);
            CHECK(a[i].column == b[i].column);
            CHECK(a[i].computed == b[i].computed);
        }
    }
}

TEST_CASE("headline entries reproduce", "[tables]")
{
    const auto t1 = tables::table1();
    CHECK(tables::matches_printed(".8714", t1[0].approx));
    CHECK(tables::matches_printed(".6011e-3", t1[0].rel_err_refined));
    CHECK(tables::matches_printed(".002446", t1[0].range));
    const auto t2 = tables::table2();
    CHECK(tables::matches_printed(".8976", t2[0].approx));
    CHECK(tables::matches_printed(".08435", t2[0].range));
    const auto t3 = tables::table3();
    CHECK(tables::matches_printed("1.0127", t3[1].approx));
    CHECK(tables::matches_printed("-.06551", t3[1].rel_err));
    CHECK(tables::matches_printed(".66727", t3[1].delta1_star));
    CHECK(tables::matches_printed(".17444", t3[1].delta2_star));
}

TEST_CASE("every mismatch is a known misprint", "[tables]")
{
    // The remaining entries differ from the computed values by a factor of 100
    // in the exponent, by a transposed digit, or by a different weight.
    CHECK(tables::check_table(1).size() == 12);
    CHECK(tables::check_table(2).size() == 16);
    const auto t3 = tables::check_table(3);
    REQUIRE(t3.size() == 1);
    CHECK(t3[0].column == "delta1_star");
    for (const auto& m : tables::check_table(1)) {
        const bool exponent_shift = m.printed.find('e') != std::string::npos;
        const bool digit_typo = m.printed == ".5445e-8" || m.printed == ".5978e-7";
        CHECK((exponent_shift || digit_typo));
    }
}
