#include <doctest.h>

#include <sstream>

#include "cubeprog/table.hpp"

using namespace cubeprog;

TEST_CASE("bundled table") {
    const auto& rows = witness_table();
    REQUIRE(rows.size() == 18);
    CHECK(rows.front().D == -30);
    CHECK(rows.back().D == 26);

    auto row = witness_for(Integer(2));
    REQUIRE(row.has_value());
    CHECK(row->x == 10);
    CHECK(row->y == 28);
    CHECK_FALSE(witness_for(Integer(5)).has_value());
    CHECK_FALSE(witness_for(Integer(-2)).has_value());

    auto deep = witness_for(Integer(23));
    REQUIRE(deep.has_value());
    CHECK(deep->x == make_rational(Integer("4655599441"), Integer("56851600")));
}

TEST_CASE("csv file matches the compiled table") {
    auto rows = load_table_csv_file(std::string(CUBEPROG_DATA_DIR) + "/table_s5.csv");
    const auto& embedded = witness_table();
    REQUIRE(rows.size() == embedded.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].D == embedded[i].D);
        CHECK(rows[i].x == embedded[i].x);
        CHECK(rows[i].y == embedded[i].y);
    }
}

TEST_CASE("csv parsing errors") {
    std::istringstream bad_header("D;x;y\n2,10,28\n");
    CHECK_THROWS_AS(load_table_csv(bad_header), std::invalid_argument);
    std::istringstream bad_field("D,x,y\n2,ten,28\n");
    CHECK_THROWS_AS(load_table_csv(bad_field), std::invalid_argument);
    std::istringstream short_line("D,x,y\n2,10\n");
    CHECK_THROWS_AS(load_table_csv(short_line), std::invalid_argument);
}

TEST_CASE("row checks catch corruption") {
    RowCheck good = check_row(TableRow{Integer(2), Rational(10), Rational(28)});
    CHECK(good.pass());

    RowCheck off_curve = check_row(TableRow{Integer(2), Rational(10), Rational(29)});
    CHECK_FALSE(off_curve.on_curve);
    CHECK_FALSE(off_curve.pass());

    RowCheck torsion = check_row(TableRow{Integer(2), Rational(6), Rational(0)});
    CHECK(torsion.on_curve);
    CHECK_FALSE(torsion.infinite_order);
    CHECK_FALSE(torsion.pass());
}

TEST_CASE("verification is thread-count independent") {
    auto sequential = verify_table(0);
    auto threaded = verify_table(4);
    REQUIRE(sequential.size() == threaded.size());
    for (std::size_t i = 0; i < sequential.size(); ++i) {
        CHECK(sequential[i].D == threaded[i].D);
        CHECK(sequential[i].pass() == threaded[i].pass());
        CHECK(sequential[i].pass());
    }
}
