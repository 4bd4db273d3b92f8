#include <doctest.h>

#include <sstream>

#include "betarith/reproduce.hpp"

using namespace betarith;

TEST_SUITE("reproduce") {
    TEST_CASE("printed tables have the expected sizes") {
        CHECK(printed_bounds(1).size() == 7);
        CHECK(printed_bounds(2).size() == 7);
        CHECK(printed_bounds(3).size() == 28);
        CHECK(printed_bounds(4).size() == 28);
        CHECK(printed_lower_bounds().size() == 10);
        CHECK(printed_norm_rows().size() == 13);
        CHECK_THROWS_AS(printed_bounds(5), std::out_of_range);
        CHECK_THROWS_AS(reproduce_table(7), std::out_of_range);
    }

    TEST_CASE("lower bound table") {
        const ReportTable t = reproduce_table(5);
        CHECK(t.rows.size() == 10);
        CHECK(t.all_pass());
        CHECK(t.failures() == 0);
    }

    TEST_CASE("csv output") {
        const ReportTable t = reproduce_table(5);
        std::istringstream in(t.to_csv());
        std::string header;
        std::getline(in, header);
        CHECK(header.substr(header.size() - 6) == ",check");
        std::size_t lines = 0;
        for (std::string line; std::getline(in, line);) {
            ++lines;
            CHECK(line.substr(line.size() - 5) == ",PASS");
        }
        CHECK(lines == t.rows.size());
    }

    TEST_CASE("sum table rows carry their methods") {
        const ReportTable t = reproduce_table(1);
        CHECK(t.all_pass());
        REQUIRE(t.columns.size() == t.rows.front().size());
    }

    TEST_CASE("main theorem on a small range") {
        const ReportTable t = reproduce_main_theorem({}, 8);
        CHECK(t.all_pass());
        CHECK(t.rows.size() > 20);
    }

    TEST_CASE("classification grid agrees with numeric root finding") {
        const ReportTable t = classification_grid(10);
        CHECK(t.rows.size() == 2 * 21 * 21);
        CHECK(t.all_pass());
    }
}
