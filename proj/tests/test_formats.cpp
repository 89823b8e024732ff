#include "legcount/table_format.hpp"

#include "doctest.h"

#include <stdexcept>

using namespace legcount;

TEST_SUITE_BEGIN("formats");

namespace {

std::vector<TableRow> sample_rows() {
    return {{{7, 0, 0, 0}, "14"},
            {{5, 1, 0, 0}, "9"},
            {{0, 0, 1, 1}, "1"}};
}

}  // namespace

TEST_CASE("format names round-trip") {
    for (auto f : {OutputFormat::plain, OutputFormat::csv, OutputFormat::json,
                   OutputFormat::markdown})
        CHECK(parse_format(format_name(f)) == f);
    CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("csv renders with quoted condition vectors") {
    const auto text = render_rows(sample_rows(), OutputFormat::csv);
    CHECK(text == "conditions,count\n"
                  "\"7,0,0,0\",14\n"
                  "\"5,1,0,0\",9\n"
                  "\"0,0,1,1\",1\n");
}

TEST_CASE("csv and json round-trip byte-exactly") {
    for (auto f : {OutputFormat::csv, OutputFormat::json}) {
        const auto text = render_rows(sample_rows(), f);
        const auto parsed = parse_rows(text, f);
        REQUIRE(parsed.size() == 3);
        CHECK(parsed[1].conditions == std::vector<long>{5, 1, 0, 0});
        CHECK(parsed[1].count == "9");
        CHECK(render_rows(parsed, f) == text);
    }
}

TEST_CASE("json keeps counts as strings") {
    const auto text = render_rows({{{1, 1}, "123456789012345678901234567890"}},
                                  OutputFormat::json);
    CHECK(text.find("\"123456789012345678901234567890\"") != std::string::npos);
}

TEST_CASE("markdown mirrors the published table layout") {
    const auto text = render_rows(sample_rows(), OutputFormat::markdown);
    CHECK(text == "| (a_2,a_3,a_4,a_5) | count |\n"
                  "| --- | --- |\n"
                  "| (7,0,0,0) | 14 |\n"
                  "| (5,1,0,0) | 9 |\n"
                  "| (0,0,1,1) | 1 |\n");
}

TEST_CASE("markdown and plain cannot be parsed back") {
    CHECK_THROWS_AS(parse_rows("x", OutputFormat::markdown),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_rows("x", OutputFormat::plain),
                    std::invalid_argument);
}

TEST_CASE("csv parser rejects malformed input") {
    CHECK_THROWS_AS(parse_rows("bogus\n", OutputFormat::csv),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_rows("conditions,count\n7,0,14\n", OutputFormat::csv),
                    std::invalid_argument);
}

TEST_SUITE_END();
