#include <doctest.h>

#include "khoma/bracket.hpp"
#include "khoma/render.hpp"
#include "khoma/torus.hpp"
#include "khoma/verify.hpp"

using namespace khoma;

TEST_CASE("polynomial text form") {
    CHECK(polynomial_text(Laurent{}) == "0");
    CHECK(polynomial_text(laurent_one()) == "1");
    CHECK(polynomial_text(bracket_reduced(reference_trefoil())) == "A^-7 - A^-3 - A^5");
    CHECK(polynomial_text(bracket_unreduced(reference_trefoil())) == "-A^-9 + A^-1 + A^3 + A^7");
    CHECK(polynomial_text(bracket_reduced(torus_2n(1))) == "-A^3");
    Laurent sq = Laurent::circle_weight() * Laurent::circle_weight();
    CHECK(polynomial_text(sq) == "A^-4 + 2 + A^4");
}

TEST_CASE("polynomial json form") {
    CHECK(polynomial_json(bracket_reduced(reference_trefoil())) ==
          "{\"-7\":1,\"-3\":-1,\"5\":-1}");
    CHECK(polynomial_json(Laurent{}) == "{}");
}

TEST_CASE("group text form") {
    CHECK(group_text(AbelianGroup{}) == "");
    CHECK(group_text(AbelianGroup{1, {}}) == "Z");
    CHECK(group_text(AbelianGroup{2, {}}) == "Z^2");
    CHECK(group_text(AbelianGroup{0, {2}}) == "Z_2");
    CHECK(group_text(AbelianGroup{1, {2, 4}}) == "Z+Z_2+Z_4");
}

TEST_CASE("table json lists entries b-descending then a-ascending") {
    HomologyTable hopf = closed_form_t2n(2);
    CHECK(table_json(hopf) ==
          "{\"entries\":[{\"a\":2,\"b\":6,\"free\":1,\"torsion\":[]},"
          "{\"a\":2,\"b\":2,\"free\":1,\"torsion\":[]},"
          "{\"a\":-2,\"b\":-2,\"free\":1,\"torsion\":[]},"
          "{\"a\":-2,\"b\":-6,\"free\":1,\"torsion\":[]}]}");
    CHECK(table_json(HomologyTable{}) == "{\"entries\":[]}");
}

TEST_CASE("table markdown mirrors the row/column layout") {
    std::string md = table_markdown(closed_form_t2n(2));
    CHECK(md ==
          "| b \\ a | -2 | 2 |\n"
          "| --- | --- | --- |\n"
          "| 6 |   | Z |\n"
          "| 2 |   | Z |\n"
          "| -2 | Z |   |\n"
          "| -6 | Z |   |\n");
}

TEST_CASE("table csv") {
    std::string csv = table_csv(closed_form_t2n(3));
    CHECK(csv ==
          "b\\a,-3,-1,3\n"
          "7,,,Z\n"
          "3,,,Z\n"
          "-1,,Z,\n"
          "-5,Z_2,,\n"
          "-9,Z,,\n");
}

TEST_CASE("matrix triplet dump") {
    DifferentialMatrix m = differential(reference_trefoil(), -1, -5);
    std::string dump = matrix_triplets(m);
    // six +-1 entries, one per line, row-major
    int lines = 0;
    for (char c : dump)
        if (c == '\n')
            ++lines;
    CHECK(lines == 6);
    CHECK(dump.find(" 2 ") != std::string::npos);
}

TEST_CASE("format names parse") {
    CHECK(parse_format("json") == OutputFormat::json);
    CHECK(parse_format("csv") == OutputFormat::csv);
    CHECK(parse_format("markdown") == OutputFormat::markdown);
    CHECK(parse_format("text") == OutputFormat::text);
    CHECK_THROWS(parse_format("yaml"));
}
