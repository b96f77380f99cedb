#include "records.hpp"

#include <doctest.h>

using exact::Rat;

TEST_CASE("record parsing with defaults and framing") {
    auto recs = records::parse_records_text(
        "name: unknot\n"
        "\n"
        "name: trefoil\n"
        "lambda_w: 0\n"
        "a2: 1\n"
        "a4: -1\n"
        "v: 3\n"
        "\n"
        "name: framed\n"
        "framing: -3/2\n"
        "lambda2: 5/7\n");
    REQUIRE(recs.size() == 3);

    const auto& unknot = records::find_record(recs, "unknot");
    CHECK(unknot.ambient_lambda_w == 0);
    CHECK(unknot.a2 == 0);
    CHECK(unknot.framing.is_null());

    const auto& tref = records::find_record(recs, "trefoil");
    CHECK(tref.a2 == 1);
    CHECK(tref.a4 == -1);
    CHECK(tref.v_coeff == 3);

    const auto& fr = records::find_record(recs, "framed");
    CHECK(fr.framing.u == -3);
    CHECK(fr.framing.v == 2);
    CHECK(fr.ambient_lambda2 == Rat(5, 7));

    CHECK_THROWS_AS(records::find_record(recs, "absent"), exact::ValidationError);
}

TEST_CASE("comments and loose whitespace are tolerated") {
    auto recs = records::parse_records_text(
        "# a file of one record\n"
        "name:  spaced  \n"
        "  a2 : 2/4  \n");
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].name == "spaced");
    CHECK(recs[0].data.a2 == Rat(1, 2));
}

TEST_CASE("malformed record files are rejected") {
    CHECK_THROWS_AS(records::parse_records_text("a2: 1\n"), exact::ValidationError);
    CHECK_THROWS_AS(records::parse_records_text("name: a\nwidth: 3\n"),
                    exact::ValidationError);
    CHECK_THROWS_AS(records::parse_records_text("name: a\n\nname: a\n"),
                    exact::ValidationError);
    CHECK_THROWS_AS(records::parse_records_text("name: a\na2: 1\na2: 2\n"),
                    exact::ValidationError);
    CHECK_THROWS_AS(records::parse_records_text("name: a\na2 1\n"), exact::ValidationError);
    CHECK_THROWS_AS(records::parse_records_text("name: a\na2: x\n"), exact::ValidationError);
    CHECK_THROWS_AS(records::parse_records_text("name: a\nframing: 1/0\n"),
                    exact::ValidationError);
    CHECK_THROWS_AS(records::parse_records_text("name: a\na2:\n"), exact::ValidationError);
    CHECK_THROWS_AS(records::load_records_file("/nonexistent/records.txt"),
                    exact::ValidationError);
}
