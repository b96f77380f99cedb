#include "cli_commands.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

// A record file on disk for the splice/surgery commands.
struct TempRecords {
    std::string path;
    explicit TempRecords(const std::string& content) {
        path = "cli_test_records.txt";
        std::ofstream f(path);
        f << content;
    }
    ~TempRecords() { std::remove(path.c_str()); }
};

const char* kRecords =
    "name: unknot\n"
    "\n"
    "name: trefoilish\n"
    "a2: 1\n"
    "\n"
    "name: framed\n"
    "a2: 1\n"
    "framing: 2\n";

}  // namespace

TEST_CASE("cli: dedekind") {
    auto r = run_cli({"dedekind", "1", "3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "S(1/3) = 2/3"));

    r = run_cli({"dedekind", "7", "1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "S(7/1) = 0"));

    r = run_cli({"dedekind", "2", "4"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "coprime"));

    r = run_cli({"--machine", "dedekind", "1", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "symbol=2/3\n");
}

TEST_CASE("cli: decompose and chain") {
    auto r = run_cli({"decompose", "1", "1", "0", "1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "word = ["));

    r = run_cli({"decompose", "1", "1", "1", "1"});  // det 0
    CHECK(r.code == 2);

    r = run_cli({"--machine", "chain", "0", "1", "-1", "0"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "chain="));
    CHECK(contains(r.out, "parity="));
}

TEST_CASE("cli: tridiagonal commands") {
    auto r = run_cli({"signature", "1", "0", "-3/2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "signature = "));

    r = run_cli({"--machine", "corners", "1", "2", "3"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "top_left="));

    // L(1, 1) is singular.
    r = run_cli({"corners", "1", "1"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "singular"));

    r = run_cli({"--machine", "kirby-melvin", "3", "-2", "5"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "value="));
    CHECK(contains(r.out, "bracket="));

    r = run_cli({"signature", "1", "junk"});
    CHECK(r.code == 2);
}

TEST_CASE("cli: splice") {
    TempRecords recs(kRecords);

    auto r = run_cli({"splice", "--records", recs.path, "--knot1", "unknot", "--knot2",
                      "unknot", "0", "1", "-1", "0"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "lambda_w = 0"));
    CHECK(contains(r.out, "lambda2 = 0"));
    CHECK(contains(r.out, "kappa = 0"));

    // Lens parameters (3,1) through two unknots.
    r = run_cli({"--machine", "splice", "--records", recs.path, "--knot1", "unknot",
                 "--knot2", "unknot", "1", "0", "3", "1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "lambda_w=-1/18"));
    CHECK(contains(r.out, "lambda2=-1/1296"));

    // r = 0 with null framings is not a rational homology sphere.
    r = run_cli({"splice", "--records", recs.path, "--knot1", "unknot", "--knot2",
                 "unknot", "1", "0", "0", "1"});
    CHECK(r.code == 3);

    // Bad matrix: determinant != 1.
    r = run_cli({"splice", "--records", recs.path, "--knot1", "unknot", "--knot2",
                 "unknot", "1", "1", "1", "1"});
    CHECK(r.code == 2);

    // Unknown record name.
    r = run_cli({"splice", "--records", recs.path, "--knot1", "phantom", "--knot2",
                 "unknot", "0", "1", "-1", "0"});
    CHECK(r.code == 2);

    // --general prints the element, whose empty coefficient is always 1.
    r = run_cli({"--machine", "splice", "--records", recs.path, "--knot1", "trefoilish",
                 "--knot2", "trefoilish", "0", "1", "-1", "0", "--general"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "term.1=1"));
    CHECK(contains(r.out, "term.theta"));
}

TEST_CASE("cli: splice with a framed record") {
    TempRecords recs(kRecords);

    // Integer framing n on one side can be traded for a matrix change:
    // (p, r; q, s) with framing n/1 equals (p, r + p*n; q, s + q*n) unframed.
    auto framed = run_cli({"--machine", "splice", "--records", recs.path, "--knot1",
                           "framed", "--knot2", "unknot", "1", "0", "3", "1"});
    CHECK(framed.code == 0);
    auto flat = run_cli({"--machine", "splice", "--records", recs.path, "--knot1",
                         "trefoilish", "--knot2", "unknot", "1", "0", "5", "1"});
    CHECK(flat.code == 0);

    auto value_of = [](const std::string& text, const std::string& key) {
        auto pos = text.find(key + "=");
        REQUIRE(pos != std::string::npos);
        auto end = text.find('\n', pos);
        return text.substr(pos + key.size() + 1, end - pos - key.size() - 1);
    };
    CHECK(value_of(framed.out, "lambda_w") == value_of(flat.out, "lambda_w"));
    CHECK(value_of(framed.out, "lambda2") == value_of(flat.out, "lambda2"));
    CHECK(value_of(framed.out, "kappa") == value_of(flat.out, "kappa"));
    CHECK(value_of(framed.out, "lambda") == value_of(flat.out, "lambda"));
}

TEST_CASE("cli: surgery and lens") {
    TempRecords recs(kRecords);

    auto r = run_cli({"--machine", "surgery", "--records", recs.path, "--knot",
                      "trefoilish", "1", "1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "lambda_w=2"));

    r = run_cli({"surgery", "--records", recs.path, "--knot", "trefoilish", "0", "1"});
    CHECK(r.code == 3);

    r = run_cli({"--machine", "lens", "3", "1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "lambda_w=-1/18"));
    CHECK(contains(r.out, "lambda2=-1/1296"));

    r = run_cli({"lens", "0", "1"});
    CHECK(r.code == 3);
}

TEST_CASE("cli: verify") {
    auto r = run_cli({"verify", "diagram-dims"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "diagram-dims"));
    CHECK(contains(r.out, "0 failures"));

    r = run_cli({"--machine", "verify", "d-omega", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "suite.d-omega.cases=5"));
    CHECK(contains(r.out, "suite.d-omega.failures=0"));

    r = run_cli({"verify", "no-such-suite"});
    CHECK(r.code == 2);
}

TEST_CASE("cli: usage errors and help") {
    auto r = run_cli({"dedekind", "1"});
    CHECK(r.code == 2);

    r = run_cli({"frobnicate"});
    CHECK(r.code == 2);

    r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "splice"));

    r = run_cli({});
    CHECK(r.code == 2);
}
