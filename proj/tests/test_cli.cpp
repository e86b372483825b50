#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tdi/cli.hpp"
#include "tdi/errors.hpp"
#include "tdi/io.hpp"

using namespace tdi;

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    RunResult result;
    result.code = cli_main(args, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

/// Writes content to a unique temp file and returns its path.
std::string temp_file(const std::string& tag, const std::string& content) {
    const std::string path = "cli_test_" + tag + ".txt";
    std::ofstream file(path, std::ios::trunc);
    file << content;
    return path;
}

} // namespace

TEST_CASE("op subcommand") {
    const RunResult translate = run({"op", "--apply", "translate", "-p", "x1^3", "--y", "1"});
    CHECK(translate.code == 0);
    CHECK(translate.out == "x1^3 + 3*x1^2 + 3*x1 + 1\n");

    const RunResult dilate = run({"op", "--apply", "dilate", "-p", "x^2 + x", "--y", "2"});
    CHECK(dilate.out == "4*x1^2 + 2*x1\n");

    const RunResult partial =
        run({"op", "--apply", "partial", "-p", "x1^2*x2", "--alpha", "1,0"});
    CHECK(partial.out == "2*x1*x2\n");

    const RunResult delta = run({"op", "--apply", "delta", "-p", "x^2", "--alpha", "1"});
    CHECK(delta.out == "2*x1 + 1\n");

    const RunResult polyop = run({"op", "--apply", "polyop", "-p", "x^3", "--operator", "x^2 + 1",
                                  "--mode", "d"});
    CHECK(polyop.out == "x1^3 + 6*x1\n");

    const RunResult rational_point =
        run({"op", "--apply", "translate", "-p", "x1*x2", "--y", "(1, -1/2)"});
    CHECK(rational_point.code == 0);
    CHECK(rational_point.out == "x1*x2 - 1/2*x1 + x2 - 1/2\n");
}

TEST_CASE("orbit subcommand") {
    const RunResult tausigma = run({"orbit", "--kind", "tausigma", "-p", "x1^2*x2"});
    CHECK(tausigma.code == 0);
    CHECK(tausigma.out == "{\"d\":2,\"generators\":[[2,1]]}\n");

    const RunResult tau = run({"orbit", "--kind", "tau", "-p", "x^2"});
    CHECK(tau.out == "x1^2\nx1\n1\n");

    const RunResult sigma = run({"orbit", "--kind", "sigma", "-p", "x^2 + 2*x + 1"});
    CHECK(sigma.out == "x1^2\nx1\n1\n");
}

TEST_CASE("member subcommand") {
    const RunResult outside = run({"member", "-p", "x1^2*x2^2", "--omega",
                                   R"({"d":2,"generators":[[1,"inf"],["inf",1]]})"});
    CHECK(outside.code == 1);
    CHECK(outside.out == "false\nwitness: (2,2)\n");

    const RunResult inside = run({"member", "-p", "x1*x2^2", "--omega",
                                  R"({"d":2,"generators":[[1,"inf"],["inf",1]]})"});
    CHECK(inside.code == 0);
    CHECK(inside.out == "true\n");
}

TEST_CASE("closure subcommand") {
    const std::string scenario = R"({
        "omega": {"d":2,"generators":[[1,"inf"],["inf",1]]},
        "sequence": ["0", "0"],
        "limit": "x1^2*x2^2",
        "grid": [[0,0]],
        "tolerance": "1"
    })";
    const RunResult escaped = run({"closure", "--scenario", scenario});
    CHECK(escaped.code == 1);
    CHECK(escaped.out ==
          "{\"enveloping\":{\"d\":2,\"generators\":[[\"inf\",1],[1,\"inf\"]]},"
          "\"member\":false,\"notes\":{\"final_within_tolerance\":true,"
          "\"max_residuals\":[\"0\",\"0\"]},\"witness\":[2,2]}\n");

    const std::string path = temp_file("scenario", R"({
        "omega": {"d":1,"generators":[[2]]},
        "sequence": ["x^2 - 1", "x^2 - 1/2"],
        "limit": "x^2",
        "grid": [[0],[1],["1/2"]],
        "tolerance": "1/2"
    })");
    const RunResult contained = run({"closure", "--scenario", path});
    CHECK(contained.code == 0);
    CHECK(contained.out.find("\"member\":true") != std::string::npos);
    CHECK(contained.out.find("\"final_within_tolerance\":true") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("invariance subcommand") {
    const std::string good = temp_file("space_good", "x^2\nx\n1\n");
    CHECK(run({"invariance", "--space", good, "--kind", "tdi"}).code == 0);
    CHECK(run({"invariance", "--space", good, "--kind", "tdi"}).out == "true\n");
    std::remove(good.c_str());

    const std::string gapped = temp_file("space_gap", "x^2\n\n1\n");
    CHECK(run({"invariance", "--space", gapped, "--kind", "translation"}).out == "false\n");
    CHECK(run({"invariance", "--space", gapped, "--kind", "translation"}).code == 1);
    CHECK(run({"invariance", "--space", gapped, "--kind", "dilation"}).code == 0);
    std::remove(gapped.c_str());
}

TEST_CASE("verify subcommand") {
    const RunResult report = run({"verify", "--suite", "all", "--seed", "42", "--trials", "4"});
    CHECK(report.code == 0);
    CHECK(report.err.empty());
    std::istringstream lines(report.out);
    std::string line;
    std::vector<std::string> prefixes;
    while (std::getline(lines, line)) prefixes.push_back(line.substr(0, line.find(':')));
    CHECK(prefixes == std::vector<std::string>{"lemma2", "lemma3", "corollary6", "taylor", "delta",
                                               "total"});

    const RunResult repeat = run({"verify", "--suite", "all", "--seed", "42", "--trials", "4"});
    CHECK(report.out == repeat.out);

    const RunResult single = run({"verify", "--suite", "taylor", "--seed", "1", "--trials", "3"});
    CHECK(single.out.find("lemma2") == std::string::npos);
    CHECK(single.out.find("taylor: pass 3 fail 0\n") != std::string::npos);
    CHECK(single.out.find("total: pass 3 fail 0\n") != std::string::npos);
}

TEST_CASE("muntz subcommand") {
    const RunResult table = run({"muntz"});
    CHECK(table.code == 0);
    std::istringstream lines(table.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "bound | #exponents | sum_sq_residual | sup_grid_error");
    std::string row;
    std::getline(lines, row);
    CHECK(row.rfind("10 | 8 | ", 0) == 0);
    int rows = 1;
    while (std::getline(lines, row)) ++rows;
    CHECK(rows == 3);

    const RunResult custom = run({"muntz", "--target", "8", "--bounds", "10", "--grid", "64"});
    CHECK(custom.code == 0);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"op", "-p", "x"}).code == 2);
    CHECK(run({"op", "--apply", "translate", "-p", "x"}).code == 2);
    CHECK(run({"orbit", "--kind", "spiral", "-p", "x"}).code == 2);
    CHECK(run({"closure", "--scenario", "no_such_file_anywhere.json"}).code == 2);
    CHECK(run({"verify", "--suite", "lemma9"}).code == 2);
}

TEST_CASE("parse errors exit with code 3") {
    const RunResult bad_poly = run({"orbit", "--kind", "tau", "-p", "x1 +"});
    CHECK(bad_poly.code == 3);
    CHECK(bad_poly.err.find("parse error at position") != std::string::npos);

    CHECK(run({"member", "-p", "x", "--omega", "{\"d\":1}"}).code == 3);
    CHECK(run({"member", "-p", "x", "--omega", "{not json"}).code == 3);
    CHECK(run({"op", "--apply", "partial", "-p", "x", "--alpha", "1/2"}).code == 3);
}

TEST_CASE("precondition violations exit with code 4") {
    CHECK(run({"muntz", "--target", "4"}).code == 4);
    const std::string scenario = R"({
        "omega": {"d":1,"generators":[[1]]},
        "sequence": ["x"],
        "limit": "x",
        "grid": [[0],[0]],
        "tolerance": "1"
    })";
    CHECK(run({"closure", "--scenario", scenario}).code == 4);
}

TEST_CASE("file arguments load through the at prefix") {
    const std::string path = temp_file("poly", "x1^2*x2");
    const RunResult orbit = run({"orbit", "--kind", "tausigma", "-p", "@" + path});
    CHECK(orbit.code == 0);
    CHECK(orbit.out == "{\"d\":2,\"generators\":[[2,1]]}\n");
    CHECK(run({"orbit", "--kind", "tau", "-p", "@missing_poly_file.txt"}).code == 2);
    std::remove(path.c_str());
}

TEST_CASE("io parsing helpers") {
    CHECK(parse_rational_text(" -3/4 ") == Rational(-3, 4));
    CHECK(format_rational(Rational(-3, 4)) == "-3/4");
    CHECK(format_rational(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational_text("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational_text("2x"), ParseError);

    const Point p = parse_point_text("(1, -1/2)");
    CHECK(p.dimension() == 2);
    CHECK(p[1] == Rational(-1, 2));
    CHECK_THROWS_AS(parse_point_text("(1, 2)", 3), ParseError);

    CHECK(parse_multiindex_text("2,1") == MultiIndex({2, 1}));
    CHECK_THROWS_AS(parse_multiindex_text("-1"), ParseError);

    const LowerSet omega = parse_lowerset(R"({"d":2,"generators":[[2,1],[0,"inf"]]})");
    CHECK(format_lowerset(omega) == R"({"d":2,"generators":[[2,1],[0,"inf"]]})");
    CHECK_THROWS_AS(parse_lowerset(R"({"d":0,"generators":[]})"), ParseError);
    CHECK_THROWS_AS(parse_lowerset(R"({"d":2,"generators":[[1]]})"), ParseError);
    CHECK_THROWS_AS(parse_lowerset(R"({"d":2,"generators":[[1,"oops"]]})"), ParseError);
}
