#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "psos/json_io.hpp"
#include "psos/poly_io.hpp"
#include "support.hpp"

using namespace psos;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "padic-sos");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_SUITE("poly_io") {
  TEST_CASE("parse examples") {
    CHECK(parse_poly(R"(["1","0","1"])") == (RatPoly{1, 0, 1}));
    CHECK(parse_poly("[1, 0, 1]") == (RatPoly{1, 0, 1}));
    CHECK(parse_poly("x^2 + 3") == (RatPoly{3, 0, 1}));
    CHECK(parse_poly("4/4225*x^2 + 1/4225*x + 4/4225") ==
          (RatPoly{Rational(4, 4225), Rational(1, 4225), Rational(4, 4225)}));
    CHECK(parse_poly("-x^3 - 2*x + x") == (RatPoly{0, -1, 0, -1}));
    CHECK(parse_poly("0") == RatPoly{});
  }

  TEST_CASE("parse errors carry positions") {
    try {
      parse_poly("x^2 + * 3");
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 6);
    }
    CHECK_THROWS_AS(parse_poly("1/0*x"), ParseError);
    CHECK_THROWS_AS(parse_poly(R"(["1/0"])"), ParseError);
    CHECK_THROWS_AS(parse_poly("[]"), ParseError);
    CHECK_THROWS_AS(parse_poly("x^"), ParseError);
    CHECK_THROWS_AS(parse_poly(""), ParseError);
  }

  TEST_CASE("random round trips") {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 200; ++i) {
      const RatPoly f = psos::testing::random_poly(rng, i % 9, 1000, 1000);
      CHECK(parse_poly(format_poly(f)) == f);
      CHECK(poly_from_json(to_json(f)) == f);
      CHECK(parse_poly(to_json(f).dump()) == f);
    }
    CHECK(format_poly(RatPoly{Rational(1, 3), Rational(1, 2)}) == "1/2*x + 1/3");
  }

  TEST_CASE("JSON numbers are strings") {
    const Json j = to_json(is_positive_on_reals(RatPoly{1, 0, 1}));
    for (const auto& [k, v] : j.items()) CHECK_FALSE(v.is_number());
  }
}

TEST_SUITE("cli") {
  TEST_CASE("exit codes") {
    const CliRun ok = run({"sos4-certify", "--poly", "x^2+1"});
    CHECK(ok.code == 0);
    const Json j = Json::parse(ok.out);
    CHECK(j["schema"] == kSchema);
    CHECK(j["status"] == "ok");
    CHECK(j["result"]["certificate"]["verdict"] == "SOS4");

    const CliRun nt = run({"alg9-demo", "--k", "0", "--N", "65", "--cap", "3"});
    CHECK(nt.code == 2);
    CHECK(Json::parse(nt.out)["status"] == "non-termination");

    const CliRun inc = run({"reduce", "--poly", "4*x^6 + 4*x^3 + 9"});
    CHECK(inc.code == 2);
    CHECK(Json::parse(inc.out)["status"] == "inconclusive");

    const CliRun bad = run({"reduce", "--poly", "x^2 +* 1"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("position") != std::string::npos);
    CHECK(run({"reduce", "--bogus"}).code == 1);
    CHECK(run({"reduce", "--poly", "x^2+3", "--method", "nope"}).code == 1);
    CHECK(run({}).code == 1);
  }

  TEST_CASE("reduce nos by method") {
    const CliRun r = run({"reduce", "--poly", "x^2+3", "--method", "nos"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["result"]["method"] == "NOS");
    CHECK(poly_from_json(j["result"]["h"]) == (RatPoly{Rational(1, 3), Rational(1, 2)}));
  }

  TEST_CASE("padic commands") {
    const Json j = Json::parse(run({"padic-sqrt", "--value", "17", "--precision", "6"}).out);
    CHECK(j["result"]["unit_residue"] == "9");
    CHECK(Json::parse(run({"padic-square", "--value", "-7"}).out)["result"]["is_square"] == true);
  }

  TEST_CASE("identical invocations are byte-identical") {
    const std::vector<std::string> args = {"reduce", "--poly", "4/4225*x^2 + 1/4225*x + 4/4225"};
    const CliRun a = run(args);
    const CliRun b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}
