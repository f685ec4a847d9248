#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "tensorwalks/cli.hpp"

using namespace tensorwalks;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("documented invocations") {
    auto r = call({"walks", "--group", "Z10", "--k", "6", "--from", "0", "--to", "8"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"count\":\"15\"}\n");
    r = call({"invariants", "--group", "Z2wrS2", "--k", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"invariants\":[\"1\",\"0\",\"1\",\"0\",\"4\",\"0\",\"16\"]}\n");
    r = call({"poincare", "--group", "SL2(3)", "--module", "steinberg", "--method", "paper"});
    CHECK(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["num"] == "1 - 3t + 2t^3");
    CHECK(j["den"] == "(1+t)(1-t)(1-3t)");
    CHECK(j["reduced"]["num_text"] == "1 - 2t - 2t^2");
  }

  TEST_CASE("exit codes") {
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"walks", "--group", "Z10"}).code == 2);
    CHECK(call({"walks", "--group", "Z4xQ2", "--k", "2"}).code == 2);
    CHECK(call({"walks", "--group", "GL2(4)", "--k", "2"}).code == 2);
    CHECK(call({"walks", "--group", "Z10", "--k", "2", "--method", "guess"}).code == 2);
    CHECK(call({"walks", "--group", "Z10", "--k", "2", "--to", "x"}).code == 2);
    CHECK(call({"verify", "--suite", "nonsense"}).code == 2);
    CHECK(call({"walks", "--group", "GL2(3)", "--k", "2", "--to", "1"}).code == 3);
    CHECK(call({"walks", "--group", "GL2(3)", "--k", "2", "--method", "matrix"}).code == 3);
    CHECK(call({"dims", "--group", "Z2wrS3", "--k", "2"}).code == 3);
    CHECK(call({"invariants", "--group", "Z4xZ2", "--k", "2", "--centralizer"}).code == 3);
    CHECK(call({"poincare", "--group", "Z2wrS2", "--lambda", "1"}).code == 3);
    CHECK(call({"egf", "--group", "S4"}).code == 3);
    CHECK(call({"diagalg", "--group", "S4", "--k", "2"}).code == 3);
    CHECK(call({"poincare", "--group", "S4", "--method", "paper"}).code == 3);
    CHECK(call({"--help"}).code == 0);
  }

  TEST_CASE("auto agrees byte-for-byte with each explicit method") {
    const std::vector<std::vector<std::string>> cases{
        {"--group", "Z10", "--k", "7", "--from", "3", "--to", "6"},
        {"--group", "paley(13)", "--k", "5", "--to", "2"},
        {"--group", "circulant(8;1,2,6,7)", "--k", "6", "--to", "4"},
        {"--group", "Z4xZ2", "--k", "6", "--to", "3,1"},
        {"--group", "hypercube(3)", "--k", "5", "--from", "(1,0,0)", "--to", "(0,1,1)"},
        {"--group", "S4", "--k", "6", "--to", "(2,2)"},
        {"--group", "Z3wrS2", "--k", "6"},
        {"--group", "GL2(5)", "--k", "6", "--module", "steinberg"},
        {"--group", "SL2(7)", "--k", "5"},
    };
    for (const auto& c : cases) {
      std::vector<std::string> base{"walks"};
      base.insert(base.end(), c.begin(), c.end());
      const Result automatic = call(base);
      REQUIRE(automatic.code == 0);
      int applicable = 0;
      for (const char* m : {"matrix", "character", "closed"}) {
        auto args = base;
        args.insert(args.end(), {"--method", m});
        const Result r = call(args);
        if (r.code == 3) continue;
        ++applicable;
        CHECK(r.code == 0);
        CHECK(r.out == automatic.out);
      }
      CHECK(applicable >= 2);
    }
    for (const auto& [g, lam] : std::vector<std::pair<std::string, std::string>>{
             {"S4", "(3,1)"}, {"Z6", "1"}, {"Z3xZ3", "1,2"}}) {
      const Result automatic = call({"poincare", "--group", g, "--lambda", lam});
      const Result cramer = call({"poincare", "--group", g, "--lambda", lam, "--method", "cramer"});
      CHECK(automatic.code == 0);
      CHECK(automatic.out == cramer.out);
    }
  }

  TEST_CASE("JSON output round-trips") {
    const std::vector<std::vector<std::string>> cases{
        {"walks", "--group", "Z10", "--k", "12"},
        {"dims", "--group", "S4", "--k", "3"},
        {"invariants", "--group", "GL2(3)", "--k", "5"},
        {"invariants", "--group", "Z10", "--k", "4", "--centralizer"},
        {"poincare", "--group", "S3", "--lambda", "(2,1)"},
        {"poincare", "--group", "GL2(3)", "--method", "paper"},
        {"egf", "--group", "Z4xZ2", "--order", "6", "--target", "3,1"},
        {"egf", "--group", "Z2wrS3", "--order", "6"},
        {"bratteli", "--group", "Z4xZ2", "--levels", "6"},
        {"quiver", "--group", "S4"},
        {"diagalg", "--group", "Z2xZ2", "--k", "2", "--list"},
        {"verify", "--suite", "gauss"},
    };
    for (const auto& c : cases) {
      const Result r = call(c);
      REQUIRE(r.code == 0);
      const auto j = nlohmann::ordered_json::parse(r.out);
      CHECK(j.dump() + "\n" == r.out);
    }
  }

  TEST_CASE("values through the command line") {
    auto r = call({"dims", "--group", "Z4xZ2", "--k", "6"});
    auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["dims"]["(2,0)"] == "16");
    CHECK(j["dims"]["(1,1)"] == "12");
    CHECK(j["dims"]["(0,0)"] == "16");
    CHECK(j["dims"]["(3,1)"] == "20");
    r = call({"bratteli", "--group", "Z4xZ2", "--levels", "6"});
    j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["level_dims"] == nlohmann::ordered_json{"1", "2", "6", "20", "72", "272", "1056"});
    r = call({"diagalg", "--group", "Z4xZ2", "--k", "6", "--target", "1,1"});
    CHECK(r.out == "{\"count\":\"144\"}\n");
    r = call({"egf", "--group", "hypercube(2)", "--order", "4"});
    j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["coeffs"] == nlohmann::ordered_json{"1", "0", "2", "0", "8"});
    r = call({"walks", "--group", "Z10", "--k", "40", "--to", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"count\":\"" + std::string("219993856006") + "\"}\n");
  }

  TEST_CASE("CSV and DOT") {
    auto r = call({"walks", "--group", "Z10", "--k", "6", "--to", "8", "--csv"});
    CHECK(r.out == "count\n15\n");
    r = call({"dims", "--group", "S3", "--k", "2", "--csv"});
    CHECK(r.out == "lambda,count\n(3),2\n\"(2,1)\",3\n\"(1,1,1)\",1\n");
    r = call({"quiver", "--group", "Z3", "--format", "dot"});
    CHECK(r.out.rfind("digraph Q {", 0) == 0);
    r = call({"bratteli", "--group", "S3", "--levels", "2", "--format", "dot"});
    CHECK(r.out.rfind("digraph B {", 0) == 0);
    CHECK(call({"quiver", "--group", "Z3", "--format", "svg"}).code == 2);
  }
}
