#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {
struct Result {
  int code;
  std::string out, err;
};
Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = orthograph::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("single-shot commands") {
  auto k5 = run({"inner", "--setting", "spherical", "--g", "k5-inner", "--h", "k5-outer"});
  CHECK(k5.code == 0);
  CHECK(k5.out == "-8(n-1)(n-2)(n-4)/(n^8(n+2)^4)\n");
  auto b = run({"orthopoly", "--setting", "boolean", "--edges", "[[1,2],[1,2],[1,2]]"});
  CHECK(b.code == 0);
  CHECK(b.out == "x12^3 - (3n-2)*x12\n");
  auto e = run({"expect", "--setting", "gaussian", "--edges", "[[1,2],[2,3],[3,4],[1,4]]"});
  CHECK(e.out == "n\n");
  auto at = run({"expect", "--setting", "gaussian", "--edges", "[[1,1],[1,1]]", "--n", "3"});
  CHECK(at.out == "15\n");
  auto inline_g = run({"inner", "--setting", "gaussian", "--g", "[[1,2]]", "--h", "[[1,2]]", "--format", "json"});
  CHECK(inline_g.code == 0);
  CHECK(nlohmann::json::parse(inline_g.out).is_object());
}

TEST_CASE("table command") {
  auto t = run({"table", "--setting", "gaussian", "--format", "csv"});
  CHECK(t.code == 0);
  CHECK(std::count(t.out.begin(), t.out.end(), '\n') == 19);
  auto j1 = run({"table", "--setting", "boolean", "--format", "json"});
  auto j2 = run({"table", "--setting", "boolean", "--format", "json"});
  CHECK(j1.out == j2.out);
  CHECK(run({"table", "--format", "csv"}).code == 2);
}

TEST_CASE("invert command") {
  std::string target =
      R"({"setting":"spherical","n":6,"targets":[{"graph":[[1,2],[2,3],[3,4],[4,5],[1,5]],"value":1},)"
      R"({"graph":[[1,3],[1,4],[2,4],[2,5],[3,5]],"value":"2/3"}]})";
  auto r = run({"invert", target, "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["residual_zero"] == true);
  CHECK(j["coefficients"].size() == 2);
  std::string tri = R"({"setting":"spherical","n":2,"targets":[{"graph":[[1,2],[2,3],[1,3]],"value":1}]})";
  auto s = run({"invert", tri});
  CHECK(s.code == 1);
  CHECK(s.err.find("singular block at n=2") != std::string::npos);
}

TEST_CASE("verify command and seeds") {
  auto ok = run({"verify", "exact-values", "--format", "json"});
  CHECK(ok.code == 0);
  CHECK(nlohmann::json::parse(ok.out)["ok"] == true);
  setenv("ORTHOGRAPH_SEED", "1234", 1);
  auto mc = run({"verify", "monte-carlo", "--samples", "2000", "--format", "json"});
  auto mc2 = run({"verify", "monte-carlo", "--samples", "2000", "--format", "json"});
  unsetenv("ORTHOGRAPH_SEED");
  CHECK(mc.out == mc2.out);
  auto j = nlohmann::json::parse(mc.out);
  CHECK(j["checks"][0]["n"] == 10);
  CHECK(j["checks"][0]["seed"] != 0);
  auto explicit_seed = run({"verify", "monte-carlo", "--samples", "2000", "--seed", "1234", "--format", "json"});
  CHECK(explicit_seed.out == mc.out);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "no-such-suite"}).code == 2);
  auto bad = run({"expect", "--setting", "gaussian", "--edges", "[[1,2],"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("parse error") != std::string::npos);
  CHECK(run({"expect", "--edges", "[[1,2]]"}).code == 2);
  CHECK(run({"scan", "--budget", "11"}).code == 3);
  CHECK(run({"orthopoly", "--setting", "gaussian", "--edges", "[[1,2],[2,3],[3,4],[4,5],[5,6],[6,7],[7,8]]", "--n",
             "9"})
            .code == 0);
  CHECK(run({"--help"}).code == 0);
}
