// End-to-end tests of the command-line binary: every printed value must
// reparse to an equal element, exit codes must classify failures, and the
// machine-readable suite reports must follow the published schema.

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "qdiff/limits.hpp"
#include "qdiff/opexpr.hpp"
#include "qdiff/quantum_group.hpp"

using namespace qdiff;
using nlohmann::json;

namespace {

struct RunResult {
  std::string out;
  int code = -1;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(QDIFF_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  while (!r.out.empty() && r.out.back() == '\n') r.out.pop_back();
  return r;
}

}  // namespace

TEST_CASE("documented one-liners print the expected elements") {
  RunResult jackson = run_cli("apply 'dxb(1)' 'x^3'");
  CHECK(jackson.code == 0);
  CHECK(jackson.out == "(1+q+q^2)*x^2");

  RunResult raise = run_cli("apply 'E' 'y'");
  CHECK(raise.code == 0);
  CHECK(raise.out == "x");

  RunResult dx_limit = run_cli("specialize 'dx' --order 4");
  CHECK(dx_limit.code == 0);
  CHECK(dx_limit.out == "Du + O(t^4)");
}

TEST_CASE("printed plane elements reparse to the computed value") {
  const std::string op_src = "tau_x*dyb(2) - q*lambda_x*dx";
  const std::string poly_src = "x^2*y^3 + q*y";
  RunResult r = run_cli("apply '" + op_src + "' '" + poly_src + "'");
  REQUIRE(r.code == 0);
  PlaneElement direct =
      parse_operator(op_src).apply(parse_plane(poly_src));
  CHECK(parse_plane(r.out) == direct);
}

TEST_CASE("printed normal forms reparse to equal operators") {
  for (const char* src : {"[dx, lambda_x; 1, 1]", "Ediv(2)", "dyb(-2)*rho_x",
                          "tau_x^2 - sigma(1, -1)", "dx*dy + q^-2*id"}) {
    RunResult r = run_cli(std::string("nf '") + src + "'");
    REQUIRE(r.code == 0);
    CHECK(parse_operator(r.out) == parse_operator(src));
  }
}

TEST_CASE("bracket twists match the library bracket") {
  RunResult r = run_cli("bracket 'dx' 'lambda_x' --g 1,1");
  REQUIRE(r.code == 0);
  CHECK(parse_operator(r.out) ==
        bracket_g(OperatorNF::dx(), OperatorNF::lambda_x(), GradeVec{1, 1}));

  RunResult plain = run_cli("bracket 'dx' 'lambda_x'");
  REQUIRE(plain.code == 0);
  CHECK(parse_operator(plain.out) ==
        bracket_g(OperatorNF::dx(), OperatorNF::lambda_x(), GradeVec{0, 0}));
}

TEST_CASE("closed and recursive quantum group actions agree") {
  const std::string x_src = "E*F - F*E";
  const std::string p_src = "x^2*y";
  RunResult closed = run_cli("uq-act '" + x_src + "' '" + p_src + "'");
  RunResult recur =
      run_cli("uq-act '" + x_src + "' '" + p_src + "' --mode recursive");
  REQUIRE(closed.code == 0);
  REQUIRE(recur.code == 0);
  CHECK(closed.out == recur.out);
  CHECK(parse_plane(closed.out) ==
        uq_act(parse_uq(x_src), parse_plane(p_src)));
}

TEST_CASE("printed limit series reparse to the computed series") {
  for (const char* src : {"dx", "dxb(2)", "lambda_x*dx", "tau_x",
                          "dx*dy - rho_y"}) {
    RunResult r = run_cli(std::string("specialize '") + src + "' --order 4");
    REQUIRE(r.code == 0);
    CHECK(parse_weyl_series(r.out) == nu(parse_operator(src), 4));
  }
}

TEST_CASE("module reports are valid JSON with reparseable matrices") {
  RunResult r = run_cli("module --dim 3");
  REQUIRE(r.code == 0);
  json d = json::parse(r.out);
  CHECK(d["n"] == 3);
  CHECK(d["dim"] == 4);
  CHECK(d["all_pass"] == true);
  CHECK(d["checks"].size() == 7);
  for (const auto& c : d["checks"]) CHECK(c["pass"] == true);
  for (const char* name : {"E", "F", "K"}) {
    const json& m = d["matrices"][name];
    REQUIRE(m.size() == 4);
    for (const auto& row : m) {
      REQUIRE(row.size() == 4);
      for (const auto& cell : row)
        CHECK_NOTHROW(parse_scalar(cell.get<std::string>()));
    }
  }
  // Type-1 spectrum on the diagonal of K.
  for (int k = 0; k <= 3; ++k)
    CHECK(parse_scalar(d["matrices"]["K"][k][k].get<std::string>()) ==
          Scalar::q_power(3 - 2 * k));
}

TEST_CASE("suite reports follow the schema and are deterministic") {
  RunResult r = run_cli("verify S1 --json");
  REQUIRE(r.code == 0);
  json d = json::parse(r.out);
  CHECK(d["suite"] == "S1");
  CHECK(d["cases"].get<int>() > 0);
  CHECK(d["failures"].empty());
  CHECK(d["seconds"].get<double>() >= 0.0);

  RunResult a = run_cli("verify S8 --json --seed 7");
  RunResult b = run_cli("verify S8 --json --seed 7");
  REQUIRE(a.code == 0);
  json ja = json::parse(a.out);
  json jb = json::parse(b.out);
  ja.erase("seconds");
  jb.erase("seconds");
  CHECK(ja == jb);
}

TEST_CASE("exit codes classify parse, evaluation, and usage failures") {
  CHECK(run_cli("verify S3").code == 0);
  CHECK(run_cli("nf 'dx +'").code == 1);
  CHECK(run_cli("apply 'dx' 'x +'").code == 1);
  CHECK(run_cli("verify S99").code == 1);
  CHECK(run_cli("frobnicate").code == 1);
  CHECK(run_cli("nf 'shift(-1, 0)'").code == 2);
  CHECK(run_cli("specialize 's*dx' --order 3").code == 2);
  CHECK(run_cli("apply 'dx/0' 'x'").code == 2);
  CHECK(run_cli("--help").code == 0);
}
