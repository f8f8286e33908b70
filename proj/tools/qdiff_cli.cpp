// qdiff — exact computation in the algebra of quantum differential operators
// on the quantum plane, with its quantized enveloping algebra action and
// classical limit.
//
// Exit codes: 0 success, 1 parse error (expression or command line),
// 2 evaluation error (ill-formed operator, odd half-power, non-specializable
// scalar), 3 verification suite failure.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdiff/limits.hpp"
#include "qdiff/opexpr.hpp"
#include "qdiff/repmod.hpp"
#include "qdiff/suites.hpp"

namespace {

using nlohmann::json;

json suite_report_json(const qdiff::SuiteReport& rep) {
  // Failure order must not depend on how cases were scheduled.
  auto failures = rep.failures;
  std::sort(failures.begin(), failures.end(),
            [](const qdiff::SuiteFailure& a, const qdiff::SuiteFailure& b) {
              return std::tie(a.case_name, a.input, a.expected, a.actual) <
                     std::tie(b.case_name, b.input, b.expected, b.actual);
            });
  json fj = json::array();
  for (const auto& f : failures)
    fj.push_back({{"case", f.case_name},
                  {"input", f.input},
                  {"expected", f.expected},
                  {"actual", f.actual}});
  return {{"suite", rep.suite},
          {"cases", rep.cases},
          {"failures", fj},
          {"seconds", rep.seconds}};
}

void print_suite_text(const qdiff::SuiteReport& rep) {
  std::cout << rep.suite << ": " << rep.cases << " cases, "
            << rep.failures.size() << " failures (" << rep.seconds << " s)\n";
  for (const auto& f : rep.failures) {
    std::cout << "  FAIL " << f.case_name << "\n"
              << "    input:    " << f.input << "\n"
              << "    expected: " << f.expected << "\n"
              << "    actual:   " << f.actual << "\n";
  }
}

json matrix_json(const qdiff::SMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(m.at(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

int run(int argc, char** argv) {
  CLI::App app{
      "exact computation in the algebra of quantum differential operators"};
  app.require_subcommand(1);

  std::string op_src, plane_src, uq_src, lhs_src, rhs_src, suite_id;
  std::string mode = "closed";
  std::vector<long long> twist{0, 0};
  std::uint64_t seed = 42;
  int order = 5;
  int dim = 0;
  bool as_json = false;

  auto* apply = app.add_subcommand(
      "apply", "apply an operator expression to a plane element");
  apply->add_option("EXPR", op_src, "operator expression")->required();
  apply->add_option("POLY", plane_src, "plane element")->required();

  auto* nf = app.add_subcommand(
      "nf", "normal form of an operator expression, printed in the grammar");
  nf->add_option("EXPR", op_src, "operator expression")->required();

  auto* bracket = app.add_subcommand(
      "bracket", "graded bracket [f, g] twisted by a lattice degree");
  bracket->add_option("F", lhs_src, "left operator expression")->required();
  bracket->add_option("G", rhs_src, "right operator expression")->required();
  bracket
      ->add_option("--g", twist,
                   "twist degree a,b (default 0,0 — the plain commutator)")
      ->delimiter(',')
      ->expected(2);

  auto* uq_act = app.add_subcommand(
      "uq-act", "act by a quantized enveloping algebra element");
  uq_act->add_option("UQEXPR", uq_src, "element in E, F, K, Kinv")->required();
  uq_act->add_option("POLY", plane_src, "plane element")->required();
  uq_act
      ->add_option("--mode", mode,
                   "closed operator formulas or recursive comultiplication")
      ->check(CLI::IsMember({"closed", "recursive"}));

  auto* specialize = app.add_subcommand(
      "specialize", "classical limit of an operator as a t-series");
  specialize->add_option("EXPR", op_src, "operator expression")->required();
  specialize->add_option("--order", order, "truncation order (default 5)")
      ->check(CLI::PositiveNumber);

  auto* module = app.add_subcommand(
      "module", "weight module matrices and structure checks, as JSON");
  module->add_option("--dim", dim, "highest weight n (dimension n + 1)")
      ->required()
      ->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand(
      "verify", "run a verification suite (S1..S13, or 'all')");
  verify->add_option("SUITE", suite_id, "suite id, e.g. S3")->required();
  verify->add_option("--seed", seed, "random generator seed (default 42)");
  verify->add_option("--order", order,
                     "series truncation order for S12 (default 5)")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--json", as_json, "emit the machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (apply->parsed()) {
    qdiff::OperatorNF op = qdiff::parse_operator(op_src);
    qdiff::PlaneElement p = qdiff::parse_plane(plane_src);
    std::cout << op.apply(p).to_string() << "\n";
    return 0;
  }
  if (nf->parsed()) {
    std::cout << qdiff::operator_to_expr_string(qdiff::parse_operator(op_src))
              << "\n";
    return 0;
  }
  if (bracket->parsed()) {
    qdiff::OperatorNF f = qdiff::parse_operator(lhs_src);
    qdiff::OperatorNF g = qdiff::parse_operator(rhs_src);
    qdiff::GradeVec tw{static_cast<int>(twist[0]), static_cast<int>(twist[1])};
    std::cout << qdiff::operator_to_expr_string(qdiff::bracket_g(f, g, tw))
              << "\n";
    return 0;
  }
  if (uq_act->parsed()) {
    qdiff::UqElement x = qdiff::parse_uq(uq_src);
    qdiff::PlaneElement p = qdiff::parse_plane(plane_src);
    qdiff::PlaneElement r =
        mode == "closed" ? qdiff::uq_act(x, p) : qdiff::uq_act_recursive(x, p);
    std::cout << r.to_string() << "\n";
    return 0;
  }
  if (specialize->parsed()) {
    qdiff::OperatorNF op = qdiff::parse_operator(op_src);
    std::cout << qdiff::nu(op, order).to_string() << "\n";
    return 0;
  }
  if (module->parsed()) {
    qdiff::ModuleReport rep = qdiff::run_module_checks(dim);
    json checks = json::array();
    for (const auto& c : rep.checks)
      checks.push_back({{"name", c.name}, {"pass", c.pass}});
    json out = {
        {"n", rep.n},
        {"dim", rep.dim},
        {"matrices",
         {{"E", matrix_json(qdiff::action_matrix(qdiff::UqElement::e(), dim))},
          {"F", matrix_json(qdiff::action_matrix(qdiff::UqElement::f(), dim))},
          {"K",
           matrix_json(qdiff::action_matrix(qdiff::UqElement::k(), dim))}}},
        {"checks", checks},
        {"all_pass", rep.all_pass()}};
    std::cout << out.dump(2) << "\n";
    return rep.all_pass() ? 0 : 3;
  }
  // verify
  std::vector<std::string> ids;
  if (suite_id == "all")
    ids = qdiff::all_suite_ids();
  else
    ids.push_back(suite_id);
  bool any_fail = false;
  json reports = json::array();
  for (const auto& id : ids) {
    qdiff::SuiteReport rep = qdiff::run_suite(id, seed, order);
    any_fail = any_fail || !rep.ok();
    if (as_json)
      reports.push_back(suite_report_json(rep));
    else
      print_suite_text(rep);
  }
  if (as_json)
    std::cout << (suite_id == "all" ? reports : reports.front()).dump(2)
              << "\n";
  return any_fail ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const qdiff::ParseError& e) {
    std::cerr << "qdiff: " << e.what() << "\n";
    return 1;
  } catch (const qdiff::EvalError& e) {
    std::cerr << "qdiff: evaluation error: " << e.what() << "\n";
    return 2;
  } catch (const qdiff::IllFormedOperator& e) {
    std::cerr << "qdiff: evaluation error: " << e.what() << "\n";
    return 2;
  } catch (const qdiff::OddHalfPower& e) {
    std::cerr << "qdiff: evaluation error: " << e.what() << "\n";
    return 2;
  } catch (const qdiff::NonSpecializable& e) {
    std::cerr << "qdiff: evaluation error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qdiff: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "qdiff: internal error: " << e.what() << "\n";
    return 2;
  }
}
