#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "qdiff/limits.hpp"
#include "qdiff/opexpr.hpp"

using namespace qdiff;

TEST_CASE("parser round trip is stable on a representative catalog") {
  const std::vector<std::string> catalog = {
      "dx",
      "q",
      "s^2",
      "42",
      "-7",
      "dx + dy",
      "dx - dy + tau_x",
      "-dx + dy",
      "dx + (dy + tau_x)",
      "lambda_x*dy",
      "dx*dy^2",
      "-dx*dy^2",
      "2*dx^2",
      "dx/2/3",
      "(dx + dy)*tau_x",
      "(dx + dy)^2",
      "dx*(-dy)",
      "q^-1",
      "sigma(1, -1)",
      "dxb(2)*dyb(-1)",
      "[dx, lambda_x]",
      "[tau_x, dy; 0, -2]",
      "[dx + dy, lambda_x*rho_y; 1, 1]",
      "E*F - F*E",
      "(K - Kinv)/(q - q^-1)",
      "Ediv(2)*Fdiv(3)",
      "q*lambda_x*dY",
      "dx - (dy - tau_x)",
      "(dx*dy)*tau_x",
  };
  for (const auto& src : catalog) {
    INFO("source: " << src);
    ExprPtr first = parse_expr(src);
    std::string printed = expr_to_string(*first);
    ExprPtr second = parse_expr(printed);
    CHECK(expr_equal(*first, *second));
    CHECK(expr_to_string(*second) == printed);
  }
}

TEST_CASE("serializer emits canonical spacing and minimal parentheses") {
  CHECK(expr_to_string(*parse_expr("dx+dy")) == "dx + dy");
  CHECK(expr_to_string(*parse_expr("-dx*dy^2")) == "-dx*dy^2");
  CHECK(expr_to_string(*parse_expr("[dx , lambda_x ; 1 , 1]")) ==
        "[dx, lambda_x; 1, 1]");
  CHECK(expr_to_string(*parse_expr("[ dx ,lambda_x ]")) == "[dx, lambda_x]");
  CHECK(expr_to_string(*parse_expr("(dx+dy)*tau_x")) == "(dx + dy)*tau_x");
  CHECK(expr_to_string(*parse_expr("q^-1")) == "q^-1");
  CHECK(expr_to_string(*parse_expr("sigma( 1 , -1 )")) == "sigma(1, -1)");
  CHECK(expr_to_string(*parse_expr("dx - (dy - tau_x)")) ==
        "dx - (dy - tau_x)");
  CHECK(expr_to_string(*parse_expr("dx/(2)")) == "dx/2");
  CHECK(expr_to_string(*parse_expr("((dx))")) == "dx");
}

TEST_CASE("operator evaluation matches direct construction") {
  CHECK(parse_operator("dx") == OperatorNF::dx());
  CHECK(parse_operator("id") == OperatorNF::identity());
  CHECK(parse_operator("lambda_x*dy") ==
        compose(OperatorNF::lambda_x(), OperatorNF::dy()));
  CHECK(parse_operator("sigma(2, 0)") == OperatorNF::sigma(2, 0));
  CHECK(parse_operator("dxb(0)") == OperatorNF::dx());
  CHECK(parse_operator("dxb(2)") == OperatorNF::dxb(2));
  CHECK(parse_operator("dyb(-1)") == OperatorNF::dyb(-1));

  SECTION("precedence and grouping") {
    CHECK(parse_operator("dx + lambda_x*dy") ==
          OperatorNF::dx() + compose(OperatorNF::lambda_x(), OperatorNF::dy()));
    CHECK(parse_operator("2*dx^2") ==
          Scalar(2) * compose(OperatorNF::dx(), OperatorNF::dx()));
    CHECK(parse_operator("(dx + dy)^2") ==
          compose(OperatorNF::dx() + OperatorNF::dy(),
                  OperatorNF::dx() + OperatorNF::dy()));
    CHECK(parse_operator("-dx + dy") ==
          OperatorNF::dy() - OperatorNF::dx());
  }

  SECTION("scalar division and powers") {
    CHECK(parse_operator("dx/2") == (Scalar(1) / Scalar(2)) * OperatorNF::dx());
    CHECK(parse_operator("dx/q") == Scalar::q_power(-1) * OperatorNF::dx());
    CHECK(parse_operator("q^-2*dx") == Scalar::q_power(-2) * OperatorNF::dx());
    CHECK(parse_operator("dx/2/3") ==
          (Scalar(1) / Scalar(6)) * OperatorNF::dx());
  }

  SECTION("quantized generators arrive through the operator realization") {
    CHECK(parse_operator("E") == phi(UqElement::e()));
    CHECK(parse_operator("F") == phi(UqElement::f()));
    CHECK(parse_operator("K") == OperatorNF::sigma(2, 0));
    CHECK(parse_operator("Kinv") == OperatorNF::sigma(-2, 0));
    CHECK(parse_operator("Ediv(2)") == phi(divided_power_e(2)));
    CHECK(parse_operator("q*lambda_x*dY") == phi(UqElement::e()));
    CHECK(parse_operator("q*rho_y*dX") == phi(UqElement::f()));
  }
}

TEST_CASE("brackets evaluate as graded commutators") {
  CHECK(parse_operator("[dx, lambda_x]") ==
        compose(OperatorNF::dx(), OperatorNF::lambda_x()) -
            compose(OperatorNF::lambda_x(), OperatorNF::dx()));
  CHECK(parse_operator("[dx, lambda_x]") == OperatorNF::identity());
  CHECK(parse_operator("[dx, lambda_x; 1, 1]") ==
        parse_operator("dx*lambda_x - q*lambda_x*dx"));
  CHECK(parse_operator("[dx, lambda_x; 0, 0]") ==
        parse_operator("[dx, lambda_x]"));
  CHECK(parse_operator("[tau_x, dy; 0, -2]") ==
        bracket_g(OperatorNF::tau_x(), OperatorNF::dy(), GradeVec{0, -2}));

  SECTION("operator values that collapse to scalars can divide") {
    CHECK(parse_operator("dy/([dx, lambda_x] + id)") ==
          (Scalar(1) / Scalar(2)) * OperatorNF::dy());
  }
}

TEST_CASE("defining relation holds when entered as text") {
  CHECK(parse_operator("E*F - F*E") ==
        parse_operator("(K - Kinv)/(q - q^-1)"));
  CHECK(parse_uq("E*F - F*E") == parse_uq("(K - Kinv)/(q - q^-1)"));
  CHECK(parse_uq("K*E*Kinv") == parse_uq("q^2*E"));
  CHECK(parse_uq("K*F*Kinv") == parse_uq("q^-2*F"));
  CHECK(parse_uq("Ediv(2)") == divided_power_e(2));
  CHECK(parse_uq("[E, F]") == parse_uq("(K - Kinv)/(q - q^-1)"));
  CHECK(parse_uq("K^-1") == UqElement::kinv());
  CHECK(parse_uq("(2*K^2)^-2") ==
        (Scalar(1) / Scalar(4)) * UqElement::monomial({0, -4, 0}));
  CHECK(parse_operator("sigma(1, 1)^-1") == OperatorNF::sigma(-1, -1));
  CHECK(parse_operator("U^-2*U^2") == OperatorNF::identity());
}

TEST_CASE("plane evaluation respects the twisted product") {
  CHECK(parse_plane("x") == PlaneElement::monomial(1, 0));
  CHECK(parse_plane("x*y - q*y*x").is_zero());
  CHECK(parse_plane("(x + y)^2") ==
        parse_plane("x^2 + x*y + q^-1*x*y + y^2"));
  CHECK(parse_plane("x^3*y^2") == PlaneElement::monomial(3, 2));
  CHECK(parse_plane("y^2*x^3") ==
        PlaneElement::monomial(3, 2, Scalar::q_power(-6)));
}

TEST_CASE("scalar evaluation reduces to canonical fractions") {
  CHECK(parse_scalar("(q^2 - 1)/(q - 1)") == Scalar::q() + Scalar(1));
  CHECK(parse_scalar("s^2") == Scalar::q());
  CHECK(parse_scalar("q^-1") == Scalar::q_power(-1));
  CHECK(parse_scalar("2^10") == Scalar(1024));
  CHECK(parse_scalar("1 - 1").is_zero());
}

TEST_CASE("syntax errors carry position and expectation") {
  auto expect_parse_error = [](const std::string& src, int line, int col,
                               const std::string& expected) {
    try {
      parse_expr(src);
      FAIL("no error from: " << src);
    } catch (const ParseError& e) {
      CHECK(e.line == line);
      CHECK(e.col == col);
      CHECK(e.expected == expected);
    }
  };
  expect_parse_error("dx +", 1, 5, "a number, name, '(', or '['");
  expect_parse_error("(dx", 1, 4, "')'");
  expect_parse_error("[dx, dy; 1]", 1, 11, "','");
  expect_parse_error("dx dy", 1, 4, "end of input");
  expect_parse_error("sigma(1,)", 1, 9, "an integer");
  expect_parse_error("dx @ dy", 1, 4, "a token (unexpected character '@')");
  expect_parse_error("dx *\n  * dy", 2, 3, "a number, name, '(', or '['");
  expect_parse_error("dx*-dy", 1, 4, "a number, name, '(', or '['");
}

TEST_CASE("normal-form dumps reparse to the same operator") {
  const std::vector<OperatorNF> ops = {
      OperatorNF::identity(),
      OperatorNF::dx(),
      OperatorNF::dy(),
      OperatorNF::lambda_y(),
      OperatorNF::dxb(2),
      OperatorNF::dyb(-1),
      OperatorNF::sigma(1, -1),
      compose(OperatorNF::dxb(1), OperatorNF::rho_y()) - OperatorNF::tau_x(),
      phi(UqElement::e()),
      phi(divided_power_e(2)),
      bracket_g(OperatorNF::dx(), OperatorNF::rho_x(), GradeVec{1, 1}),
      OperatorNF::dx() - OperatorNF::dx(),
  };
  for (const auto& op : ops) {
    std::string printed = operator_to_expr_string(op);
    INFO("printed: " << printed);
    CHECK(parse_operator(printed) == op);
  }
}

TEST_CASE("eigen-atoms give the diagonal operators") {
  CHECK(parse_operator("N") == OperatorNF::tau_x());
  CHECK(parse_operator("M") == OperatorNF::tau_y());
  CHECK(parse_operator("U^2") == OperatorNF::sigma(1, 1));
  CHECK(parse_operator("U*V") ==
        OperatorNF::single({0, 0}, EigenCoeff::monomial({0, 0, 1, 1}, Scalar(1))));
  CHECK(parse_operator("shift(-1, 0)*N") == OperatorNF::dx());
  CHECK(parse_operator("shift(0, 0)*(1)") == OperatorNF::identity());
  CHECK_THROWS_AS(parse_operator("shift(-1, 0)"), IllFormedOperator);
  CHECK_THROWS_AS(parse_operator("N*shift(-1, 0)"), IllFormedOperator);
}

TEST_CASE("semantic errors name the offending construct") {
  CHECK_THROWS_AS(parse_operator("bogus"), EvalError);
  CHECK_THROWS_AS(parse_operator("sigma(1)"), EvalError);
  CHECK_THROWS_AS(parse_operator("dx(1)"), EvalError);
  CHECK_THROWS_AS(parse_operator("dx/dy"), EvalError);
  CHECK_THROWS_AS(parse_operator("dx^-1"), EvalError);
  CHECK_THROWS_AS(parse_operator("Ediv(-1)"), EvalError);
  CHECK_THROWS_AS(parse_scalar("1/0"), EvalError);
  CHECK_THROWS_AS(parse_scalar("1/(q - q)"), EvalError);
  CHECK_THROWS_AS(parse_plane("[x, y]"), EvalError);
  CHECK_THROWS_AS(parse_plane("dx"), EvalError);
  CHECK_THROWS_AS(parse_uq("sigma(2, 0)"), EvalError);
  CHECK_THROWS_AS(parse_uq("[E, F; 1, 1]"), EvalError);

  SECTION("messages stay actionable") {
    try {
      parse_operator("bogus");
    } catch (const EvalError& e) {
      CHECK(std::string(e.what()).find("bogus") != std::string::npos);
    }
    try {
      parse_operator("dx/dy");
    } catch (const EvalError& e) {
      CHECK(std::string(e.what()).find("scalar divisor") != std::string::npos);
    }
  }
}

TEST_CASE("classical limit series round-trip through their printed form") {
  auto roundtrip = [](const OperatorNF& op, int order) {
    TSeries<WeylElement> series = nu(op, order);
    return parse_weyl_series(series.to_string()) == series;
  };
  CHECK(roundtrip(OperatorNF::dx(), 4));
  CHECK(roundtrip(OperatorNF::dxb(2), 5));
  CHECK(roundtrip(OperatorNF::dyb(-1), 5));
  CHECK(roundtrip(compose(OperatorNF::lambda_x(), OperatorNF::dx()), 4));
  CHECK(roundtrip(OperatorNF::tau_x() - OperatorNF::identity(), 3));
  CHECK(roundtrip(OperatorNF::sigma(1, 1), 6));
  CHECK(roundtrip(OperatorNF::dx() - OperatorNF::dx(), 3));  // zero series

  SECTION("rational coefficients and the bare variable survive") {
    TSeries<WeylElement> half =
        TSeries<WeylElement>::constant(Rational(1, 2) * WeylElement::du(), 3);
    CHECK(parse_weyl_series(half.to_string()) == half);
    TSeries<WeylElement> t = TSeries<WeylElement>::var(4);
    CHECK(parse_weyl_series(t.to_string()) == t);
  }

  SECTION("the truncation marker is mandatory and well-formed") {
    CHECK_THROWS_AS(parse_weyl_series("Du"), ParseError);
    CHECK_THROWS_AS(parse_weyl_series("Du + O(t^x)"), ParseError);
    CHECK_THROWS_AS(parse_weyl_series("q + O(t^2)"), EvalError);
    CHECK_THROWS_AS(parse_weyl_series("[u, Du] + O(t^2)"), EvalError);
    CHECK_THROWS_AS(parse_weyl_series("u^-1 + O(t^2)"), EvalError);
  }
}
