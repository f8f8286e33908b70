#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "qdiff/scalar.hpp"

using namespace qdiff;

namespace {

std::mt19937_64 rng(42);

Scalar random_scalar(bool nonzero = false) {
  std::uniform_int_distribution<int> coeff(-4, 4), deg(0, 3);
  auto poly = [&] {
    std::vector<Int> cs(static_cast<size_t>(deg(rng)) + 1);
    for (auto& c : cs) c = coeff(rng);
    return SPoly(cs);
  };
  SPoly num = poly(), den = poly();
  while (den.is_zero()) den = poly();
  if (nonzero)
    while (num.is_zero()) num = poly();
  return Scalar(num, den);
}

}  // namespace

TEST_CASE("integer and rational embeddings") {
  CHECK(Scalar(0).is_zero());
  CHECK(Scalar(1).is_one());
  CHECK(Scalar(2) + Scalar(3) == Scalar(5));
  CHECK(Scalar(Rational(2, 3)) * Scalar(3) == Scalar(2));
  CHECK(Scalar(Rational(-9, 6)) == Scalar(Rational(-3, 2)));
  CHECK(Scalar(7).is_integer());
  CHECK_FALSE(Scalar(Rational(1, 2)).is_integer());
}

TEST_CASE("s and q powers") {
  CHECK(Scalar::s_power(2) == Scalar::q());
  CHECK(Scalar::s_power(-2) == Scalar::q_power(-1));
  CHECK(Scalar::q_power(3) == Scalar::q() * Scalar::q() * Scalar::q());
  CHECK(Scalar::q() * Scalar::q_power(-1) == Scalar(1));
  CHECK(Scalar::s_power(0) == Scalar(1));
}

TEST_CASE("field laws on random elements") {
  for (int i = 0; i < 60; ++i) {
    Scalar a = random_scalar(), b = random_scalar(), c = random_scalar();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Scalar(0));
    Scalar d = random_scalar(true);
    CHECK(d * d.inv() == Scalar(1));
    CHECK(a / d * d == a);
  }
}

TEST_CASE("structural equality is field equality") {
  // (q^2-1)/(q-1) reduces to q+1.
  Scalar lhs = (Scalar::q_power(2) - Scalar(1)) / (Scalar::q() - Scalar(1));
  CHECK(lhs == Scalar::q() + Scalar(1));
  // Denominator sign is canonical.
  Scalar a = Scalar(1) / (Scalar(1) - Scalar::q());
  Scalar b = Scalar(-1) / (Scalar::q() - Scalar(1));
  CHECK(a == b);
}

TEST_CASE("power operation") {
  Scalar a = Scalar::q() + Scalar(1);
  CHECK(a.pow(0) == Scalar(1));
  CHECK(a.pow(3) == a * a * a);
  CHECK(a.pow(-2) == (a * a).inv());
  CHECK(Scalar(0).pow(0) == Scalar(1));
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
  CHECK_THROWS_AS(Scalar(0).inv(), DivisionByZero);
}

TEST_CASE("twisted integers against geometric sums") {
  for (long long a = -3; a <= 3; ++a)
    for (long long n = 0; n <= 6; ++n) {
      Scalar expect(0);
      for (long long k = 0; k < n; ++k) expect += Scalar::q_power(a * k);
      CAPTURE(n, a);
      CHECK(qint(n, a) == expect);
    }
  CHECK(qint(0, 2).is_zero());
  CHECK(qint(3, 0) == Scalar(3));
  CHECK(qint(3, 1) == Scalar::q_power(2) + Scalar::q() + Scalar(1));
  CHECK(qint(2, -2) == Scalar::q_power(-2) + Scalar(1));
}

TEST_CASE("balanced integers and factorials") {
  auto bal = [](long long m) {
    return (Scalar::q_power(m) - Scalar::q_power(-m)) /
           (Scalar::q() - Scalar::q_power(-1));
  };
  for (long long m = 1; m <= 6; ++m) CHECK(qbalanced(m) == bal(m));
  CHECK(qbalanced(0).is_zero());
  CHECK(qbalanced(-2) == -qbalanced(2));
  CHECK(qbalanced(3) == Scalar::q_power(2) + Scalar(1) + Scalar::q_power(-2));

  CHECK(qbalanced_factorial(0) == Scalar(1));
  CHECK(qbalanced_factorial(1) == Scalar(1));
  Scalar f(1);
  for (long long m = 1; m <= 5; ++m) {
    f *= qbalanced(m);
    CHECK(qbalanced_factorial(m) == f);
  }
  CHECK_THROWS_AS(qbalanced_factorial(-1), std::invalid_argument);
}

TEST_CASE("binomial coefficients") {
  CHECK(int_binomial(0, 0) == 1);
  CHECK(int_binomial(5, 2) == 10);
  CHECK(int_binomial(6, 6) == 1);
  CHECK(int_binomial(3, 5) == 0);
  // Pascal rule.
  for (long long n = 1; n <= 10; ++n)
    for (long long k = 1; k <= n; ++k)
      CHECK(int_binomial(n, k) == int_binomial(n - 1, k - 1) + int_binomial(n - 1, k));
}

TEST_CASE("printing stays canonical") {
  CHECK(Scalar(0).to_string() == "0");
  CHECK(Scalar(1).to_string() == "1");
  CHECK(Scalar(-3).to_string() == "-3");
  CHECK(Scalar::q().to_string() == "q");
  CHECK(Scalar::s_power(1).to_string() == "s");
  CHECK(Scalar::q_power(2).to_string() == "q^2");
  CHECK(Scalar(Rational(5, 3)).to_string() == "5/3");
}
