#include <catch2/catch_amalgamated.hpp>
#include <random>
#include <string>

#include "qdiff/qplane.hpp"

using namespace qdiff;

namespace {

std::mt19937_64 rng(42);

// Independent oracle: multiply words in the free algebra and rewrite every
// adjacent "yx" to q^{-1} "xy" until the word is sorted.
PlaneElement normalize_word(Scalar c, std::string w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] == 'y' && w[i + 1] == 'x') {
        std::swap(w[i], w[i + 1]);
        c *= Scalar::q_power(-1);
        changed = true;
      }
  }
  int a = 0, b = 0;
  for (char ch : w) (ch == 'x' ? a : b)++;
  return c * PlaneElement::monomial(a, b);
}

std::string word(int a, int b) {
  return std::string(static_cast<size_t>(a), 'x') + std::string(static_cast<size_t>(b), 'y');
}

}  // namespace

TEST_CASE("grading vectors") {
  CHECK(gamma_degree({1, 0}) == GradeVec{1, 1});
  CHECK(gamma_degree({0, 1}) == GradeVec{-1, 1});
  CHECK(gamma_degree({2, 3}) == GradeVec{-1, 5});
  CHECK(GradeVec{1, 1}.in_even_sublattice());
  CHECK(GradeVec{-2, 0}.in_even_sublattice());
  CHECK_FALSE(GradeVec{1, 0}.in_even_sublattice());
  CHECK((GradeVec{1, 2} + GradeVec{3, -1}) == GradeVec{4, 1});
}

TEST_CASE("bicharacter is a pairing into s powers") {
  CHECK(bicharacter({1, 1}, {1, 1}) == Scalar::q());
  CHECK(bicharacter({1, 1}, {-1, 1}) == Scalar(1));
  CHECK(bicharacter({0, 2}, {-1, 1}) == Scalar::q());
  std::uniform_int_distribution<int> d(-4, 4);
  for (int i = 0; i < 40; ++i) {
    GradeVec g{d(rng), d(rng)}, h{d(rng), d(rng)}, e{d(rng), d(rng)};
    CHECK(bicharacter(g, h) == bicharacter(h, g));
    CHECK(bicharacter(g + h, e) == bicharacter(g, e) * bicharacter(h, e));
    CHECK(bicharacter(g, h + e) == bicharacter(g, h) * bicharacter(g, e));
  }
}

TEST_CASE("monomial product twists by the crossing") {
  // (x^a y^b)(x^c y^d) = q^{-bc} x^{a+c} y^{b+d}
  CHECK(PlaneElement::y() * PlaneElement::x() ==
        Scalar::q_power(-1) * PlaneElement::monomial(1, 1));
  CHECK(PlaneElement::x() * PlaneElement::y() == PlaneElement::monomial(1, 1));
  std::uniform_int_distribution<int> d(0, 5);
  for (int i = 0; i < 60; ++i) {
    int a = d(rng), b = d(rng), c = d(rng), e = d(rng);
    PlaneElement got = PlaneElement::monomial(a, b) * PlaneElement::monomial(c, e);
    CAPTURE(a, b, c, e);
    CHECK(got == normalize_word(Scalar(1), word(a, b) + word(c, e)));
    CHECK(got == Scalar::q_power(-static_cast<long long>(b) * c) *
                     PlaneElement::monomial(a + c, b + e));
  }
}

TEST_CASE("ring laws") {
  std::uniform_int_distribution<int> d(0, 3), coeff(-3, 3);
  auto rand_elt = [&] {
    PlaneElement p;
    for (int t = 0; t < 3; ++t) p.add_term({d(rng), d(rng)}, Scalar(coeff(rng)));
    return p;
  };
  for (int i = 0; i < 40; ++i) {
    PlaneElement a = rand_elt(), b = rand_elt(), c = rand_elt();
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((b + c) * a == b * a + c * a);
    CHECK(PlaneElement::one() * a == a);
  }
}

TEST_CASE("degree additivity on products of monomials") {
  std::uniform_int_distribution<int> d(0, 5);
  for (int i = 0; i < 30; ++i) {
    PlaneMono m1{d(rng), d(rng)}, m2{d(rng), d(rng)};
    PlaneElement prod = PlaneElement::monomial(m1.i, m1.j) * PlaneElement::monomial(m2.i, m2.j);
    REQUIRE(prod.terms().size() == 1);
    CHECK(gamma_degree(prod.terms().begin()->first) ==
          gamma_degree(m1) + gamma_degree(m2));
  }
}

TEST_CASE("plane element printing") {
  CHECK(PlaneElement().to_string() == "0");
  CHECK(PlaneElement::one().to_string() == "1");
  CHECK(PlaneElement::monomial(2, 1).to_string() == "x^2*y");
  CHECK((Scalar(2) * PlaneElement::x()).to_string() == "2*x");
  PlaneElement p = PlaneElement::monomial(1, 1) - Scalar::q() * PlaneElement::one();
  CHECK(p.to_string() == "x*y - q");
}
