#include <catch2/catch_amalgamated.hpp>

#include "qdiff/repmod.hpp"

using namespace qdiff;

TEST_CASE("matrix arithmetic basics") {
  SMatrix a(2);
  a.at(0, 0) = Scalar::q();
  a.at(0, 1) = Scalar(1);
  a.at(1, 1) = Scalar(1);
  SMatrix id = SMatrix::identity(2);
  CHECK(a * id == a);
  CHECK(id * a == a);
  CHECK((a - a).is_zero());
  CHECK(a.pow(0) == id);
  CHECK(a.pow(2) == a * a);
  SMatrix b(3);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("weight module matrices have the expected entries") {
  int n = 4;
  WeightModule wm = make_weight_module(n);

  for (int k = 0; k <= n; ++k)
    for (int r = 0; r <= n; ++r) {
      // K is diagonal with weight n - 2k.
      CHECK(wm.k.at(r, k) == (r == k ? Scalar::q_power(n - 2 * k) : Scalar(0)));
      // E lowers the y-exponent by one with coefficient q^{n-k} [k].
      Scalar expect_e = (r == k - 1) ? Scalar::q_power(n - k) * qint(k, -2) : Scalar(0);
      CHECK(wm.e.at(r, k) == expect_e);
      // F raises the y-exponent by one with coefficient q^k [n-k].
      Scalar expect_f = (r == k + 1) ? Scalar::q_power(k) * qint(n - k, -2) : Scalar(0);
      CHECK(wm.f.at(r, k) == expect_f);
    }
}

TEST_CASE("module checks pass across small degrees") {
  for (int n = 0; n <= 5; ++n) {
    ModuleReport rep = run_module_checks(n);
    INFO("degree " << n);
    CHECK(rep.dim == n + 1);
    CHECK(rep.checks.size() == 7);
    for (const auto& c : rep.checks) {
      INFO(c.name);
      CHECK(c.pass);
    }
    CHECK(rep.all_pass());
  }
}

TEST_CASE("ladder operators step through the whole module") {
  int n = 3;
  WeightModule wm = make_weight_module(n);
  // From the lowest vector y^n, n powers of E reach x^n with an invertible
  // coefficient; one more kills it.
  SMatrix en = wm.e.pow(3);
  CHECK(!(en.at(0, 3) == Scalar(0)));
  CHECK(wm.e.pow(4).is_zero());
  // The top divided power carries the lowest vector exactly to the highest:
  // the q-powers collected on the way cancel the balanced factorial.
  SMatrix ediv = action_matrix(divided_power_e(3), 3);
  CHECK(ediv.at(0, 3) == Scalar(1));
}

TEST_CASE("the action cannot leave a graded component") {
  // Any element of the quantized algebra preserves total degree, so matrix
  // construction succeeds for arbitrary words.
  UqElement w = UqElement::e() * UqElement::f() * UqElement::k() +
                Scalar(3) * UqElement::kinv();
  SMatrix m = action_matrix(w, 4);
  CHECK(m.dim() == 5);
}
