// Acceptance gate: one line per criterion, timed, with the overall summary
// on the last line. Exit code is the number of failed criteria.
//
// C8 is expected to fail: the stated divided-power normalization
// q^(m(m-1)/2) does not match the operators the closed action formulas
// define (the factor that actually appears is q^(m(m+1)/2); see README,
// "Known red"). The line stays red on purpose rather than silently
// substituting the working exponent.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "qdiff/limits.hpp"
#include "qdiff/opexpr.hpp"
#include "qdiff/repmod.hpp"
#include "qdiff/suites.hpp"

using namespace qdiff;

namespace {

int g_failures = 0;

/// Runs one criterion, prints its verdict line, and accumulates failures.
/// A non-positive time budget means the criterion has no runtime bound.
void criterion(const char* id, const char* label, double budget_s,
               bool (*body)(std::string&)) {
  std::string note;
  auto t0 = std::chrono::steady_clock::now();
  bool ok = body(note);
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0)
                  .count();
  if (budget_s > 0 && dt >= budget_s) {
    ok = false;
    note = "runtime budget exceeded";
  }
  if (!ok) ++g_failures;
  std::printf("%s  %-4s %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", id, label,
              dt, note.empty() ? "" : " — ", note.c_str());
}

std::vector<PlaneMono> monomials_up_to(int total) {
  std::vector<PlaneMono> ms;
  for (int i = 0; i <= total; ++i)
    for (int j = 0; i + j <= total; ++j) ms.push_back({i, j});
  return ms;
}

bool agree_pointwise(const OperatorNF& f, const OperatorNF& g, int total) {
  for (PlaneMono m : monomials_up_to(total)) {
    PlaneElement e = PlaneElement::monomial(m.i, m.j);
    if (!(f.apply(e) == g.apply(e))) return false;
  }
  return true;
}

OperatorNF comm(const OperatorNF& f, const OperatorNF& g) {
  return bracket_g(f, g, GradeVec{0, 0});
}

// C1: the four first-order commutator identities, exact and pointwise.
bool c1(std::string&) {
  bool ok = true;
  for (int a = -3; a <= 3; ++a) {
    const std::vector<std::pair<OperatorNF, OperatorNF>> table = {
        {comm(OperatorNF::dxb(a), OperatorNF::lambda_x()),
         OperatorNF::sigma(a, a)},
        {comm(OperatorNF::dxb(a), OperatorNF::rho_y()), OperatorNF()},
        {comm(OperatorNF::dyb(a), OperatorNF::lambda_x()), OperatorNF()},
        {comm(OperatorNF::dyb(a), OperatorNF::rho_y()),
         OperatorNF::sigma(-a, a)},
    };
    for (const auto& [lhs, rhs] : table)
      ok = ok && lhs == rhs && agree_pointwise(lhs, rhs, 10);
  }
  return ok;
}

// C2: geometric-sum and twist forms of the higher-index derivations.
bool c2(std::string&) {
  bool ok = true;
  for (int a = 2; a <= 5; ++a) {
    Scalar c = (Scalar(1) - Scalar::q()) / (Scalar(1) - Scalar::q_power(a));
    OperatorNF geox, geoy;
    for (int k = 0; k < a; ++k) {
      geox = geox + OperatorNF::sigma(k, k);
      geoy = geoy + OperatorNF::sigma(-k, k);
    }
    ok = ok && OperatorNF::dxb(a) == c * compose(OperatorNF::dxb(1), geox);
    ok = ok && OperatorNF::dyb(a) == c * compose(OperatorNF::dyb(1), geoy);
  }
  for (int a = 1; a <= 4; ++a) {
    ok = ok && OperatorNF::dxb(-a) ==
                   compose(OperatorNF::sigma(-a, -a), OperatorNF::dxb(a));
    ok = ok && OperatorNF::dyb(-a) ==
                   compose(OperatorNF::sigma(a, -a), OperatorNF::dyb(a));
  }
  return ok;
}

// C3: left multiplications from right ones through the grading action.
bool c3(std::string&) {
  return compose(OperatorNF::rho_x(), OperatorNF::sigma(-1, 1)) ==
             OperatorNF::lambda_x() &&
         compose(OperatorNF::rho_y(), OperatorNF::sigma(-1, -1)) ==
             OperatorNF::lambda_y();
}

/// Random order-zero coefficient: short sum of lambda_x^i rho_y^j sigma(p,r).
OperatorNF random_d0(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> exp(0, 2), lat(-2, 2), len(1, 3),
      coin(0, 4);
  const Scalar coeffs[] = {Scalar(1), Scalar(-1), Scalar::q(),
                           Scalar::q_power(-1), Scalar(2)};
  OperatorNF r;
  int n = len(rng);
  for (int t = 0; t < n; ++t) {
    OperatorNF term = compose(OperatorNF::lambda_x().pow(exp(rng)),
                              OperatorNF::rho_y().pow(exp(rng)));
    term = compose(term, OperatorNF::sigma(lat(rng), lat(rng)));
    r = r + coeffs[coin(rng)] * term;
  }
  return r;
}

// C4: decomposition inverts recombination on random first-order elements.
bool c4(std::string& note) {
  std::mt19937_64 rng(42);
  const OperatorNF parts[] = {OperatorNF::identity(), OperatorNF::dx(),
                              OperatorNF::dy(), OperatorNF::dxb(1),
                              OperatorNF::dyb(1)};
  for (int t = 0; t < 100; ++t) {
    OperatorNF op;
    for (const OperatorNF& d : parts)
      op = op + compose(random_d0(rng), d);
    auto r = first_order_decompose(op);
    auto* p = std::get_if<FirstOrderParts>(&r);
    if (!p) {
      note = "decomposition refused case " + std::to_string(t);
      return false;
    }
    if (!(recombine_first_order(*p) == op)) {
      note = "recombination mismatch at case " + std::to_string(t);
      return false;
    }
  }
  return true;
}

// C5: the two first-order families commute; order-zero monomials are
// independent; bracket descent proves a bound for every short word.
bool c5(std::string& note) {
  const std::vector<OperatorNF> xs = {OperatorNF::lambda_x(), OperatorNF::dx(),
                                      OperatorNF::dxb(1), OperatorNF::dxb(2),
                                      OperatorNF::dxb(-1)};
  const std::vector<OperatorNF> ys = {OperatorNF::rho_y(), OperatorNF::dy(),
                                      OperatorNF::dyb(1), OperatorNF::dyb(2),
                                      OperatorNF::dyb(-1)};
  for (const OperatorNF& f : xs)
    for (const OperatorNF& g : ys)
      if (!comm(f, g).is_zero()) {
        note = "an x-generator fails to commute with a y-generator";
        return false;
      }

  std::vector<OperatorNF> basis;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      for (int d = -2; d <= 2; ++d) {
        basis.push_back(compose(
            compose(OperatorNF::lambda_x().pow(i), OperatorNF::rho_y().pow(j)),
            OperatorNF::sigma(d, d)));
      }
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j)
      if (basis[i] == basis[j]) {
        note = "two order-zero monomials share a normal form";
        return false;
      }
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> coin(0, 4);
  const Scalar coeffs[] = {Scalar(1), Scalar(-1), Scalar::q(),
                           Scalar::q_power(-1), Scalar(2)};
  for (int t = 0; t < 25; ++t) {
    OperatorNF sum;
    for (const OperatorNF& b : basis)
      if (coin(rng) == 0) sum = sum + coeffs[coin(rng)] * b;
    if (!sum.terms().empty() && sum.is_zero()) {
      note = "a sampled combination of order-zero monomials vanished";
      return false;
    }
  }

  const auto& alphabet = detail::suite_alphabet();
  std::vector<OperatorNF> words = {OperatorNF::identity()};
  std::vector<OperatorNF> next;
  for (int len = 1; len <= 3; ++len) {
    next.clear();
    for (const OperatorNF& w : words)
      for (const auto& [name, g] : alphabet) next.push_back(compose(w, g));
    words = next;
    for (const OperatorNF& w : words) {
      MembershipVerdict v = order_bound_descent(w, 6);
      if (v.kind != MembershipVerdict::Kind::Proven) {
        note = "descent gave up on a length-" + std::to_string(len) + " word";
        return false;
      }
    }
  }
  return true;
}

// C6: no zero divisors in 100 random nonzero pairs; the shift-free
// generators commute and reconstruct sampled shift-free elements.
bool c6(std::string& note) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 100; ++t) {
    detail::NamedWord f = detail::random_named_word(rng, 3);
    detail::NamedWord g = detail::random_named_word(rng, 3);
    if (f.op.is_zero() || g.op.is_zero() || compose(f.op, g.op).is_zero()) {
      note = "a product of nonzero operators vanished";
      return false;
    }
  }
  const std::vector<OperatorNF> gens = {
      OperatorNF::tau_x(), OperatorNF::tau_y(), OperatorNF::sigma(1, 1),
      OperatorNF::sigma(-1, -1), OperatorNF::sigma(-1, 1),
      OperatorNF::sigma(1, -1)};
  for (const OperatorNF& f : gens)
    for (const OperatorNF& g : gens)
      if (!(compose(f, g) == compose(g, f))) {
        note = "shift-free generators fail to commute";
        return false;
      }
  // Reconstruction: every term N^n M^m U^u V^v of a sampled shift-free
  // element is tau_x^n tau_y^m sigma((u-v)/2, (u+v)/2) with the same scalar.
  int rebuilt = 0;
  for (int t = 0; t < 60; ++t) {
    detail::NamedWord w = detail::random_named_word(rng, 3);
    bool shift_free = true;
    for (const auto& [sh, c] : w.op.terms())
      shift_free = shift_free && sh.a == 0 && sh.b == 0;
    if (!shift_free) continue;
    OperatorNF sum;
    bool expressible = true;
    for (const auto& [sh, c] : w.op.terms())
      for (const auto& [m, sc] : c.terms()) {
        if ((m.u - m.v) % 2 != 0 || (m.u + m.v) % 2 != 0) {
          expressible = false;
          continue;
        }
        OperatorNF term = compose(OperatorNF::tau_x().pow(m.n),
                                  OperatorNF::tau_y().pow(m.m));
        term = compose(term,
                       OperatorNF::sigma((m.u - m.v) / 2, (m.u + m.v) / 2));
        sum = sum + sc * term;
      }
    if (!expressible || !(sum == w.op)) {
      note = "a shift-free sample escaped the tau/sigma span";
      return false;
    }
    ++rebuilt;
  }
  if (rebuilt == 0) {
    note = "sampling produced no shift-free elements to test";
    return false;
  }
  return true;
}

// C7: quantized enveloping algebra relations, in PBW form and through the
// operator realization; closed action equals the coproduct recursion; the
// raising and lowering operators are twisted derivations.
bool c7(std::string& note) {
  const UqElement E = UqElement::e(), F = UqElement::f(), K = UqElement::k(),
                  Ki = UqElement::kinv();
  Scalar denom = Scalar::q() - Scalar::q_power(-1);
  bool ok = K * E == Scalar::q_power(2) * (E * K) &&
            K * F == Scalar::q_power(-2) * (F * K) && K * Ki == UqElement::one() &&
            E * F - F * E == (Scalar(1) / denom) * (K - Ki);
  if (!ok) {
    note = "a defining relation fails in PBW form";
    return false;
  }
  OperatorNF pe = phi(E), pf = phi(F), pk = phi(K), pki = phi(Ki);
  ok = compose(pk, pe) == Scalar::q_power(2) * compose(pe, pk) &&
       compose(pk, pf) == Scalar::q_power(-2) * compose(pf, pk) &&
       compose(pk, pki) == OperatorNF::identity() &&
       compose(pe, pf) - compose(pf, pe) ==
           (Scalar(1) / denom) * (pk - pki);
  if (!ok) {
    note = "a defining relation fails through the operator realization";
    return false;
  }
  const std::vector<UqElement> acts = {E, F, K, divided_power_e(2),
                                       divided_power_f(2)};
  for (const UqElement& x : acts)
    for (PlaneMono m : monomials_up_to(10)) {
      PlaneElement p = PlaneElement::monomial(m.i, m.j);
      if (!(uq_act(x, p) == uq_act_recursive(x, p))) {
        note = "closed and recursive actions disagree";
        return false;
      }
    }
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> deg(0, 5), cf(-3, 3);
  auto rand_plane = [&] {
    PlaneElement p;
    for (int t = 0; t < 3; ++t)
      p = p + PlaneElement::monomial(deg(rng), deg(rng), Scalar(cf(rng)));
    return p;
  };
  for (int t = 0; t < 100; ++t) {
    PlaneElement r = rand_plane(), s = rand_plane();
    if (!(uq_act(E, r * s) == uq_act(E, r) * s + uq_act(K, r) * uq_act(E, s)) ||
        !(uq_act(F, r * s) ==
          uq_act(F, r) * uq_act(Ki, s) + r * uq_act(F, s))) {
      note = "a twisted derivation property fails";
      return false;
    }
  }
  return true;
}

// C8: stated divided-power realization, with the q^(m(m-1)/2) factor.
// Expected red — the closed action formulas force q^(m(m+1)/2) instead.
bool c8(std::string& note) {
  for (int m = 1; m <= 3; ++m) {
    Scalar stated = Scalar::q_power(static_cast<long long>(m) * (m - 1) / 2);
    bool e_ok = phi(divided_power_e(m)) ==
                stated * compose(OperatorNF::lambda_x().pow(
                                     static_cast<unsigned>(m)),
                                 dy_div(m));
    bool f_ok = phi(divided_power_f(m)) ==
                stated * compose(OperatorNF::rho_y().pow(
                                     static_cast<unsigned>(m)),
                                 dx_div(m));
    if (!e_ok || !f_ok) {
      note = "normalization mismatch at m = " + std::to_string(m) +
             "; q^(m(m+1)/2) makes both sides equal";
      return false;
    }
  }
  return true;
}

// C9: the specialization diagram commutes at truncation order 5.
bool c9(std::string& note) {
  const std::vector<UqElement> xs = {
      UqElement::k(),      UqElement::kinv(),
      UqElement::e(),      UqElement::f(),
      UqElement::e() * UqElement::f(),
      divided_power_e(2),  divided_power_f(2)};
  for (const UqElement& x : xs)
    if (!uq_diagram_commutes(x, 5)) {
      note = "diagram mismatch for a quantized generator";
      return false;
    }
  if (!sigma_diagram_commutes(1, 5)) {
    note = "diagram mismatch for the grading operator";
    return false;
  }
  return true;
}

// C10: weight modules up to n = 10 pass all structure checks.
bool c10(std::string& note) {
  for (int n = 0; n <= 10; ++n) {
    ModuleReport rep = run_module_checks(n);
    if (!rep.all_pass()) {
      for (const auto& c : rep.checks)
        if (!c.pass) note = c.name + " fails at n = " + std::to_string(n);
      return false;
    }
  }
  return true;
}

// C11: is_zero agrees with pointwise vanishing on 200 random words
// (half of them recombined into exact zeros).
bool c11(std::string& note) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 200; ++t) {
    detail::NamedWord w = detail::random_named_word(rng, 4);
    OperatorNF op = (t % 2 == 0) ? w.op : w.op - w.op;
    bool pointwise_zero = true;
    for (PlaneMono m : monomials_up_to(12)) {
      PlaneElement e = PlaneElement::monomial(m.i, m.j);
      pointwise_zero = pointwise_zero && op.apply(e).is_zero();
    }
    if (op.is_zero() != pointwise_zero) {
      note = "is_zero disagrees with pointwise vanishing on " + w.name;
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion("C1", "first-order commutator table, exact and pointwise", 5.0,
            c1);
  criterion("C2", "geometric-sum and twist exponent identities", 5.0, c2);
  criterion("C3", "left multiplications factor through the grading", 0.0, c3);
  criterion("C4", "first-order decomposition inverts recombination", 30.0,
            c4);
  criterion("C5", "commuting families, independence, bracket descent", 0.0,
            c5);
  criterion("C6", "no zero divisors; shift-free subring span", 0.0, c6);
  criterion("C7", "quantized relations, actions, derivations", 60.0, c7);
  criterion("C8", "divided-power normalization q^(m(m-1)/2)", 0.0, c8);
  criterion("C9", "classical-limit diagram at order 5", 60.0, c9);
  criterion("C10", "weight modules pass structure checks to n = 10", 30.0,
            c10);
  criterion("C11", "is_zero equals pointwise vanishing on random words", 0.0,
            c11);
  std::printf("%d of 11 criteria passed\n", 11 - g_failures);
  return g_failures;
}
