#pragma once

#include <chrono>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qdiff/classical.hpp"
#include "qdiff/limits.hpp"
#include "qdiff/opalg.hpp"
#include "qdiff/opexpr.hpp"
#include "qdiff/qplane.hpp"
#include "qdiff/quantum_group.hpp"
#include "qdiff/repmod.hpp"
#include "qdiff/scalar.hpp"
#include "qdiff/tseries.hpp"

namespace qdiff {

struct SuiteFailure {
  std::string case_name;
  std::string input;
  std::string expected;
  std::string actual;
};

struct SuiteReport {
  std::string suite;
  int cases = 0;
  std::vector<SuiteFailure> failures;
  double seconds = 0.0;
  bool ok() const { return failures.empty(); }
};

namespace detail {

inline std::string suite_str(long long v) { return std::to_string(v); }
inline std::string suite_str(const Scalar& v) { return v.to_string(); }
inline std::string suite_str(const PlaneElement& v) { return v.to_string(); }
inline std::string suite_str(const OperatorNF& v) {
  return operator_to_expr_string(v);
}
inline std::string suite_str(const UqElement& v) { return v.to_string(); }
inline std::string suite_str(const UqTensor& v) { return v.to_string(); }
inline std::string suite_str(const WeylElement& v) { return v.to_string(); }
inline std::string suite_str(const ClassicalElement& v) { return v.to_string(); }
inline std::string suite_str(const UVPoly& v) { return v.to_string(); }
template <typename C>
std::string suite_str(const TSeries<C>& v) {
  return v.to_string();
}

class Recorder {
 public:
  explicit Recorder(SuiteReport& r) : r_(r) {}

  void truth(const std::string& case_name, const std::string& input,
             bool pass) {
    ++r_.cases;
    if (!pass) r_.failures.push_back({case_name, input, "true", "false"});
  }

  template <typename T>
  void equal(const std::string& case_name, const std::string& input,
             const T& got, const T& want) {
    ++r_.cases;
    if (!(got == want))
      r_.failures.push_back({case_name, input, suite_str(want), suite_str(got)});
  }

 private:
  SuiteReport& r_;
};

/// Named generator alphabet shared by the randomized operator suites; every
/// entry is homogeneous for the lattice grading.
inline const std::vector<std::pair<std::string, OperatorNF>>& suite_alphabet() {
  static const std::vector<std::pair<std::string, OperatorNF>> a = {
      {"lambda_x", OperatorNF::lambda_x()},
      {"rho_y", OperatorNF::rho_y()},
      {"lambda_y", OperatorNF::lambda_y()},
      {"rho_x", OperatorNF::rho_x()},
      {"dx", OperatorNF::dx()},
      {"dy", OperatorNF::dy()},
      {"tau_x", OperatorNF::tau_x()},
      {"tau_y", OperatorNF::tau_y()},
      {"dxb(2)", OperatorNF::dxb(2)},
      {"dyb(2)", OperatorNF::dyb(2)},
      {"dxb(-1)", OperatorNF::dxb(-1)},
      {"dyb(-1)", OperatorNF::dyb(-1)},
      {"sigma(1, 1)", OperatorNF::sigma(1, 1)},
      {"sigma(-1, 1)", OperatorNF::sigma(-1, 1)},
  };
  return a;
}

struct NamedWord {
  std::string name;
  OperatorNF op;
  std::vector<const OperatorNF*> letters;  // in application order, last first
};

template <typename Rng>
NamedWord random_named_word(Rng& rng, int len) {
  const auto& alpha = suite_alphabet();
  std::uniform_int_distribution<size_t> pick(0, alpha.size() - 1);
  NamedWord w;
  w.op = OperatorNF::identity();
  for (int i = 0; i < len; ++i) {
    const auto& [nm, g] = alpha[pick(rng)];
    if (!w.name.empty()) w.name += "*";
    w.name += nm;
    w.op = compose(w.op, g);
    w.letters.push_back(&g);
  }
  return w;
}

inline PlaneElement apply_letters(const NamedWord& w, const PlaneElement& p) {
  PlaneElement r = p;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r = (*it)->apply(r);
  return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// S1: plane axioms.

inline SuiteReport suite_s1(std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "S1";
  detail::Recorder rec(rep);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> deg(0, 10), coeff(-4, 4), win(-6, 6);

  PlaneElement x = PlaneElement::monomial(1, 0), y = PlaneElement::monomial(0, 1);
  rec.equal("defining-relation", "x*y - q*y*x", x * y - Scalar::q() * (y * x),
            PlaneElement());

  auto rand_mono = [&] {
    return PlaneElement::monomial(deg(rng), deg(rng), Scalar(coeff(rng)));
  };
  auto rand_poly = [&] {
    PlaneElement p;
    for (int t = 0; t < 3; ++t)
      p = p + PlaneElement::monomial(deg(rng), deg(rng), Scalar(coeff(rng)));
    return p;
  };

  for (int i = 0; i < 60; ++i) {
    PlaneElement a = rand_mono(), b = rand_mono(), c = rand_mono();
    std::string in = "(" + a.to_string() + ")((" + b.to_string() + ")(" +
                     c.to_string() + "))";
    rec.equal("associativity", in, (a * b) * c, a * (b * c));
  }
  for (int i = 0; i < 20; ++i) {
    PlaneElement a = rand_poly(), b = rand_poly(), c = rand_poly();
    rec.equal("distributivity",
              "(" + a.to_string() + " + " + b.to_string() + ")*(" +
                  c.to_string() + ")",
              (a + b) * c, a * c + b * c);
  }
  for (int i = 0; i < 25; ++i) {
    int a = deg(rng), b = deg(rng), c = deg(rng), d = deg(rng);
    PlaneElement left = PlaneElement::monomial(a, b),
                 right = PlaneElement::monomial(c, d);
    std::string in = "x^" + std::to_string(a) + "*y^" + std::to_string(b) +
                     " times x^" + std::to_string(c) + "*y^" +
                     std::to_string(d);
    rec.equal("twisted-product-exponent", in, left * right,
              PlaneElement::monomial(
                  a + c, b + d,
                  Scalar::q_power(-static_cast<long long>(b) * c)));
    GradeVec dl = gamma_degree({a, b}), dr = gamma_degree({c, d});
    rec.truth("grading-additive-and-even", in,
              gamma_degree({a + c, b + d}) == dl + dr &&
                  dl.in_even_sublattice() && dr.in_even_sublattice());
  }
  for (int i = 0; i < 40; ++i) {
    GradeVec g{win(rng), win(rng)}, h{win(rng), win(rng)}, d{win(rng), win(rng)};
    std::string in = g.to_string() + ", " + h.to_string() + ", " + d.to_string();
    rec.equal("bicharacter-left-additive", in, bicharacter(g + h, d),
              bicharacter(g, d) * bicharacter(h, d));
    rec.equal("bicharacter-right-additive", in, bicharacter(g, h + d),
              bicharacter(g, h) * bicharacter(g, d));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// S2: normal-form faithfulness against step-by-step application.

inline SuiteReport suite_s2(std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "S2";
  detail::Recorder rec(rep);
  std::mt19937_64 rng(seed);

  const auto& alpha = detail::suite_alphabet();
  // Exhaustive short words over the leading eight letters on a small window.
  const size_t core = 8;
  std::vector<detail::NamedWord> words;
  for (size_t i = 0; i < core; ++i) {
    detail::NamedWord w1{alpha[i].first, alpha[i].second, {&alpha[i].second}};
    words.push_back(w1);
    for (size_t j = 0; j < core; ++j) {
      detail::NamedWord w2{alpha[i].first + "*" + alpha[j].first,
                           compose(alpha[i].second, alpha[j].second),
                           {&alpha[i].second, &alpha[j].second}};
      words.push_back(w2);
      for (size_t k = 0; k < core; ++k) {
        detail::NamedWord w3{
            w2.name + "*" + alpha[k].first,
            compose(w2.op, alpha[k].second),
            {&alpha[i].second, &alpha[j].second, &alpha[k].second}};
        words.push_back(std::move(w3));
      }
    }
  }
  for (const auto& w : words) {
    bool all = true;
    for (int i = 0; i <= 6 && all; ++i)
      for (int j = 0; i + j <= 6 && all; ++j) {
        PlaneElement m = PlaneElement::monomial(i, j);
        if (!(w.op.apply(m) == detail::apply_letters(w, m))) all = false;
      }
    rec.truth("word-action-exhaustive", w.name, all);
  }

  // Seeded longer words over the full alphabet on sampled monomials.
  std::uniform_int_distribution<int> deg(0, 10);
  for (int t = 0; t < 300; ++t) {
    detail::NamedWord w = detail::random_named_word(rng, 4);
    bool all = true;
    for (int reps = 0; reps < 10 && all; ++reps) {
      int i = deg(rng), j = deg(rng);
      if (i + j > 10) continue;
      PlaneElement m = PlaneElement::monomial(i, j);
      if (!(w.op.apply(m) == detail::apply_letters(w, m))) all = false;
    }
    rec.truth("word-action-sampled", w.name, all);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// S3: commutator table, geometric sums, negative exponents.

inline SuiteReport suite_s3(std::uint64_t) {
  SuiteReport rep;
  rep.suite = "S3";
  detail::Recorder rec(rep);
  auto comm = [](const OperatorNF& f, const OperatorNF& g) {
    return bracket_g(f, g, GradeVec{0, 0});
  };

  for (int a = -3; a <= 3; ++a) {
    std::string sa = std::to_string(a);
    rec.equal("x-derivation-vs-right-y", "[dxb(" + sa + "), rho_y]",
              comm(OperatorNF::dxb(a), OperatorNF::rho_y()), OperatorNF());
    rec.equal("y-derivation-vs-left-x", "[dyb(" + sa + "), lambda_x]",
              comm(OperatorNF::dyb(a), OperatorNF::lambda_x()), OperatorNF());
    rec.equal("x-derivation-vs-left-x", "[dxb(" + sa + "), lambda_x]",
              comm(OperatorNF::dxb(a), OperatorNF::lambda_x()),
              OperatorNF::sigma(a, a));
    rec.equal("y-derivation-vs-right-y", "[dyb(" + sa + "), rho_y]",
              comm(OperatorNF::dyb(a), OperatorNF::rho_y()),
              OperatorNF::sigma(-a, a));
  }

  for (int a = 2; a <= 5; ++a) {
    Scalar c = (Scalar(1) - Scalar::q()) / (Scalar(1) - Scalar::q_power(a));
    OperatorNF geox, geoy;
    for (int k = 0; k < a; ++k) {
      geox = geox + OperatorNF::sigma(k, k);
      geoy = geoy + OperatorNF::sigma(-k, k);
    }
    std::string sa = std::to_string(a);
    rec.equal("geometric-sum-x", "dxb(" + sa + ")", OperatorNF::dxb(a),
              c * compose(OperatorNF::dxb(1), geox));
    rec.equal("geometric-sum-y", "dyb(" + sa + ")", OperatorNF::dyb(a),
              c * compose(OperatorNF::dyb(1), geoy));
  }

  for (int a = 1; a <= 4; ++a) {
    std::string sa = std::to_string(-a);
    rec.equal("negative-exponent-x", "dxb(" + sa + ")", OperatorNF::dxb(-a),
              compose(OperatorNF::sigma(-a, -a), OperatorNF::dxb(a)));
    rec.equal("negative-exponent-y", "dyb(" + sa + ")", OperatorNF::dyb(-a),
              compose(OperatorNF::sigma(a, -a), OperatorNF::dyb(a)));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// S4: order-zero facts, two-sided multiplication identities, independence.

inline SuiteReport suite_s4(std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "S4";
  detail::Recorder rec(rep);
  std::mt19937_64 rng(seed);

  rec.equal("left-x-from-right-x", "rho_x*sigma(-1, 1)",
            compose(OperatorNF::rho_x(), OperatorNF::sigma(-1, 1)),
            OperatorNF::lambda_x());
  rec.equal("left-y-from-right-y", "rho_y*sigma(-1, -1)",
            compose(OperatorNF::rho_y(), OperatorNF::sigma(-1, -1)),
            OperatorNF::lambda_y());

  const std::vector<std::pair<std::string, OperatorNF>> xs = {
      {"lambda_x", OperatorNF::lambda_x()}, {"dx", OperatorNF::dx()},
      {"dxb(1)", OperatorNF::dxb(1)},       {"dxb(-2)", OperatorNF::dxb(-2)},
      {"tau_x", OperatorNF::tau_x()},       {"sigma(1, 1)", OperatorNF::sigma(1, 1)},
  };
  const std::vector<std::pair<std::string, OperatorNF>> ys = {
      {"rho_y", OperatorNF::rho_y()},       {"dy", OperatorNF::dy()},
      {"dyb(1)", OperatorNF::dyb(1)},       {"dyb(-2)", OperatorNF::dyb(-2)},
      {"tau_y", OperatorNF::tau_y()},       {"sigma(-1, 1)", OperatorNF::sigma(-1, 1)},
  };
  for (const auto& [nx, fx] : xs)
    for (const auto& [ny, fy] : ys)
      rec.equal("x-side-commutes-with-y-side", "[" + nx + ", " + ny + "]",
                bracket_g(fx, fy, GradeVec{0, 0}), OperatorNF());
  for (const auto& [nx, fx] : xs)
    rec.truth("x-side-membership", nx, fx.membership_dx());
  for (const auto& [ny, fy] : ys)
    rec.truth("y-side-membership", ny, fy.membership_dy());

  // Basis sweep lambda_x^i rho_y^j sigma_d: pairwise distinct normal forms.
  std::vector<OperatorNF> basis;
  std::set<std::string> dumps;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      for (int p = -2; p <= 2; ++p)
        for (int r = -2; r <= 2; ++r) {
          OperatorNF b = compose(
              compose(OperatorNF::lambda_x().pow(i), OperatorNF::rho_y().pow(j)),
              OperatorNF::sigma(p, r));
          basis.push_back(b);
          dumps.insert(b.to_string());
          if (!b.membership_d0())
            rec.truth("order-zero-membership",
                      "lambda_x^" + std::to_string(i) + "*rho_y^" +
                          std::to_string(j) + "*sigma(" + std::to_string(p) +
                          ", " + std::to_string(r) + ")",
                      false);
        }
  rec.truth("order-zero-membership", "full basis sweep", true);
  rec.equal("monomial-basis-distinct", "lambda_x^i*rho_y^j*sigma(p, r) sweep",
            static_cast<int>(dumps.size()), static_cast<int>(basis.size()));

  std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coeff(1, 5), sign(0, 1);
  for (int t = 0; t < 20; ++t) {
    std::set<size_t> chosen;
    while (chosen.size() < 4) chosen.insert(pick(rng));
    OperatorNF sum;
    for (size_t idx : chosen) {
      Scalar c = Scalar(sign(rng) ? coeff(rng) : -coeff(rng));
      sum = sum + c * basis[idx];
    }
    rec.truth("sampled-combination-independent",
              "4 distinct basis monomials, nonzero integer coefficients",
              !sum.is_zero());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// S5: first-order decomposition round-trips.

inline SuiteReport suite_s5(std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "S5";
  detail::Recorder rec(rep);
  std::mt19937_64 rng(seed);

  auto roundtrip = [&](const std::string& name, const OperatorNF& op) {
    auto r = first_order_decompose(op);
    auto* parts = std::get_if<FirstOrderParts>(&r);
    if (!parts) {
      rec.truth("fixed-decomposition", name, false);
      return;
    }
    rec.equal("fixed-decomposition", name, recombine_first_order(*parts), op);
  };
  roundtrip("dxb(2)", OperatorNF::dxb(2));
  roundtrip("dxb(-1)", OperatorNF::dxb(-1));
  roundtrip("dyb(-2)", OperatorNF::dyb(-2));
  roundtrip("dx", OperatorNF::dx());
  roundtrip("dy", OperatorNF::dy());

  {
    auto r = first_order_decompose(OperatorNF::dxb(2));
    auto* parts = std::get_if<FirstOrderParts>(&r);
    Scalar c = Scalar(1) / (Scalar(1) + Scalar::q());
    rec.truth("pinned-slot-content", "dxb(2)",
              parts && parts->cxb == c * (OperatorNF::identity() +
                                          Scalar::q() * OperatorNF::sigma(1, 1)) &&
                  parts->c0.is_zero() && parts->cx.is_zero() &&
                  parts->cy.is_zero() && parts->cyb.is_zero());
  }

  std::uniform_int_distribution<int> pick(0, 3);
  auto rand_d0 = [&] {
    OperatorNF r = OperatorNF::sigma(pick(rng), pick(rng));
    if (pick(rng) == 0)
      r = r + compose(OperatorNF::lambda_x(), OperatorNF::rho_y());
    return r;
  };
  auto rand_diag = [&] {
    return OperatorNF::sigma(pick(rng), pick(rng)) +
           Scalar::q() * OperatorNF::sigma(-pick(rng), pick(rng));
  };
  for (int t = 0; t < 20; ++t) {
    FirstOrderParts in{rand_d0(), rand_d0(), rand_d0(), rand_diag(), rand_diag()};
    OperatorNF op = recombine_first_order(in);
    auto r = first_order_decompose(op);
    auto* parts = std::get_if<FirstOrderParts>(&r);
    bool pass = parts && parts->c0 == in.c0 && parts->cx == in.cx &&
                parts->cy == in.cy && parts->cxb == in.cxb &&
                parts->cyb == in.cyb && recombine_first_order(*parts) == op;
    rec.truth("random-roundtrip", detail::suite_str(op), pass);
  }

  const std::vector<std::pair<std::string, OperatorNF>> too_high = {
      {"tau_x^2", OperatorNF::tau_x().pow(2)},
      {"dx*dx", compose(OperatorNF::dx(), OperatorNF::dx())},
      {"tau_x*tau_y", compose(OperatorNF::tau_x(), OperatorNF::tau_y())}};
  for (const auto& [name, op] : too_high) {
    auto r = first_order_decompose(op);
    auto* no = std::get_if<NotFirstOrder>(&r);
    rec.truth("higher-order-rejected-with-witness", name,
              no && !no->witness.is_zero());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// S6: filtration bound descent.

inline SuiteReport suite_s6(std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "S6";
  detail::Recorder rec(rep);
  std::mt19937_64 rng(seed);
  const int window = 6;

  auto check_bound = [&](const std::string& name, const OperatorNF& op,
                         int want) {
    auto v = order_bound_descent(op, window);
    bool pass = v.kind == MembershipVerdict::Kind::Proven && v.bound == want &&
                verify_descent_certificate(op, v);
    rec.truth("pinned-order", name + " has order " + std::to_string(want), pass);
  };
  check_bound("sigma(2, -2)", OperatorNF::sigma(2, -2), 0);
  check_bound("lambda_x", OperatorNF::lambda_x(), 0);
  check_bound("dxb(1)", OperatorNF::dxb(1), 1);
  check_bound("dyb(-2)", OperatorNF::dyb(-2), 1);
  check_bound("tau_x", OperatorNF::tau_x(), 1);
  check_bound("tau_x^2", OperatorNF::tau_x().pow(2), 2);
  check_bound("dxb(1)*dyb(1)",
              compose(OperatorNF::dxb(1), OperatorNF::dyb(1)), 2);

  const auto& alpha = detail::suite_alphabet();
  const size_t core = 8;
  for (size_t i = 0; i < core; ++i)
    for (size_t j = 0; j < core; ++j) {
      std::string name = alpha[i].first + "*" + alpha[j].first;
      OperatorNF op = compose(alpha[i].second, alpha[j].second);
      auto v = order_bound_descent(op, window);
      bool pass = v.kind == MembershipVerdict::Kind::Proven && v.bound <= 4 &&
                  verify_descent_certificate(op, v);
      rec.truth("two-letter-words-certify", name, pass);
    }
  for (int t = 0; t < 15; ++t) {
    detail::NamedWord w = detail::random_named_word(rng, 3);
    auto v = order_bound_descent(w.op, window);
    bool pass = v.kind == MembershipVerdict::Kind::Proven && v.bound <= 6 &&
                verify_descent_certificate(w.op, v);
    rec.truth("three-letter-words-certify", w.name, pass);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// S7: the shift-free subring is a localized polynomial ring.

inline SuiteReport suite_s7(std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "S7";
  detail::Recorder rec(rep);
  std::mt19937_64 rng(seed);

  const std::vector<std::pair<std::string, OperatorNF>> gens = {
      {"tau_x", OperatorNF::tau_x()},
      {"tau_y", OperatorNF::tau_y()},
      {"sigma(1, 1)", OperatorNF::sigma(1, 1)},
      {"sigma(-1, -1)", OperatorNF::sigma(-1, -1)},
      {"sigma(-1, 1)", OperatorNF::sigma(-1, 1)},
      {"sigma(1, -1)", OperatorNF::sigma(1, -1)},
  };
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      rec.equal("generators-commute",
                "[" + gens[i].first + ", " + gens[j].first + "]",
                bracket_g(gens[i].second, gens[j].second, GradeVec{0, 0}),
                OperatorNF());

  std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> ex(0, 3), coeff(-3, 3), nterms(1, 4);
  for (int t = 0; t < 50; ++t) {
    OperatorNF p;
    for (int k = nterms(rng); k > 0; --k) {
      OperatorNF m = Scalar(coeff(rng)) * OperatorNF::identity();
      for (int f = ex(rng); f > 0; --f) m = compose(m, gens[pick(rng)].second);
      p = p + m;
    }
    bool shift_free = true;
    for (const auto& [sh, c] : p.terms())
      if (!(sh == Shift{0, 0})) shift_free = false;
    rec.truth("stays-in-the-shift-free-subring", detail::suite_str(p),
              shift_free);

    // Reconstruct from the coefficient monomials through the public
    // generators: N^n M^m U^u V^v with u, v even.
    OperatorNF rebuilt;
    bool parity_ok = true;
    for (const auto& [sh, c] : p.terms()) {
      (void)sh;
      for (const auto& [mono, sc] : c.terms()) {
        if (mono.u % 2 != 0 || mono.v % 2 != 0) {
          parity_ok = false;
          continue;
        }
        int a = (mono.u - mono.v) / 2, b = (mono.u + mono.v) / 2;
        OperatorNF term = sc * compose(OperatorNF::tau_x().pow(mono.n),
                                       OperatorNF::tau_y().pow(mono.m));
        rebuilt = rebuilt + compose(term, OperatorNF::sigma(a, b));
      }
    }
    rec.truth("reconstructs-from-coefficients", detail::suite_str(p),
              parity_ok && rebuilt == p);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// S8: no zero divisors at desk scale.

inline SuiteReport suite_s8(std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "S8";
  detail::Recorder rec(rep);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(1, 3), coeff(-3, 3);

  auto rand_op = [&] {
    OperatorNF op;
    while (op.is_zero()) {
      op = Scalar(coeff(rng)) * detail::random_named_word(rng, len(rng)).op;
      op = op + Scalar(coeff(rng)) * detail::random_named_word(rng, len(rng)).op;
    }
    return op;
  };
  for (int t = 0; t < 100; ++t) {
    OperatorNF f = rand_op(), g = rand_op();
    rec.truth("product-of-nonzero-is-nonzero",
              "(" + detail::suite_str(f) + ") * (" + detail::suite_str(g) + ")",
              !compose(f, g).is_zero());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// S9: quantized algebra relations and the operator realization.

inline SuiteReport suite_s9(std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "S9";
  detail::Recorder rec(rep);
  std::mt19937_64 rng(seed);

  UqElement E = UqElement::e(), F = UqElement::f(), K = UqElement::k(),
            Ki = UqElement::kinv();
  Scalar denom = Scalar::q() - Scalar::q_power(-1);

  rec.equal("torus-inverse", "K*Kinv", K * Ki, UqElement::one());
  rec.equal("torus-raising", "K*E*Kinv", K * E * Ki, Scalar::q_power(2) * E);
  rec.equal("torus-lowering", "K*F*Kinv", K * F * Ki, Scalar::q_power(-2) * F);
  rec.equal("ladder-commutator", "E*F - F*E", E * F - F * E,
            denom.inv() * (K - Ki));

  std::uniform_int_distribution<int> ex(0, 2), kx(-2, 2), coeff(-3, 3);
  auto rand_uq = [&] {
    UqElement u;
    for (int t = 0; t < 2; ++t)
      u = u + Scalar(coeff(rng)) *
                  UqElement::monomial({ex(rng), kx(rng), ex(rng)});
    return u;
  };
  for (int t = 0; t < 15; ++t) {
    UqElement a = rand_uq(), b = rand_uq(), c = rand_uq();
    rec.equal("product-associative",
              "(" + a.to_string() + ")(" + b.to_string() + ")(" +
                  c.to_string() + ")",
              (a * b) * c, a * (b * c));
  }
  for (int t = 0; t < 12; ++t) {
    UqElement a = rand_uq(), b = rand_uq();
    rec.equal("coproduct-is-multiplicative",
              "(" + a.to_string() + ") ⊗-vs (" + b.to_string() + ")",
              uq_delta(a * b), uq_delta(a) * uq_delta(b));
  }
  {
    UqTensor expect =
        UqTensor::pure(E.pow(2), UqElement::one()) +
        (Scalar(1) + Scalar::q_power(-2)) *
            UqTensor::pure(K * E, E) +
        UqTensor::pure(K.pow(2), E.pow(2));
    rec.equal("coproduct-of-squared-raising", "E^2", uq_delta(E.pow(2)), expect);
  }

  for (int t = 0; t < 12; ++t) {
    UqElement a = rand_uq(), b = rand_uq();
    rec.equal("realization-is-multiplicative",
              "(" + a.to_string() + ")(" + b.to_string() + ")", phi(a * b),
              compose(phi(a), phi(b)));
  }
  rec.equal("realized-ladder-commutator", "phi(E)phi(F) - phi(F)phi(E)",
            compose(phi(E), phi(F)) - compose(phi(F), phi(E)),
            denom.inv() * (phi(K) - phi(Ki)));

  std::uniform_int_distribution<int> deg(0, 4);
  auto rand_plane = [&] {
    PlaneElement p;
    for (int t = 0; t < 3; ++t)
      p = p + PlaneElement::monomial(deg(rng), deg(rng), Scalar(coeff(rng)));
    return p;
  };
  for (int t = 0; t < 12; ++t) {
    PlaneElement r = rand_plane(), s = rand_plane();
    std::string in = "r = " + r.to_string() + ", s = " + s.to_string();
    rec.equal("raising-is-left-twisted-derivation", in, uq_act(E, r * s),
              uq_act(E, r) * s + uq_act(K, r) * uq_act(E, s));
    rec.equal("lowering-is-right-twisted-derivation", in, uq_act(F, r * s),
              uq_act(F, r) * uq_act(Ki, s) + r * uq_act(F, s));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// S10: closed-form action agrees with the coproduct recursion.

inline SuiteReport suite_s10(std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "S10";
  detail::Recorder rec(rep);
  std::mt19937_64 rng(seed);

  const std::vector<std::pair<std::string, UqElement>> gens = {
      {"E", UqElement::e()},           {"F", UqElement::f()},
      {"K", UqElement::k()},           {"Kinv", UqElement::kinv()},
      {"Ediv(2)", divided_power_e(2)}, {"Fdiv(2)", divided_power_f(2)},
  };
  for (const auto& [name, g] : gens) {
    bool all = true;
    for (int i = 0; i <= 10 && all; ++i)
      for (int j = 0; i + j <= 10 && all; ++j) {
        PlaneElement m = PlaneElement::monomial(i, j);
        if (!(uq_act(g, m) == uq_act_recursive(g, m))) all = false;
      }
    rec.truth("generator-routes-agree-exhaustive", name, all);
  }

  std::uniform_int_distribution<int> ex(0, 2), kx(-2, 2), coeff(-3, 3), deg(0, 5);
  for (int t = 0; t < 20; ++t) {
    UqElement u;
    for (int k = 0; k < 2; ++k)
      u = u + Scalar(coeff(rng)) * UqElement::monomial({ex(rng), kx(rng), ex(rng)});
    PlaneElement p;
    for (int k = 0; k < 3; ++k)
      p = p + PlaneElement::monomial(deg(rng), deg(rng), Scalar(coeff(rng)));
    rec.equal("routes-agree-sampled",
              "(" + u.to_string() + ") acting on " + p.to_string(),
              uq_act(u, p), uq_act_recursive(u, p));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// S11: divided powers and the normalized first-order derivations.

inline SuiteReport suite_s11(std::uint64_t) {
  SuiteReport rep;
  rep.suite = "S11";
  detail::Recorder rec(rep);

  rec.equal("normalized-y-derivation-skews-left-x", "dY*lambda_x",
            compose(dy_div(1), OperatorNF::lambda_x()),
            Scalar::q() * compose(OperatorNF::lambda_x(), dy_div(1)));
  rec.equal("normalized-x-derivation-skews-right-y", "dX*rho_y",
            compose(dx_div(1), OperatorNF::rho_y()),
            Scalar::q() * compose(OperatorNF::rho_y(), dx_div(1)));

  for (long long m = 0; m <= 3; ++m)
    for (long long n = 0; n <= 3; ++n) {
      Scalar binom = qbalanced_factorial(m + n) /
                     (qbalanced_factorial(m) * qbalanced_factorial(n));
      std::string in = "m = " + std::to_string(m) + ", n = " + std::to_string(n);
      rec.equal("divided-powers-multiply-by-balanced-binomials-raising", in,
                divided_power_e(m) * divided_power_e(n),
                binom * divided_power_e(m + n));
      rec.equal("divided-powers-multiply-by-balanced-binomials-lowering", in,
                divided_power_f(m) * divided_power_f(n),
                binom * divided_power_f(m + n));
    }

  for (long long m = 1; m <= 3; ++m) {
    std::string in = "m = " + std::to_string(m);
    rec.equal("realized-divided-raising-power", in,
              phi(divided_power_e(m)),
              Scalar::q_power(m * (m + 1) / 2) *
                  compose(OperatorNF::lambda_x().pow(static_cast<unsigned>(m)),
                          dy_div(m)));
    rec.equal("realized-divided-lowering-power", in,
              phi(divided_power_f(m)),
              Scalar::q_power(m * (m + 1) / 2) *
                  compose(OperatorNF::rho_y().pow(static_cast<unsigned>(m)),
                          dx_div(m)));
  }

  for (long long m = 0; m <= 3; ++m) {
    PlaneElement top = PlaneElement::monomial(0, static_cast<int>(m));
    std::string in = "Ediv(" + std::to_string(m) + ") on y^" + std::to_string(m);
    rec.equal("divided-raising-normalizes-the-ladder", in,
              uq_act(divided_power_e(m), top),
              PlaneElement::monomial(static_cast<int>(m), 0));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// S12: specialization series and the commuting square.

inline SuiteReport suite_s12(std::uint64_t seed, int order) {
  SuiteReport rep;
  rep.suite = "S12";
  detail::Recorder rec(rep);
  std::mt19937_64 rng(seed);
  if (order < 2) order = 2;

  using WE = WeylElement;
  using CE = ClassicalElement;
  const WE wu = WE::monomial({1, 0, 1, 0}), wv = WE::monomial({0, 1, 0, 1});
  const std::vector<std::pair<std::string, WE>> wpairs = {{"u*Du", wu},
                                                          {"v*Dv", wv}};
  for (const auto& [na, a] : wpairs)
    for (const auto& [nb, b] : wpairs) {
      std::string in = na + " and " + nb + " at order " + std::to_string(order);
      rec.equal("q-power-series-additive-weyl", in,
                q_power_series(a + b, order),
                q_power_series(a, order) * q_power_series(b, order));
    }
  const std::vector<std::pair<std::string, CE>> cpairs = {{"h", CE::h()},
                                                          {"hb", CE::hb()}};
  for (const auto& [na, a] : cpairs)
    for (const auto& [nb, b] : cpairs) {
      std::string in = na + " and " + nb + " at order " + std::to_string(order);
      rec.equal("q-power-series-additive-classical", in,
                q_power_series(a + b, order),
                q_power_series(a, order) * q_power_series(b, order));
    }

  auto p_identity_weyl = [&](const std::string& name, const WE& a) {
    auto lhs = p_series(a, order) * TSeries<WE>::constant(a, order) *
               TSeries<WE>::var(order);
    auto rhs = q_power_series(a, order) - TSeries<WE>::one(order);
    rec.equal("p-series-recovers-q-power", name + " (Weyl)", lhs, rhs);
  };
  p_identity_weyl("u*Du", wu);
  p_identity_weyl("u*Du + v*Dv", wu + wv);
  {
    CE h = CE::h(), hb = CE::hb();
    auto lhs = p_series(h + hb, order) * TSeries<CE>::constant(h + hb, order) *
               TSeries<CE>::var(order);
    auto rhs = q_power_series(h + hb, order) - TSeries<CE>::one(order);
    rec.equal("p-series-recovers-q-power", "h + hb (classical)", lhs, rhs);
  }

  for (int t = 0; t < 12; ++t) {
    detail::NamedWord w1 = detail::random_named_word(rng, 2);
    detail::NamedWord w2 = detail::random_named_word(rng, 2);
    rec.equal("limit-is-multiplicative-on-words", w1.name + " * " + w2.name,
              nu(compose(w1.op, w2.op), order),
              nu(w1.op, order) * nu(w2.op, order));
  }

  const std::vector<std::pair<std::string, UqElement>> diag = {
      {"K", UqElement::k()},
      {"Kinv", UqElement::kinv()},
      {"E", UqElement::e()},
      {"F", UqElement::f()},
      {"Ediv(2)", divided_power_e(2)},
      {"Fdiv(2)", divided_power_f(2)},
      {"E*F", UqElement::e() * UqElement::f()},
  };
  for (const auto& [name, x] : diag)
    rec.truth("diagram-commutes",
              name + " at order " + std::to_string(order),
              uq_diagram_commutes(x, order));
  rec.truth("diagram-commutes-sigma", "sigma(0, 2) at order " +
                                          std::to_string(order),
            sigma_diagram_commutes(1, order));

  // Specialization soundness: exact action at q -> 1+t, order t^0, matches
  // the Weyl action of the limit on the commutative polynomial ring.
  for (int t = 0; t < 12; ++t) {
    detail::NamedWord w = detail::random_named_word(rng, 2);
    WE w0 = nu(w.op, 1).coeff(0);
    bool all = true;
    std::string witness;
    for (int i = 0; i <= 6 && all; ++i)
      for (int j = 0; i + j <= 6 && all; ++j) {
        PlaneElement img = w.op.apply(PlaneElement::monomial(i, j));
        UVPoly expect;
        for (const auto& [mono, c] : img.terms())
          expect = expect + UVPoly::monomial(mono.i, mono.j,
                                             specialize_scalar(c, 1).coeff(0));
        UVPoly got = w0.apply(UVPoly::monomial(i, j, Rational(1)));
        if (!(got == expect)) {
          all = false;
          witness = "x^" + std::to_string(i) + "y^" + std::to_string(j);
        }
      }
    rec.truth("specialized-action-matches-limit",
              w.name + (all ? "" : " on " + witness), all);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// S13: finite-dimensional weight modules.

inline SuiteReport suite_s13(std::uint64_t) {
  SuiteReport rep;
  rep.suite = "S13";
  detail::Recorder rec(rep);
  for (int n = 0; n <= 10; ++n) {
    ModuleReport mr = run_module_checks(n);
    for (const auto& c : mr.checks)
      rec.truth(c.name, "n = " + std::to_string(n), c.pass);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Dispatcher.

inline const std::vector<std::string>& all_suite_ids() {
  static const std::vector<std::string> ids = {"S1", "S2",  "S3",  "S4", "S5",
                                               "S6", "S7",  "S8",  "S9", "S10",
                                               "S11", "S12", "S13"};
  return ids;
}

/// Runs one suite by id. `order` is the series truncation used by S12; the
/// other suites ignore it. Unknown ids throw std::invalid_argument.
inline SuiteReport run_suite(const std::string& id, std::uint64_t seed = 42,
                             int order = 5) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  if (id == "S1")
    rep = suite_s1(seed);
  else if (id == "S2")
    rep = suite_s2(seed);
  else if (id == "S3")
    rep = suite_s3(seed);
  else if (id == "S4")
    rep = suite_s4(seed);
  else if (id == "S5")
    rep = suite_s5(seed);
  else if (id == "S6")
    rep = suite_s6(seed);
  else if (id == "S7")
    rep = suite_s7(seed);
  else if (id == "S8")
    rep = suite_s8(seed);
  else if (id == "S9")
    rep = suite_s9(seed);
  else if (id == "S10")
    rep = suite_s10(seed);
  else if (id == "S11")
    rep = suite_s11(seed);
  else if (id == "S12")
    rep = suite_s12(seed, order);
  else if (id == "S13")
    rep = suite_s13(seed);
  else
    throw std::invalid_argument("unknown suite id '" + id + "'");
  rep.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

}  // namespace qdiff
