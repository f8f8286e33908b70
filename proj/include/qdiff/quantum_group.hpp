#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "qdiff/opalg.hpp"
#include "qdiff/qplane.hpp"
#include "qdiff/scalar.hpp"

namespace qdiff {

/// PBW monomial F^a K^b E^c; a, c >= 0, b any integer.
struct UqMono {
  long long a = 0;
  long long b = 0;
  long long c = 0;
  auto operator<=>(const UqMono&) const = default;
};

/// Element of the quantized enveloping algebra of sl2 on the PBW basis, with
/// the relations K E = q^2 E K, K F = q^{-2} F K and
/// E F - F E = (K - K^{-1}) / (q - q^{-1}).
class UqElement {
 public:
  UqElement() = default;

  static UqElement monomial(UqMono m, Scalar c = Scalar(1)) {
    UqElement r;
    r.add_term(m, c);
    return r;
  }
  static UqElement one() { return monomial({0, 0, 0}); }
  static UqElement e() { return monomial({0, 0, 1}); }
  static UqElement f() { return monomial({1, 0, 0}); }
  static UqElement k() { return monomial({0, 1, 0}); }
  static UqElement kinv() { return monomial({0, -1, 0}); }

  const std::map<UqMono, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool operator==(const UqElement&) const = default;

  void add_term(UqMono m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  friend UqElement operator+(const UqElement& x, const UqElement& y) {
    UqElement r = x;
    for (const auto& [m, c] : y.t_) r.add_term(m, c);
    return r;
  }
  friend UqElement operator-(const UqElement& x, const UqElement& y) {
    UqElement r = x;
    for (const auto& [m, c] : y.t_) r.add_term(m, -c);
    return r;
  }
  UqElement operator-() const {
    UqElement r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
  }
  friend UqElement operator*(const Scalar& c, const UqElement& x) {
    UqElement r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : x.t_) r.t_.emplace(m, c * v);
    return r;
  }
  friend UqElement operator*(const UqElement& x, const UqElement& y);

  UqElement pow(unsigned n) const {
    UqElement r = one();
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [m, c] = *it;
      bool neg = c.num().lead() < 0;
      Scalar a = neg ? -c : c;
      std::string mono;
      auto piece = [&](const char* g, long long e) {
        if (e == 0) return;
        if (!mono.empty()) mono += "*";
        mono += g;
        if (e != 1) mono += "^" + std::to_string(e);
      };
      piece("F", m.a);
      piece("K", m.b);
      piece("E", m.c);
      std::string body;
      if (mono.empty())
        body = PlaneElement::scalar_atom(a);
      else if (a.is_one())
        body = mono;
      else
        body = PlaneElement::scalar_atom(a) + "*" + mono;
      if (out.empty())
        out = (neg ? "-" : "") + body;
      else
        out += (neg ? " - " : " + ") + body;
    }
    return out;
  }

 private:
  std::map<UqMono, Scalar> t_;
};

namespace detail {

/// E^c F^a on the PBW basis. Induction on c via
/// E F^a = F^a E + [a] F^{a-1} (q^{-(a-1)} K - q^{a-1} K^{-1}) / (q - q^{-1}).
inline const UqElement& e_past_f(long long c, long long a) {
  static std::map<std::pair<long long, long long>, UqElement> cache;
  auto key = std::make_pair(c, a);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  UqElement r;
  if (c == 0 || a == 0) {
    r = UqElement::monomial({a, 0, c});
  } else {
    const UqElement& prev = e_past_f(c - 1, a);  // E^{c-1} F^a
    for (const auto& [m, co] : prev.terms()) {
      // Append one E on the right: K^b E = q^{-2b} ... on the right no twist.
      r.add_term({m.a, m.b, m.c + 1}, co);
    }
    Scalar denom = Scalar::q() - Scalar::q_power(-1);
    Scalar bal = qbalanced(a) / denom;
    const UqElement& low = e_past_f(c - 1, a - 1);  // E^{c-1} F^{a-1}
    for (const auto& [m, co] : low.terms()) {
      // Multiply by q^{-(a-1)} K - q^{a-1} K^{-1} on the right; moving K^{D}
      // past E^{m.c} costs q^{-2 D m.c}.
      r.add_term({m.a, m.b + 1, m.c},
                 co * bal * Scalar::q_power(-(a - 1)) * Scalar::q_power(-2 * m.c));
      r.add_term({m.a, m.b - 1, m.c},
                 -co * bal * Scalar::q_power(a - 1) * Scalar::q_power(2 * m.c));
    }
  }
  return cache.emplace(key, std::move(r)).first->second;
}

}  // namespace detail

inline UqElement operator*(const UqElement& x, const UqElement& y) {
  UqElement r;
  for (const auto& [m1, c1] : x.terms())
    for (const auto& [m2, c2] : y.terms()) {
      const UqElement& mid = detail::e_past_f(m1.c, m2.a);
      for (const auto& [w, cw] : mid.terms()) {
        // F^{a1} K^{b1} (F^w.a K^w.b E^w.c) K^{b2} E^{c2}: K^{b1} moves past
        // F^{w.a} for q^{-2 a b1}, K^{b2} moves past E^{w.c} for q^{-2 c b2}.
        Scalar tw = Scalar::q_power(-2 * w.a * m1.b) * Scalar::q_power(-2 * w.c * m2.b);
        r.add_term({m1.a + w.a, m1.b + w.b + m2.b, w.c + m2.c}, c1 * c2 * cw * tw);
      }
    }
  return r;
}

/// Divided powers E^{(m)} = E^m over the balanced factorial; F likewise.
inline UqElement divided_power_e(long long m) {
  if (m < 0) throw std::invalid_argument("divided power needs m >= 0");
  return qbalanced_factorial(m).inv() * UqElement::monomial({0, 0, m});
}
inline UqElement divided_power_f(long long m) {
  if (m < 0) throw std::invalid_argument("divided power needs m >= 0");
  return qbalanced_factorial(m).inv() * UqElement::monomial({m, 0, 0});
}

// ---------------------------------------------------------------------------
// Coproduct.

/// Element of the two-fold tensor square, PBW basis on each leg.
class UqTensor {
 public:
  UqTensor() = default;

  static UqTensor pure(const UqElement& l, const UqElement& r) {
    UqTensor t;
    for (const auto& [ml, cl] : l.terms())
      for (const auto& [mr, cr] : r.terms()) t.add_term(ml, mr, cl * cr);
    return t;
  }
  static UqTensor one() { return pure(UqElement::one(), UqElement::one()); }

  const std::map<std::pair<UqMono, UqMono>, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool operator==(const UqTensor&) const = default;

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : t_) {
      if (!out.empty()) out += " + ";
      out += "(" + UqElement::monomial(m.first, c).to_string() + ") x (" +
             UqElement::monomial(m.second).to_string() + ")";
    }
    return out;
  }

  void add_term(UqMono l, UqMono r, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(std::make_pair(l, r), c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  friend UqTensor operator+(const UqTensor& x, const UqTensor& y) {
    UqTensor r = x;
    for (const auto& [m, c] : y.t_) r.add_term(m.first, m.second, c);
    return r;
  }
  friend UqTensor operator-(const UqTensor& x, const UqTensor& y) {
    UqTensor r = x;
    for (const auto& [m, c] : y.t_) r.add_term(m.first, m.second, -c);
    return r;
  }
  friend UqTensor operator*(const Scalar& c, const UqTensor& x) {
    UqTensor r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : x.t_) r.t_.emplace(m, c * v);
    return r;
  }
  /// Componentwise product; the two legs never braid.
  friend UqTensor operator*(const UqTensor& x, const UqTensor& y) {
    UqTensor r;
    for (const auto& [mx, cx] : x.t_)
      for (const auto& [my, cy] : y.t_) {
        UqElement l = UqElement::monomial(mx.first) * UqElement::monomial(my.first);
        UqElement rt = UqElement::monomial(mx.second) * UqElement::monomial(my.second);
        Scalar c = cx * cy;
        for (const auto& [ml, cl] : l.terms())
          for (const auto& [mr, cr] : rt.terms()) r.add_term(ml, mr, c * cl * cr);
      }
    return r;
  }

 private:
  std::map<std::pair<UqMono, UqMono>, Scalar> t_;
};

/// Coproduct: Delta(E) = E x 1 + K x E, Delta(F) = F x K^{-1} + 1 x F,
/// Delta(K) = K x K, extended as an algebra morphism.
inline UqTensor uq_delta(const UqElement& x) {
  static const UqTensor dE =
      UqTensor::pure(UqElement::e(), UqElement::one()) +
      UqTensor::pure(UqElement::k(), UqElement::e());
  static const UqTensor dF =
      UqTensor::pure(UqElement::f(), UqElement::kinv()) +
      UqTensor::pure(UqElement::one(), UqElement::f());
  UqTensor out;
  for (const auto& [m, c] : x.terms()) {
    UqTensor t = UqTensor::pure(
        UqElement::monomial({0, m.b, 0}),
        UqElement::monomial({0, m.b, 0}));  // Delta(K^b) = K^b x K^b
    for (long long i = 0; i < m.a; ++i) t = dF * t;
    for (long long i = 0; i < m.c; ++i) t = t * dE;
    out = out + c * t;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Action on the quantum plane.

/// Closed-form action on a basis monomial:
///   K   x^i y^j = q^{i-j} x^i y^j
///   E   x^i y^j = q^i [j]_{-2} x^{i+1} y^{j-1}
///   F   x^i y^j = q^j [i]_{-2} x^{i-1} y^{j+1}
inline PlaneElement uq_act(const UqElement& x, const PlaneElement& p) {
  PlaneElement out;
  for (const auto& [m, c] : x.terms())
    for (const auto& [mono, pc] : p.terms()) {
      int i = mono.i, j = mono.j;
      Scalar v = c * pc;
      for (long long t = 0; t < m.c; ++t) {  // E acts first
        if (j == 0) {
          v = Scalar(0);
          break;
        }
        v *= Scalar::q_power(i) * qint(j, -2);
        ++i;
        --j;
      }
      if (v.is_zero()) continue;
      v *= Scalar::q_power(m.b * (i - j));
      for (long long t = 0; t < m.a; ++t) {
        if (i == 0) {
          v = Scalar(0);
          break;
        }
        v *= Scalar::q_power(j) * qint(i, -2);
        --i;
        ++j;
      }
      if (!v.is_zero()) out.add_term({i, j}, v);
    }
  return out;
}

namespace detail {

/// Seed action of one generator on 1, x, y.
inline PlaneElement seed_act(UqMono g, PlaneMono m) {
  PlaneElement p = PlaneElement::monomial(m.i, m.j);
  if (g == UqMono{0, 0, 1}) {  // E
    if (m.j == 1) return PlaneElement::monomial(m.i + 1, 0);
    return PlaneElement();
  }
  if (g == UqMono{1, 0, 0}) {  // F
    if (m.i == 1) return PlaneElement::monomial(0, m.j + 1);
    return PlaneElement();
  }
  return Scalar::q_power(g.b * (m.i - m.j)) * p;  // K^b
}

/// One-generator action by peeling the leftmost letter with the coproduct.
inline PlaneElement gen_act_recursive(UqMono g, const PlaneElement& p) {
  PlaneElement out;
  for (const auto& [mono, pc] : p.terms()) {
    if (mono.i + mono.j <= 1) {
      out = out + pc * seed_act(g, mono);
      continue;
    }
    PlaneMono head = mono.i > 0 ? PlaneMono{1, 0} : PlaneMono{0, 1};
    PlaneElement rest = PlaneElement::monomial(mono.i - head.i, mono.j - head.j);
    UqTensor d = uq_delta(UqElement::monomial(g));
    PlaneElement acc;
    for (const auto& [pair, dc] : d.terms()) {
      PlaneElement left = pc * dc * seed_act(pair.first, head);
      // The legs of the coproduct of one generator are single monomials.
      acc = acc + left * gen_act_recursive(pair.second, rest);
    }
    out = out + acc;
  }
  return out;
}

}  // namespace detail

/// Action computed through the coproduct alone: each PBW factor acts by
/// splitting monomials into first letter and tail. Agrees with uq_act; kept
/// as an independent route for cross-checks.
inline PlaneElement uq_act_recursive(const UqElement& x, const PlaneElement& p) {
  PlaneElement out;
  for (const auto& [m, c] : x.terms()) {
    PlaneElement cur = c * p;
    for (long long t = 0; t < m.c; ++t) cur = detail::gen_act_recursive({0, 0, 1}, cur);
    if (m.b != 0) cur = detail::gen_act_recursive({0, m.b, 0}, cur);
    for (long long t = 0; t < m.a; ++t) cur = detail::gen_act_recursive({1, 0, 0}, cur);
    out = out + cur;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Realization by quantum differential operators.

/// sigma-twisted divided y-derivation: dy_div(1) spans the E direction,
/// dy_div(m) = dy_div(1)^m over the balanced factorial.
inline OperatorNF dy_div(long long m) {
  if (m < 0) throw std::invalid_argument("divided power needs m >= 0");
  static const OperatorNF base = [] {
    OperatorNF inner = OperatorNF::identity() + OperatorNF::sigma(1, -1);
    OperatorNF d = compose(OperatorNF::dyb(1), inner);
    return (Scalar(1) / qint(2, 1)) * compose(OperatorNF::sigma(2, 0), d);
  }();
  return qbalanced_factorial(m).inv() * base.pow(static_cast<unsigned>(m));
}

/// Mirror for the F direction.
inline OperatorNF dx_div(long long m) {
  if (m < 0) throw std::invalid_argument("divided power needs m >= 0");
  static const OperatorNF base = [] {
    OperatorNF inner = OperatorNF::identity() + OperatorNF::sigma(-1, -1);
    OperatorNF d = compose(OperatorNF::dxb(1), inner);
    return (Scalar(1) / qint(2, 1)) * compose(OperatorNF::sigma(-2, 0), d);
  }();
  return qbalanced_factorial(m).inv() * base.pow(static_cast<unsigned>(m));
}

/// phi(E) = sigma(2,0) lambda_x dyb(1) (1 + sigma(1,-1)) / [2], which equals
/// q lambda_x dy_div(1): the sigma crosses the lambda_x shift for one q.
inline OperatorNF phi_e() { return Scalar::q() * compose(OperatorNF::lambda_x(), dy_div(1)); }
inline OperatorNF phi_f() { return Scalar::q() * compose(OperatorNF::rho_y(), dx_div(1)); }
inline OperatorNF phi_k(long long b = 1) {
  return OperatorNF::sigma(static_cast<int>(2 * b), 0);
}

/// Algebra morphism into operators sending K to sigma(2,0), E to
/// lambda_x dy_div(1), F to rho_y dx_div(1).
inline OperatorNF phi(const UqElement& x) {
  OperatorNF out;
  for (const auto& [m, c] : x.terms()) {
    OperatorNF w = phi_k(m.b);
    for (long long t = 0; t < m.c; ++t) w = compose(w, phi_e());
    for (long long t = 0; t < m.a; ++t) w = compose(phi_f(), w);
    out = out + c * w;
  }
  return out;
}

}  // namespace qdiff
