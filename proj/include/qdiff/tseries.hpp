#pragma once

#include <concepts>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qdiff/scalar.hpp"

namespace qdiff {

/// Polynomials in one commuting indeterminate A over the rationals, dense
/// with no trailing zero coefficients.
class CommPoly {
 public:
  CommPoly() = default;
  explicit CommPoly(Rational c) {
    if (c != 0) c_.push_back(std::move(c));
  }

  static CommPoly one() { return CommPoly(Rational(1)); }
  static CommPoly var() {
    CommPoly p;
    p.c_ = {Rational(0), Rational(1)};
    return p;
  }

  /// binom(A, n) = A (A-1) ... (A-n+1) / n!.
  static CommPoly binomial(int n) {
    if (n < 0) return CommPoly();
    CommPoly p = one();
    Int fact = 1;
    for (int i = 0; i < n; ++i) {
      p = p * (var() - CommPoly(Rational(i)));
      fact *= i + 1;
    }
    Rational inv(Int(1), fact);
    for (auto& c : p.c_) c *= inv;
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)]
                                                       : Rational(0);
  }
  bool operator==(const CommPoly&) const = default;

  friend CommPoly operator+(const CommPoly& a, const CommPoly& b) {
    CommPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i)
      r.c_[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    r.trim();
    return r;
  }
  friend CommPoly operator-(const CommPoly& a, const CommPoly& b) {
    CommPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i)
      r.c_[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    r.trim();
    return r;
  }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    CommPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }
  friend CommPoly operator*(const Rational& s, const CommPoly& a) {
    CommPoly r;
    if (s == 0) return r;
    r.c_ = a.c_;
    for (auto& c : r.c_) c *= s;
    return r;
  }

  Rational eval(const Rational& a) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * a + *it;
    return r;
  }

  /// Quotient by A; the constant coefficient must vanish.
  CommPoly div_var() const {
    if (!is_zero() && c_[0] != 0)
      throw std::invalid_argument("polynomial not divisible by its variable");
    CommPoly r;
    if (c_.size() > 1) r.c_.assign(c_.begin() + 1, c_.end());
    return r;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      Rational c = coeff(i);
      if (c == 0) continue;
      bool neg = c < 0;
      Rational a = neg ? Rational(-c) : c;
      std::string body;
      if (i == 0)
        body = a.str();
      else {
        std::string mono = i == 1 ? "A" : "A^" + std::to_string(i);
        body = (a == 1) ? mono : a.str() + "*" + mono;
      }
      if (out.empty())
        out = (neg ? "-" : "") + body;
      else
        out += (neg ? " - " : " + ") + body;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Truncated power series in t with coefficients in C, kept modulo t^order.
/// C must be a commutative-enough ring with default construction as zero.
template <typename C>
class TSeries {
 public:
  explicit TSeries(int order) : c_(static_cast<size_t>(order)) {
    if (order <= 0) throw std::invalid_argument("series order must be positive");
  }

  static TSeries constant(C v, int order) {
    TSeries r(order);
    r.c_[0] = std::move(v);
    return r;
  }
  static TSeries one(int order) { return constant(unit(), order); }
  static TSeries var(int order) {
    TSeries r(order);
    if (order > 1) r.c_[1] = unit();
    return r;
  }

  int order() const { return static_cast<int>(c_.size()); }
  const C& coeff(int n) const { return c_.at(static_cast<size_t>(n)); }
  void set_coeff(int n, C v) { c_.at(static_cast<size_t>(n)) = std::move(v); }
  bool is_zero() const {
    for (const auto& c : c_)
      if (!(c == C())) return false;
    return true;
  }
  bool operator==(const TSeries&) const = default;

  friend TSeries operator+(const TSeries& a, const TSeries& b) {
    a.match(b);
    TSeries r(a.order());
    for (int n = 0; n < a.order(); ++n) r.c_[static_cast<size_t>(n)] = a.coeff(n) + b.coeff(n);
    return r;
  }
  friend TSeries operator-(const TSeries& a, const TSeries& b) {
    a.match(b);
    TSeries r(a.order());
    for (int n = 0; n < a.order(); ++n) r.c_[static_cast<size_t>(n)] = a.coeff(n) - b.coeff(n);
    return r;
  }
  friend TSeries operator*(const TSeries& a, const TSeries& b) {
    a.match(b);
    TSeries r(a.order());
    for (int n = 0; n < a.order(); ++n) {
      C acc{};
      for (int k = 0; k <= n; ++k) acc = acc + a.coeff(k) * b.coeff(n - k);
      r.c_[static_cast<size_t>(n)] = std::move(acc);
    }
    return r;
  }

  TSeries pow(unsigned n) const {
    TSeries r = one(order());
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  /// Multiplicative inverse; requires an invertible constant coefficient
  /// (instantiable only when C supports division).
  TSeries inverse() const {
    if (c_[0] == C()) throw std::invalid_argument("series constant term is zero");
    TSeries r(order());
    C inv0 = C(1) / c_[0];
    r.c_[0] = inv0;
    for (int n = 1; n < order(); ++n) {
      C acc{};
      for (int k = 1; k <= n; ++k) acc = acc + coeff(k) * r.coeff(n - k);
      r.c_[static_cast<size_t>(n)] = C() - inv0 * acc;
    }
    return r;
  }

  TSeries truncated(int new_order) const {
    TSeries r(new_order);
    for (int n = 0; n < std::min(new_order, order()); ++n) r.c_[static_cast<size_t>(n)] = coeff(n);
    return r;
  }

  std::string to_string() const {
    std::string out;
    for (int n = 0; n < order(); ++n) {
      if (coeff(n) == C()) continue;
      std::string cs = coeff_str(coeff(n));
      std::string body;
      if (n == 0)
        body = cs;
      else {
        std::string tp = n == 1 ? "t" : "t^" + std::to_string(n);
        body = (cs == "1") ? tp : "(" + cs + ")*" + tp;
      }
      out += out.empty() ? body : " + " + body;
    }
    if (out.empty()) out = "0";
    return out + " + O(t^" + std::to_string(order()) + ")";
  }

 private:
  static C unit() {
    if constexpr (requires { C::one(); })
      return C::one();
    else
      return C(1);
  }
  static std::string coeff_str(const C& c) {
    if constexpr (requires { c.to_string(); })
      return c.to_string();
    else
      return c.str();
  }
  void match(const TSeries& other) const {
    if (order() != other.order())
      throw std::invalid_argument("series truncation orders differ");
  }
  std::vector<C> c_;
};

/// Rescale a series over C by a series of rational scalars of the same
/// truncation order.
template <typename C>
TSeries<C> scale_series(const TSeries<Rational>& s, const TSeries<C>& x) {
  if (s.order() != x.order())
    throw std::invalid_argument("series truncation orders differ");
  TSeries<C> r(x.order());
  for (int n = 0; n < x.order(); ++n) {
    C acc{};
    for (int k = 0; k <= n; ++k) acc = acc + s.coeff(k) * x.coeff(n - k);
    r.set_coeff(n, std::move(acc));
  }
  return r;
}

template <typename C>
concept RingWithOne = requires(C a) {
  { C::one() } -> std::convertible_to<C>;
  { a * a } -> std::convertible_to<C>;
};

/// Evaluate a rational polynomial at an element of a ring with identity.
template <RingWithOne C>
C eval_poly(const CommPoly& p, const C& x) {
  C r{};
  for (int i = p.degree(); i >= 0; --i) r = r * x + p.coeff(i) * C::one();
  return r;
}

inline Rational eval_poly(const CommPoly& p, const Rational& x) { return p.eval(x); }

/// The series (1+t)^a = sum_n binom(a, n) t^n for a in any ring with
/// identity where the binomial polynomials can be evaluated.
template <typename C>
TSeries<C> q_power_series(const C& a, int order) {
  TSeries<C> r(order);
  for (int n = 0; n < order; ++n) r.set_coeff(n, eval_poly(CommPoly::binomial(n), a));
  return r;
}

/// The series P(a) with ((1+t)^a - 1) = t * a * P(a); its t^n coefficient is
/// the polynomial binom(A, n+1)/A evaluated at a.
template <typename C>
TSeries<C> p_series(const C& a, int order) {
  TSeries<C> r(order);
  for (int n = 0; n < order; ++n)
    r.set_coeff(n, eval_poly(CommPoly::binomial(n + 1).div_var(), a));
  return r;
}

}  // namespace qdiff
