#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qdiff/scalar.hpp"

namespace qdiff {

/// Monomial u^i v^j of the commutative polynomial ring over the rationals.
class UVPoly {
 public:
  UVPoly() = default;

  static UVPoly monomial(int i, int j, Rational c = Rational(1)) {
    UVPoly r;
    r.add_term(i, j, c);
    return r;
  }
  static UVPoly one() { return monomial(0, 0); }
  static UVPoly u() { return monomial(1, 0); }
  static UVPoly v() { return monomial(0, 1); }

  const std::map<std::pair<int, int>, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool operator==(const UVPoly&) const = default;

  void add_term(int i, int j, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(std::make_pair(i, j), c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  friend UVPoly operator+(const UVPoly& a, const UVPoly& b) {
    UVPoly r = a;
    for (const auto& [m, c] : b.t_) r.add_term(m.first, m.second, c);
    return r;
  }
  friend UVPoly operator-(const UVPoly& a, const UVPoly& b) {
    UVPoly r = a;
    for (const auto& [m, c] : b.t_) r.add_term(m.first, m.second, -c);
    return r;
  }
  friend UVPoly operator*(const Rational& c, const UVPoly& a) {
    UVPoly r;
    if (c == 0) return r;
    for (const auto& [m, v] : a.t_) r.t_.emplace(m, c * v);
    return r;
  }
  friend UVPoly operator*(const UVPoly& a, const UVPoly& b) {
    UVPoly r;
    for (const auto& [m1, c1] : a.t_)
      for (const auto& [m2, c2] : b.t_)
        r.add_term(m1.first + m2.first, m1.second + m2.second, c1 * c2);
    return r;
  }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [m, c] = *it;
      bool neg = c < 0;
      Rational a = neg ? Rational(-c) : c;
      std::string mono;
      auto piece = [&](const char* g, int e) {
        if (e == 0) return;
        if (!mono.empty()) mono += "*";
        mono += g;
        if (e != 1) mono += "^" + std::to_string(e);
      };
      piece("u", m.first);
      piece("v", m.second);
      std::string body;
      std::string cs = a.str();
      if (mono.empty())
        body = cs;
      else if (a == 1)
        body = mono;
      else
        body = cs + "*" + mono;
      if (out.empty())
        out = (neg ? "-" : "") + body;
      else
        out += (neg ? " - " : " + ") + body;
    }
    return out;
  }

 private:
  std::map<std::pair<int, int>, Rational> t_;
};

/// Weyl monomial u^a v^b Du^c Dv^d, multiplications normal-ordered left of
/// the derivatives.
struct WeylMono {
  int a = 0;
  int b = 0;
  int c = 0;
  int d = 0;
  auto operator<=>(const WeylMono&) const = default;
};

/// Element of the rational Weyl algebra in two variables.
class WeylElement {
 public:
  WeylElement() = default;

  static WeylElement monomial(WeylMono m, Rational c = Rational(1)) {
    WeylElement r;
    r.add_term(m, c);
    return r;
  }
  static WeylElement one() { return monomial({0, 0, 0, 0}); }
  static WeylElement lu() { return monomial({1, 0, 0, 0}); }
  static WeylElement lv() { return monomial({0, 1, 0, 0}); }
  static WeylElement du() { return monomial({0, 0, 1, 0}); }
  static WeylElement dv() { return monomial({0, 0, 0, 1}); }

  const std::map<WeylMono, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool operator==(const WeylElement&) const = default;

  void add_term(WeylMono m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  friend WeylElement operator+(const WeylElement& x, const WeylElement& y) {
    WeylElement r = x;
    for (const auto& [m, c] : y.t_) r.add_term(m, c);
    return r;
  }
  friend WeylElement operator-(const WeylElement& x, const WeylElement& y) {
    WeylElement r = x;
    for (const auto& [m, c] : y.t_) r.add_term(m, -c);
    return r;
  }
  WeylElement operator-() const {
    WeylElement r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
  }
  friend WeylElement operator*(const Rational& c, const WeylElement& x) {
    WeylElement r;
    if (c == 0) return r;
    for (const auto& [m, v] : x.t_) r.t_.emplace(m, c * v);
    return r;
  }

  /// Du^c u^a = sum_k binom(c,k) a!/(a-k)! u^{a-k} Du^{c-k}, independently in
  /// each variable; the two variables commute.
  friend WeylElement operator*(const WeylElement& x, const WeylElement& y) {
    WeylElement r;
    for (const auto& [m1, c1] : x.t_)
      for (const auto& [m2, c2] : y.t_)
        for (int k = 0; k <= std::min(m1.c, m2.a); ++k) {
          Rational fk(int_binomial(m1.c, k) * falling(m2.a, k));
          if (fk == 0) continue;
          for (int l = 0; l <= std::min(m1.d, m2.b); ++l) {
            Rational fl(int_binomial(m1.d, l) * falling(m2.b, l));
            if (fl == 0) continue;
            r.add_term({m1.a + m2.a - k, m1.b + m2.b - l, m1.c + m2.c - k,
                        m1.d + m2.d - l},
                       c1 * c2 * fk * fl);
          }
        }
    return r;
  }

  WeylElement pow(unsigned n) const {
    WeylElement r = one();
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  UVPoly apply(const UVPoly& p) const {
    UVPoly out;
    for (const auto& [m, c] : t_)
      for (const auto& [mono, pc] : p.terms()) {
        int i = mono.first, j = mono.second;
        if (i < m.c || j < m.d) continue;
        Rational v = c * pc * Rational(falling(i, m.c) * falling(j, m.d));
        out.add_term(i - m.c + m.a, j - m.d + m.b, v);
      }
    return out;
  }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [m, c] = *it;
      bool neg = c < 0;
      Rational a = neg ? Rational(-c) : c;
      std::string mono;
      auto piece = [&](const char* g, int e) {
        if (e == 0) return;
        if (!mono.empty()) mono += "*";
        mono += g;
        if (e != 1) mono += "^" + std::to_string(e);
      };
      piece("u", m.a);
      piece("v", m.b);
      piece("Du", m.c);
      piece("Dv", m.d);
      std::string body;
      if (mono.empty())
        body = a.str();
      else if (a == 1)
        body = mono;
      else
        body = a.str() + "*" + mono;
      if (out.empty())
        out = (neg ? "-" : "") + body;
      else
        out += (neg ? " - " : " + ") + body;
    }
    return out;
  }

 private:
  static Int falling(int n, int k) {
    Int r = 1;
    for (int i = 0; i < k; ++i) r *= (n - i);
    return r;
  }
  std::map<WeylMono, Rational> t_;
};

/// PBW monomial f^a h^b hb^c e^d of the classical enveloping algebra with a
/// central generator hb adjoined.
struct ClassMono {
  long long a = 0;
  long long b = 0;
  long long c = 0;
  long long d = 0;
  auto operator<=>(const ClassMono&) const = default;
};

/// Enveloping algebra of sl2 plus a central hb: [h,e] = 2e, [h,f] = -2f,
/// [e,f] = h.
class ClassicalElement {
 public:
  ClassicalElement() = default;

  static ClassicalElement monomial(ClassMono m, Rational c = Rational(1)) {
    ClassicalElement r;
    r.add_term(m, c);
    return r;
  }
  static ClassicalElement one() { return monomial({0, 0, 0, 0}); }
  static ClassicalElement f() { return monomial({1, 0, 0, 0}); }
  static ClassicalElement h() { return monomial({0, 1, 0, 0}); }
  static ClassicalElement hb() { return monomial({0, 0, 1, 0}); }
  static ClassicalElement e() { return monomial({0, 0, 0, 1}); }

  const std::map<ClassMono, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool operator==(const ClassicalElement&) const = default;

  void add_term(ClassMono m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  friend ClassicalElement operator+(const ClassicalElement& x, const ClassicalElement& y) {
    ClassicalElement r = x;
    for (const auto& [m, c] : y.t_) r.add_term(m, c);
    return r;
  }
  friend ClassicalElement operator-(const ClassicalElement& x, const ClassicalElement& y) {
    ClassicalElement r = x;
    for (const auto& [m, c] : y.t_) r.add_term(m, -c);
    return r;
  }
  friend ClassicalElement operator*(const Rational& c, const ClassicalElement& x) {
    ClassicalElement r;
    if (c == 0) return r;
    for (const auto& [m, v] : x.t_) r.t_.emplace(m, c * v);
    return r;
  }
  friend ClassicalElement operator*(const ClassicalElement& x, const ClassicalElement& y);

  ClassicalElement pow(unsigned n) const {
    ClassicalElement r = one();
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [m, c] = *it;
      bool neg = c < 0;
      Rational a = neg ? Rational(-c) : c;
      std::string mono;
      auto piece = [&](const char* g, long long ex) {
        if (ex == 0) return;
        if (!mono.empty()) mono += "*";
        mono += g;
        if (ex != 1) mono += "^" + std::to_string(ex);
      };
      piece("f", m.a);
      piece("h", m.b);
      piece("hb", m.c);
      piece("e", m.d);
      std::string body;
      if (mono.empty())
        body = a.str();
      else if (a == 1)
        body = mono;
      else
        body = a.str() + "*" + mono;
      if (out.empty())
        out = (neg ? "-" : "") + body;
      else
        out += (neg ? " - " : " + ") + body;
    }
    return out;
  }

 private:
  std::map<ClassMono, Rational> t_;
};

namespace detail {

/// e^d f^a on the PBW basis, by induction on d via
/// e f^a = f^a e + a f^{a-1} (h - (a-1)).
inline const ClassicalElement& cl_e_past_f(long long d, long long a) {
  static std::map<std::pair<long long, long long>, ClassicalElement> cache;
  auto key = std::make_pair(d, a);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  ClassicalElement r;
  if (d == 0 || a == 0) {
    r = ClassicalElement::monomial({a, 0, 0, d});
  } else {
    const ClassicalElement& prev = cl_e_past_f(d - 1, a);
    for (const auto& [m, co] : prev.terms()) r.add_term({m.a, m.b, m.c, m.d + 1}, co);
    const ClassicalElement& low = cl_e_past_f(d - 1, a - 1);  // e^{d-1} f^{a-1}
    for (const auto& [m, co] : low.terms()) {
      // Right-multiply by a (h - (a-1)); h moves past e^{m.d} via
      // h e^k = e^k (h + 2k), so e^... h picks up -2 m.d on the way left.
      Rational ca = co * Rational(a);
      r.add_term({m.a, m.b + 1, m.c, m.d}, ca);
      r.add_term({m.a, m.b, m.c, m.d}, ca * Rational(-2 * m.d - (a - 1)));
    }
  }
  return cache.emplace(key, std::move(r)).first->second;
}

/// Coefficients of (h + s)^b as a dense vector over h powers.
inline std::vector<Rational> h_shift_pow(long long s, long long b) {
  std::vector<Rational> out(static_cast<size_t>(b) + 1);
  Int sp = 1;
  for (long long k = b; k >= 0; --k) {
    out[static_cast<size_t>(k)] = Rational(int_binomial(b, b - k) * sp);
    sp *= s;
  }
  return out;
}

}  // namespace detail

inline ClassicalElement operator*(const ClassicalElement& x, const ClassicalElement& y) {
  ClassicalElement r;
  for (const auto& [m1, c1] : x.terms())
    for (const auto& [m2, c2] : y.terms()) {
      const ClassicalElement& mid = detail::cl_e_past_f(m1.d, m2.a);
      for (const auto& [w, cw] : mid.terms()) {
        // f^{m1.a} h^{m1.b} (f^{w.a} h^{w.b} e^{w.d}) h^{m2.b} e^{m2.d}:
        // h^{m1.b} crosses f^{w.a} into (h - 2 w.a)^{m1.b}; e^{w.d} crosses
        // h^{m2.b} into (h - 2 w.d)^{m2.b}.
        std::vector<Rational> left = detail::h_shift_pow(-2 * w.a, m1.b);
        std::vector<Rational> right = detail::h_shift_pow(-2 * w.d, m2.b);
        for (size_t i = 0; i < left.size(); ++i) {
          if (left[i] == 0) continue;
          for (size_t j = 0; j < right.size(); ++j) {
            if (right[j] == 0) continue;
            r.add_term({m1.a + w.a,
                        w.b + static_cast<long long>(i) + static_cast<long long>(j),
                        m1.c + m2.c, w.d + m2.d},
                       c1 * c2 * cw * left[i] * right[j]);
          }
        }
      }
    }
  return r;
}

/// Realization by polynomial differential operators: e -> u Dv, f -> v Du,
/// h -> u Du - v Dv, hb -> u Du + v Dv.
inline WeylElement psi(const ClassicalElement& x) {
  static const WeylElement pe = WeylElement::monomial({1, 0, 0, 1});
  static const WeylElement pf = WeylElement::monomial({0, 1, 1, 0});
  static const WeylElement ph =
      WeylElement::monomial({1, 0, 1, 0}) - WeylElement::monomial({0, 1, 0, 1});
  static const WeylElement phb =
      WeylElement::monomial({1, 0, 1, 0}) + WeylElement::monomial({0, 1, 0, 1});
  WeylElement out;
  for (const auto& [m, c] : x.terms()) {
    WeylElement w = WeylElement::one();
    for (long long i = 0; i < m.a; ++i) w = w * pf;
    for (long long i = 0; i < m.b; ++i) w = w * ph;
    for (long long i = 0; i < m.c; ++i) w = w * phb;
    for (long long i = 0; i < m.d; ++i) w = w * pe;
    out = out + c * w;
  }
  return out;
}

}  // namespace qdiff
