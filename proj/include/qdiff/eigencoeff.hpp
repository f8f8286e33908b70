#pragma once

#include <map>
#include <string>

#include "qdiff/scalar.hpp"

namespace qdiff {

/// Monomial N^n M^m U^u V^v. N, M carry polynomial (nonnegative) exponents,
/// U, V are Laurent variables.
struct CoeffMono {
  int n = 0;
  int m = 0;
  int u = 0;
  int v = 0;
  auto operator<=>(const CoeffMono&) const = default;
};

/// Eigencoefficient of one shift component of an operator normal form: a
/// polynomial in N, M whose coefficients are Laurent polynomials in U, V over
/// Scalar. Evaluating at the monomial x^n y^m substitutes N := n, M := m,
/// U := s^n, V := s^m.
class EigenCoeff {
 public:
  EigenCoeff() = default;

  static EigenCoeff scalar(Scalar c) {
    EigenCoeff e;
    if (!c.is_zero()) e.t_[CoeffMono{}] = std::move(c);
    return e;
  }
  static EigenCoeff one() { return scalar(Scalar(1)); }
  static EigenCoeff monomial(CoeffMono k, Scalar c) {
    EigenCoeff e;
    if (!c.is_zero()) e.t_[k] = std::move(c);
    return e;
  }
  static EigenCoeff var_n() { return monomial({1, 0, 0, 0}, Scalar(1)); }
  static EigenCoeff var_m() { return monomial({0, 1, 0, 0}, Scalar(1)); }
  static EigenCoeff u_power(int k) { return monomial({0, 0, k, 0}, Scalar(1)); }
  static EigenCoeff v_power(int k) { return monomial({0, 0, 0, k}, Scalar(1)); }

  const std::map<CoeffMono, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool operator==(const EigenCoeff&) const = default;

  void add_term(CoeffMono k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  friend EigenCoeff operator+(const EigenCoeff& a, const EigenCoeff& b) {
    EigenCoeff r = a;
    for (const auto& [k, c] : b.t_) r.add_term(k, c);
    return r;
  }
  friend EigenCoeff operator-(const EigenCoeff& a, const EigenCoeff& b) {
    EigenCoeff r = a;
    for (const auto& [k, c] : b.t_) r.add_term(k, -c);
    return r;
  }
  EigenCoeff operator-() const {
    EigenCoeff r;
    for (const auto& [k, c] : t_) r.t_[k] = -c;
    return r;
  }
  friend EigenCoeff operator*(const Scalar& c, const EigenCoeff& a) {
    EigenCoeff r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : a.t_) r.t_[k] = c * v;
    return r;
  }
  friend EigenCoeff operator*(const EigenCoeff& a, const EigenCoeff& b) {
    EigenCoeff r;
    for (const auto& [ka, ca] : a.t_)
      for (const auto& [kb, cb] : b.t_)
        r.add_term({ka.n + kb.n, ka.m + kb.m, ka.u + kb.u, ka.v + kb.v}, ca * cb);
    return r;
  }

  /// Value at the monomial x^n y^m.
  Scalar eval(long long n, long long m) const {
    Scalar out = 0;
    for (const auto& [k, c] : t_) {
      Scalar v = c * Scalar::s_power(n * k.u + m * k.v);
      if (k.n > 0) v *= Scalar(boost::multiprecision::pow(Int(n), static_cast<unsigned>(k.n)));
      if (k.m > 0) v *= Scalar(boost::multiprecision::pow(Int(m), static_cast<unsigned>(k.m)));
      out += v;
    }
    return out;
  }

  /// Composition twist by an inner shift (a, b):
  /// N -> N+a, M -> M+b, U -> U s^a, V -> V s^b.
  EigenCoeff subst_shift(int a, int b) const {
    if (a == 0 && b == 0) return *this;
    EigenCoeff r;
    for (const auto& [k, c] : t_) {
      Scalar base = c * Scalar::s_power(static_cast<long long>(a) * k.u +
                                        static_cast<long long>(b) * k.v);
      for (int i = 0; i <= k.n; ++i) {
        Int bin_n = int_binomial(k.n, i) *
                    boost::multiprecision::pow(Int(a), static_cast<unsigned>(k.n - i));
        if (bin_n == 0) continue;
        for (int j = 0; j <= k.m; ++j) {
          Int bin = bin_n * int_binomial(k.m, j) *
                    boost::multiprecision::pow(Int(b), static_cast<unsigned>(k.m - j));
          if (bin == 0) continue;
          r.add_term({i, j, k.u, k.v}, base * Scalar(bin));
        }
      }
    }
    return r;
  }

  /// Partial substitution N := n0, U := s^{n0}: a polynomial in M, V only.
  EigenCoeff subst_n(long long n0) const {
    EigenCoeff r;
    for (const auto& [k, c] : t_) {
      Scalar v = c * Scalar::s_power(n0 * k.u);
      if (k.n > 0) v *= Scalar(boost::multiprecision::pow(Int(n0), static_cast<unsigned>(k.n)));
      r.add_term({0, k.m, 0, k.v}, v);
    }
    return r;
  }

  /// Partial substitution M := m0, V := s^{m0}: a polynomial in N, U only.
  EigenCoeff subst_m(long long m0) const {
    EigenCoeff r;
    for (const auto& [k, c] : t_) {
      Scalar v = c * Scalar::s_power(m0 * k.v);
      if (k.m > 0) v *= Scalar(boost::multiprecision::pow(Int(m0), static_cast<unsigned>(k.m)));
      r.add_term({k.n, 0, k.u, 0}, v);
    }
    return r;
  }

  int max_n_degree() const {
    int d = 0;
    for (const auto& [k, c] : t_) d = std::max(d, k.n);
    return d;
  }
  int max_m_degree() const {
    int d = 0;
    for (const auto& [k, c] : t_) d = std::max(d, k.m);
    return d;
  }
  bool nm_free() const {
    for (const auto& [k, c] : t_)
      if (k.n != 0 || k.m != 0) return false;
    return true;
  }
  /// Free of the y-side data M and V.
  bool mv_free() const {
    for (const auto& [k, c] : t_)
      if (k.m != 0 || k.v != 0) return false;
    return true;
  }
  /// Free of the x-side data N and U.
  bool nu_free() const {
    for (const auto& [k, c] : t_)
      if (k.n != 0 || k.u != 0) return false;
    return true;
  }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : t_) {
      bool neg = c.num().lead() < 0;
      Scalar a = neg ? -c : c;
      std::string mono = mono_string(k);
      std::string body;
      if (mono.empty())
        body = scalar_factor(a);
      else if (a.is_one())
        body = mono;
      else
        body = scalar_factor(a) + "*" + mono;
      if (out.empty())
        out = (neg ? "-" : "") + body;
      else
        out += (neg ? "-" : "+") + body;
    }
    return out;
  }

 private:
  static std::string power_piece(const char* name, int e) {
    if (e == 0) return "";
    if (e == 1) return name;
    return std::string(name) + "^" + std::to_string(e);
  }

  static std::string mono_string(const CoeffMono& k) {
    std::string out;
    for (const auto& piece : {power_piece("N", k.n), power_piece("M", k.m),
                              power_piece("U", k.u), power_piece("V", k.v)}) {
      if (piece.empty()) continue;
      if (!out.empty()) out += "*";
      out += piece;
    }
    return out;
  }

  static std::string scalar_factor(const Scalar& c) {
    std::string s = c.to_string();
    int ops = 0;
    for (size_t k = 1; k < s.size(); ++k)
      if (s[k] == '+' || s[k] == '-') ++ops;
    return (ops > 0 && s.front() != '(') ? "(" + s + ")" : s;
  }

  std::map<CoeffMono, Scalar> t_;
};

}  // namespace qdiff
