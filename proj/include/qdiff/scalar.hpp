#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qdiff {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("scalar division by zero") {}
};

/// Dense polynomial in the indeterminate s over arbitrary-precision integers.
/// Invariant: no trailing zero coefficients, so the zero polynomial has an
/// empty coefficient vector and degree() == -1.
class SPoly {
 public:
  SPoly() = default;
  explicit SPoly(Int constant) {
    if (constant != 0) c_.push_back(std::move(constant));
  }
  explicit SPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

  static SPoly monomial(Int coeff, int exp) {
    SPoly p;
    if (coeff != 0) {
      p.c_.assign(static_cast<size_t>(exp) + 1, Int(0));
      p.c_[static_cast<size_t>(exp)] = std::move(coeff);
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Int& coeff(int i) const {
    static const Int kZero{0};
    return (i >= 0 && i <= degree()) ? c_[static_cast<size_t>(i)] : kZero;
  }
  const Int& lead() const { return c_.back(); }
  const std::vector<Int>& coeffs() const { return c_; }

  bool operator==(const SPoly& o) const = default;

  SPoly operator-() const {
    SPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend SPoly operator+(const SPoly& a, const SPoly& b) {
    SPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
  }
  friend SPoly operator-(const SPoly& a, const SPoly& b) { return a + (-b); }
  friend SPoly operator*(const SPoly& a, const SPoly& b) {
    if (a.is_zero() || b.is_zero()) return SPoly{};
    SPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }

  SPoly mul_int(const Int& k) const {
    if (k == 0) return SPoly{};
    SPoly r = *this;
    for (auto& x : r.c_) x *= k;
    return r;
  }
  SPoly div_int(const Int& k) const {
    SPoly r = *this;
    for (auto& x : r.c_) x /= k;
    return r;
  }
  /// Multiplies by s^k, k >= 0.
  SPoly shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    SPoly r;
    r.c_.assign(c_.size() + static_cast<size_t>(k), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(k)] = c_[i];
    return r;
  }

  /// Positive gcd of all coefficients; 0 for the zero polynomial.
  Int content() const {
    Int g = 0;
    for (const auto& x : c_) g = boost::multiprecision::gcd(g, x);
    return g;
  }

  /// Exact division; throws on a nonzero remainder or inexact coefficient.
  SPoly div_exact(const SPoly& d) const {
    if (d.is_zero()) throw DivisionByZero{};
    SPoly r = *this;
    if (r.is_zero()) return r;
    if (r.degree() < d.degree()) throw std::logic_error("inexact polynomial division");
    std::vector<Int> q(static_cast<size_t>(r.degree() - d.degree()) + 1, Int(0));
    while (!r.is_zero() && r.degree() >= d.degree()) {
      Int qc = r.lead() / d.lead();
      if (qc * d.lead() != r.lead()) throw std::logic_error("inexact polynomial division");
      int sh = r.degree() - d.degree();
      q[static_cast<size_t>(sh)] = qc;
      r = r - d.shifted(sh).mul_int(qc);
    }
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return SPoly(std::move(q));
  }

  /// Pseudo-remainder of a by b (b nonzero), up to a unit: suitable for gcd.
  static SPoly prem(SPoly r, const SPoly& b) {
    const int db = b.degree();
    const Int& lb = b.lead();
    while (!r.is_zero() && r.degree() >= db) {
      SPoly t = b.shifted(r.degree() - db).mul_int(r.lead());
      r = r.mul_int(lb) - t;
    }
    return r;
  }

  /// Primitive-PRS gcd, sign-normalized to a positive leading coefficient.
  static SPoly gcd(SPoly a, SPoly b) {
    if (a.is_zero() && b.is_zero()) return SPoly{};
    if (a.is_zero()) return b.lead() < 0 ? -b : b;
    if (b.is_zero()) return a.lead() < 0 ? -a : a;
    Int cg = boost::multiprecision::gcd(a.content(), b.content());
    a = a.div_int(a.content());
    b = b.div_int(b.content());
    while (!b.is_zero()) {
      SPoly r = prem(a, b);
      a = std::move(b);
      if (!r.is_zero()) r = r.div_int(r.content());
      b = std::move(r);
    }
    a = a.mul_int(cg);
    if (a.lead() < 0) a = -a;
    return a;
  }

  /// Sum of coefficients: the value at s = 1.
  Int eval_one() const {
    Int v = 0;
    for (const auto& x : c_) v += x;
    return v;
  }

  bool all_even_exponents() const {
    for (size_t i = 1; i < c_.size(); i += 2)
      if (c_[i] != 0) return false;
    return true;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

/// Element of the field Q(s) with q = s^2: a fraction of integer polynomials
/// in s, kept reduced (gcd of numerator and denominator is 1) with a positive
/// leading denominator coefficient. The representation is canonical, so
/// structural equality is field equality.
class Scalar {
 public:
  Scalar() : num_(), den_(Int(1)) {}
  Scalar(long long n) : num_(Int(n)), den_(Int(1)) {}
  explicit Scalar(Int n) : num_(std::move(n)), den_(Int(1)) {}
  explicit Scalar(const Rational& r)
      : num_(Int(boost::multiprecision::numerator(r))),
        den_(Int(boost::multiprecision::denominator(r))) {}
  Scalar(SPoly num, SPoly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

  /// s^k for any integer k.
  static Scalar s_power(long long k) {
    if (k >= 0) return Scalar(SPoly::monomial(Int(1), static_cast<int>(k)), SPoly(Int(1)));
    return Scalar(SPoly(Int(1)), SPoly::monomial(Int(1), static_cast<int>(-k)));
  }
  static Scalar q() { return s_power(2); }
  /// q^k = s^{2k} for any integer k.
  static Scalar q_power(long long k) { return s_power(2 * k); }

  const SPoly& num() const { return num_; }
  const SPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  bool is_integer() const { return den_.degree() == 0 && den_.lead() == 1; }

  bool operator==(const Scalar& o) const = default;

  Scalar operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw DivisionByZero{};
    return Scalar(a.num_ * b.den_, a.den_ * b.num_);
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inv() const {
    if (is_zero()) throw DivisionByZero{};
    return Scalar(den_, num_);
  }

  Scalar pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    Scalar r = 1, base = *this;
    while (e > 0) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  /// Rendered over the q alphabet: even powers of s print as powers of q.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string n = poly_string(num_);
    if (den_.degree() == 0 && den_.lead() == 1) return n;
    std::string d = poly_string(den_);
    if (term_count(num_) > 1) n = "(" + n + ")";
    if (term_count(den_) > 1) d = "(" + d + ")";
    return n + "/" + d;
  }

 private:
  static int term_count(const SPoly& p) {
    int n = 0;
    for (const auto& c : p.coeffs())
      if (c != 0) ++n;
    return n;
  }

  static std::string poly_string(const SPoly& p) {
    std::string out;
    for (int e = 0; e <= p.degree(); ++e) {
      const Int& c = p.coeff(e);
      if (c == 0) continue;
      Int mag = c < 0 ? Int(-c) : c;
      std::string name;
      if (e == 1)
        name = "s";
      else if (e == 2)
        name = "q";
      else if (e > 0 && e % 2 == 0)
        name = "q^" + std::to_string(e / 2);
      else if (e > 0)
        name = "s^" + std::to_string(e);
      std::string piece;
      if (name.empty())
        piece = mag.str();
      else if (mag == 1)
        piece = name;
      else
        piece = mag.str() + "*" + name;
      if (out.empty())
        out = (c < 0 ? "-" : "") + piece;
      else
        out += (c < 0 ? "-" : "+") + piece;
    }
    return out;
  }

  void reduce() {
    if (den_.is_zero()) throw DivisionByZero{};
    if (num_.is_zero()) {
      den_ = SPoly(Int(1));
      return;
    }
    SPoly g = SPoly::gcd(num_, den_);
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
    if (den_.lead() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  SPoly num_, den_;
};

/// q-integer [n]_a = (q^{na} - 1)/(q^a - 1) for a != 0, and [n]_0 = n.
inline Scalar qint(long long n, long long a) {
  if (a == 0) return Scalar(n);
  return (Scalar::q_power(n * a) - Scalar(1)) / (Scalar::q_power(a) - Scalar(1));
}

/// Balanced q-number [[m]] = (q^m - q^{-m})/(q - q^{-1}).
inline Scalar qbalanced(long long m) {
  return (Scalar::q_power(m) - Scalar::q_power(-m)) / (Scalar::q() - Scalar::q_power(-1));
}

/// Balanced factorial [[m]]! with [[0]]! = 1. Requires m >= 0.
inline Scalar qbalanced_factorial(long long m) {
  if (m < 0) throw std::invalid_argument("balanced factorial of a negative index");
  Scalar r = 1;
  for (long long i = 1; i <= m; ++i) r *= qbalanced(i);
  return r;
}

inline Int int_binomial(long long n, long long k) {
  if (k < 0 || k > n) return Int(0);
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= Int(n - k + i);
    r /= Int(i);
  }
  return r;
}

}  // namespace qdiff
