#pragma once

#include <map>
#include <string>

#include "qdiff/scalar.hpp"

namespace qdiff {

/// Vector in the grading lattice Z x Z.
struct GradeVec {
  int p = 0;
  int r = 0;
  auto operator<=>(const GradeVec&) const = default;
  GradeVec operator+(GradeVec o) const { return {p + o.p, r + o.r}; }
  GradeVec operator-() const { return {-p, -r}; }
  /// Membership in the index-two sublattice generated by (1,1) and (-1,1).
  bool in_even_sublattice() const { return (p + r) % 2 == 0; }
  std::string to_string() const { return "(" + std::to_string(p) + "," + std::to_string(r) + ")"; }
};

/// beta(g, d) = q^{(g.p*d.p + g.r*d.r)/2} = s^{g.p*d.p + g.r*d.r}.
inline Scalar bicharacter(GradeVec g, GradeVec d) {
  return Scalar::s_power(static_cast<long long>(g.p) * d.p + static_cast<long long>(g.r) * d.r);
}

/// Exponents (i, j) of the normal-form monomial x^i y^j.
struct PlaneMono {
  int i = 0;
  int j = 0;
  auto operator<=>(const PlaneMono&) const = default;
};

/// Degree of x^i y^j in the Z x Z grading: deg x = (1,1), deg y = (-1,1).
inline GradeVec gamma_degree(PlaneMono m) { return {m.i - m.j, m.i + m.j}; }

/// Element of the quantum plane k<x,y>/(xy - q yx), stored on the PBW basis
/// x^i y^j with Scalar coefficients. Zero coefficients are never stored.
class PlaneElement {
 public:
  PlaneElement() = default;

  static PlaneElement monomial(int i, int j, Scalar c = Scalar(1)) {
    PlaneElement e;
    if (!c.is_zero()) e.t_[{i, j}] = std::move(c);
    return e;
  }
  static PlaneElement one() { return monomial(0, 0); }
  static PlaneElement x() { return monomial(1, 0); }
  static PlaneElement y() { return monomial(0, 1); }

  const std::map<PlaneMono, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool operator==(const PlaneElement&) const = default;

  void add_term(PlaneMono m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  friend PlaneElement operator+(const PlaneElement& a, const PlaneElement& b) {
    PlaneElement r = a;
    for (const auto& [m, c] : b.t_) r.add_term(m, c);
    return r;
  }
  friend PlaneElement operator-(const PlaneElement& a, const PlaneElement& b) {
    PlaneElement r = a;
    for (const auto& [m, c] : b.t_) r.add_term(m, -c);
    return r;
  }
  friend PlaneElement operator*(const Scalar& c, const PlaneElement& a) {
    PlaneElement r;
    for (const auto& [m, v] : a.t_) r.add_term(m, c * v);
    return r;
  }

  /// Product in the quantum plane: (x^a y^b)(x^c y^d) = q^{-bc} x^{a+c} y^{b+d}.
  friend PlaneElement operator*(const PlaneElement& a, const PlaneElement& b) {
    PlaneElement r;
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) {
        Scalar c = ca * cb * Scalar::q_power(-static_cast<long long>(ma.j) * mb.i);
        r.add_term({ma.i + mb.i, ma.j + mb.j}, c);
      }
    return r;
  }

  /// Terms print highest monomial first, with spaced separators.
  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      const auto& [m, c] = *it;
      bool neg = c.num().lead() < 0;
      Scalar a = neg ? -c : c;
      std::string mono;
      if (m.i == 1)
        mono = "x";
      else if (m.i > 1)
        mono = "x^" + std::to_string(m.i);
      if (m.j >= 1) {
        if (!mono.empty()) mono += "*";
        mono += (m.j == 1) ? "y" : "y^" + std::to_string(m.j);
      }
      std::string body;
      if (mono.empty())
        body = scalar_atom(a);
      else if (a.is_one())
        body = mono;
      else
        body = scalar_atom(a) + "*" + mono;
      if (out.empty())
        out = (neg ? "-" : "") + body;
      else
        out += (neg ? " - " : " + ") + body;
    }
    return out;
  }

  /// Scalar rendered so it can stand as one factor of a product.
  static std::string scalar_atom(const Scalar& c) {
    std::string s = c.to_string();
    int plus = 0;
    for (size_t k = 1; k < s.size(); ++k)
      if (s[k] == '+' || s[k] == '-') ++plus;
    bool composite = plus > 0 && s.front() != '(';
    return composite ? "(" + s + ")" : s;
  }

 private:
  std::map<PlaneMono, Scalar> t_;
};

}  // namespace qdiff
