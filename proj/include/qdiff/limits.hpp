#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qdiff/classical.hpp"
#include "qdiff/opalg.hpp"
#include "qdiff/quantum_group.hpp"
#include "qdiff/scalar.hpp"
#include "qdiff/tseries.hpp"

namespace qdiff {

/// Raised when a value involves genuinely half-integer powers of q (odd
/// powers of its square root), which have no expansion at q = 1 + t.
struct OddHalfPower : std::runtime_error {
  explicit OddHalfPower(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a value has a pole at q = 1 that does not cancel.
struct NonSpecializable : std::runtime_error {
  explicit NonSpecializable(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

/// Exact expansion of an even polynomial in the square root of q at
/// q = 1 + t, as a dense rational coefficient vector in t.
inline std::vector<Rational> qpoly_at_one_plus_t(const SPoly& p) {
  std::vector<Rational> out(static_cast<size_t>(p.degree() / 2 + 1), Rational(0));
  if (p.is_zero()) out.assign(1, Rational(0));
  for (int e = 0; e <= p.degree(); ++e) {
    const Int& a = p.coeff(e);
    if (a == 0) continue;
    if (e % 2 != 0)
      throw OddHalfPower("value involves odd powers of the square root of q");
    int k = e / 2;
    for (int l = 0; l <= k; ++l)
      out[static_cast<size_t>(l)] += Rational(a * int_binomial(k, l));
  }
  return out;
}

inline int valuation(const std::vector<Rational>& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) return static_cast<int>(i);
  return -1;  // zero polynomial
}

}  // namespace detail

/// Laurent expansion of an exact scalar at q = 1 + t. Returns {valuation,
/// unit} with value = t^valuation * unit and unit(0) != 0; a zero scalar
/// returns {0, zero}. The unit carries order - valuation terms, enough to
/// read all t-coefficients below the truncation order.
inline std::pair<int, TSeries<Rational>> scalar_laurent(const Scalar& x, int order) {
  std::vector<Rational> nv = detail::qpoly_at_one_plus_t(x.num());
  std::vector<Rational> dv = detail::qpoly_at_one_plus_t(x.den());
  int vn = detail::valuation(nv);
  int vd = detail::valuation(dv);
  if (vn < 0) return {0, TSeries<Rational>(order)};
  int lo = vn - vd;
  int len = order - lo;
  if (len <= 0) return {0, TSeries<Rational>(order)};
  TSeries<Rational> ns(len), ds(len);
  for (int i = 0; i < len; ++i) {
    if (vn + i < static_cast<int>(nv.size())) ns.set_coeff(i, nv[static_cast<size_t>(vn + i)]);
    if (vd + i < static_cast<int>(dv.size())) ds.set_coeff(i, dv[static_cast<size_t>(vd + i)]);
  }
  return {lo, ns * ds.inverse()};
}

/// Expansion of an exact scalar at q = 1 + t, modulo t^order. Throws
/// NonSpecializable on a pole at q = 1 and OddHalfPower on odd root powers.
inline TSeries<Rational> specialize_scalar(const Scalar& x, int order) {
  auto [lo, unit] = scalar_laurent(x, order);
  if (unit.is_zero()) return TSeries<Rational>(order);
  if (lo < 0) throw NonSpecializable("value has a pole at q = 1");
  TSeries<Rational> out(order);
  for (int n = lo; n < order; ++n) out.set_coeff(n, unit.coeff(n - lo));
  return out;
}

namespace detail {

/// Substitute first variable += dn and second variable += dm into a
/// bivariate rational polynomial.
inline UVPoly shift_symbol(const UVPoly& p, int dn, int dm) {
  UVPoly out;
  for (const auto& [mono, c] : p.terms()) {
    int i = mono.first, j = mono.second;
    for (int k = 0; k <= i; ++k) {
      Int bi = int_binomial(i, k);
      Int dnp = 1;
      for (int r = 0; r < i - k; ++r) dnp *= dn;
      for (int l = 0; l <= j; ++l) {
        Int bj = int_binomial(j, l);
        Int dmp = 1;
        for (int r = 0; r < j - l; ++r) dmp *= dm;
        out.add_term(k, l, c * Rational(bi * bj * dnp * dmp));
      }
    }
  }
  return out;
}

/// Exact division of a bivariate polynomial by (first variable - root);
/// the dividend must vanish identically at that root.
inline UVPoly div_linear_first(const UVPoly& p, long long root) {
  int dmax = 0;
  for (const auto& [mono, c] : p.terms()) dmax = std::max(dmax, mono.first);
  std::vector<std::map<int, Rational>> cx(static_cast<size_t>(dmax) + 1);
  for (const auto& [mono, c] : p.terms()) cx[static_cast<size_t>(mono.first)][mono.second] = c;
  UVPoly out;
  std::map<int, Rational> carry;  // quotient coefficient q_i as a poly in the second variable
  for (int i = dmax; i >= 1; --i) {
    std::map<int, Rational> qi = cx[static_cast<size_t>(i)];
    for (const auto& [yd, c] : carry) qi[yd] += Rational(root) * c;
    for (const auto& [yd, c] : qi) out.add_term(i - 1, yd, c);
    carry = std::move(qi);
  }
  std::map<int, Rational> rem = cx[0];
  for (const auto& [yd, c] : carry) rem[yd] += Rational(root) * c;
  for (const auto& [yd, c] : rem)
    if (c != 0) throw std::logic_error("inexact division of a degree symbol");
  return out;
}

inline UVPoly swap_symbol(const UVPoly& p) {
  UVPoly out;
  for (const auto& [mono, c] : p.terms()) out.add_term(mono.second, mono.first, c);
  return out;
}

inline UVPoly div_linear_second(const UVPoly& p, long long root) {
  return swap_symbol(div_linear_first(swap_symbol(p), root));
}

/// Realize a diagonal symbol in the two degree readings as a differential
/// operator: first variable -> u Du, second -> v Dv.
inline WeylElement symbol_to_weyl(const UVPoly& p) {
  static const WeylElement wu = WeylElement::monomial({1, 0, 1, 0});
  static const WeylElement wv = WeylElement::monomial({0, 1, 0, 1});
  WeylElement out;
  for (const auto& [mono, c] : p.terms())
    out = out + c * (wu.pow(static_cast<unsigned>(mono.first)) *
                     wv.pow(static_cast<unsigned>(mono.second)));
  return out;
}

}  // namespace detail

/// Classical limit of a difference operator at q = 1 + t, as a polynomial
/// differential operator with coefficients modulo t^order. Each normal-form
/// term contributes a diagonal symbol (accumulated as a Laurent expansion so
/// poles of individual coefficients may cancel) composed with multiplication
/// or plain derivative shifts.
inline TSeries<WeylElement> nu(const OperatorNF& op, int order) {
  TSeries<WeylElement> out(order);
  auto terms = op.terms();
  for (const auto& [sh, co] : terms) {
    // t-exponent -> bivariate symbol in the two degree readings (n, m).
    std::map<int, UVPoly> sym;
    for (const auto& [mono, sc] : co.terms()) {
      if (mono.u % 2 != 0 || mono.v % 2 != 0)
        throw OddHalfPower("operator twist lies outside the even sublattice");
      auto [lo, unit] = scalar_laurent(sc, order);
      if (unit.is_zero()) continue;
      int len = order - lo;
      int iu = mono.u / 2, jv = mono.v / 2;
      // (1+t)^{n*iu} has t^l coefficient binom(n*iu, l), a polynomial in n.
      std::vector<UVPoly> fu(static_cast<size_t>(len)), fv(static_cast<size_t>(len));
      UVPoly nlin = UVPoly::monomial(1, 0, Rational(iu));
      UVPoly mlin = UVPoly::monomial(0, 1, Rational(jv));
      for (int l = 0; l < len; ++l) {
        fu[static_cast<size_t>(l)] = eval_poly(CommPoly::binomial(l), nlin);
        fv[static_cast<size_t>(l)] = eval_poly(CommPoly::binomial(l), mlin);
      }
      UVPoly base = UVPoly::monomial(mono.n, mono.m);
      for (int e = 0; e < len; ++e) {
        if (unit.coeff(e) == 0) continue;
        UVPoly scaled = unit.coeff(e) * base;
        for (int l1 = 0; lo + e + l1 < order; ++l1) {
          if (fu[static_cast<size_t>(l1)].is_zero()) continue;
          UVPoly part = scaled * fu[static_cast<size_t>(l1)];
          for (int l2 = 0; lo + e + l1 + l2 < order; ++l2) {
            if (fv[static_cast<size_t>(l2)].is_zero()) continue;
            UVPoly add = part * fv[static_cast<size_t>(l2)];
            auto [it, fresh] = sym.try_emplace(lo + e + l1 + l2, add);
            if (!fresh) it->second = it->second + add;
          }
        }
      }
    }
    for (const auto& [e, p] : sym)
      if (e < 0 && !p.is_zero())
        throw NonSpecializable("operator coefficient has a pole at q = 1");

    WeylElement xp = sh.a >= 0 ? WeylElement::monomial({sh.a, 0, 0, 0})
                               : WeylElement::monomial({0, 0, -sh.a, 0});
    WeylElement yp = sh.b >= 0 ? WeylElement::monomial({0, sh.b, 0, 0})
                               : WeylElement::monomial({0, 0, 0, -sh.b});
    WeylElement shift_part = xp * yp;
    for (const auto& [e, p] : sym) {
      if (e < 0 || e >= order || p.is_zero()) continue;
      UVPoly c = p;
      // Divide out the falling factorials the derivative shifts produce,
      // then re-read the symbol at the target degrees.
      for (long long r = 0; r < -sh.a; ++r) c = detail::div_linear_first(c, r);
      for (long long r = 0; r < -sh.b; ++r) c = detail::div_linear_second(c, r);
      UVPoly d = detail::shift_symbol(c, -sh.a, -sh.b);
      out.set_coeff(e, out.coeff(e) + detail::symbol_to_weyl(d) * shift_part);
    }
  }
  return out;
}

namespace detail {

/// Generator images of the classical-limit map on the quantized algebra,
/// at the requested truncation order.
struct MuImages {
  TSeries<ClassicalElement> e_img;
  TSeries<ClassicalElement> f_img;

  explicit MuImages(int order)
      : e_img(order), f_img(order) {
    using CE = ClassicalElement;
    TSeries<Rational> half_inv =
        (TSeries<Rational>::one(order) + q_power_series(Rational(1), order)).inverse();
    CE hdiff = Rational(1, 2) * (CE::hb() - CE::h());  // (hb - h) / 2
    CE hsum = Rational(1, 2) * (CE::h() + CE::hb());   // (h + hb) / 2
    TSeries<CE> one = TSeries<CE>::one(order);
    e_img = scale_series(
        half_inv,
        q_power_series(CE::h(), order) * TSeries<CE>::constant(CE::e(), order) *
            p_series(hdiff, order) *
            (one + q_power_series(Rational(-1) * hdiff, order)));
    f_img = scale_series(
        half_inv,
        q_power_series(Rational(-1) * CE::h(), order) *
            TSeries<CE>::constant(CE::f(), order) * p_series(hsum, order) *
            (one + q_power_series(Rational(-1) * hsum, order)));
  }
};

}  // namespace detail

/// Classical limit of an element of the quantized enveloping algebra at
/// q = 1 + t, with values in the classical enveloping algebra (extended by
/// the central degree reading) modulo t^order. Per-term poles are expanded
/// as Laurent series so they may cancel across terms.
inline TSeries<ClassicalElement> mu(const UqElement& x, int order) {
  using CE = ClassicalElement;
  std::map<int, CE> acc;  // t-exponent -> coefficient
  for (const auto& [m, sc] : x.terms()) {
    auto [lo, unit] = scalar_laurent(sc, order);
    if (unit.is_zero()) continue;
    int wlen = order - lo;
    detail::MuImages img(wlen);
    TSeries<CE> word = q_power_series(Rational(m.b) * CE::h(), wlen);
    for (long long i = 0; i < m.a; ++i) word = img.f_img * word;
    for (long long i = 0; i < m.c; ++i) word = word * img.e_img;
    for (int e = 0; e < wlen; ++e) {
      CE acc_e{};
      for (int k = 0; k <= e; ++k) acc_e = acc_e + unit.coeff(k) * word.coeff(e - k);
      if (acc_e.is_zero()) continue;
      auto [it, fresh] = acc.try_emplace(lo + e, acc_e);
      if (!fresh) it->second = it->second + acc_e;
    }
  }
  TSeries<CE> out(order);
  for (const auto& [e, c] : acc) {
    if (c.is_zero()) continue;
    if (e < 0) throw NonSpecializable("coefficient has a pole at q = 1");
    if (e < order) out.set_coeff(e, out.coeff(e) + c);
  }
  return out;
}

/// Apply the polynomial realization coefficient-wise to a series of
/// classical enveloping algebra elements.
inline TSeries<WeylElement> psi_series(const TSeries<ClassicalElement>& x) {
  TSeries<WeylElement> r(x.order());
  for (int n = 0; n < x.order(); ++n) r.set_coeff(n, psi(x.coeff(n)));
  return r;
}

/// The two routes from the quantized algebra to polynomial differential
/// operators agree modulo t^order: the classical limit of the difference
/// operator realization equals the polynomial realization of the classical
/// limit.
inline bool uq_diagram_commutes(const UqElement& x, int order) {
  return nu(phi(x), order) == psi_series(mu(x, order));
}

/// Same diagram for the grading twists along the central direction: the
/// twist by (0, 2n) specializes to the q-power of n times the total degree.
inline bool sigma_diagram_commutes(int n, int order) {
  TSeries<WeylElement> lhs = nu(OperatorNF::sigma(0, 2 * n), order);
  TSeries<WeylElement> rhs =
      psi_series(q_power_series(Rational(n) * ClassicalElement::hb(), order));
  return lhs == rhs;
}

}  // namespace qdiff
