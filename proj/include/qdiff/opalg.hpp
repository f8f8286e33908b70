#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "qdiff/eigencoeff.hpp"
#include "qdiff/qplane.hpp"

namespace qdiff {

struct IllFormedOperator : std::runtime_error {
  explicit IllFormedOperator(const std::string& what) : std::runtime_error(what) {}
};

/// Shift of monomial exponents: x^n y^m maps into the x^{n+a} y^{m+b} line.
struct Shift {
  int a = 0;
  int b = 0;
  auto operator<=>(const Shift&) const = default;
  Shift operator+(Shift o) const { return {a + o.a, b + o.b}; }
  /// Grading degree of an operator term with this shift.
  GradeVec grade() const { return {a - b, a + b}; }
  std::string to_string() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

/// Normal form of a graded operator on the quantum plane: a finite sum of
/// shift components, each acting as x^n y^m -> c(n, m) x^{n+a} y^{m+b} with c
/// an EigenCoeff. Well-formedness: components with a negative shift have
/// coefficients that vanish formally on the out-of-range rows, i.e. under
/// N := k, U := s^k for 0 <= k < -a (and the M, V mirror for b < 0).
class OperatorNF {
 public:
  OperatorNF() = default;

  /// Builds from raw components and checks well-formedness.
  static OperatorNF from_terms(std::map<Shift, EigenCoeff> t) {
    OperatorNF r;
    for (auto& [sh, c] : t)
      if (!c.is_zero()) r.t_.emplace(sh, std::move(c));
    r.validate();
    return r;
  }

  static OperatorNF single(Shift sh, EigenCoeff c) {
    OperatorNF r;
    if (!c.is_zero()) r.t_.emplace(sh, std::move(c));
    r.validate();
    return r;
  }

  /// Diagnostic carrier for coefficient fragments; skips well-formedness.
  static OperatorNF fragment(Shift sh, EigenCoeff c) { return unchecked(sh, std::move(c)); }

  // Generators. The eigencoefficient table:
  //   sigma(a,b)   shift (0,0)   U^{a+b} V^{b-a}
  //   lambda_x     shift (1,0)   1
  //   rho_y        shift (0,1)   1
  //   lambda_y     shift (0,1)   U^{-2}
  //   rho_x        shift (1,0)   V^{-2}
  //   dxb(a), a!=0 shift (-1,0)  (U^{2a}-1)/(q^a-1)
  //   dx = dxb(0)  shift (-1,0)  N
  //   tau_x        shift (0,0)   N
  // and the y-family mirrored in M, V.
  static OperatorNF identity() { return unchecked({0, 0}, EigenCoeff::one()); }
  static OperatorNF sigma(int a, int b) {
    return unchecked({0, 0}, EigenCoeff::monomial({0, 0, a + b, b - a}, Scalar(1)));
  }
  static OperatorNF lambda_x() { return unchecked({1, 0}, EigenCoeff::one()); }
  static OperatorNF rho_y() { return unchecked({0, 1}, EigenCoeff::one()); }
  static OperatorNF lambda_y() { return unchecked({0, 1}, EigenCoeff::u_power(-2)); }
  static OperatorNF rho_x() { return unchecked({1, 0}, EigenCoeff::v_power(-2)); }
  static OperatorNF dx() { return unchecked({-1, 0}, EigenCoeff::var_n()); }
  static OperatorNF dy() { return unchecked({0, -1}, EigenCoeff::var_m()); }
  static OperatorNF dxb(long long a) {
    if (a == 0) return dx();
    Scalar inv = (Scalar::q_power(a) - Scalar(1)).inv();
    EigenCoeff c = inv * (EigenCoeff::u_power(static_cast<int>(2 * a)) - EigenCoeff::one());
    return unchecked({-1, 0}, c);
  }
  static OperatorNF dyb(long long b) {
    if (b == 0) return dy();
    Scalar inv = (Scalar::q_power(b) - Scalar(1)).inv();
    EigenCoeff c = inv * (EigenCoeff::v_power(static_cast<int>(2 * b)) - EigenCoeff::one());
    return unchecked({0, -1}, c);
  }
  static OperatorNF tau_x() { return unchecked({0, 0}, EigenCoeff::var_n()); }
  static OperatorNF tau_y() { return unchecked({0, 0}, EigenCoeff::var_m()); }

  const std::map<Shift, EigenCoeff>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool operator==(const OperatorNF&) const = default;

  void add_term(Shift sh, const EigenCoeff& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(sh, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  friend OperatorNF operator+(const OperatorNF& a, const OperatorNF& b) {
    OperatorNF r = a;
    for (const auto& [sh, c] : b.t_) r.add_term(sh, c);
    return r;
  }
  friend OperatorNF operator-(const OperatorNF& a, const OperatorNF& b) {
    OperatorNF r = a;
    for (const auto& [sh, c] : b.t_) r.add_term(sh, -c);
    return r;
  }
  OperatorNF operator-() const {
    OperatorNF r;
    for (const auto& [sh, c] : t_) r.t_.emplace(sh, -c);
    return r;
  }
  friend OperatorNF operator*(const Scalar& c, const OperatorNF& a) {
    OperatorNF r;
    if (c.is_zero()) return r;
    for (const auto& [sh, v] : a.t_) r.t_.emplace(sh, c * v);
    return r;
  }

  /// Composition: (f o g)(r) = f(g(r)). Shifts add; the outer coefficient is
  /// twisted by the inner shift before multiplying.
  friend OperatorNF compose(const OperatorNF& f, const OperatorNF& g) {
    OperatorNF r;
    for (const auto& [sg, cg] : g.t_)
      for (const auto& [sf, cf] : f.t_) r.add_term(sf + sg, cf.subst_shift(sg.a, sg.b) * cg);
    return r;
  }

  OperatorNF pow(unsigned e) const {
    OperatorNF r = identity();
    for (unsigned i = 0; i < e; ++i) r = compose(r, *this);
    return r;
  }

  PlaneElement apply(const PlaneElement& p) const {
    PlaneElement out;
    for (const auto& [sh, c] : t_)
      for (const auto& [mono, pc] : p.terms()) {
        Scalar v = c.eval(mono.i, mono.j) * pc;
        if (v.is_zero()) continue;
        int ni = mono.i + sh.a, nj = mono.j + sh.b;
        if (ni < 0 || nj < 0)
          throw IllFormedOperator("operator maps x^" + std::to_string(mono.i) + "y^" +
                                  std::to_string(mono.j) + " outside the plane");
        out.add_term({ni, nj}, v);
      }
    return out;
  }

  bool membership_d0() const {
    for (const auto& [sh, c] : t_)
      if (sh.a < 0 || sh.b < 0 || !c.nm_free()) return false;
    return true;
  }
  /// Membership in the subalgebra generated by lambda_x and the x-derivations.
  bool membership_dx() const {
    for (const auto& [sh, c] : t_)
      if (sh.b != 0 || !c.mv_free()) return false;
    return true;
  }
  bool membership_dy() const {
    for (const auto& [sh, c] : t_)
      if (sh.a != 0 || !c.nu_free()) return false;
    return true;
  }

  void validate() const {
    for (const auto& [sh, c] : t_) {
      for (int k = 0; k < -sh.a; ++k)
        if (!c.subst_n(k).is_zero())
          throw IllFormedOperator("coefficient at shift " + sh.to_string() +
                                  " does not vanish on the row N=" + std::to_string(k));
      for (int k = 0; k < -sh.b; ++k)
        if (!c.subst_m(k).is_zero())
          throw IllFormedOperator("coefficient at shift " + sh.to_string() +
                                  " does not vanish on the column M=" + std::to_string(k));
    }
  }

  /// Canonical dump: one "shift=(a,b); coeff=..." record per component.
  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [sh, c] : t_) {
      if (!out.empty()) out += "\n";
      out += "shift=" + sh.to_string() + "; coeff=" + c.to_string();
    }
    return out;
  }

 private:
  static OperatorNF unchecked(Shift sh, EigenCoeff c) {
    OperatorNF r;
    if (!c.is_zero()) r.t_.emplace(sh, std::move(c));
    return r;
  }
  std::map<Shift, EigenCoeff> t_;
};

/// Graded bracket [f, g]_tw = f g - beta(tw, deg g_i) g_i f, summed over the
/// homogeneous (single-shift) components g_i of g.
inline OperatorNF bracket_g(const OperatorNF& f, const OperatorNF& g, GradeVec tw) {
  OperatorNF r;
  for (const auto& [sh, c] : g.terms()) {
    OperatorNF part = OperatorNF::single(sh, c);
    r = r + compose(f, part) - bicharacter(tw, sh.grade()) * compose(part, f);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Tensor factorization into x-side and y-side factors.

struct FactorPair {
  OperatorNF x_part;
  OperatorNF y_part;
};

struct FactorizationObstruction {
  Shift shift;
  EigenCoeff offending;
  std::string detail;
};

using FactorizeResult = std::variant<std::vector<FactorPair>, FactorizationObstruction>;

/// Splits each component into sum_k f_k(N,U) g_k(M,V) by collecting the
/// x-parts attached to distinct y-monomials and reducing them to a basis.
/// For a well-formed input both factor families inherit the boundary
/// vanishing; the obstruction branch reports any component where they do not.
inline FactorizeResult tensor_factorize(const OperatorNF& op) {
  std::vector<FactorPair> out;
  struct XKey {
    int n, u;
    auto operator<=>(const XKey&) const = default;
  };
  struct YKey {
    int m, v;
    auto operator<=>(const YKey&) const = default;
  };
  for (const auto& [sh, coeff] : op.terms()) {
    // Rows of the coefficient, one per y-monomial.
    std::map<YKey, std::map<XKey, Scalar>> rows;
    for (const auto& [k, c] : coeff.terms()) rows[{k.m, k.v}][{k.n, k.u}] = c;

    struct BasisRow {
      XKey pivot;
      std::map<XKey, Scalar> row;      // pivot entry normalized to 1
      std::map<YKey, Scalar> grouped;  // accumulated y-side combination
    };
    std::vector<BasisRow> basis;
    for (const auto& [ykey, row0] : rows) {
      std::map<XKey, Scalar> row = row0;
      for (auto& b : basis) {
        auto it = row.find(b.pivot);
        if (it == row.end()) continue;
        Scalar alpha = it->second;
        for (const auto& [xk, bc] : b.row) {
          auto jt = row.try_emplace(xk, Scalar(0)).first;
          jt->second -= alpha * bc;
          if (jt->second.is_zero()) row.erase(jt);
        }
        b.grouped[ykey] = b.grouped.count(ykey) ? b.grouped[ykey] + alpha : alpha;
      }
      if (row.empty()) continue;
      XKey pivot = row.begin()->first;
      Scalar pv = row.begin()->second;
      for (auto& [xk, c] : row) c /= pv;
      basis.push_back({pivot, std::move(row), {{ykey, pv}}});
    }

    for (const auto& b : basis) {
      // Rescale so the y-factor is monic at its largest monomial.
      Scalar gamma = b.grouped.rbegin()->second;
      EigenCoeff fx, gy;
      for (const auto& [xk, c] : b.row) fx.add_term({xk.n, 0, xk.u, 0}, c * gamma);
      for (const auto& [yk, c] : b.grouped) gy.add_term({0, yk.m, 0, yk.v}, c / gamma);
      try {
        out.push_back({OperatorNF::single({sh.a, 0}, fx), OperatorNF::single({0, sh.b}, gy)});
      } catch (const IllFormedOperator& e) {
        return FactorizationObstruction{sh, fx + gy, e.what()};
      }
    }
  }
  return out;
}

inline OperatorNF recombine_factors(const std::vector<FactorPair>& fs) {
  OperatorNF r;
  for (const auto& f : fs) r = r + compose(f.x_part, f.y_part);
  return r;
}

// ---------------------------------------------------------------------------
// First-order decomposition.

struct FirstOrderParts {
  OperatorNF c0, cx, cy, cxb, cyb;
};

struct NotFirstOrder {
  std::string reason;
  OperatorNF witness;
};

using FirstOrderResult = std::variant<FirstOrderParts, NotFirstOrder>;

/// Recombination under the left-module convention:
/// c0 + cx dx + cy dy + cxb dxb(1) + cyb dyb(1), coefficients composed on the
/// left of the derivations.
inline OperatorNF recombine_first_order(const FirstOrderParts& p) {
  return p.c0 + compose(p.cx, OperatorNF::dx()) + compose(p.cy, OperatorNF::dy()) +
         compose(p.cxb, OperatorNF::dxb(1)) + compose(p.cyb, OperatorNF::dyb(1));
}

namespace detail {

/// Exact division of a Laurent polynomial (exponent -> coefficient) by
/// (X^2 - 1); nullopt when the division is inexact.
inline std::optional<std::map<int, Scalar>> div_x2_minus_1(const std::map<int, Scalar>& lp) {
  std::map<int, Scalar> quo;
  if (lp.empty()) return quo;
  int lo = lp.begin()->first, hi = lp.rbegin()->first;
  int deg = hi - lo;
  if (deg < 2) return std::nullopt;
  std::vector<Scalar> rem(static_cast<size_t>(deg) + 1, Scalar(0));
  for (const auto& [e, c] : lp) rem[static_cast<size_t>(e - lo)] = c;
  std::vector<Scalar> q(static_cast<size_t>(deg) - 1, Scalar(0));
  for (int i = deg; i >= 2; --i) {
    Scalar c = rem[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    q[static_cast<size_t>(i - 2)] = c;
    rem[static_cast<size_t>(i)] = Scalar(0);
    rem[static_cast<size_t>(i - 2)] += c;
  }
  if (!rem[0].is_zero() || !rem[1].is_zero()) return std::nullopt;
  for (size_t i = 0; i < q.size(); ++i)
    if (!q[i].is_zero()) quo[static_cast<int>(i) + lo] = q[i];
  return quo;
}

}  // namespace detail

/// Splits a first-order operator as c0 + cx dx + cy dy + cxb dxb(1) + cyb
/// dyb(1) with order-zero coefficients (left convention), or reports the
/// obstructing part. The N-linear monomials determine cx, the M-linear ones
/// cy; components at shift a = -1 (resp. b = -1) are divided by the dxb(1)
/// (resp. dyb(1)) eigencoefficient; what remains must be of order zero.
inline FirstOrderResult first_order_decompose(const OperatorNF& op) {
  OperatorNF cx, cy, cxb, cyb, c0;
  std::map<Shift, EigenCoeff> chars;
  for (const auto& [sh, coeff] : op.terms()) {
    for (const auto& [k, c] : coeff.terms()) {
      if (k.n == 0 && k.m == 0) {
        chars.try_emplace(sh, EigenCoeff{}).first->second.add_term(k, c);
      } else if (k.n == 1 && k.m == 0) {
        if (sh.a + 1 < 0 || sh.b < 0)
          return NotFirstOrder{"N-linear part at shift " + sh.to_string() +
                                   " has no order-zero cofactor",
                               OperatorNF::fragment(sh, EigenCoeff::monomial(k, c))};
        cx.add_term({sh.a + 1, sh.b},
                    EigenCoeff::monomial({0, 0, k.u, k.v}, c * Scalar::s_power(k.u)));
      } else if (k.n == 0 && k.m == 1) {
        if (sh.a < 0 || sh.b + 1 < 0)
          return NotFirstOrder{"M-linear part at shift " + sh.to_string() +
                                   " has no order-zero cofactor",
                               OperatorNF::fragment(sh, EigenCoeff::monomial(k, c))};
        cy.add_term({sh.a, sh.b + 1},
                    EigenCoeff::monomial({0, 0, k.u, k.v}, c * Scalar::s_power(k.v)));
      } else {
        return NotFirstOrder{"coefficient monomial of total N,M-degree > 1",
                             OperatorNF::fragment(sh, EigenCoeff::monomial(k, c))};
      }
    }
  }
  Scalar qm1 = Scalar::q() - Scalar(1);
  for (const auto& [sh, chi] : chars) {
    if (sh.a >= 0 && sh.b >= 0) {
      c0.add_term(sh, chi);
      continue;
    }
    if (sh.a == -1 && sh.b >= 0) {
      // chi must be (U^2-1)/(q-1) times a Laurent polynomial, per V-monomial.
      std::map<int, std::map<int, Scalar>> by_v;
      for (const auto& [k, c] : chi.terms()) by_v[k.v][k.u] = c * qm1;
      bool ok = true;
      EigenCoeff psi;
      for (const auto& [v, lp] : by_v) {
        auto quo = detail::div_x2_minus_1(lp);
        if (!quo) {
          ok = false;
          break;
        }
        for (const auto& [u, c] : *quo)
          psi.add_term({0, 0, u, v}, c * Scalar::s_power(u));
      }
      if (ok) {
        cxb.add_term({0, sh.b}, psi);
        continue;
      }
      return NotFirstOrder{"component at shift " + sh.to_string() +
                               " is not a dxb(1) multiple",
                           OperatorNF::fragment(sh, chi)};
    }
    if (sh.b == -1 && sh.a >= 0) {
      std::map<int, std::map<int, Scalar>> by_u;
      for (const auto& [k, c] : chi.terms()) by_u[k.u][k.v] = c * qm1;
      bool ok = true;
      EigenCoeff psi;
      for (const auto& [u, lp] : by_u) {
        auto quo = detail::div_x2_minus_1(lp);
        if (!quo) {
          ok = false;
          break;
        }
        for (const auto& [v, c] : *quo)
          psi.add_term({0, 0, u, v}, c * Scalar::s_power(v));
      }
      if (ok) {
        cyb.add_term({sh.a, 0}, psi);
        continue;
      }
      return NotFirstOrder{"component at shift " + sh.to_string() +
                               " is not a dyb(1) multiple",
                           OperatorNF::fragment(sh, chi)};
    }
    return NotFirstOrder{"component shift " + sh.to_string() + " is out of first-order range",
                         OperatorNF::fragment(sh, chi)};
  }
  cx.validate();
  cy.validate();
  cxb.validate();
  cyb.validate();
  c0.validate();
  return FirstOrderParts{std::move(c0), std::move(cx), std::move(cy), std::move(cxb),
                         std::move(cyb)};
}

// ---------------------------------------------------------------------------
// Order bound by bracket descent.

/// One node of a descent certificate: a leaf is an order-zero (or zero)
/// element; an inner node records the twist g whose lambda_x and rho_y
/// brackets both descend.
struct DescentCert {
  bool leaf = true;
  GradeVec g{};
  std::vector<DescentCert> x_child;  // empty or one element
  std::vector<DescentCert> y_child;
};

struct MembershipVerdict {
  enum class Kind { Proven, Disproven, Unknown };
  Kind kind = Kind::Unknown;
  int bound = -1;
  std::vector<DescentCert> certificate;  // one tree per homogeneous component
  std::string witness;
};

namespace detail {

struct DescentSearch {
  int window;
  // Keyed by canonical dump; value records the search depth it was computed
  // at, so a failure is only trusted when the cached depth was at least as
  // generous.
  std::map<std::string, std::pair<int, std::optional<std::pair<int, DescentCert>>>> memo;

  std::vector<GradeVec> candidates(const OperatorNF& op) const {
    std::set<int> us, vs;
    for (const auto& [sh, c] : op.terms()) {
      (void)sh;
      for (const auto& [k, sc] : c.terms()) {
        (void)sc;
        us.insert(k.u);
        vs.insert(k.v);
      }
    }
    // A twist g annihilates the character level (B, D) exactly when
    // g1 + g2 = B and g2 - g1 = D, so the level pairs of the coefficient
    // enumerate every twist that can make progress. Bracketing against
    // lambda_x and rho_y never changes the U, V exponents, so this set is
    // invariant along a descent chain.
    std::set<GradeVec> gs;
    for (int b : us)
      for (int d : vs) {
        if ((b - d) % 2 != 0) continue;
        GradeVec g{(b - d) / 2, (b + d) / 2};
        if (std::abs(g.p) <= window && std::abs(g.r) <= window) gs.insert(g);
      }
    return {gs.begin(), gs.end()};
  }

  std::optional<std::pair<int, DescentCert>> descend(const OperatorNF& op, int depth) {
    if (op.is_zero() || op.membership_d0()) return std::make_pair(0, DescentCert{});
    if (depth <= 0) return std::nullopt;
    std::string key = op.to_string();
    if (auto it = memo.find(key); it != memo.end()) {
      if (it->second.second && it->second.second->first <= depth) return it->second.second;
      if (!it->second.second && it->second.first >= depth) return std::nullopt;
    }
    // All candidates are explored and the smallest certified bound kept; a
    // greedy first hit can legitimately certify a longer chain.
    std::optional<std::pair<int, DescentCert>> best;
    for (GradeVec g : candidates(op)) {
      OperatorNF bx = bracket_g(op, OperatorNF::lambda_x(), g);
      OperatorNF by = bracket_g(op, OperatorNF::rho_y(), g);
      auto rx = descend_terms(bx, depth - 1);
      if (!rx) continue;
      auto ry = descend_terms(by, depth - 1);
      if (!ry) continue;
      int bound = 1 + std::max(rx->first, ry->first);
      if (best && best->first <= bound) continue;
      DescentCert node;
      node.leaf = false;
      node.g = g;
      node.x_child.push_back(rx->second);
      node.y_child.push_back(ry->second);
      best = std::make_pair(bound, std::move(node));
      if (bound == 1) break;
    }
    memo[key] = {depth, best};
    return best;
  }

  /// Descends every homogeneous component; the certificate of a multi-term
  /// bracket result is the worst-component certificate (components are
  /// handled independently, membership is closed under sums).
  std::optional<std::pair<int, DescentCert>> descend_terms(const OperatorNF& op, int depth) {
    if (op.is_zero() || op.membership_d0()) return std::make_pair(0, DescentCert{});
    int bound = 0;
    DescentCert worst;
    for (const auto& [sh, c] : op.terms()) {
      auto r = descend(OperatorNF::single(sh, c), depth);
      if (!r) return std::nullopt;
      if (r->first >= bound) {
        bound = r->first;
        worst = r->second;
      }
    }
    return std::make_pair(bound, std::move(worst));
  }
};

}  // namespace detail

/// Sound semi-decision for the order filtration: Proven(n) certifies that the
/// operator lies in the n-th filtration layer via a chain of graded brackets
/// against lambda_x and rho_y whose twists are drawn from the coefficient's
/// character levels (bounded by the window); Unknown when the search fails.
inline MembershipVerdict order_bound_descent(const OperatorNF& op, int window) {
  detail::DescentSearch search{window, {}};
  MembershipVerdict v;
  if (op.is_zero() || op.membership_d0()) {
    v.kind = MembershipVerdict::Kind::Proven;
    v.bound = 0;
    v.certificate.assign(op.terms().size(), DescentCert{});
    return v;
  }
  int bound = 0;
  std::vector<DescentCert> certs;
  for (const auto& [sh, c] : op.terms()) {
    OperatorNF part = OperatorNF::single(sh, c);
    int depth = c.max_n_degree() + c.max_m_degree() + 2 + static_cast<int>(c.terms().size());
    auto r = search.descend(part, std::min(depth, 4 * window + 4));
    if (!r) return v;  // Unknown
    bound = std::max(bound, r->first);
    certs.push_back(r->second);
  }
  v.kind = MembershipVerdict::Kind::Proven;
  v.bound = bound;
  v.certificate = std::move(certs);
  return v;
}

/// Replays a descent certificate: checks that every leaf is order zero and
/// every inner node's brackets descend along the recorded twists within the
/// claimed bound.
inline bool verify_descent_certificate(const OperatorNF& op, const DescentCert& cert,
                                       int bound) {
  if (cert.leaf) return op.is_zero() || op.membership_d0();
  if (bound <= 0) return false;
  OperatorNF bx = bracket_g(op, OperatorNF::lambda_x(), cert.g);
  OperatorNF by = bracket_g(op, OperatorNF::rho_y(), cert.g);
  if (cert.x_child.size() != 1 || cert.y_child.size() != 1) return false;
  auto check = [&](const OperatorNF& b, const DescentCert& child) {
    if (child.leaf) return b.is_zero() || b.membership_d0();
    for (const auto& [sh, c] : b.terms())
      if (!verify_descent_certificate(OperatorNF::single(sh, c), child, bound - 1)) return false;
    return true;
  };
  return check(bx, cert.x_child[0]) && check(by, cert.y_child[0]);
}

inline bool verify_descent_certificate(const OperatorNF& op, const MembershipVerdict& v) {
  if (v.kind != MembershipVerdict::Kind::Proven) return false;
  if (op.is_zero() || op.membership_d0()) return true;
  size_t i = 0;
  for (const auto& [sh, c] : op.terms()) {
    if (i >= v.certificate.size()) return false;
    if (!verify_descent_certificate(OperatorNF::single(sh, c), v.certificate[i], v.bound))
      return false;
    ++i;
  }
  return true;
}

}  // namespace qdiff
