#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qdiff/classical.hpp"
#include "qdiff/limits.hpp"
#include "qdiff/qplane.hpp"
#include "qdiff/quantum_group.hpp"
#include "qdiff/scalar.hpp"

namespace qdiff {

/// Dense square matrix over the exact scalar field.
class SMatrix {
 public:
  explicit SMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {
    if (dim <= 0) throw std::invalid_argument("matrix dimension must be positive");
  }

  static SMatrix identity(int dim) {
    SMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = Scalar(1);
    return m;
  }

  int dim() const { return dim_; }
  Scalar& at(int r, int c) { return a_.at(static_cast<size_t>(r) * dim_ + c); }
  const Scalar& at(int r, int c) const {
    return a_.at(static_cast<size_t>(r) * dim_ + c);
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!(x == Scalar(0))) return false;
    return true;
  }
  bool operator==(const SMatrix&) const = default;

  friend SMatrix operator+(const SMatrix& x, const SMatrix& y) {
    x.match(y);
    SMatrix r(x.dim_);
    for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
    return r;
  }
  friend SMatrix operator-(const SMatrix& x, const SMatrix& y) {
    x.match(y);
    SMatrix r(x.dim_);
    for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
    return r;
  }
  friend SMatrix operator*(const Scalar& c, const SMatrix& x) {
    SMatrix r(x.dim_);
    for (size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = c * x.a_[i];
    return r;
  }
  friend SMatrix operator*(const SMatrix& x, const SMatrix& y) {
    x.match(y);
    SMatrix r(x.dim_);
    for (int i = 0; i < x.dim_; ++i)
      for (int k = 0; k < x.dim_; ++k) {
        const Scalar& xik = x.at(i, k);
        if (xik == Scalar(0)) continue;
        for (int j = 0; j < x.dim_; ++j) r.at(i, j) += xik * y.at(k, j);
      }
    return r;
  }

  SMatrix pow(unsigned n) const {
    SMatrix r = identity(dim_);
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
  }

 private:
  void match(const SMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("matrix dimensions differ");
  }
  int dim_ = 0;
  std::vector<Scalar> a_;
};

/// Matrix of an element of the quantized algebra on the span of the
/// degree-n monomials x^{n-k} y^k, k = 0..n, in that basis order. Throws if
/// the action leaves the span.
inline SMatrix action_matrix(const UqElement& g, int n) {
  SMatrix m(n + 1);
  for (int k = 0; k <= n; ++k) {
    PlaneElement img = uq_act(g, PlaneElement::monomial(n - k, k));
    for (const auto& [mono, c] : img.terms()) {
      if (mono.i + mono.j != n)
        throw std::logic_error("action left the degree-n component");
      m.at(mono.j, k) += c;
    }
  }
  return m;
}

/// The degree-n component of the plane as a module: action matrices of the
/// four standard generators.
struct WeightModule {
  int n;
  SMatrix k, kinv, e, f;
};

inline WeightModule make_weight_module(int n) {
  if (n < 0) throw std::invalid_argument("module degree must be nonnegative");
  return {n, action_matrix(UqElement::k(), n), action_matrix(UqElement::kinv(), n),
          action_matrix(UqElement::e(), n), action_matrix(UqElement::f(), n)};
}

struct ModuleCheck {
  std::string name;
  bool pass = false;
};

struct ModuleReport {
  int n = 0;
  int dim = 0;
  std::vector<ModuleCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Structural checks on the degree-n module: the action stays in the span,
/// K has the expected weight spectrum, E and F are nilpotent ladders of
/// exact index n+1, the defining relations hold as matrices, the Casimir
/// element acts by the expected scalar, and the entries specialize at
/// q = 1 + t to the classical module structure.
inline ModuleReport run_module_checks(int n) {
  ModuleReport rep;
  rep.n = n;
  rep.dim = n + 1;

  bool stable = true;
  SMatrix mk(n + 1), mkinv(n + 1), me(n + 1), mf(n + 1);
  try {
    WeightModule wm = make_weight_module(n);
    mk = wm.k;
    mkinv = wm.kinv;
    me = wm.e;
    mf = wm.f;
  } catch (const std::logic_error&) {
    stable = false;
  }
  rep.checks.push_back({"stability", stable});
  if (!stable) return rep;

  SMatrix id = SMatrix::identity(n + 1);

  SMatrix diag(n + 1);
  for (int k = 0; k <= n; ++k) diag.at(k, k) = Scalar::q_power(n - 2 * k);
  rep.checks.push_back({"weight-spectrum", mk == diag});

  bool ladder_e = me.pow(static_cast<unsigned>(n) + 1).is_zero() &&
                  !me.pow(static_cast<unsigned>(n)).is_zero();
  bool ladder_f = mf.pow(static_cast<unsigned>(n) + 1).is_zero() &&
                  !mf.pow(static_cast<unsigned>(n)).is_zero();
  rep.checks.push_back({"raising-ladder", ladder_e});
  rep.checks.push_back({"lowering-ladder", ladder_f});

  Scalar q2 = Scalar::q_power(2);
  Scalar qm2 = Scalar::q_power(-2);
  Scalar qq = Scalar::q() - Scalar::q_power(-1);  // q - q^{-1}
  bool rel = mk * mkinv == id && mk * me == q2 * (me * mk) &&
             mk * mf == qm2 * (mf * mk) &&
             me * mf - mf * me == (Scalar(1) / qq) * (mk - mkinv);
  rep.checks.push_back({"matrix-relations", rel});

  SMatrix cas = mf * me + (Scalar(1) / (qq * qq)) *
                              (Scalar::q() * mk + Scalar::q_power(-1) * mkinv);
  Scalar expected =
      (Scalar::q_power(n + 1) + Scalar::q_power(-(n + 1))) / (qq * qq);
  rep.checks.push_back({"casimir-scalar", cas == expected * id});

  // Classical limit: at t = 0 the K matrix is the identity, its first-order
  // part reads the classical weight n - 2k, and E, F become the actions of
  // the polynomial realization on degree-n monomials.
  bool classical = true;
  try {
    for (int r = 0; r <= n && classical; ++r)
      for (int c = 0; c <= n && classical; ++c) {
        TSeries<Rational> sk = specialize_scalar(mk.at(r, c), 2);
        Rational k0 = r == c ? Rational(1) : Rational(0);
        Rational k1 = r == c ? Rational(n - 2 * r) : Rational(0);
        if (sk.coeff(0) != k0 || sk.coeff(1) != k1) classical = false;
      }
    WeylElement pe = psi(ClassicalElement::e());
    WeylElement pf = psi(ClassicalElement::f());
    for (int k = 0; k <= n && classical; ++k) {
      UVPoly base = UVPoly::monomial(n - k, k);
      UVPoly img_e, img_f;
      for (int r = 0; r <= n; ++r) {
        Rational e0 = specialize_scalar(me.at(r, k), 1).coeff(0);
        Rational f0 = specialize_scalar(mf.at(r, k), 1).coeff(0);
        if (e0 != 0) img_e.add_term(n - r, r, e0);
        if (f0 != 0) img_f.add_term(n - r, r, f0);
      }
      if (pe.apply(base) != img_e || pf.apply(base) != img_f) classical = false;
    }
  } catch (const std::exception&) {
    classical = false;
  }
  rep.checks.push_back({"classical-limit", classical});

  return rep;
}

}  // namespace qdiff
