#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "rpa/restricted.hpp"

namespace rpa {

/// Element of the Kahler differential module of a polynomial Poisson
/// algebra, written on the free basis: omega = sum_i a_i dx_i.
class KahlerForm {
 public:
  explicit KahlerForm(AlgebraPtr alg);
  KahlerForm(AlgebraPtr alg, std::vector<Poly> coeffs);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<Poly>& coeffs() const { return coeffs_; }
  const Poly& coeff(uint32_t i) const { return coeffs_[i]; }
  bool is_zero() const;

  KahlerForm operator+(const KahlerForm& o) const;
  KahlerForm operator-(const KahlerForm& o) const;
  KahlerForm operator-() const;
  KahlerForm operator*(const Scalar& c) const;

  /// Module action f * omega.
  KahlerForm scaled_by(const Poly& f) const;

  bool operator==(const KahlerForm& o) const;
  std::string str() const;

 private:
  void check(const KahlerForm& o) const {
    if (alg_ != o.alg_)
      throw std::invalid_argument("forms over different algebras");
  }

  AlgebraPtr alg_;
  std::vector<Poly> coeffs_;
};

/// d f = sum_i (df/dx_i) dx_i.
KahlerForm differential(const PoissonElement& f);

/// Bilinear extension of [x du, y dv] = x{u,y} dv + y{x,v} du + xy d{u,v}
/// over the generator decomposition.
KahlerForm form_bracket(const KahlerForm& w, const KahlerForm& e);

/// alpha(sum a_i dx_i)(z) = sum a_i {x_i, z}.
PoissonElement anchor_apply(const KahlerForm& w, const PoissonElement& z);

/// Restricted Lie-Rinehart structure on (A, Omega): the base restricted
/// Poisson algebra plus the form p-map. The p-map on a pure term is
///   (a dx_i)^[p] = a^p d(pp(x_i)) + D^{p-1}(a) dx_i,  D = alpha(a dx_i),
/// and sums extend through the index-ordered fold with Lambda_p computed in
/// the form Lie algebra.
struct LieRinehartStructure {
  RestrictedPoissonAlgebra base;
  std::function<KahlerForm(const KahlerForm&)> form_pmap;
};

/// The canonical structure; requires a polynomial base (no quotient), where
/// the Kahler differentials are free.
LieRinehartStructure make_lie_rinehart(const RestrictedPoissonAlgebra& A);

KahlerForm form_pmap(const RestrictedPoissonAlgebra& A, const KahlerForm& w);

/// Suite: form Lie axioms, the module identity
/// [X, aY] = a[X,Y] + alpha(X)(a) Y, the anchor as a restricted Lie
/// homomorphism, the p-map module identity on random (a, X), and the
/// operator-level identity behind the pure-term formula.
Report verify_lie_rinehart(const LieRinehartStructure& S, uint64_t samples,
                           uint64_t seed);

KahlerForm random_form(const AlgebraPtr& alg, Rng& rng);

}  // namespace rpa
