#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "rpa/poisson.hpp"

namespace rpa {

/// Coefficients s_1..s_{p-1} of the expansion of ad_{tx+y}^{p-1}(x) in the
/// auxiliary parameter t (s_i is the t^{i-1} coefficient). Works for any
/// Lie structure given by bracket/add callables: p-1 sequential
/// applications of t*ad_x + ad_y to a coefficient vector, so the cost is
/// O(p^2) brackets instead of the 2^{p-2} nested-bracket enumeration.
template <typename T, typename BracketFn, typename AddFn>
std::vector<T> jacobson_s_coeffs(const T& x, const T& y, uint32_t p,
                                 const T& zero, BracketFn br, AddFn add) {
  std::vector<T> c(p, zero);  // t-degrees 0..p-1
  c[0] = x;
  for (uint32_t step = 0; step + 1 < p; ++step) {
    std::vector<T> next(p, zero);
    for (uint32_t k = 0; k < p; ++k) {
      T term = br(y, c[k]);
      if (k > 0) term = add(term, br(x, c[k - 1]));
      next[k] = term;
    }
    c = next;
  }
  // s_i lives at t-degree i-1; the t^{p-1} coefficient is ad_x^{p-1}(x) = 0.
  return std::vector<T>(c.begin(), c.begin() + (p - 1));
}

/// Lambda via the s coefficients: sum of s_i / i.
template <typename T, typename BracketFn, typename AddFn, typename ScaleFn>
T jacobson_lambda(const T& x, const T& y, PrimeChar p, const T& zero,
                  BracketFn br, AddFn add, ScaleFn scale) {
  auto s = jacobson_s_coeffs(x, y, p.value(), zero, br, add);
  T acc = zero;
  for (uint32_t i = 1; i < p.value(); ++i)
    acc = add(acc, scale(s[i - 1], Scalar(i, p).inverse()));
  return acc;
}

/// s_i(x, y) for elements of a Poisson algebra, 1 <= i <= p-1.
PoissonElement s_coeff(const PoissonElement& x, const PoissonElement& y,
                       uint32_t i);

/// Jacobson's additivity defect Lambda_p(x, y); symmetric, and zero when
/// {x, y} = 0.
PoissonElement lambda_p(const PoissonElement& x, const PoissonElement& y);

/// The multiplicativity defect Phi_p(x, y) =
///   (x^p + y^p) Lambda_p(x,y) - (Lambda_p(x^2,y^2)
///                                + Lambda_p(x^2+y^2, 2xy)) / 2.
PoissonElement phi_p(const PoissonElement& x, const PoissonElement& y);

/// The alternative form Phi'_p(x, y) =
///   Lambda_p((x+y)^2, -(x-y)^2) / 4
///   + ((x^p + y^p) Lambda_p(x,y) - (x^p - y^p) Lambda_p(x,-y)) / 2;
/// agrees with phi_p identically.
PoissonElement phi_p_prime(const PoissonElement& x, const PoissonElement& y);

/// Restriction map evaluator.
class PMapBase {
 public:
  virtual ~PMapBase() = default;
  virtual const AlgebraPtr& algebra() const = 0;
  virtual Poly eval_poly(const Poly& f) const = 0;

  PoissonElement eval(const PoissonElement& f) const {
    return algebra()->element(eval_poly(f.poly()));
  }
};

using PMapPtr = std::shared_ptr<const PMapBase>;

/// p-map defined on the monomial basis and extended to sums by the
/// deterministic graded-lex left fold
///   pp(g + c x^I) = pp(g) + c^p pp(x^I) + Lambda_p(g, c x^I);
/// well-definedness (fold-order independence) is a tested property.
/// The monomial cache is the only mutable state and is serialized.
class FoldPMap : public PMapBase {
 public:
  explicit FoldPMap(AlgebraPtr alg) : alg_(std::move(alg)) {}

  const AlgebraPtr& algebra() const override { return alg_; }
  Poly eval_poly(const Poly& f) const override;

  /// Cached value on a single monomial.
  Poly monomial_value(const Monomial& m) const;

 protected:
  virtual Poly monomial_rule(const Monomial& m) const = 0;

  AlgebraPtr alg_;

 private:
  mutable std::map<Monomial, Poly> cache_;
  mutable std::mutex cache_mu_;
};

/// The inductive p-map on a polynomial Poisson algebra: pp(1) = 0,
/// pp(x_i) = gamma(x_i), and for a monomial the smallest-index variable is
/// split off:
///   pp(x_k m) = x_k^p pp(m) + m^p gamma(x_k) + Phi_p(x_k, m).
class InductivePMap final : public FoldPMap {
 public:
  InductivePMap(AlgebraPtr alg, std::vector<Poly> gamma);

  const std::vector<Poly>& generator_images() const { return gamma_; }

 protected:
  Poly monomial_rule(const Monomial& m) const override;

 private:
  std::vector<Poly> gamma_;
};

/// p-map given in closed form on every element.
class ClosedFormPMap final : public PMapBase {
 public:
  ClosedFormPMap(AlgebraPtr alg, std::function<Poly(const Poly&)> fn)
      : alg_(std::move(alg)), fn_(std::move(fn)) {}

  const AlgebraPtr& algebra() const override { return alg_; }
  Poly eval_poly(const Poly& f) const override { return alg_->reduce(fn_(f)); }

 private:
  AlgebraPtr alg_;
  std::function<Poly(const Poly&)> fn_;
};

struct RestrictedPoissonAlgebra {
  AlgebraPtr base;
  PMapPtr pmap;

  PoissonElement pp(const PoissonElement& f) const { return pmap->eval(f); }
};

/// Builds the inductive p-map from generator images. When check_jacobson is
/// set, the hypothesis ad_{x_i}^p = ad_{gamma(x_i)} is verified on all
/// generators and on `samples` random elements per generator; a failure
/// throws with the witness. A positive exact_degree_bound additionally
/// checks the operator equality on every basis monomial up to that degree.
RestrictedPoissonAlgebra build_pmap(const AlgebraPtr& alg,
                                    std::vector<Poly> gamma,
                                    bool check_jacobson = true,
                                    uint64_t samples = 32, uint64_t seed = 0,
                                    uint64_t exact_degree_bound = 0);

/// Restricted-Lie axioms of the pair (bracket, p-map):
///  (1) ad_f^p(g) = {pp(f), g},
///  (2) pp(cf) = c^p pp(f),
///  (3) pp(f+g) = pp(f) + pp(g) + Lambda_p(f, g).
Report verify_restricted_lie(const RestrictedPoissonAlgebra& A,
                             uint64_t samples, uint64_t seed);

enum class FrobeniusMode { square, product };

/// mode square:  pp(f^2) = 2 f^p pp(f) on random elements and generators,
///               plus the corollary pp(f^n) = n f^{(n-1)p} pp(f), n = 2..5.
/// mode product: pp(fg) = f^p pp(g) + g^p pp(f) + Phi_p(f, g) on random
///               pairs and exhaustively on monomial-basis pairs up to
///               basis_degree_bound (basis pairs suffice for the whole
///               algebra).
Report verify_frobenius_condition(const RestrictedPoissonAlgebra& A,
                                  FrobeniusMode mode, uint64_t samples,
                                  uint64_t seed,
                                  uint64_t basis_degree_bound = 3);

/// The distribution identities of the multiplicativity defect:
///  (1) f^p Phi(g,h) - Phi(fg,h) + Phi(f,gh) - h^p Phi(f,g) = 0,
///  (2) Phi(cg,h) = c^p Phi(g,h) for central (here: constant) f = c,
///  (3) Phi(f,g+h) - Phi(f,g) - Phi(f,h) = Lambda(fg,fh) - f^p Lambda(g,h).
Report phi_identities(const AlgebraPtr& alg, uint64_t samples, uint64_t seed);

/// New p-map pp'(f) = pp(f) + (psi0(f))^p where psi0 is the derivation with
/// the given generator images. Centrality of the images' p-th powers is
/// sampled; a failure throws.
RestrictedPoissonAlgebra modify_pmap(const RestrictedPoissonAlgebra& A,
                                     const std::vector<Poly>& derivation_images,
                                     uint64_t samples = 16, uint64_t seed = 0);

/// Quotient by a monomial ideal that is bracket-closed and restricted
/// (pp(m) in I for each generator m; both checked, failures throw).
RestrictedPoissonAlgebra quotient_restricted(const RestrictedPoissonAlgebra& A,
                                             const MonomialIdeal& ideal);

/// pp + semilinear shift f -> coeff_{x_v}(f)^p * x_v. The target is not
/// central, so the adjoint condition breaks while semilinearity and
/// additivity survive.
RestrictedPoissonAlgebra perturb_semilinear_shift(
    const RestrictedPoissonAlgebra& A, uint32_t var);

/// pp + semilinear map f -> coeff_{x_v}(f)^p * x_v^p. The target is central
/// but the map is not a Frobenius derivation, so the result is weakly
/// restricted yet fails pp(f^2) = 2 f^p pp(f).
RestrictedPoissonAlgebra perturb_semilinear_central(
    const RestrictedPoissonAlgebra& A, uint32_t var);

/// All monomials of the algebra (reduced ones, if a quotient is present)
/// with total degree <= bound, graded-lex ascending.
std::vector<Monomial> basis_monomials(const AlgebraPtr& alg, uint64_t bound);

}  // namespace rpa
