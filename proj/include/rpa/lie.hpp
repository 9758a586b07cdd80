#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rpa/restricted.hpp"

namespace rpa {

/// Finite-dimensional restricted Lie algebra by structure constants:
/// [x_i, x_j] for i < j as coordinate vectors, and the basis values of the
/// p-map. Construction validates Jacobi on basis triples and the Jacobson
/// condition ad_{x_i}^p = ad_{x_i^[p]} exhaustively on basis pairs.
class RestrictedLieAlgebra {
 public:
  using Vec = std::vector<Scalar>;

  static RestrictedLieAlgebra make(
      PrimeChar p, std::vector<std::string> basis,
      std::map<std::pair<uint32_t, uint32_t>, Vec> brackets,
      std::vector<Vec> basis_pmap);

  PrimeChar characteristic() const { return p_; }
  uint32_t dim() const { return static_cast<uint32_t>(basis_.size()); }
  const std::vector<std::string>& basis() const { return basis_; }

  Vec zero() const { return Vec(dim(), Scalar::zero(p_)); }
  Vec basis_vector(uint32_t i) const;
  Vec bracket(const Vec& u, const Vec& v) const;
  Vec add(const Vec& u, const Vec& v) const;
  Vec scale(const Vec& u, const Scalar& c) const;

  /// x_i^[p].
  const Vec& basis_pmap(uint32_t i) const { return pmap_[i]; }

  /// p-map on a general element: fold over basis coordinates with
  /// Lambda_p computed inside L.
  Vec pmap(const Vec& u) const;

  Vec lambda(const Vec& u, const Vec& v) const;

  std::string str(const Vec& u) const;

  /// Standard examples.
  static RestrictedLieAlgebra sl2(PrimeChar p);
  /// Two-dimensional solvable algebra with [x, y] = x and
  /// (a x + b y)^[p] = b^{p-1}(a x + b y).
  static RestrictedLieAlgebra solvable2(PrimeChar p);
  static RestrictedLieAlgebra abelian(uint32_t n, PrimeChar p);

 private:
  RestrictedLieAlgebra(PrimeChar p, std::vector<std::string> basis,
                       std::map<std::pair<uint32_t, uint32_t>, Vec> brackets,
                       std::vector<Vec> basis_pmap)
      : p_(p),
        basis_(std::move(basis)),
        brackets_(std::move(brackets)),
        pmap_(std::move(basis_pmap)) {}

  void validate() const;

  PrimeChar p_;
  std::vector<std::string> basis_;
  std::map<std::pair<uint32_t, uint32_t>, Vec> brackets_;
  std::vector<Vec> pmap_;
};

/// Restricted Lie axioms: the adjoint condition exhaustively on basis
/// pairs, semilinearity on random scalars, and additivity on basis pairs
/// via the s-coefficient machinery.
Report verify_restricted_lie_fd(const RestrictedLieAlgebra& L,
                                uint64_t samples = 32, uint64_t seed = 0);

/// The symmetric algebra K[L] with the induced bracket and the p-map built
/// inductively from gamma(x_i) = x_i^[p].
RestrictedPoissonAlgebra symmetric_poisson(const RestrictedLieAlgebra& L);

/// The p-truncated symmetric algebra s(L) = K[L]/(x_i^p).
RestrictedPoissonAlgebra truncated_symmetric(const RestrictedLieAlgebra& L);

/// Tensor product of restricted Poisson algebras: disjoint variables
/// (renamed on collision), cross brackets zero, and the p-map determined on
/// split monomials by pp(a (x) b) = pp(a) (x) b^p + a^p (x) pp(b).
RestrictedPoissonAlgebra tensor_product(const RestrictedPoissonAlgebra& A,
                                        const RestrictedPoissonAlgebra& B);

/// Hopf-compatibility of an S(L)- or s(L)-type algebra whose generators are
/// primitive: Delta and epsilon preserve bracket and p-map into the tensor
/// square, and the antipode is a bracket anti-homomorphism. The antipode /
/// p-map commutation is reported informationally.
Report hopf_check(const RestrictedPoissonAlgebra& H, uint64_t degree_bound = 2);

/// Named example algebras with their published p-maps.
RestrictedPoissonAlgebra catalog(const std::string& name, PrimeChar p);

std::vector<std::string> catalog_names();

}  // namespace rpa
