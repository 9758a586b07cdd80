#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rpa/restricted.hpp"
#include "rpa/tseries.hpp"

namespace rpa {

/// Star-product kernel shape. `onesided` exponentiates
/// sum_{i<j} c_ij d_i (x) d_j from a strictly upper-triangular matrix and
/// induces {x_i, x_j} = c_ij; `symmetric` exponentiates over all ordered
/// pairs of an antisymmetric matrix and induces {x_i, x_j} = 2 c_ij (the
/// commutator double-counts).
enum class StarMode { onesided, symmetric };

/// Deformation quantization of a constant-coefficient Poisson bracket:
/// f * g = mu(exp(t sum c_ij d_i (x) d_j)(f (x) g)), expanded per factor
/// with divided powers so no factorial division occurs mod p.
class StarAlgebra {
 public:
  StarAlgebra(PrimeChar p, std::vector<std::string> vars,
              std::vector<std::vector<Scalar>> c, StarMode mode,
              uint32_t truncation = 0);

  PrimeChar characteristic() const { return p_; }
  uint32_t nvars() const { return static_cast<uint32_t>(vars_.size()); }
  const std::vector<std::string>& variables() const { return vars_; }
  StarMode mode() const { return mode_; }
  uint32_t truncation() const { return trunc_; }

  /// Nonzero kernel factors (i, j, c) of exp(t sum c d_i (x) d_j).
  struct Factor {
    uint32_t i, j;
    Scalar c;
  };
  const std::vector<Factor>& factors() const { return factors_; }

  /// The Poisson algebra this quantizes (classical limit of the commutator).
  AlgebraPtr classical_limit() const;

 private:
  PrimeChar p_;
  std::vector<std::string> vars_;
  std::vector<std::vector<Scalar>> c_;
  StarMode mode_;
  uint32_t trunc_;
  std::vector<Factor> factors_;
};

TSeries star(const Poly& f, const Poly& g, const StarAlgebra& S);
TSeries star(const TSeries& a, const TSeries& b, const StarAlgebra& S);

/// Left-associated k-fold star power of f.
TSeries star_power(const Poly& f, uint64_t k, const StarAlgebra& S);

/// Coefficient of t^n in f^{*p}.
Poly extract_M(const Poly& f, uint32_t n, const StarAlgebra& S);

/// M_n^p(f) = 0 for 1 <= n <= p-2, plus sampled centrality of f^p:
/// f^p * g = g * f^p = f^p g.
Report check_vanishing(const Poly& f, const StarAlgebra& S,
                       uint64_t samples = 8, uint64_t seed = 0);

/// The quantization-derived restricted structure: pp(f) = M_{p-1}^p(f) over
/// the classical limit. check_vanishing is run on the generators first; a
/// failure throws, since then the quantization certifies nothing.
RestrictedPoissonAlgebra derive_pmap(const StarAlgebra& S);

}  // namespace rpa
