#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rpa/ideal.hpp"
#include "rpa/poly.hpp"
#include "rpa/report.hpp"
#include "rpa/rng.hpp"

namespace rpa {

class PoissonElement;

/// Polynomial Poisson algebra: generators, the bracket table {x_i, x_j} for
/// i < j, and an optional monomial-ideal quotient with eager reduction.
/// The bracket of arbitrary elements is the biderivation extension
///   {f, g} = sum_{i<j} {x_i, x_j} (d_i f d_j g - d_j f d_i g),
/// which agrees with the recursive Leibniz expansion at quadratic cost.
class PoissonAlgebra : public std::enable_shared_from_this<PoissonAlgebra> {
 public:
  using BracketTable = std::map<std::pair<uint32_t, uint32_t>, Poly>;

  /// Validates Jacobi on generator triples and, when a quotient is present,
  /// reduction of the table and bracket-closedness of the ideal.
  static std::shared_ptr<const PoissonAlgebra> make(
      PrimeChar p, std::vector<std::string> vars, BracketTable table,
      std::optional<MonomialIdeal> quotient = std::nullopt);

  /// Skips validation; for negative tests that need a broken table.
  static std::shared_ptr<const PoissonAlgebra> make_unchecked(
      PrimeChar p, std::vector<std::string> vars, BracketTable table,
      std::optional<MonomialIdeal> quotient = std::nullopt);

  PrimeChar characteristic() const { return p_; }
  const std::vector<std::string>& variables() const { return vars_; }
  uint32_t nvars() const { return static_cast<uint32_t>(vars_.size()); }
  const std::optional<MonomialIdeal>& quotient() const { return quotient_; }

  /// {x_i, x_j} for any i, j (antisymmetric by construction).
  Poly generator_bracket(uint32_t i, uint32_t j) const;

  /// Biderivation bracket on raw polynomials. Reduction of the result is
  /// applied when `reduced` (the default for element-level operations).
  Poly bracket_poly(const Poly& f, const Poly& g, bool reduced = true) const;

  Poly reduce(const Poly& f) const {
    return quotient_ ? f.reduce(*quotient_) : f;
  }

  PoissonElement element(const Poly& f) const;
  PoissonElement element(int64_t c) const;
  PoissonElement generator(uint32_t i) const;
  PoissonElement zero() const;
  PoissonElement one() const;

  PoissonElement random_element(Rng& rng, uint32_t max_degree = 3,
                                uint32_t max_terms = 4) const;

  std::string poly_string(const Poly& f) const { return f.to_string(vars_); }

 private:
  PoissonAlgebra(PrimeChar p, std::vector<std::string> vars,
                 BracketTable table, std::optional<MonomialIdeal> quotient)
      : p_(p),
        vars_(std::move(vars)),
        table_(std::move(table)),
        quotient_(std::move(quotient)) {}

  void validate() const;

  PrimeChar p_;
  std::vector<std::string> vars_;
  BracketTable table_;
  std::optional<MonomialIdeal> quotient_;
};

using AlgebraPtr = std::shared_ptr<const PoissonAlgebra>;

/// Element of a Poisson algebra; the value is kept reduced and canonical.
class PoissonElement {
 public:
  PoissonElement(AlgebraPtr algebra, Poly value)
      : alg_(std::move(algebra)), val_(alg_->reduce(std::move(value))) {}

  const AlgebraPtr& algebra() const { return alg_; }
  const Poly& poly() const { return val_; }
  bool is_zero() const { return val_.is_zero(); }

  PoissonElement operator+(const PoissonElement& o) const {
    check(o);
    return {alg_, val_ + o.val_};
  }
  PoissonElement operator-(const PoissonElement& o) const {
    check(o);
    return {alg_, val_ - o.val_};
  }
  PoissonElement operator*(const PoissonElement& o) const {
    check(o);
    return {alg_, val_ * o.val_};
  }
  PoissonElement operator-() const { return {alg_, -val_}; }
  PoissonElement operator*(const Scalar& c) const { return {alg_, val_ * c}; }

  PoissonElement pow(uint64_t k) const { return {alg_, val_.pow(k)}; }

  /// f^p, reduced.
  PoissonElement frobenius() const { return {alg_, val_.frobenius()}; }

  bool operator==(const PoissonElement& o) const {
    return alg_ == o.alg_ && val_ == o.val_;
  }
  bool operator!=(const PoissonElement& o) const { return !(*this == o); }

  std::string str() const { return alg_->poly_string(val_); }

 private:
  void check(const PoissonElement& o) const {
    if (alg_ != o.alg_)
      throw std::invalid_argument("elements of different Poisson algebras");
  }

  AlgebraPtr alg_;
  Poly val_;
};

inline PoissonElement operator*(const Scalar& c, const PoissonElement& f) {
  return f * c;
}

PoissonElement bracket(const PoissonElement& f, const PoissonElement& g);

/// Right-nested iterated bracket {f1, {f2, ..., {f_{n-1}, f_n}}}.
PoissonElement nested_bracket(const std::vector<PoissonElement>& args);

/// k-fold application of ad_x = {x, -}.
PoissonElement ad_power(const PoissonElement& x, uint64_t k,
                        const PoissonElement& y);

/// Antisymmetry, Jacobi and Leibniz: exhaustive on generator triples plus
/// seeded random sampling. Failures land in the report with witnesses.
Report verify_poisson(const AlgebraPtr& alg, uint64_t samples, uint64_t seed);

}  // namespace rpa
