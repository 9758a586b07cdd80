#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rpa/fp.hpp"
#include "rpa/monomial.hpp"

namespace rpa {

class MonomialIdeal;

/// Sparse multivariate polynomial over F_p. The term map is the canonical
/// form: graded-lex ordered, no zero coefficients, so equality is map
/// equality.
class Poly {
 public:
  explicit Poly(PrimeChar p) : p_(p) {}

  static Poly zero(PrimeChar p) { return Poly(p); }
  static Poly constant(Scalar c);
  static Poly constant(int64_t c, PrimeChar p) {
    return constant(Scalar::from_int(c, p));
  }
  static Poly variable(uint32_t var, PrimeChar p) {
    return from_monomial(Monomial::variable(var), Scalar::one(p));
  }
  static Poly from_monomial(const Monomial& m, Scalar c);

  PrimeChar characteristic() const { return p_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }
  Scalar constant_term() const;
  Scalar coefficient(const Monomial& m) const;
  uint64_t degree() const;  // total degree; 0 for the zero polynomial
  uint32_t variable_span() const;  // 1 + largest variable index used

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Scalar& c) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly pow(uint64_t k) const;

  /// p-th power; by Frobenius additivity this is term-wise: exponents
  /// multiplied by p, coefficients taken to the p-th power.
  Poly frobenius() const;

  /// Divided-power derivative of order k in one variable,
  /// x^n -> C(n, k) x^(n-k). Well-defined for every k, including k >= p.
  Poly divided_partial(uint32_t var, uint64_t k) const;

  /// Plain iterated first derivative of order k.
  Poly iterated_partial(uint32_t var, uint64_t k) const;
  Poly partial(uint32_t var) const { return iterated_partial(var, 1); }

  Poly reduce(const MonomialIdeal& ideal) const;

  /// Remaps variable indices; used by tensor constructions.
  Poly rename_variables(const std::vector<uint32_t>& new_index) const;

  bool operator==(const Poly& o) const {
    return p_ == o.p_ && terms_ == o.terms_;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Canonical string: descending graded-lex terms joined by " + ".
  std::string to_string(const std::vector<std::string>& names) const;

  void add_term(const Monomial& m, Scalar c);

 private:
  void check(const Poly& o) const {
    if (!(p_ == o.p_))
      throw std::invalid_argument("characteristic mismatch between polynomials");
  }

  PrimeChar p_;
  std::map<Monomial, Scalar> terms_;
};

inline Poly operator*(const Scalar& c, const Poly& f) { return f * c; }

}  // namespace rpa
