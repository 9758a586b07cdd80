#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rpa/fp.hpp"

namespace rpa {

/// Power product of variables. Stored as (variable index, exponent) pairs,
/// sorted by index, with no zero exponents. Ordered by graded lexicographic
/// comparison (total degree first, then lex with lower-index variables
/// weighing more).
class Monomial {
 public:
  using Factor = std::pair<uint32_t, uint64_t>;

  Monomial() = default;

  static Monomial one() { return Monomial(); }

  static Monomial variable(uint32_t var, uint64_t exp = 1) {
    Monomial m;
    if (exp > 0) m.factors_.emplace_back(var, exp);
    return m;
  }

  /// Builds from possibly unsorted/duplicated factor list.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  uint64_t degree() const {
    uint64_t d = 0;
    for (const auto& [v, e] : factors_) d = checked_add(d, e);
    return d;
  }

  uint64_t exponent(uint32_t var) const {
    for (const auto& [v, e] : factors_)
      if (v == var) return e;
    return 0;
  }

  uint32_t max_variable() const;

  /// Smallest variable index with positive exponent; requires !is_one().
  uint32_t smallest_variable() const;

  Monomial operator*(const Monomial& o) const;
  Monomial pow(uint64_t k) const;

  bool divisible_by(const Monomial& o) const;

  /// Quotient; requires divisibility.
  Monomial operator/(const Monomial& o) const;

  std::strong_ordering operator<=>(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return factors_ == o.factors_; }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::vector<Factor> factors_;
};

}  // namespace rpa
