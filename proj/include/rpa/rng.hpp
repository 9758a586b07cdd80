#pragma once

#include <cstdint>
#include <random>

#include "rpa/poly.hpp"

namespace rpa {

/// Deterministic source of randomness for the verification suites. Bounded
/// draws avoid std::uniform_int_distribution, whose output is
/// implementation-defined; mt19937_64 itself is pinned by the standard, so
/// reports are reproducible from the seed alone.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next() { return gen_(); }

  uint64_t bounded(uint64_t n) { return n == 0 ? 0 : next() % n; }

  Scalar scalar(PrimeChar p) {
    return Scalar(static_cast<uint32_t>(bounded(p.value())), p);
  }

  Scalar nonzero_scalar(PrimeChar p) {
    return Scalar(static_cast<uint32_t>(1 + bounded(p.value() - 1)), p);
  }

  /// Degree-bounded sparse polynomial: up to max_terms monomials of total
  /// degree <= max_degree with nonzero coefficients.
  Poly poly(PrimeChar p, uint32_t nvars, uint32_t max_degree = 3,
            uint32_t max_terms = 4) {
    Poly f(p);
    uint32_t terms = 1 + static_cast<uint32_t>(bounded(max_terms));
    for (uint32_t t = 0; t < terms; ++t) {
      uint64_t deg = bounded(max_degree + 1);
      std::vector<Monomial::Factor> fs;
      for (uint64_t d = 0; d < deg; ++d)
        fs.emplace_back(static_cast<uint32_t>(bounded(nvars)), 1);
      f.add_term(Monomial::from_factors(std::move(fs)), nonzero_scalar(p));
    }
    return f;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace rpa
