#pragma once

#include <cstdint>
#include <vector>

#include "rpa/poly.hpp"

namespace rpa {

/// Polynomial in a formal parameter t with Poly coefficients, truncated at
/// a fixed t-degree: terms above the truncation are discarded by every
/// operation.
class TSeries {
 public:
  TSeries(PrimeChar p, uint32_t truncation)
      : trunc_(truncation), coeffs_(truncation + 1, Poly::zero(p)) {}

  static TSeries from_poly(const Poly& f, uint32_t truncation) {
    TSeries s(f.characteristic(), truncation);
    s.coeffs_[0] = f;
    return s;
  }

  uint32_t truncation() const { return trunc_; }
  PrimeChar characteristic() const { return coeffs_[0].characteristic(); }

  const Poly& coeff(uint32_t n) const {
    if (n > trunc_) throw std::out_of_range("t-degree beyond truncation");
    return coeffs_[n];
  }
  void set_coeff(uint32_t n, const Poly& f) {
    if (n > trunc_) throw std::out_of_range("t-degree beyond truncation");
    coeffs_[n] = f;
  }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  TSeries operator+(const TSeries& o) const {
    check(o);
    TSeries r = *this;
    for (uint32_t n = 0; n <= trunc_; ++n) r.coeffs_[n] += o.coeffs_[n];
    return r;
  }

  TSeries operator-(const TSeries& o) const {
    check(o);
    TSeries r = *this;
    for (uint32_t n = 0; n <= trunc_; ++n) r.coeffs_[n] -= o.coeffs_[n];
    return r;
  }

  /// Cauchy product, truncated.
  TSeries operator*(const TSeries& o) const {
    check(o);
    TSeries r(characteristic(), trunc_);
    for (uint32_t i = 0; i <= trunc_; ++i) {
      if (coeffs_[i].is_zero()) continue;
      for (uint32_t j = 0; i + j <= trunc_; ++j)
        r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return r;
  }

  bool operator==(const TSeries& o) const {
    return trunc_ == o.trunc_ && coeffs_ == o.coeffs_;
  }

 private:
  void check(const TSeries& o) const {
    if (trunc_ != o.trunc_)
      throw std::invalid_argument("truncation mismatch between series");
  }

  uint32_t trunc_;
  std::vector<Poly> coeffs_;
};

}  // namespace rpa
