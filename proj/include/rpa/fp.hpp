#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rpa {

/// Odd prime characteristic. The default upper bound keeps the exhaustive
/// suites (p-fold brackets, p!-sized enumerations) at desk scale; callers
/// that know what they are doing may raise it.
class PrimeChar {
 public:
  static constexpr uint32_t kDefaultMax = 7;

  explicit PrimeChar(uint32_t p, uint32_t max_value = kDefaultMax) : p_(p) {
    if (p < 3 || p > max_value)
      throw std::invalid_argument("characteristic must lie in [3, " +
                                  std::to_string(max_value) + "], got " +
                                  std::to_string(p));
    for (uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0)
        throw std::invalid_argument("characteristic must be prime, got " +
                                    std::to_string(p));
  }

  uint32_t value() const { return p_; }
  bool operator==(const PrimeChar& o) const { return p_ == o.p_; }

 private:
  uint32_t p_;
};

/// Residue in [0, p). Exact arithmetic; every nonzero value is invertible.
class Scalar {
 public:
  Scalar(uint32_t value, PrimeChar p) : v_(value % p.value()), p_(p.value()) {}

  static Scalar zero(PrimeChar p) { return Scalar(0, p); }
  static Scalar one(PrimeChar p) { return Scalar(1, p); }

  /// Signed construction, e.g. from_int(-1, p) == p - 1.
  static Scalar from_int(int64_t value, PrimeChar p) {
    int64_t m = static_cast<int64_t>(p.value());
    int64_t r = value % m;
    if (r < 0) r += m;
    return Scalar(static_cast<uint32_t>(r), p);
  }

  uint32_t value() const { return v_; }
  uint32_t characteristic() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Scalar operator+(const Scalar& o) const {
    check(o);
    return raw((v_ + o.v_) % p_);
  }
  Scalar operator-(const Scalar& o) const {
    check(o);
    return raw((v_ + p_ - o.v_) % p_);
  }
  Scalar operator*(const Scalar& o) const {
    check(o);
    return raw(static_cast<uint32_t>((uint64_t(v_) * o.v_) % p_));
  }
  Scalar operator-() const { return raw(v_ == 0 ? 0 : p_ - v_); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar pow(uint64_t e) const {
    Scalar r = raw(1), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  Scalar inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
    return pow(p_ - 2);
  }

  /// Frobenius; the identity on F_p, kept explicit where formulas ask for it.
  Scalar frobenius() const { return pow(p_); }

  bool operator==(const Scalar& o) const { return v_ == o.v_ && p_ == o.p_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

 private:
  Scalar raw(uint32_t v) const {
    Scalar s = *this;
    s.v_ = v;
    return s;
  }
  void check(const Scalar& o) const {
    if (p_ != o.p_)
      throw std::invalid_argument("characteristic mismatch: " +
                                  std::to_string(p_) + " vs " +
                                  std::to_string(o.p_));
  }

  uint32_t v_;
  uint32_t p_;
};

/// k! mod p; zero whenever k >= p.
inline Scalar factorial_mod(uint64_t k, PrimeChar p) {
  if (k >= p.value()) return Scalar::zero(p);
  uint32_t r = 1;
  for (uint32_t i = 2; i <= k; ++i) r = (r * i) % p.value();
  return Scalar(r, p);
}

/// C(n, k) mod p by Lucas' theorem; safe for exponent-sized n.
inline Scalar binomial_mod(uint64_t n, uint64_t k, PrimeChar p) {
  const uint32_t q = p.value();
  Scalar result = Scalar::one(p);
  while (k > 0 || n > 0) {
    uint64_t nd = n % q, kd = k % q;
    if (kd > nd) return Scalar::zero(p);
    // C(nd, kd) for digits < p, via the small factorials.
    Scalar num = factorial_mod(nd, p);
    Scalar den = factorial_mod(kd, p) * factorial_mod(nd - kd, p);
    result *= num * den.inverse();
    n /= q;
    k /= q;
  }
  return result;
}

/// Checked exponent arithmetic: degrees stay tiny at desk scale, but an
/// overflow must never wrap silently.
inline uint64_t checked_add(uint64_t a, uint64_t b) {
  uint64_t r = a + b;
  if (r < a) throw std::overflow_error("exponent overflow in addition");
  return r;
}

inline uint64_t checked_mul(uint64_t a, uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a)
    throw std::overflow_error("exponent overflow in multiplication");
  return a * b;
}

}  // namespace rpa
