#include "rpa/poly.hpp"

#include <algorithm>

#include "rpa/ideal.hpp"

namespace rpa {

Poly Poly::constant(Scalar c) {
  Poly f{PrimeChar(c.characteristic())};
  f.add_term(Monomial::one(), c);
  return f;
}

Poly Poly::from_monomial(const Monomial& m, Scalar c) {
  Poly f{PrimeChar(c.characteristic())};
  f.add_term(m, c);
  return f;
}

void Poly::add_term(const Monomial& m, Scalar c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar Poly::constant_term() const { return coefficient(Monomial::one()); }

Scalar Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(p_) : it->second;
}

uint64_t Poly::degree() const {
  // Terms are graded-lex ascending, so the last one carries the top degree.
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

uint32_t Poly::variable_span() const {
  uint32_t span = 0;
  for (const auto& [m, c] : terms_)
    if (!m.is_one()) span = std::max(span, m.max_variable() + 1);
  return span;
}

Poly Poly::operator+(const Poly& o) const {
  check(o);
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  check(o);
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r{p_};
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check(o);
  Poly r{p_};
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::operator*(const Scalar& c) const {
  Poly r{p_};
  if (c.is_zero()) return r;
  for (const auto& [m, a] : terms_) r.add_term(m, a * c);
  return r;
}

Poly Poly::pow(uint64_t k) const {
  Poly r = constant(Scalar::one(p_));
  Poly b = *this;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

Poly Poly::frobenius() const {
  Poly r{p_};
  for (const auto& [m, c] : terms_)
    r.add_term(m.pow(p_.value()), c.frobenius());
  return r;
}

Poly Poly::divided_partial(uint32_t var, uint64_t k) const {
  if (k == 0) return *this;
  Poly r{p_};
  for (const auto& [m, c] : terms_) {
    uint64_t e = m.exponent(var);
    if (e < k) continue;
    Scalar coeff = c * binomial_mod(e, k, p_);
    if (coeff.is_zero()) continue;
    std::vector<Monomial::Factor> fs;
    for (const auto& [v, ve] : m.factors()) {
      if (v == var) {
        if (e > k) fs.emplace_back(v, e - k);
      } else {
        fs.emplace_back(v, ve);
      }
    }
    r.add_term(Monomial::from_factors(std::move(fs)), coeff);
  }
  return r;
}

Poly Poly::iterated_partial(uint32_t var, uint64_t k) const {
  // d^k/dx^k = k! * divided_partial(k) only for k < p; apply the first
  // derivative k times instead so orders >= p correctly annihilate.
  Poly r = *this;
  for (uint64_t i = 0; i < k; ++i) {
    Poly next{p_};
    for (const auto& [m, c] : r.terms_) {
      uint64_t e = m.exponent(var);
      if (e == 0) continue;
      Scalar coeff = c * Scalar(static_cast<uint32_t>(e % p_.value()), p_);
      if (coeff.is_zero()) continue;
      std::vector<Monomial::Factor> fs;
      for (const auto& [v, ve] : m.factors()) {
        if (v == var) {
          if (e > 1) fs.emplace_back(v, e - 1);
        } else {
          fs.emplace_back(v, ve);
        }
      }
      next.add_term(Monomial::from_factors(std::move(fs)), coeff);
    }
    r = next;
    if (r.is_zero()) break;
  }
  return r;
}

Poly Poly::reduce(const MonomialIdeal& ideal) const {
  if (ideal.empty()) return *this;
  Poly r{p_};
  for (const auto& [m, c] : terms_)
    if (!ideal.contains(m)) r.terms_.emplace(m, c);
  return r;
}

Poly Poly::rename_variables(const std::vector<uint32_t>& new_index) const {
  Poly r{p_};
  for (const auto& [m, c] : terms_) {
    std::vector<Monomial::Factor> fs;
    for (const auto& [v, e] : m.factors()) fs.emplace_back(new_index.at(v), e);
    r.add_term(Monomial::from_factors(std::move(fs)), c);
  }
  return r;
}

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    const auto& [m, c] = *it;
    if (m.is_one()) {
      s += std::to_string(c.value());
    } else {
      if (c.value() != 1) s += std::to_string(c.value()) + "*";
      s += m.to_string(names);
    }
  }
  return s;
}

}  // namespace rpa
