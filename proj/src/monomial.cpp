#include "rpa/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace rpa {

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v)
      m.factors_.back().second = checked_add(m.factors_.back().second, e);
    else
      m.factors_.emplace_back(v, e);
  }
  return m;
}

uint32_t Monomial::max_variable() const {
  uint32_t mx = 0;
  for (const auto& [v, e] : factors_) mx = std::max(mx, v);
  return mx;
}

uint32_t Monomial::smallest_variable() const {
  if (factors_.empty())
    throw std::logic_error("smallest_variable of the unit monomial");
  return factors_.front().first;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  size_t i = 0, j = 0;
  while (i < factors_.size() || j < o.factors_.size()) {
    if (j == o.factors_.size() ||
        (i < factors_.size() && factors_[i].first < o.factors_[j].first)) {
      r.factors_.push_back(factors_[i++]);
    } else if (i == factors_.size() ||
               o.factors_[j].first < factors_[i].first) {
      r.factors_.push_back(o.factors_[j++]);
    } else {
      r.factors_.emplace_back(factors_[i].first,
                              checked_add(factors_[i].second,
                                          o.factors_[j].second));
      ++i;
      ++j;
    }
  }
  return r;
}

Monomial Monomial::pow(uint64_t k) const {
  Monomial r;
  if (k == 0) return r;
  r.factors_ = factors_;
  for (auto& [v, e] : r.factors_) e = checked_mul(e, k);
  return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
  for (const auto& [v, e] : o.factors_)
    if (exponent(v) < e) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  if (!divisible_by(o)) throw std::domain_error("monomial not divisible");
  Monomial r;
  for (const auto& [v, e] : factors_) {
    uint64_t oe = o.exponent(v);
    if (e > oe) r.factors_.emplace_back(v, e - oe);
  }
  return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  uint64_t da = degree(), db = o.degree();
  if (da != db) return da <=> db;
  // Lex tie-break: first variable (lowest index) whose exponents differ;
  // the larger exponent there wins.
  size_t i = 0, j = 0;
  while (i < factors_.size() && j < o.factors_.size()) {
    if (factors_[i].first != o.factors_[j].first) {
      // The side owning the smaller variable index has positive exponent
      // where the other has zero, so it is lex-larger.
      return factors_[i].first < o.factors_[j].first
                 ? std::strong_ordering::greater
                 : std::strong_ordering::less;
    }
    if (factors_[i].second != o.factors_[j].second)
      return factors_[i].second <=> o.factors_[j].second;
    ++i;
    ++j;
  }
  if (i < factors_.size()) return std::strong_ordering::greater;
  if (j < o.factors_.size()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += "*";
    s += v < names.size() ? names[v] : "x" + std::to_string(v);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace rpa
