#include "rpa/star.hpp"

#include <stdexcept>

namespace rpa {

StarAlgebra::StarAlgebra(PrimeChar p, std::vector<std::string> vars,
                         std::vector<std::vector<Scalar>> c, StarMode mode,
                         uint32_t truncation)
    : p_(p),
      vars_(std::move(vars)),
      c_(std::move(c)),
      mode_(mode),
      trunc_(truncation == 0 ? p.value() : truncation) {
  if (trunc_ < p_.value())
    throw std::invalid_argument("truncation must be at least p");
  uint32_t n = nvars();
  if (c_.size() != n)
    throw std::invalid_argument("coefficient matrix size mismatch");
  for (const auto& row : c_)
    if (row.size() != n)
      throw std::invalid_argument("coefficient matrix must be square");

  if (mode_ == StarMode::symmetric) {
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j)
        if (!(c_[i][j] + c_[j][i]).is_zero())
          throw std::invalid_argument(
              "symmetric mode requires an antisymmetric matrix");
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j)
        if (i != j && !c_[i][j].is_zero())
          factors_.push_back({i, j, c_[i][j]});
  } else {
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j) {
        if (j <= i && !c_[i][j].is_zero())
          throw std::invalid_argument(
              "onesided mode takes a strictly upper-triangular matrix");
        if (j > i && !c_[i][j].is_zero()) factors_.push_back({i, j, c_[i][j]});
      }
  }
}

AlgebraPtr StarAlgebra::classical_limit() const {
  PoissonAlgebra::BracketTable table;
  for (uint32_t i = 0; i < nvars(); ++i)
    for (uint32_t j = i + 1; j < nvars(); ++j) {
      Scalar b = mode_ == StarMode::onesided ? c_[i][j]
                                             : c_[i][j] * Scalar(2, p_);
      if (!b.is_zero()) table.insert_or_assign({i, j}, Poly::constant(b));
    }
  return PoissonAlgebra::make(p_, vars_, std::move(table));
}

namespace {

/// The two tensor slots live in a doubled variable space: slot one keeps
/// indices 0..n-1, slot two is shifted by n.
Poly shift_vars(const Poly& f, uint32_t n) {
  std::vector<uint32_t> remap(f.variable_span());
  for (uint32_t v = 0; v < remap.size(); ++v) remap[v] = v + n;
  return f.rename_variables(remap);
}

/// mu: identify slot-two variables with slot-one ones.
Poly contract(const Poly& f, uint32_t n) {
  uint32_t span = f.variable_span();
  std::vector<uint32_t> remap(span);
  for (uint32_t v = 0; v < span; ++v) remap[v] = v < n ? v : v - n;
  return f.rename_variables(remap);
}

}  // namespace

TSeries star(const Poly& f, const Poly& g, const StarAlgebra& S) {
  const uint32_t n = S.nvars();
  const uint32_t p = S.characteristic().value();
  TSeries acc = TSeries::from_poly(f * shift_vars(g, n), S.truncation());

  // One exponential factor at a time; each is a finite sum because
  // k! d^(k) vanishes identically for k >= p.
  for (const auto& factor : S.factors()) {
    TSeries next(S.characteristic(), S.truncation());
    for (uint32_t m = 0; m <= S.truncation(); ++m) {
      const Poly& base = acc.coeff(m);
      if (base.is_zero()) continue;
      Scalar ck = Scalar::one(S.characteristic());
      for (uint32_t k = 0; k < p && m + k <= S.truncation(); ++k) {
        if (k > 0) ck *= factor.c;
        Poly term = base.divided_partial(factor.i, k)
                        .divided_partial(n + factor.j, k) *
                    (ck * factorial_mod(k, S.characteristic()));
        if (!term.is_zero())
          next.set_coeff(m + k, next.coeff(m + k) + term);
      }
    }
    acc = next;
  }

  TSeries out(S.characteristic(), S.truncation());
  for (uint32_t m = 0; m <= S.truncation(); ++m)
    out.set_coeff(m, contract(acc.coeff(m), n));
  return out;
}

TSeries star(const TSeries& a, const TSeries& b, const StarAlgebra& S) {
  TSeries out(S.characteristic(), S.truncation());
  for (uint32_t i = 0; i <= S.truncation(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (uint32_t j = 0; i + j <= S.truncation(); ++j) {
      if (b.coeff(j).is_zero()) continue;
      TSeries prod = star(a.coeff(i), b.coeff(j), S);
      for (uint32_t k = 0; i + j + k <= S.truncation(); ++k)
        out.set_coeff(i + j + k, out.coeff(i + j + k) + prod.coeff(k));
    }
  }
  return out;
}

TSeries star_power(const Poly& f, uint64_t k, const StarAlgebra& S) {
  if (k == 0)
    throw std::invalid_argument("star power requires a positive exponent");
  TSeries acc = TSeries::from_poly(f, S.truncation());
  TSeries base = acc;
  for (uint64_t i = 1; i < k; ++i) acc = star(acc, base, S);
  return acc;
}

Poly extract_M(const Poly& f, uint32_t n, const StarAlgebra& S) {
  if (n > S.truncation())
    throw std::out_of_range("t-degree beyond the series truncation");
  return star_power(f, S.characteristic().value(), S).coeff(n);
}

Report check_vanishing(const Poly& f, const StarAlgebra& S, uint64_t samples,
                       uint64_t seed) {
  Report rep;
  rep.suite = "star-vanishing";
  rep.seed = seed;
  rep.samples = samples;
  const uint32_t p = S.characteristic().value();
  std::vector<std::string> names = S.variables();

  TSeries fp = star_power(f, p, S);
  Check& van = rep.add("M_n(f) = 0 for 1 <= n <= p-2");
  for (uint32_t n = 1; n + 1 < p; ++n) {
    if (!fp.coeff(n).is_zero()) {
      van.pass = false;
      van.witness = {"f = " + f.to_string(names), "n = " + std::to_string(n),
                     "M_n(f) = " + fp.coeff(n).to_string(names)};
      break;
    }
  }

  Check& cen = rep.add("f^p central: f^p * g = g * f^p = f^p g");
  Rng rng(seed);
  Poly fpow = f.frobenius();
  for (uint64_t s = 0; s < samples && cen.pass; ++s) {
    Poly g = rng.poly(S.characteristic(), S.nvars());
    TSeries lhs = star(fpow, g, S);
    TSeries rhs = star(g, fpow, S);
    TSeries plain = TSeries::from_poly(fpow * g, S.truncation());
    if (!(lhs == plain) || !(rhs == plain)) {
      cen.pass = false;
      cen.witness = {"f = " + f.to_string(names), "g = " + g.to_string(names)};
    }
  }
  return rep;
}

RestrictedPoissonAlgebra derive_pmap(const StarAlgebra& S) {
  PrimeChar p = S.characteristic();
  for (uint32_t i = 0; i < S.nvars(); ++i) {
    Report r = check_vanishing(Poly::variable(i, p), S);
    if (!r.all_pass())
      throw std::invalid_argument(
          "quantization does not certify a restricted structure:\n" +
          r.text());
  }
  auto alg = S.classical_limit();
  auto copy = S;
  auto fn = [copy](const Poly& f) {
    return extract_M(f, copy.characteristic().value() - 1, copy);
  };
  return {alg, std::make_shared<ClosedFormPMap>(alg, fn)};
}

}  // namespace rpa
