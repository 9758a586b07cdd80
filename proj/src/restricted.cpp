#include "rpa/restricted.hpp"

#include <stdexcept>

namespace rpa {

namespace {

PoissonElement pbr(const PoissonElement& a, const PoissonElement& b) {
  return bracket(a, b);
}
PoissonElement padd(const PoissonElement& a, const PoissonElement& b) {
  return a + b;
}
PoissonElement pscale(const PoissonElement& a, const Scalar& c) {
  return a * c;
}

}  // namespace

PoissonElement s_coeff(const PoissonElement& x, const PoissonElement& y,
                       uint32_t i) {
  uint32_t p = x.algebra()->characteristic().value();
  if (i < 1 || i > p - 1)
    throw std::out_of_range("s_i index must satisfy 1 <= i <= p-1");
  auto s = jacobson_s_coeffs(x, y, p, x.algebra()->zero(), pbr, padd);
  return s[i - 1];
}

PoissonElement lambda_p(const PoissonElement& x, const PoissonElement& y) {
  return jacobson_lambda(x, y, x.algebra()->characteristic(),
                         x.algebra()->zero(), pbr, padd, pscale);
}

PoissonElement phi_p(const PoissonElement& x, const PoissonElement& y) {
  PrimeChar p = x.algebra()->characteristic();
  auto xp = x.frobenius(), yp = y.frobenius();
  auto x2 = x * x, y2 = y * y;
  auto half = Scalar(2, p).inverse();
  auto correction = lambda_p(x2, y2) + lambda_p(x2 + y2, (x * y) * Scalar(2, p));
  return (xp + yp) * lambda_p(x, y) - correction * half;
}

PoissonElement phi_p_prime(const PoissonElement& x, const PoissonElement& y) {
  PrimeChar p = x.algebra()->characteristic();
  auto xp = x.frobenius(), yp = y.frobenius();
  auto sum2 = (x + y) * (x + y);
  auto diff2 = (x - y) * (x - y);
  auto quarter = Scalar(4, p).inverse();
  auto half = Scalar(2, p).inverse();
  auto head = lambda_p(sum2, -diff2) * quarter;
  auto tail = ((xp + yp) * lambda_p(x, y) - (xp - yp) * lambda_p(x, -y)) * half;
  return head + tail;
}

Poly FoldPMap::monomial_value(const Monomial& m) const {
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
  }
  Poly v = monomial_rule(m);
  std::lock_guard<std::mutex> lock(cache_mu_);
  return cache_.emplace(m, std::move(v)).first->second;
}

Poly FoldPMap::eval_poly(const Poly& f) const {
  if (!(f.characteristic() == alg_->characteristic()))
    throw std::invalid_argument("characteristic mismatch in p-map evaluation");
  Poly reduced = alg_->reduce(f);
  PoissonElement acc_sum = alg_->zero();
  Poly acc_pp = Poly::zero(alg_->characteristic());
  // Descending graded-lex over the canonical term map.
  const auto& terms = reduced.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [mono, coeff] = *it;
    Poly term_poly = Poly::from_monomial(mono, coeff);
    acc_pp += monomial_value(mono) * coeff.frobenius();
    if (!acc_sum.is_zero())
      acc_pp += lambda_p(acc_sum, alg_->element(term_poly)).poly();
    acc_sum = acc_sum + alg_->element(term_poly);
  }
  return alg_->reduce(acc_pp);
}

InductivePMap::InductivePMap(AlgebraPtr alg, std::vector<Poly> gamma)
    : FoldPMap(std::move(alg)), gamma_(std::move(gamma)) {
  if (gamma_.size() != alg_->nvars())
    throw std::invalid_argument("one generator image per variable required");
  for (auto& g : gamma_) g = alg_->reduce(g);
}

Poly InductivePMap::monomial_rule(const Monomial& m) const {
  PrimeChar p = alg_->characteristic();
  if (m.is_one()) return Poly::zero(p);
  uint32_t k = m.smallest_variable();
  if (m.degree() == 1) return gamma_[k];

  Monomial xk = Monomial::variable(k);
  Monomial rest = m / xk;
  Poly xk_poly = Poly::variable(k, p);
  Poly rest_poly = Poly::from_monomial(rest, Scalar::one(p));

  Poly value = xk_poly.frobenius() * monomial_value(rest) +
               rest_poly.frobenius() * gamma_[k] +
               phi_p(alg_->element(xk_poly), alg_->element(rest_poly)).poly();
  return alg_->reduce(value);
}

RestrictedPoissonAlgebra build_pmap(const AlgebraPtr& alg,
                                    std::vector<Poly> gamma,
                                    bool check_jacobson, uint64_t samples,
                                    uint64_t seed,
                                    uint64_t exact_degree_bound) {
  if (gamma.size() != alg->nvars())
    throw std::invalid_argument("generator image missing: expected " +
                                std::to_string(alg->nvars()) + " images, got " +
                                std::to_string(gamma.size()));
  if (check_jacobson) {
    uint32_t p = alg->characteristic().value();
    Rng rng(seed);
    for (uint32_t i = 0; i < alg->nvars(); ++i) {
      auto xi = alg->generator(i);
      auto gi = alg->element(gamma[i]);
      auto probe = [&](const PoissonElement& g) {
        auto lhs = ad_power(xi, p, g);
        auto rhs = bracket(gi, g);
        if (lhs != rhs)
          throw std::invalid_argument(
              "Jacobson hypothesis fails for generator " +
              alg->variables()[i] + " on element " + g.str() + ": ad^p = " +
              lhs.str() + ", ad_gamma = " + rhs.str());
      };
      for (uint32_t j = 0; j < alg->nvars(); ++j) probe(alg->generator(j));
      for (uint64_t s = 0; s < samples; ++s) probe(alg->random_element(rng));
      if (exact_degree_bound > 0)
        for (const auto& m : basis_monomials(alg, exact_degree_bound))
          probe(alg->element(
              Poly::from_monomial(m, Scalar::one(alg->characteristic()))));
    }
  }
  return {alg, std::make_shared<InductivePMap>(alg, std::move(gamma))};
}

Report verify_restricted_lie(const RestrictedPoissonAlgebra& A,
                             uint64_t samples, uint64_t seed) {
  Report rep;
  rep.suite = "restricted-lie";
  rep.seed = seed;
  rep.samples = samples;
  Rng rng(seed);
  const auto& alg = A.base;
  uint32_t p = alg->characteristic().value();

  Check& adp = rep.add("ad_f^p = ad_{pp(f)}");
  Check& semi = rep.add("pp(c f) = c^p pp(f)");
  Check& sum = rep.add("pp(f+g) = pp(f) + pp(g) + Lambda_p(f,g)");
  for (uint64_t s = 0; s < samples; ++s) {
    auto f = alg->random_element(rng);
    auto g = alg->random_element(rng);
    if (adp.pass) {
      auto lhs = ad_power(f, p, g);
      auto rhs = bracket(A.pp(f), g);
      if (lhs != rhs) {
        adp.pass = false;
        adp.witness = {"f = " + f.str(), "g = " + g.str(),
                       "ad_f^p(g) = " + lhs.str(),
                       "{pp(f), g} = " + rhs.str()};
      }
    }
    if (semi.pass) {
      auto c = rng.scalar(alg->characteristic());
      auto lhs = A.pp(f * c);
      auto rhs = A.pp(f) * c.frobenius();
      if (lhs != rhs) {
        semi.pass = false;
        semi.witness = {"f = " + f.str(), "c = " + std::to_string(c.value()),
                        "pp(cf) = " + lhs.str(),
                        "c^p pp(f) = " + rhs.str()};
      }
    }
    if (sum.pass) {
      auto lhs = A.pp(f + g);
      auto rhs = A.pp(f) + A.pp(g) + lambda_p(f, g);
      if (lhs != rhs) {
        sum.pass = false;
        sum.witness = {"f = " + f.str(), "g = " + g.str(),
                       "pp(f+g) = " + lhs.str(),
                       "pp(f)+pp(g)+Lambda = " + rhs.str()};
      }
    }
  }
  return rep;
}

std::vector<Monomial> basis_monomials(const AlgebraPtr& alg, uint64_t bound) {
  std::vector<Monomial> out{Monomial::one()};
  // Grow degree by degree, multiplying by single variables.
  std::vector<Monomial> layer = out;
  for (uint64_t d = 1; d <= bound; ++d) {
    std::vector<Monomial> next;
    for (const auto& m : layer) {
      uint32_t lo = m.is_one() ? alg->nvars() - 1 : m.smallest_variable();
      // Extend only by variables <= smallest used index: each monomial is
      // produced exactly once.
      for (uint32_t v = 0; v <= lo && v < alg->nvars(); ++v) {
        Monomial cand = m * Monomial::variable(v);
        if (alg->quotient() && alg->quotient()->contains(cand)) continue;
        next.push_back(cand);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Report verify_frobenius_condition(const RestrictedPoissonAlgebra& A,
                                  FrobeniusMode mode, uint64_t samples,
                                  uint64_t seed, uint64_t basis_degree_bound) {
  Report rep;
  rep.suite =
      mode == FrobeniusMode::square ? "frobenius-square" : "frobenius-product";
  rep.seed = seed;
  rep.samples = samples;
  Rng rng(seed);
  const auto& alg = A.base;
  PrimeChar p = alg->characteristic();

  if (mode == FrobeniusMode::square) {
    Check& sq = rep.add("pp(f^2) = 2 f^p pp(f)");
    auto probe = [&](const PoissonElement& f) {
      if (!sq.pass) return;
      auto lhs = A.pp(f * f);
      auto rhs = f.frobenius() * A.pp(f) * Scalar(2, p);
      if (lhs != rhs) {
        sq.pass = false;
        sq.witness = {"f = " + f.str(), "pp(f^2) = " + lhs.str(),
                      "2 f^p pp(f) = " + rhs.str()};
      }
    };
    for (uint32_t i = 0; i < alg->nvars(); ++i) probe(alg->generator(i));
    for (uint64_t s = 0; s < samples; ++s) probe(alg->random_element(rng));

    Check& pw = rep.add("pp(f^n) = n f^{(n-1)p} pp(f), n = 2..5");
    for (uint64_t s = 0; s < samples / 4 + 1 && pw.pass; ++s) {
      auto f = alg->random_element(rng);
      for (uint64_t n = 2; n <= 5; ++n) {
        auto lhs = A.pp(f.pow(n));
        auto rhs = f.frobenius().pow(n - 1) * A.pp(f) *
                   Scalar::from_int(static_cast<int64_t>(n), p);
        if (lhs != rhs) {
          pw.pass = false;
          pw.witness = {"f = " + f.str(), "n = " + std::to_string(n),
                        "pp(f^n) = " + lhs.str(),
                        "n f^{(n-1)p} pp(f) = " + rhs.str()};
          break;
        }
      }
    }
  } else {
    Check& rnd = rep.add("pp(fg) = f^p pp(g) + g^p pp(f) + Phi_p(f,g)");
    for (uint64_t s = 0; s < samples && rnd.pass; ++s) {
      auto f = alg->random_element(rng);
      auto g = alg->random_element(rng);
      auto lhs = A.pp(f * g);
      auto rhs = f.frobenius() * A.pp(g) + g.frobenius() * A.pp(f) +
                 phi_p(f, g);
      if (lhs != rhs) {
        rnd.pass = false;
        rnd.witness = {"f = " + f.str(), "g = " + g.str(),
                       "pp(fg) = " + lhs.str(),
                       "f^p pp(g) + g^p pp(f) + Phi = " + rhs.str()};
      }
    }

    Check& bas = rep.add("product rule on basis-monomial pairs, degree <= " +
                         std::to_string(basis_degree_bound));
    auto basis = basis_monomials(alg, basis_degree_bound);
    for (size_t i = 0; i < basis.size() && bas.pass; ++i)
      for (size_t j = i; j < basis.size(); ++j) {
        auto f = alg->element(
            Poly::from_monomial(basis[i], Scalar::one(p)));
        auto g = alg->element(
            Poly::from_monomial(basis[j], Scalar::one(p)));
        auto lhs = A.pp(f * g);
        auto rhs = f.frobenius() * A.pp(g) + g.frobenius() * A.pp(f) +
                   phi_p(f, g);
        if (lhs != rhs) {
          bas.pass = false;
          bas.witness = {"f = " + f.str(), "g = " + g.str(),
                         "pp(fg) = " + lhs.str(),
                         "f^p pp(g) + g^p pp(f) + Phi = " + rhs.str()};
          break;
        }
      }
  }
  return rep;
}

Report phi_identities(const AlgebraPtr& alg, uint64_t samples,
                      uint64_t seed) {
  Report rep;
  rep.suite = "phi-identities";
  rep.seed = seed;
  rep.samples = samples;
  Rng rng(seed);
  PrimeChar p = alg->characteristic();

  Check& id1 = rep.add("f^p Phi(g,h) - Phi(fg,h) + Phi(f,gh) - h^p Phi(f,g) = 0");
  Check& id2 = rep.add("Phi(cg,h) = c^p Phi(g,h) for constant c");
  Check& id3 =
      rep.add("Phi(f,g+h) - Phi(f,g) - Phi(f,h) = Lambda(fg,fh) - f^p Lambda(g,h)");
  for (uint64_t s = 0; s < samples; ++s) {
    auto f = alg->random_element(rng);
    auto g = alg->random_element(rng);
    auto h = alg->random_element(rng);
    if (id1.pass) {
      auto r = f.frobenius() * phi_p(g, h) - phi_p(f * g, h) +
               phi_p(f, g * h) - h.frobenius() * phi_p(f, g);
      if (!r.is_zero()) {
        id1.pass = false;
        id1.witness = {"f = " + f.str(), "g = " + g.str(), "h = " + h.str(),
                       "residual = " + r.str()};
      }
    }
    if (id2.pass) {
      auto c = rng.scalar(p);
      auto lhs = phi_p(g * c, h);
      auto rhs = phi_p(g, h) * c.frobenius();
      if (lhs != rhs) {
        id2.pass = false;
        id2.witness = {"c = " + std::to_string(c.value()), "g = " + g.str(),
                       "h = " + h.str(), "Phi(cg,h) = " + lhs.str(),
                       "c^p Phi(g,h) = " + rhs.str()};
      }
    }
    if (id3.pass) {
      auto lhs = phi_p(f, g + h) - phi_p(f, g) - phi_p(f, h);
      auto rhs = lambda_p(f * g, f * h) - f.frobenius() * lambda_p(g, h);
      if (lhs != rhs) {
        id3.pass = false;
        id3.witness = {"f = " + f.str(), "g = " + g.str(), "h = " + h.str(),
                       "lhs = " + lhs.str(), "rhs = " + rhs.str()};
      }
    }
  }
  return rep;
}

RestrictedPoissonAlgebra modify_pmap(const RestrictedPoissonAlgebra& A,
                                     const std::vector<Poly>& derivation_images,
                                     uint64_t samples, uint64_t seed) {
  const auto& alg = A.base;
  if (derivation_images.size() != alg->nvars())
    throw std::invalid_argument("one derivation image per generator required");

  // psi0 extended by the Leibniz rule.
  auto psi0 = [alg, derivation_images](const Poly& f) {
    Poly r = Poly::zero(alg->characteristic());
    for (uint32_t i = 0; i < alg->nvars(); ++i) {
      if (derivation_images[i].is_zero()) continue;
      r += derivation_images[i] * f.partial(i);
    }
    return r;
  };

  // Frobenius derivations must land in the Poisson center; sample it.
  Rng rng(seed);
  for (uint32_t i = 0; i < alg->nvars(); ++i) {
    Poly img = psi0(Poly::variable(i, alg->characteristic())).frobenius();
    auto z = alg->element(img);
    for (uint64_t s = 0; s < samples; ++s) {
      auto g = alg->random_element(rng);
      auto b = bracket(z, g);
      if (!b.is_zero())
        throw std::invalid_argument(
            "psi0(" + alg->variables()[i] +
            ")^p is not Poisson-central; witness g = " + g.str() +
            ", bracket = " + b.str());
    }
  }

  auto base_pmap = A.pmap;
  auto fn = [alg, base_pmap, psi0](const Poly& f) {
    return base_pmap->eval_poly(f) + psi0(f).frobenius();
  };
  return {alg, std::make_shared<ClosedFormPMap>(alg, fn)};
}

namespace {

/// Quotient p-map: evaluate on the canonical representative, reduce.
class QuotientPMap final : public PMapBase {
 public:
  QuotientPMap(AlgebraPtr quotient_alg, PMapPtr parent)
      : alg_(std::move(quotient_alg)), parent_(std::move(parent)) {}

  const AlgebraPtr& algebra() const override { return alg_; }
  Poly eval_poly(const Poly& f) const override {
    return alg_->reduce(parent_->eval_poly(alg_->reduce(f)));
  }

 private:
  AlgebraPtr alg_;
  PMapPtr parent_;
};

}  // namespace

RestrictedPoissonAlgebra quotient_restricted(const RestrictedPoissonAlgebra& A,
                                             const MonomialIdeal& ideal) {
  const auto& alg = A.base;
  PrimeChar p = alg->characteristic();

  // Poisson closure on ideal-generator x algebra-generator pairs.
  for (const auto& g : ideal.generators()) {
    Poly gm = Poly::from_monomial(g, Scalar::one(p));
    for (uint32_t j = 0; j < alg->nvars(); ++j) {
      Poly b = alg->bracket_poly(gm, Poly::variable(j, p));
      if (!b.reduce(ideal).is_zero())
        throw std::invalid_argument(
            "ideal is not Poisson-closed: {" + g.to_string(alg->variables()) +
            ", " + alg->variables()[j] + "} = " + alg->poly_string(b));
    }
    // Restrictedness on generators (the generator criterion).
    Poly ppg = A.pmap->eval_poly(gm);
    if (!ppg.reduce(ideal).is_zero())
      throw std::invalid_argument(
          "ideal is not restricted: pp(" + g.to_string(alg->variables()) +
          ") = " + alg->poly_string(ppg) + " is not in the ideal");
  }

  // Merge with an existing quotient, if any.
  std::vector<Monomial> gens = ideal.generators();
  if (alg->quotient())
    for (const auto& g : alg->quotient()->generators()) gens.push_back(g);
  MonomialIdeal merged(std::move(gens));

  PoissonAlgebra::BracketTable table;
  for (uint32_t i = 0; i < alg->nvars(); ++i)
    for (uint32_t j = i + 1; j < alg->nvars(); ++j) {
      Poly b = alg->generator_bracket(i, j);
      if (!b.is_zero()) table.insert_or_assign({i, j}, b);
    }
  auto quotient_alg =
      PoissonAlgebra::make(p, alg->variables(), std::move(table), merged);
  return {quotient_alg,
          std::make_shared<QuotientPMap>(quotient_alg, A.pmap)};
}

RestrictedPoissonAlgebra perturb_semilinear_shift(
    const RestrictedPoissonAlgebra& A, uint32_t var) {
  auto alg = A.base;
  auto base = A.pmap;
  auto fn = [alg, base, var](const Poly& f) {
    Scalar c = f.coefficient(Monomial::variable(var)).frobenius();
    return base->eval_poly(f) +
           Poly::variable(var, alg->characteristic()) * c;
  };
  return {alg, std::make_shared<ClosedFormPMap>(alg, fn)};
}

RestrictedPoissonAlgebra perturb_semilinear_central(
    const RestrictedPoissonAlgebra& A, uint32_t var) {
  auto alg = A.base;
  auto base = A.pmap;
  auto fn = [alg, base, var](const Poly& f) {
    Scalar c = f.coefficient(Monomial::variable(var)).frobenius();
    return base->eval_poly(f) +
           Poly::variable(var, alg->characteristic()).frobenius() * c;
  };
  return {alg, std::make_shared<ClosedFormPMap>(alg, fn)};
}

}  // namespace rpa
