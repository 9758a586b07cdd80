#include "rpa/poisson.hpp"

#include <stdexcept>

namespace rpa {

std::shared_ptr<const PoissonAlgebra> PoissonAlgebra::make(
    PrimeChar p, std::vector<std::string> vars, BracketTable table,
    std::optional<MonomialIdeal> quotient) {
  auto alg = make_unchecked(p, std::move(vars), std::move(table),
                            std::move(quotient));
  alg->validate();
  return alg;
}

std::shared_ptr<const PoissonAlgebra> PoissonAlgebra::make_unchecked(
    PrimeChar p, std::vector<std::string> vars, BracketTable table,
    std::optional<MonomialIdeal> quotient) {
  for (const auto& [key, f] : table) {
    if (key.first >= key.second || key.second >= vars.size())
      throw std::invalid_argument("bracket table keys must satisfy i < j < nvars");
    if (!(f.characteristic() == p))
      throw std::invalid_argument("bracket table entry with wrong characteristic");
  }
  if (quotient) {
    for (auto& [key, f] : table) f = f.reduce(*quotient);
  }
  return std::shared_ptr<const PoissonAlgebra>(
      new PoissonAlgebra(p, std::move(vars), std::move(table),
                         std::move(quotient)));
}

void PoissonAlgebra::validate() const {
  // Jacobi on generator triples; the biderivation extension then satisfies
  // Jacobi everywhere.
  for (uint32_t i = 0; i < nvars(); ++i)
    for (uint32_t j = i; j < nvars(); ++j)
      for (uint32_t k = j; k < nvars(); ++k) {
        Poly xi = Poly::variable(i, p_), xj = Poly::variable(j, p_),
             xk = Poly::variable(k, p_);
        Poly jac = bracket_poly(xi, bracket_poly(xj, xk)) +
                   bracket_poly(xj, bracket_poly(xk, xi)) +
                   bracket_poly(xk, bracket_poly(xi, xj));
        if (!jac.is_zero())
          throw std::invalid_argument(
              "Jacobi identity fails on generators (" + vars_[i] + ", " +
              vars_[j] + ", " + vars_[k] + "): " + poly_string(jac));
      }
  if (quotient_) {
    // Bracket-closedness on ideal-generator x algebra-generator pairs
    // extends to the whole ideal by the Leibniz rule.
    for (const auto& g : quotient_->generators()) {
      Poly gm = Poly::from_monomial(g, Scalar::one(p_));
      for (uint32_t j = 0; j < nvars(); ++j) {
        Poly b = bracket_poly(gm, Poly::variable(j, p_), /*reduced=*/false);
        if (!b.reduce(*quotient_).is_zero())
          throw std::invalid_argument(
              "quotient ideal is not bracket-closed: {" +
              g.to_string(vars_) + ", " + vars_[j] + "} = " + poly_string(b));
      }
    }
  }
}

Poly PoissonAlgebra::generator_bracket(uint32_t i, uint32_t j) const {
  if (i == j) return Poly::zero(p_);
  if (i < j) {
    auto it = table_.find({i, j});
    return it == table_.end() ? Poly::zero(p_) : it->second;
  }
  return -generator_bracket(j, i);
}

Poly PoissonAlgebra::bracket_poly(const Poly& f, const Poly& g,
                                  bool reduced) const {
  Poly r = Poly::zero(p_);
  for (const auto& [key, c] : table_) {
    if (c.is_zero()) continue;
    auto [i, j] = key;
    r += c * (f.partial(i) * g.partial(j) - f.partial(j) * g.partial(i));
  }
  return reduced ? reduce(r) : r;
}

PoissonElement PoissonAlgebra::element(const Poly& f) const {
  if (!(f.characteristic() == p_))
    throw std::invalid_argument("polynomial characteristic mismatch");
  return PoissonElement(shared_from_this(), f);
}

PoissonElement PoissonAlgebra::element(int64_t c) const {
  return element(Poly::constant(c, p_));
}

PoissonElement PoissonAlgebra::generator(uint32_t i) const {
  if (i >= nvars()) throw std::out_of_range("generator index");
  return element(Poly::variable(i, p_));
}

PoissonElement PoissonAlgebra::zero() const { return element(Poly::zero(p_)); }

PoissonElement PoissonAlgebra::one() const { return element(1); }

PoissonElement PoissonAlgebra::random_element(Rng& rng, uint32_t max_degree,
                                              uint32_t max_terms) const {
  return element(rng.poly(p_, nvars(), max_degree, max_terms));
}

PoissonElement bracket(const PoissonElement& f, const PoissonElement& g) {
  if (f.algebra() != g.algebra())
    throw std::invalid_argument("bracket of elements from different algebras");
  return f.algebra()->element(
      f.algebra()->bracket_poly(f.poly(), g.poly()));
}

PoissonElement nested_bracket(const std::vector<PoissonElement>& args) {
  if (args.size() < 2)
    throw std::invalid_argument("nested bracket needs at least two arguments");
  PoissonElement acc = args.back();
  for (size_t i = args.size() - 1; i-- > 0;) acc = bracket(args[i], acc);
  return acc;
}

PoissonElement ad_power(const PoissonElement& x, uint64_t k,
                        const PoissonElement& y) {
  PoissonElement r = y;
  for (uint64_t i = 0; i < k; ++i) r = bracket(x, r);
  return r;
}

Report verify_poisson(const AlgebraPtr& alg, uint64_t samples, uint64_t seed) {
  Report rep;
  rep.suite = "poisson";
  rep.seed = seed;
  rep.samples = samples;
  Rng rng(seed);

  auto witness2 = [&](const PoissonElement& a, const PoissonElement& b,
                      const PoissonElement& lhs, const PoissonElement& rhs) {
    return std::vector<std::string>{"f = " + a.str(), "g = " + b.str(),
                                    "lhs = " + lhs.str(),
                                    "rhs = " + rhs.str()};
  };

  // Jacobi, exhaustive on generator triples.
  {
    Check& c = rep.add("jacobi identity on generator triples");
    for (uint32_t i = 0; i < alg->nvars() && c.pass; ++i)
      for (uint32_t j = i; j < alg->nvars() && c.pass; ++j)
        for (uint32_t k = j; k < alg->nvars(); ++k) {
          auto x = alg->generator(i), y = alg->generator(j),
               z = alg->generator(k);
          auto jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                     bracket(z, bracket(x, y));
          if (!jac.is_zero()) {
            c.pass = false;
            c.witness = {"triple = (" + x.str() + ", " + y.str() + ", " +
                             z.str() + ")",
                         "jacobiator = " + jac.str()};
            break;
          }
        }
  }

  // Randomized identities.
  Check& anti = rep.add("antisymmetry {f,g} + {g,f} = 0");
  Check& alt = rep.add("alternating {f,f} = 0");
  Check& jac = rep.add("jacobi identity on random triples");
  Check& leib = rep.add("leibniz {fg,h} = f{g,h} + g{f,h}");
  for (uint64_t s = 0; s < samples; ++s) {
    auto f = alg->random_element(rng);
    auto g = alg->random_element(rng);
    auto h = alg->random_element(rng);

    if (anti.pass) {
      auto lhs = bracket(f, g) + bracket(g, f);
      if (!lhs.is_zero()) {
        anti.pass = false;
        anti.witness = witness2(f, g, bracket(f, g), -bracket(g, f));
      }
    }
    if (alt.pass && !bracket(f, f).is_zero()) {
      alt.pass = false;
      alt.witness = {"f = " + f.str(), "{f,f} = " + bracket(f, f).str()};
    }
    if (jac.pass) {
      auto j3 = bracket(f, bracket(g, h)) + bracket(g, bracket(h, f)) +
                bracket(h, bracket(f, g));
      if (!j3.is_zero()) {
        jac.pass = false;
        jac.witness = {"f = " + f.str(), "g = " + g.str(), "h = " + h.str(),
                       "jacobiator = " + j3.str()};
      }
    }
    if (leib.pass) {
      auto lhs = bracket(f * g, h);
      auto rhs = f * bracket(g, h) + g * bracket(f, h);
      if (lhs != rhs) {
        leib.pass = false;
        leib.witness = {"f = " + f.str(), "g = " + g.str(), "h = " + h.str(),
                        "lhs = " + lhs.str(), "rhs = " + rhs.str()};
      }
    }
  }

  // Quotient well-definedness: bracket-then-reduce equals
  // reduce-then-bracket on raw inputs.
  if (alg->quotient()) {
    Check& c = rep.add("quotient bracket well-defined");
    for (uint64_t s = 0; s < samples && c.pass; ++s) {
      Poly f = rng.poly(alg->characteristic(), alg->nvars());
      Poly g = rng.poly(alg->characteristic(), alg->nvars());
      Poly via_raw = alg->reduce(alg->bracket_poly(f, g, /*reduced=*/false));
      Poly via_reduced = alg->bracket_poly(alg->reduce(f), alg->reduce(g));
      if (via_raw != via_reduced) {
        c.pass = false;
        c.witness = {"f = " + alg->poly_string(f),
                     "g = " + alg->poly_string(g),
                     "bracket then reduce = " + alg->poly_string(via_raw),
                     "reduce then bracket = " + alg->poly_string(via_reduced)};
      }
    }
  }

  return rep;
}

}  // namespace rpa
