#include "rpa/lie.hpp"

#include <algorithm>
#include <stdexcept>

namespace rpa {

RestrictedLieAlgebra RestrictedLieAlgebra::make(
    PrimeChar p, std::vector<std::string> basis,
    std::map<std::pair<uint32_t, uint32_t>, Vec> brackets,
    std::vector<Vec> basis_pmap) {
  RestrictedLieAlgebra L(p, std::move(basis), std::move(brackets),
                         std::move(basis_pmap));
  if (L.pmap_.size() != L.dim())
    throw std::invalid_argument("basis p-map must cover every basis element");
  for (const auto& [key, v] : L.brackets_) {
    if (key.first >= key.second || key.second >= L.dim())
      throw std::invalid_argument("bracket keys must satisfy i < j < dim");
    if (v.size() != L.dim())
      throw std::invalid_argument("bracket coordinates have wrong length");
  }
  L.validate();
  return L;
}

RestrictedLieAlgebra::Vec RestrictedLieAlgebra::basis_vector(uint32_t i) const {
  Vec v = zero();
  v[i] = Scalar::one(p_);
  return v;
}

RestrictedLieAlgebra::Vec RestrictedLieAlgebra::bracket(const Vec& u,
                                                        const Vec& v) const {
  Vec r = zero();
  for (uint32_t i = 0; i < dim(); ++i) {
    if (u[i].is_zero()) continue;
    for (uint32_t j = 0; j < dim(); ++j) {
      if (v[j].is_zero() || i == j) continue;
      Scalar c = u[i] * v[j];
      auto it = brackets_.find({std::min(i, j), std::max(i, j)});
      if (it == brackets_.end()) continue;
      if (i > j) c = -c;
      for (uint32_t k = 0; k < dim(); ++k) r[k] += c * it->second[k];
    }
  }
  return r;
}

RestrictedLieAlgebra::Vec RestrictedLieAlgebra::add(const Vec& u,
                                                    const Vec& v) const {
  Vec r = u;
  for (uint32_t k = 0; k < dim(); ++k) r[k] += v[k];
  return r;
}

RestrictedLieAlgebra::Vec RestrictedLieAlgebra::scale(const Vec& u,
                                                      const Scalar& c) const {
  Vec r = u;
  for (auto& x : r) x *= c;
  return r;
}

RestrictedLieAlgebra::Vec RestrictedLieAlgebra::lambda(const Vec& u,
                                                       const Vec& v) const {
  return jacobson_lambda(
      u, v, p_, zero(),
      [this](const Vec& a, const Vec& b) { return bracket(a, b); },
      [this](const Vec& a, const Vec& b) { return add(a, b); },
      [this](const Vec& a, const Scalar& c) { return scale(a, c); });
}

RestrictedLieAlgebra::Vec RestrictedLieAlgebra::pmap(const Vec& u) const {
  Vec acc_sum = zero();
  Vec acc = zero();
  bool first = true;
  for (uint32_t i = 0; i < dim(); ++i) {
    if (u[i].is_zero()) continue;
    Vec term = scale(basis_vector(i), u[i]);
    acc = add(acc, scale(pmap_[i], u[i].frobenius()));
    if (!first) acc = add(acc, lambda(acc_sum, term));
    acc_sum = add(acc_sum, term);
    first = false;
  }
  return acc;
}

std::string RestrictedLieAlgebra::str(const Vec& u) const {
  std::string s;
  for (uint32_t i = 0; i < dim(); ++i) {
    if (u[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    if (u[i].value() != 1) s += std::to_string(u[i].value()) + "*";
    s += basis_[i];
  }
  return s.empty() ? "0" : s;
}

void RestrictedLieAlgebra::validate() const {
  // Jacobi on basis triples.
  for (uint32_t i = 0; i < dim(); ++i)
    for (uint32_t j = i; j < dim(); ++j)
      for (uint32_t k = j; k < dim(); ++k) {
        Vec a = basis_vector(i), b = basis_vector(j), c = basis_vector(k);
        Vec jac = add(add(bracket(a, bracket(b, c)), bracket(b, bracket(c, a))),
                      bracket(c, bracket(a, b)));
        for (const auto& x : jac)
          if (!x.is_zero())
            throw std::invalid_argument("Jacobi fails on basis triple (" +
                                        basis_[i] + "," + basis_[j] + "," +
                                        basis_[k] + ")");
      }
  // Jacobson condition, exact on basis pairs.
  for (uint32_t i = 0; i < dim(); ++i)
    for (uint32_t j = 0; j < dim(); ++j) {
      Vec lhs = basis_vector(j);
      for (uint32_t k = 0; k < p_.value(); ++k) lhs = bracket(basis_vector(i), lhs);
      Vec rhs = bracket(pmap_[i], basis_vector(j));
      for (uint32_t k = 0; k < dim(); ++k)
        if (lhs[k] != rhs[k])
          throw std::invalid_argument("Jacobson condition fails: ad_" +
                                      basis_[i] + "^p(" + basis_[j] +
                                      ") != [" + basis_[i] + "^[p], " +
                                      basis_[j] + "]");
    }
}

RestrictedLieAlgebra RestrictedLieAlgebra::sl2(PrimeChar p) {
  std::map<std::pair<uint32_t, uint32_t>, Vec> br;
  auto vec = [&](int64_t a, int64_t b, int64_t c) {
    return Vec{Scalar::from_int(a, p), Scalar::from_int(b, p),
               Scalar::from_int(c, p)};
  };
  // basis e, h, f
  br[{0, 1}] = vec(-2, 0, 0);  // [e, h] = -2e
  br[{0, 2}] = vec(0, 1, 0);   // [e, f] = h
  br[{1, 2}] = vec(0, 0, -2);  // [h, f] = -2f
  std::vector<Vec> pm{vec(0, 0, 0), vec(0, 1, 0), vec(0, 0, 0)};
  return make(p, {"e", "h", "f"}, std::move(br), std::move(pm));
}

RestrictedLieAlgebra RestrictedLieAlgebra::solvable2(PrimeChar p) {
  std::map<std::pair<uint32_t, uint32_t>, Vec> br;
  br[{0, 1}] = Vec{Scalar::one(p), Scalar::zero(p)};  // [x, y] = x
  std::vector<Vec> pm{Vec{Scalar::zero(p), Scalar::zero(p)},
                      Vec{Scalar::zero(p), Scalar::one(p)}};
  return make(p, {"x", "y"}, std::move(br), std::move(pm));
}

RestrictedLieAlgebra RestrictedLieAlgebra::abelian(uint32_t n, PrimeChar p) {
  std::vector<std::string> names;
  for (uint32_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  std::vector<Vec> pm(n, Vec(n, Scalar::zero(p)));
  return make(p, std::move(names), {}, std::move(pm));
}

Report verify_restricted_lie_fd(const RestrictedLieAlgebra& L,
                                uint64_t samples, uint64_t seed) {
  Report rep;
  rep.suite = "restricted-lie-fd";
  rep.seed = seed;
  rep.samples = samples;
  PrimeChar p = L.characteristic();
  Rng rng(seed);

  Check& adp = rep.add("ad_{x_i}^p = ad_{x_i^[p]} on basis pairs");
  for (uint32_t i = 0; i < L.dim() && adp.pass; ++i)
    for (uint32_t j = 0; j < L.dim(); ++j) {
      auto lhs = L.basis_vector(j);
      for (uint32_t k = 0; k < p.value(); ++k)
        lhs = L.bracket(L.basis_vector(i), lhs);
      auto rhs = L.bracket(L.basis_pmap(i), L.basis_vector(j));
      if (lhs != rhs) {
        adp.pass = false;
        adp.witness = {"i = " + L.basis()[i], "j = " + L.basis()[j],
                       "ad^p = " + L.str(lhs), "ad_{pmap} = " + L.str(rhs)};
        break;
      }
    }

  Check& semi = rep.add("(c u)^[p] = c^p u^[p]");
  for (uint64_t s = 0; s < samples && semi.pass; ++s) {
    auto u = L.zero();
    for (uint32_t i = 0; i < L.dim(); ++i) u[i] = rng.scalar(p);
    auto c = rng.scalar(p);
    auto lhs = L.pmap(L.scale(u, c));
    auto rhs = L.scale(L.pmap(u), c.frobenius());
    if (lhs != rhs) {
      semi.pass = false;
      semi.witness = {"u = " + L.str(u), "c = " + std::to_string(c.value()),
                      "(cu)^[p] = " + L.str(lhs),
                      "c^p u^[p] = " + L.str(rhs)};
    }
  }

  Check& sum = rep.add("(x_i + x_j)^[p] = x_i^[p] + x_j^[p] + Lambda_p");
  for (uint32_t i = 0; i < L.dim() && sum.pass; ++i)
    for (uint32_t j = 0; j < L.dim(); ++j) {
      if (i == j) continue;
      auto lhs = L.pmap(L.add(L.basis_vector(i), L.basis_vector(j)));
      auto rhs = L.add(L.add(L.basis_pmap(i), L.basis_pmap(j)),
                       L.lambda(L.basis_vector(i), L.basis_vector(j)));
      if (lhs != rhs) {
        sum.pass = false;
        sum.witness = {"i = " + L.basis()[i], "j = " + L.basis()[j],
                       "lhs = " + L.str(lhs), "rhs = " + L.str(rhs)};
        break;
      }
    }
  return rep;
}

RestrictedPoissonAlgebra symmetric_poisson(const RestrictedLieAlgebra& L) {
  PrimeChar p = L.characteristic();
  PoissonAlgebra::BracketTable table;
  auto to_poly = [&](const RestrictedLieAlgebra::Vec& v) {
    Poly f = Poly::zero(p);
    for (uint32_t k = 0; k < L.dim(); ++k)
      f += Poly::variable(k, p) * v[k];
    return f;
  };
  for (uint32_t i = 0; i < L.dim(); ++i)
    for (uint32_t j = i + 1; j < L.dim(); ++j) {
      Poly b = to_poly(L.bracket(L.basis_vector(i), L.basis_vector(j)));
      if (!b.is_zero()) table.insert_or_assign({i, j}, b);
    }
  auto alg = PoissonAlgebra::make(p, L.basis(), std::move(table));
  std::vector<Poly> gamma;
  for (uint32_t i = 0; i < L.dim(); ++i) gamma.push_back(to_poly(L.basis_pmap(i)));
  return build_pmap(alg, std::move(gamma));
}

RestrictedPoissonAlgebra truncated_symmetric(const RestrictedLieAlgebra& L) {
  auto S = symmetric_poisson(L);
  std::vector<Monomial> gens;
  for (uint32_t i = 0; i < L.dim(); ++i)
    gens.push_back(Monomial::variable(i, L.characteristic().value()));
  return quotient_restricted(S, MonomialIdeal(std::move(gens)));
}

namespace {

/// p-map of a tensor product, determined on split monomials by
/// pp(a (x) b) = pp(a) (x) b^p + a^p (x) pp(b) and extended by the fold.
class TensorPMap final : public FoldPMap {
 public:
  TensorPMap(AlgebraPtr tensor_alg, RestrictedPoissonAlgebra left,
             RestrictedPoissonAlgebra right, uint32_t left_vars)
      : FoldPMap(std::move(tensor_alg)),
        left_(std::move(left)),
        right_(std::move(right)),
        nleft_(left_vars) {}

 protected:
  Poly monomial_rule(const Monomial& m) const override {
    PrimeChar p = alg_->characteristic();
    std::vector<Monomial::Factor> fa, fb;
    for (const auto& [v, e] : m.factors())
      (v < nleft_ ? fa : fb).emplace_back(v < nleft_ ? v : v - nleft_, e);
    Monomial ma = Monomial::from_factors(std::move(fa));
    Monomial mb = Monomial::from_factors(std::move(fb));
    Poly a = Poly::from_monomial(ma, Scalar::one(p));
    Poly b = Poly::from_monomial(mb, Scalar::one(p));

    std::vector<uint32_t> shift(right_.base->nvars());
    for (uint32_t v = 0; v < shift.size(); ++v) shift[v] = v + nleft_;

    Poly pa = left_.pmap->eval_poly(a);
    Poly pb = right_.pmap->eval_poly(b).rename_variables(shift);
    Poly bfrob = b.frobenius().rename_variables(shift);
    return alg_->reduce(pa * bfrob + a.frobenius() * pb);
  }

 private:
  RestrictedPoissonAlgebra left_;
  RestrictedPoissonAlgebra right_;
  uint32_t nleft_;
};

}  // namespace

RestrictedPoissonAlgebra tensor_product(const RestrictedPoissonAlgebra& A,
                                        const RestrictedPoissonAlgebra& B) {
  PrimeChar p = A.base->characteristic();
  if (!(p == B.base->characteristic()))
    throw std::invalid_argument("tensor factors have different characteristic");
  uint32_t na = A.base->nvars(), nb = B.base->nvars();

  // Disjoint variable names; colliding right-hand names get a suffix.
  std::vector<std::string> names = A.base->variables();
  for (const auto& bn : B.base->variables()) {
    std::string candidate = bn;
    uint32_t k = 2;
    while (std::find(names.begin(), names.end(), candidate) != names.end())
      candidate = bn + "_" + std::to_string(k++);
    names.push_back(candidate);
  }

  std::vector<uint32_t> shift(nb);
  for (uint32_t v = 0; v < nb; ++v) shift[v] = v + na;

  PoissonAlgebra::BracketTable table;
  for (uint32_t i = 0; i < na; ++i)
    for (uint32_t j = i + 1; j < na; ++j) {
      Poly b = A.base->generator_bracket(i, j);
      if (!b.is_zero()) table.insert_or_assign({i, j}, b);
    }
  for (uint32_t i = 0; i < nb; ++i)
    for (uint32_t j = i + 1; j < nb; ++j) {
      Poly b = B.base->generator_bracket(i, j);
      if (!b.is_zero()) table.insert_or_assign({i + na, j + na}, b.rename_variables(shift));
    }

  std::optional<MonomialIdeal> quotient;
  std::vector<Monomial> gens;
  if (A.base->quotient())
    for (const auto& g : A.base->quotient()->generators()) gens.push_back(g);
  if (B.base->quotient())
    for (const auto& g : B.base->quotient()->generators()) {
      std::vector<Monomial::Factor> fs;
      for (const auto& [v, e] : g.factors()) fs.emplace_back(v + na, e);
      gens.push_back(Monomial::from_factors(std::move(fs)));
    }
  if (!gens.empty()) quotient = MonomialIdeal(std::move(gens));

  auto alg = PoissonAlgebra::make(p, std::move(names), std::move(table),
                                  std::move(quotient));
  return {alg, std::make_shared<TensorPMap>(alg, A, B, na)};
}

namespace {

Poly coproduct(const Poly& f, const AlgebraPtr& T, uint32_t n) {
  PrimeChar p = f.characteristic();
  Poly out = Poly::zero(p);
  for (const auto& [m, c] : f.terms()) {
    Poly term = Poly::constant(c);
    for (const auto& [v, e] : m.factors()) {
      Poly primitive = Poly::variable(v, p) + Poly::variable(v + n, p);
      term *= primitive.pow(e);
    }
    out += term;
  }
  return T->reduce(out);
}

Poly antipode(const Poly& f) {
  Poly out = Poly::zero(f.characteristic());
  for (const auto& [m, c] : f.terms())
    out.add_term(m, m.degree() % 2 == 0 ? c : -c);
  return out;
}

}  // namespace

Report hopf_check(const RestrictedPoissonAlgebra& H, uint64_t degree_bound) {
  Report rep;
  rep.suite = "hopf";
  rep.samples = degree_bound;
  const auto& alg = H.base;
  PrimeChar p = alg->characteristic();
  uint32_t n = alg->nvars();

  auto T = tensor_product(H, H);
  auto basis = basis_monomials(alg, degree_bound);
  auto elem = [&](const Monomial& m) {
    return Poly::from_monomial(m, Scalar::one(p));
  };

  Check& cb = rep.add("Delta preserves the bracket");
  for (size_t i = 0; i < basis.size() && cb.pass; ++i)
    for (size_t j = i; j < basis.size(); ++j) {
      Poly u = elem(basis[i]), v = elem(basis[j]);
      Poly lhs = coproduct(alg->bracket_poly(u, v), T.base, n);
      Poly rhs = T.base->bracket_poly(coproduct(u, T.base, n),
                                      coproduct(v, T.base, n));
      if (lhs != rhs) {
        cb.pass = false;
        cb.witness = {"u = " + alg->poly_string(u),
                      "v = " + alg->poly_string(v),
                      "Delta({u,v}) = " + T.base->poly_string(lhs),
                      "{Delta u, Delta v} = " + T.base->poly_string(rhs)};
        break;
      }
    }

  Check& cp = rep.add("Delta preserves the p-map");
  for (const auto& m : basis) {
    if (!cp.pass) break;
    Poly u = elem(m);
    Poly lhs = coproduct(H.pmap->eval_poly(u), T.base, n);
    Poly rhs = T.pmap->eval_poly(coproduct(u, T.base, n));
    if (lhs != rhs) {
      cp.pass = false;
      cp.witness = {"u = " + alg->poly_string(u),
                    "Delta(pp(u)) = " + T.base->poly_string(lhs),
                    "pp(Delta(u)) = " + T.base->poly_string(rhs)};
    }
  }

  Check& ce = rep.add("epsilon kills pp of the augmentation ideal");
  for (const auto& m : basis) {
    if (!ce.pass) break;
    if (m.is_one()) continue;
    Poly ppv = H.pmap->eval_poly(elem(m));
    if (!ppv.constant_term().is_zero()) {
      ce.pass = false;
      ce.witness = {"u = " + m.to_string(alg->variables()),
                    "pp(u) = " + alg->poly_string(ppv)};
    }
  }

  Check& cs = rep.add("antipode is a bracket anti-homomorphism");
  for (size_t i = 0; i < basis.size() && cs.pass; ++i)
    for (size_t j = i; j < basis.size(); ++j) {
      Poly u = elem(basis[i]), v = elem(basis[j]);
      Poly lhs = antipode(alg->bracket_poly(u, v));
      Poly rhs = alg->bracket_poly(antipode(v), antipode(u));
      if (lhs != rhs) {
        cs.pass = false;
        cs.witness = {"u = " + alg->poly_string(u),
                      "v = " + alg->poly_string(v),
                      "S({u,v}) = " + alg->poly_string(lhs),
                      "{S(v),S(u)} = " + alg->poly_string(rhs)};
        break;
      }
    }

  Check& info = rep.add("antipode commutes with the p-map");
  info.informational = true;
  for (const auto& m : basis) {
    if (!info.pass) break;
    Poly u = elem(m);
    Poly lhs = antipode(H.pmap->eval_poly(u));
    Poly rhs = H.pmap->eval_poly(antipode(u));
    if (lhs != rhs) {
      info.pass = false;
      info.witness = {"u = " + alg->poly_string(u),
                      "S(pp(u)) = " + alg->poly_string(lhs),
                      "pp(S(u)) = " + alg->poly_string(rhs)};
    }
  }

  return rep;
}

namespace {

Poly classical2_pmap_p3(const Poly& f) {
  Poly fx = f.partial(0), fy = f.partial(1);
  Poly fxx = fx.partial(0), fxy = fx.partial(1), fyy = fy.partial(1);
  return fx * fx * fyy + fy * fy * fxx + fx * fy * fxy;
}

Poly classical2_pmap_p5(const Poly& f) {
  auto d = [&](uint32_t a, uint32_t b) {
    return f.iterated_partial(0, a).iterated_partial(1, b);
  };
  PrimeChar p = f.characteristic();
  Scalar two(2, p);
  Poly f1 = d(1, 0), f2 = d(0, 1);
  Poly f11 = d(2, 0), f12 = d(1, 1), f22 = d(0, 2);
  Poly f111 = d(3, 0), f112 = d(2, 1), f122 = d(1, 2), f222 = d(0, 3);
  Poly f1111 = d(4, 0), f1112 = d(3, 1), f1122 = d(2, 2), f1222 = d(1, 3),
       f2222 = d(0, 4);

  Poly head = f1.pow(4) * f2222 + f1.pow(3) * f2 * f1222 +
              f1.pow(2) * f2.pow(2) * f1122 + f1 * f2.pow(3) * f1112 +
              f2.pow(4) * f1111;
  Poly mid1 = f12 * (f1.pow(3) * f222 - f1.pow(2) * f2 * f122 -
                     f1 * f2.pow(2) * f112 + f2.pow(3) * f111);
  Poly mid2 = f1 * f22 *
              (f1.pow(2) * f122 - two * f1 * f2 * f112 + f2.pow(2) * f111);
  Poly mid3 = f2 * f11 *
              (f2.pow(2) * f112 - two * f2 * f1 * f122 + f1.pow(2) * f222);
  Poly tail = (f12 * f12 - f11 * f22) *
              (f1.pow(2) * f22 - two * f1 * f2 * f12 + f2.pow(2) * f11) * two;
  return head + mid1 - mid2 - mid3 + tail;
}

RestrictedPoissonAlgebra make_classical2(PrimeChar p) {
  PoissonAlgebra::BracketTable table;
  table.insert_or_assign({0, 1}, Poly::constant(1, p));
  auto alg = PoissonAlgebra::make(p, {"x", "y"}, std::move(table));
  std::function<Poly(const Poly&)> fn;
  if (p.value() == 3)
    fn = classical2_pmap_p3;
  else
    fn = classical2_pmap_p5;
  return {alg, std::make_shared<ClosedFormPMap>(alg, fn)};
}

RestrictedPoissonAlgebra make_affine_bracket(PrimeChar p) {
  // phi = lam*x + mu*y + nu with (lam, mu, nu) = (1, 1, 1).
  Scalar lam(1, p), mu(1, p), nu(1, p);
  Poly phi = Poly::variable(0, p) * lam + Poly::variable(1, p) * mu +
             Poly::constant(nu);
  PoissonAlgebra::BracketTable table;
  table.insert_or_assign({0, 1}, phi);
  auto alg = PoissonAlgebra::make(p, {"x", "y"}, std::move(table));
  auto fn = [phi, lam, mu, p](const Poly& f) {
    Poly fx = f.partial(0), fy = f.partial(1);
    Poly fxx = fx.partial(0), fxy = fx.partial(1), fyy = fy.partial(1);
    Poly x = Poly::variable(0, f.characteristic());
    Poly y = Poly::variable(1, f.characteristic());
    return phi * fx * fy * fy * lam + phi * fx * fx * fy * mu +
           phi * phi * (fx * fx * fyy + fy * fy * fxx + fx * fy * fxy) +
           y * fy.pow(3) * (lam * lam) + x * fx.pow(3) * (mu * mu);
  };
  return {alg, std::make_shared<ClosedFormPMap>(alg, fn)};
}

RestrictedPoissonAlgebra make_constant_bracket(PrimeChar p, uint32_t n) {
  // Antisymmetric c over F_3 with {x_i, x_j} = 2 c_ij.
  std::vector<std::vector<Scalar>> c(n, std::vector<Scalar>(n, Scalar::zero(p)));
  auto set = [&](uint32_t i, uint32_t j, int64_t v) {
    c[i][j] = Scalar::from_int(v, p);
    c[j][i] = -c[i][j];
  };
  set(0, 1, 1);
  if (n > 2) {
    set(0, 2, 2);
    set(1, 2, 1);
  }
  PoissonAlgebra::BracketTable table;
  std::vector<std::string> names;
  for (uint32_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = i + 1; j < n; ++j)
      if (!c[i][j].is_zero())
        table.insert_or_assign({i, j}, Poly::constant(c[i][j] * Scalar(2, p)));
  auto alg = PoissonAlgebra::make(p, std::move(names), std::move(table));
  auto fn = [c, n](const Poly& f) {
    Poly out = Poly::zero(f.characteristic());
    std::vector<Poly> df;
    for (uint32_t i = 0; i < n; ++i) df.push_back(f.partial(i));
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j) {
        if (c[i][j].is_zero()) continue;
        for (uint32_t k = 0; k < n; ++k)
          for (uint32_t l = 0; l < n; ++l) {
            if (c[k][l].is_zero()) continue;
            Poly fjl = df[j].partial(l);
            if (fjl.is_zero()) continue;
            out += df[i] * df[k] * fjl * (c[i][j] * c[k][l]);
          }
      }
    return out;
  };
  return {alg, std::make_shared<ClosedFormPMap>(alg, fn)};
}

RestrictedPoissonAlgebra make_trivial_extension(PrimeChar p) {
  PoissonAlgebra::BracketTable table;
  table.insert_or_assign({0, 1}, Poly::variable(0, p));
  std::vector<Monomial> gens{Monomial::variable(0, 2), Monomial::variable(1, 2),
                             Monomial::variable(0) * Monomial::variable(1)};
  auto alg = PoissonAlgebra::make(p, {"x", "y"}, std::move(table),
                                  MonomialIdeal(std::move(gens)));
  auto fn = [p](const Poly& f) {
    Scalar l1 = f.coefficient(Monomial::variable(0));
    Scalar l2 = f.coefficient(Monomial::variable(1));
    Poly lin = Poly::variable(0, p) * l1 + Poly::variable(1, p) * l2;
    return lin * l2.pow(p.value() - 1);
  };
  return {alg, std::make_shared<ClosedFormPMap>(alg, fn)};
}

RestrictedPoissonAlgebra make_truncated_b2n(PrimeChar p, uint32_t n) {
  PoissonAlgebra::BracketTable table;
  std::vector<std::string> names;
  for (uint32_t i = 0; i < 2 * n; ++i)
    names.push_back("x" + std::to_string(i + 1));
  for (uint32_t i = 0; i < n; ++i)
    table.insert_or_assign({i, n + i}, Poly::constant(1, p));
  auto alg = PoissonAlgebra::make(p, std::move(names), std::move(table));
  auto A = build_pmap(alg, std::vector<Poly>(2 * n, Poly::zero(p)));
  std::vector<Monomial> gens;
  for (uint32_t i = 0; i < 2 * n; ++i)
    gens.push_back(Monomial::variable(i, p.value()));
  return quotient_restricted(A, MonomialIdeal(std::move(gens)));
}

}  // namespace

RestrictedPoissonAlgebra catalog(const std::string& name, PrimeChar p) {
  auto require_p = [&](uint32_t want) {
    if (p.value() != want)
      throw std::invalid_argument("catalog entry '" + name + "' requires p = " +
                                  std::to_string(want));
  };
  if (name == "classical2") {
    require_p(3);
    return make_classical2(p);
  }
  if (name == "classical2-p5") {
    require_p(5);
    return make_classical2(p);
  }
  if (name == "affine-bracket-p3") {
    require_p(3);
    return make_affine_bracket(p);
  }
  if (name == "constant-bracket-n") {
    require_p(3);
    return make_constant_bracket(p, 3);
  }
  if (name == "trivial-extension") return make_trivial_extension(p);
  if (name == "truncated-B2n") return make_truncated_b2n(p, 1);
  if (name == "sl2-sym") return symmetric_poisson(RestrictedLieAlgebra::sl2(p));
  if (name == "sl2-trunc")
    return truncated_symmetric(RestrictedLieAlgebra::sl2(p));
  throw std::invalid_argument("unknown catalog name: " + name);
}

std::vector<std::string> catalog_names() {
  return {"classical2",       "classical2-p5",  "affine-bracket-p3",
          "constant-bracket-n", "trivial-extension", "truncated-B2n",
          "sl2-sym",          "sl2-trunc"};
}

}  // namespace rpa
