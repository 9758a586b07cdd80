#include "rpa/kahler.hpp"

#include <stdexcept>

namespace rpa {

KahlerForm::KahlerForm(AlgebraPtr alg)
    : alg_(std::move(alg)),
      coeffs_(alg_->nvars(), Poly::zero(alg_->characteristic())) {}

KahlerForm::KahlerForm(AlgebraPtr alg, std::vector<Poly> coeffs)
    : alg_(std::move(alg)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != alg_->nvars())
    throw std::invalid_argument("one coefficient per generator expected");
}

bool KahlerForm::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

KahlerForm KahlerForm::operator+(const KahlerForm& o) const {
  check(o);
  KahlerForm r = *this;
  for (uint32_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
  return r;
}

KahlerForm KahlerForm::operator-(const KahlerForm& o) const {
  check(o);
  KahlerForm r = *this;
  for (uint32_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
  return r;
}

KahlerForm KahlerForm::operator-() const {
  KahlerForm r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

KahlerForm KahlerForm::operator*(const Scalar& c) const {
  KahlerForm r = *this;
  for (auto& f : r.coeffs_) f = f * c;
  return r;
}

KahlerForm KahlerForm::scaled_by(const Poly& f) const {
  KahlerForm r = *this;
  for (auto& c : r.coeffs_) c = c * f;
  return r;
}

bool KahlerForm::operator==(const KahlerForm& o) const {
  return alg_ == o.alg_ && coeffs_ == o.coeffs_;
}

std::string KahlerForm::str() const {
  std::string s;
  for (uint32_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + alg_->poly_string(coeffs_[i]) + ")d" + alg_->variables()[i];
  }
  return s.empty() ? "0" : s;
}

KahlerForm differential(const PoissonElement& f) {
  const auto& alg = f.algebra();
  std::vector<Poly> coeffs;
  for (uint32_t i = 0; i < alg->nvars(); ++i)
    coeffs.push_back(f.poly().partial(i));
  return KahlerForm(alg, std::move(coeffs));
}

KahlerForm form_bracket(const KahlerForm& w, const KahlerForm& e) {
  if (w.algebra() != e.algebra())
    throw std::invalid_argument("form bracket over different algebras");
  const auto& alg = w.algebra();
  KahlerForm out(alg);
  for (uint32_t i = 0; i < alg->nvars(); ++i) {
    const Poly& a = w.coeff(i);
    if (a.is_zero()) continue;
    for (uint32_t j = 0; j < alg->nvars(); ++j) {
      const Poly& b = e.coeff(j);
      if (b.is_zero()) continue;
      // [a dx_i, b dx_j] = a{x_i, b} dx_j + b{a, x_j} dx_i + ab d{x_i, x_j}
      Poly xi = Poly::variable(i, alg->characteristic());
      Poly xj = Poly::variable(j, alg->characteristic());
      KahlerForm term(alg);
      Poly t1 = a * alg->bracket_poly(xi, b);
      Poly t2 = b * alg->bracket_poly(a, xj);
      KahlerForm d_bracket =
          differential(alg->element(alg->generator_bracket(i, j)));
      term = d_bracket.scaled_by(a * b);
      std::vector<Poly> add = term.coeffs();
      add[j] += t1;
      add[i] += t2;
      out = out + KahlerForm(alg, std::move(add));
    }
  }
  return out;
}

PoissonElement anchor_apply(const KahlerForm& w, const PoissonElement& z) {
  if (w.algebra() != z.algebra())
    throw std::invalid_argument("anchor applied across algebras");
  const auto& alg = w.algebra();
  Poly out = Poly::zero(alg->characteristic());
  for (uint32_t i = 0; i < alg->nvars(); ++i) {
    if (w.coeff(i).is_zero()) continue;
    out += w.coeff(i) *
           alg->bracket_poly(Poly::variable(i, alg->characteristic()), z.poly());
  }
  return alg->element(out);
}

namespace {

/// (a dx_i)^[p] for a pure term.
KahlerForm pure_term_pmap(const RestrictedPoissonAlgebra& A, const Poly& a,
                          uint32_t i) {
  const auto& alg = A.base;
  PrimeChar p = alg->characteristic();
  // a^p d(pp(x_i))
  Poly pp_xi = A.pmap->eval_poly(Poly::variable(i, p));
  KahlerForm head = differential(alg->element(pp_xi)).scaled_by(a.frobenius());
  // D^{p-1}(a) dx_i with D = alpha(a dx_i) = a {x_i, -}
  Poly d = a;
  for (uint32_t k = 0; k + 1 < p.value(); ++k)
    d = a * alg->bracket_poly(Poly::variable(i, p), d);
  std::vector<Poly> tail(alg->nvars(), Poly::zero(p));
  tail[i] = d;
  return head + KahlerForm(alg, std::move(tail));
}

}  // namespace

KahlerForm form_pmap(const RestrictedPoissonAlgebra& A, const KahlerForm& w) {
  const auto& alg = A.base;
  KahlerForm zero(alg);
  KahlerForm acc_sum(alg);
  KahlerForm acc(alg);
  bool first = true;
  auto br = [](const KahlerForm& a, const KahlerForm& b) {
    return form_bracket(a, b);
  };
  auto add = [](const KahlerForm& a, const KahlerForm& b) { return a + b; };
  auto scale = [](const KahlerForm& a, const Scalar& c) { return a * c; };
  for (uint32_t i = 0; i < alg->nvars(); ++i) {
    if (w.coeff(i).is_zero()) continue;
    std::vector<Poly> cs(alg->nvars(), Poly::zero(alg->characteristic()));
    cs[i] = w.coeff(i);
    KahlerForm term(alg, std::move(cs));
    acc = acc + pure_term_pmap(A, w.coeff(i), i);
    if (!first)
      acc = acc + jacobson_lambda(acc_sum, term, alg->characteristic(), zero,
                                  br, add, scale);
    acc_sum = acc_sum + term;
    first = false;
  }
  return acc;
}

LieRinehartStructure make_lie_rinehart(const RestrictedPoissonAlgebra& A) {
  if (A.base->quotient())
    throw std::invalid_argument(
        "Kahler differentials are implemented for polynomial algebras only");
  auto copy = A;
  return {A, [copy](const KahlerForm& w) { return form_pmap(copy, w); }};
}

KahlerForm random_form(const AlgebraPtr& alg, Rng& rng) {
  std::vector<Poly> coeffs;
  for (uint32_t i = 0; i < alg->nvars(); ++i)
    coeffs.push_back(rng.poly(alg->characteristic(), alg->nvars(), 2, 2));
  return KahlerForm(alg, std::move(coeffs));
}

Report verify_lie_rinehart(const LieRinehartStructure& S, uint64_t samples,
                           uint64_t seed) {
  Report rep;
  rep.suite = "lie-rinehart";
  rep.seed = seed;
  rep.samples = samples;
  Rng rng(seed);
  const auto& A = S.base;
  const auto& alg = A.base;
  PrimeChar p = alg->characteristic();

  Check& anti = rep.add("form bracket alternating [w,w] = 0");
  Check& jac = rep.add("form bracket Jacobi identity");
  Check& mod = rep.add("[X, aY] = a[X,Y] + alpha(X)(a) Y");
  Check& hom = rep.add("anchor respects brackets");
  for (uint64_t s = 0; s < samples; ++s) {
    auto X = random_form(alg, rng);
    auto Y = random_form(alg, rng);
    auto Z = random_form(alg, rng);
    auto a = alg->random_element(rng, 2, 2);
    if (anti.pass && !form_bracket(X, X).is_zero()) {
      anti.pass = false;
      anti.witness = {"X = " + X.str(),
                      "[X,X] = " + form_bracket(X, X).str()};
    }
    if (jac.pass) {
      auto j3 = form_bracket(X, form_bracket(Y, Z)) +
                form_bracket(Y, form_bracket(Z, X)) +
                form_bracket(Z, form_bracket(X, Y));
      if (!j3.is_zero()) {
        jac.pass = false;
        jac.witness = {"X = " + X.str(), "Y = " + Y.str(), "Z = " + Z.str(),
                       "jacobiator = " + j3.str()};
      }
    }
    if (mod.pass) {
      auto lhs = form_bracket(X, Y.scaled_by(a.poly()));
      auto rhs = form_bracket(X, Y).scaled_by(a.poly()) +
                 Y.scaled_by(anchor_apply(X, a).poly());
      if (!(lhs == rhs)) {
        mod.pass = false;
        mod.witness = {"X = " + X.str(), "a = " + a.str(), "Y = " + Y.str(),
                       "lhs = " + lhs.str(), "rhs = " + rhs.str()};
      }
    }
    if (hom.pass) {
      auto z = alg->random_element(rng, 2, 2);
      auto lhs = anchor_apply(form_bracket(X, Y), z);
      auto rhs = anchor_apply(X, anchor_apply(Y, z)) -
                 anchor_apply(Y, anchor_apply(X, z));
      if (lhs != rhs) {
        hom.pass = false;
        hom.witness = {"X = " + X.str(), "Y = " + Y.str(), "z = " + z.str(),
                       "alpha([X,Y])(z) = " + lhs.str(),
                       "[alpha(X), alpha(Y)](z) = " + rhs.str()};
      }
    }
  }

  Check& res = rep.add("anchor is a restricted Lie homomorphism");
  for (uint64_t s = 0; s < samples && res.pass; ++s) {
    auto X = random_form(alg, rng);
    auto z = alg->random_element(rng, 2, 2);
    auto lhs = anchor_apply(S.form_pmap(X), z);
    auto rhs = z;
    for (uint32_t k = 0; k < p.value(); ++k) rhs = anchor_apply(X, rhs);
    if (lhs != rhs) {
      res.pass = false;
      res.witness = {"X = " + X.str(), "z = " + z.str(),
                     "alpha(X^[p])(z) = " + lhs.str(),
                     "alpha(X)^p(z) = " + rhs.str()};
    }
  }

  Check& modp = rep.add("(aX)^[p] = a^p X^[p] + (alpha(aX))^{p-1}(a) X");
  for (uint64_t s = 0; s < samples && modp.pass; ++s) {
    auto X = random_form(alg, rng);
    auto a = alg->random_element(rng, 2, 2);
    auto aX = X.scaled_by(a.poly());
    auto lhs = S.form_pmap(aX);
    Poly der = a.poly();
    for (uint32_t k = 0; k + 1 < p.value(); ++k)
      der = anchor_apply(aX, alg->element(der)).poly();
    auto rhs = S.form_pmap(X).scaled_by(a.poly().frobenius()) +
               X.scaled_by(der);
    if (!(lhs == rhs)) {
      modp.pass = false;
      modp.witness = {"a = " + a.str(), "X = " + X.str(),
                      "(aX)^[p] = " + lhs.str(),
                      "a^p X^[p] + (aX)^{p-1}(a) X = " + rhs.str()};
    }
  }

  Check& op = rep.add("pure-term operator identity");
  for (uint64_t s = 0; s < samples && op.pass; ++s) {
    uint32_t i = static_cast<uint32_t>(rng.bounded(alg->nvars()));
    auto a = alg->random_element(rng, 2, 2);
    std::vector<Poly> cs(alg->nvars(), Poly::zero(p));
    cs[i] = a.poly();
    KahlerForm w(alg, std::move(cs));
    auto z = alg->random_element(rng, 2, 2);
    auto lhs = z;
    for (uint32_t k = 0; k < p.value(); ++k) lhs = anchor_apply(w, lhs);
    auto rhs = anchor_apply(S.form_pmap(w), z);
    if (lhs != rhs) {
      op.pass = false;
      op.witness = {"w = " + w.str(), "z = " + z.str(),
                    "alpha(w)^p(z) = " + lhs.str(),
                    "alpha(w^[p])(z) = " + rhs.str()};
    }
  }

  return rep;
}

}  // namespace rpa
