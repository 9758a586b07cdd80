#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rpa/lie.hpp"

using namespace rpa;

namespace {

const PrimeChar p3(3);
const PrimeChar p5(5);

}  // namespace

TEST_CASE("sl2 is a restricted Lie algebra over F_3 and F_5") {
  for (PrimeChar p : {p3, p5}) {
    auto L = RestrictedLieAlgebra::sl2(p);
    CHECK(verify_restricted_lie_fd(L, 32, 0).all_pass());
  }
}

TEST_CASE("solvable 2-dim algebra carries the published p-map") {
  auto L = RestrictedLieAlgebra::solvable2(p3);
  CHECK(verify_restricted_lie_fd(L, 32, 0).all_pass());
  // (l1 x + l2 y)^[p] = l2^{p-1}(l1 x + l2 y) on every point of L.
  for (uint32_t l1 = 0; l1 < 3; ++l1)
    for (uint32_t l2 = 0; l2 < 3; ++l2) {
      RestrictedLieAlgebra::Vec u{Scalar(l1, p3), Scalar(l2, p3)};
      auto expected = L.scale(u, Scalar(l2, p3).pow(2));
      CHECK(L.pmap(u) == expected);
    }
}

TEST_CASE("abelian algebra with zero p-map verifies") {
  auto L = RestrictedLieAlgebra::abelian(3, p3);
  CHECK(verify_restricted_lie_fd(L, 16, 0).all_pass());
}

TEST_CASE("construction rejects a broken Jacobson condition") {
  // sl2 with e^[3] = e: ad_e^3 = 0 but ad_e is not.
  std::map<std::pair<uint32_t, uint32_t>, RestrictedLieAlgebra::Vec> br;
  auto vec = [&](int64_t a, int64_t b, int64_t c) {
    return RestrictedLieAlgebra::Vec{Scalar::from_int(a, p3),
                                     Scalar::from_int(b, p3),
                                     Scalar::from_int(c, p3)};
  };
  br[{0, 1}] = vec(-2, 0, 0);
  br[{0, 2}] = vec(0, 1, 0);
  br[{1, 2}] = vec(0, 0, -2);
  std::vector<RestrictedLieAlgebra::Vec> pm{vec(1, 0, 0), vec(0, 1, 0),
                                            vec(0, 0, 0)};
  CHECK_THROWS_AS(RestrictedLieAlgebra::make(p3, {"e", "h", "f"}, br, pm),
                  std::invalid_argument);
}

TEST_CASE("symmetric algebra of a restricted Lie algebra") {
  auto abelian = symmetric_poisson(RestrictedLieAlgebra::abelian(2, p3));
  CHECK(abelian.base->generator_bracket(0, 1).is_zero());
  CHECK(abelian.pp(abelian.base->generator(0)).is_zero());

  auto S = symmetric_poisson(RestrictedLieAlgebra::solvable2(p3));
  CHECK(S.base->generator_bracket(0, 1) == Poly::variable(0, p3));
  CHECK(S.pp(S.base->generator(0)).is_zero());
  CHECK(S.pp(S.base->generator(1)) == S.base->generator(1));

  auto sl2 = catalog("sl2-sym", p3);
  auto e = sl2.base->generator(0), h = sl2.base->generator(1),
       f = sl2.base->generator(2);
  CHECK(bracket(h, e) == e * Scalar(2, p3));
  CHECK(bracket(h, f) == f * Scalar::from_int(-2, p3));
  CHECK(bracket(e, f) == h);
  CHECK(sl2.pp(e).is_zero());
  CHECK(sl2.pp(h) == h);
  CHECK(sl2.pp(f).is_zero());
  CHECK(verify_poisson(sl2.base, 24, 0).all_pass());
  CHECK(verify_restricted_lie(sl2, 16, 0).all_pass());
  CHECK(verify_frobenius_condition(sl2, FrobeniusMode::square, 12, 0).all_pass());
  CHECK(verify_frobenius_condition(sl2, FrobeniusMode::product, 8, 0, 2)
            .all_pass());
}

TEST_CASE("truncated symmetric algebra") {
  auto one = truncated_symmetric(RestrictedLieAlgebra::abelian(1, p3));
  CHECK(one.base->quotient().has_value());
  CHECK(basis_monomials(one.base, 10).size() == 3);  // 1, x, x^2
  CHECK(one.pp(one.base->generator(0)).is_zero());

  auto solv = truncated_symmetric(RestrictedLieAlgebra::solvable2(p3));
  CHECK(basis_monomials(solv.base, 10).size() == 9);
  CHECK(solv.pp(solv.base->generator(1)) == solv.base->generator(1));
  CHECK(verify_frobenius_condition(solv, FrobeniusMode::product, 4, 0, 4)
            .all_pass());

  auto t = truncated_symmetric(RestrictedLieAlgebra::sl2(p3));
  CHECK(basis_monomials(t.base, 10).size() == 27);
  CHECK(verify_poisson(t.base, 16, 0).all_pass());
  CHECK(verify_restricted_lie(t, 16, 0).all_pass());
  // Exhaustive product rule over the full 27-element monomial basis.
  CHECK(verify_frobenius_condition(t, FrobeniusMode::product, 4, 0, 6)
            .all_pass());
}

TEST_CASE("tensor product structure") {
  auto A = catalog("classical2", p3);
  auto T = tensor_product(A, A);
  CHECK(T.base->nvars() == 4);
  // Renamed with suffixes on collision.
  CHECK(T.base->variables() == std::vector<std::string>{"x", "y", "x_2", "y_2"});
  // Cross brackets vanish; inner brackets survive.
  CHECK(T.base->generator_bracket(0, 2).is_zero());
  CHECK(T.base->generator_bracket(0, 1) == Poly::constant(1, p3));
  CHECK(T.base->generator_bracket(2, 3) == Poly::constant(1, p3));

  auto x = T.base->generator(0), y2 = T.base->generator(3);
  // pp(x (x) 1) = pp(x) (x) 1 = 0 and the same for 1 (x) b.
  CHECK(T.pp(x).is_zero());
  CHECK(T.pp(y2).is_zero());
  // pp(x (x) y) = pp(x) (x) y^p + x^p (x) pp(y) = 0 for gamma = 0.
  CHECK(T.pp(x * T.base->generator(2)).is_zero());

  CHECK(verify_poisson(T.base, 16, 0).all_pass());
  CHECK(verify_restricted_lie(T, 8, 0).all_pass());
  CHECK(verify_frobenius_condition(T, FrobeniusMode::product, 6, 0, 3)
            .all_pass());
}

TEST_CASE("tensor product mixes p-maps by the split rule") {
  auto A = catalog("trivial-extension", p3);
  auto B = catalog("classical2", p3);
  auto T = tensor_product(A, B);
  CHECK(T.base->variables() == std::vector<std::string>{"x", "y", "x_2", "y_2"});
  // Quotient generators come from the left factor only.
  REQUIRE(T.base->quotient().has_value());
  CHECK(T.base->quotient()->generators().size() == 3);

  // pp(y (x) 1) = y (x) 1; pp(1 (x) x_2 y_2) = 1 (x) x_2 y_2.
  auto y = T.base->generator(1);
  auto xy_right = T.base->generator(2) * T.base->generator(3);
  CHECK(T.pp(y) == y);
  CHECK(T.pp(xy_right) == xy_right);
  // Split rule on a mixed monomial: pp(y (x) x_2) = pp(y) x_2^p + y^p pp(x_2)
  // = y x_2^3 (the second term dies: y^3 = 0 in the trivial extension).
  auto mixed = y * T.base->generator(2);
  CHECK(T.pp(mixed) == y * T.base->generator(2).pow(3));

  CHECK(verify_frobenius_condition(T, FrobeniusMode::product, 6, 0, 3)
            .all_pass());
}

TEST_CASE("tensor factors commute up to renaming") {
  auto A = catalog("trivial-extension", p3);
  auto B = catalog("classical2", p3);
  auto AB = tensor_product(A, B);
  auto BA = tensor_product(B, A);
  // Map AB variables (x, y, x_2, y_2) onto BA's (x_2, y_2, x, y).
  std::vector<uint32_t> swap{2, 3, 0, 1};
  for (const auto& m : basis_monomials(AB.base, 3)) {
    Poly mono = Poly::from_monomial(m, Scalar::one(p3));
    Poly lhs = AB.pmap->eval_poly(mono).rename_variables(swap);
    Poly rhs = BA.pmap->eval_poly(mono.rename_variables(swap));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("tensor product rejects mixed characteristics") {
  CHECK_THROWS_AS(
      tensor_product(catalog("classical2", p3), catalog("classical2-p5", p5)),
      std::invalid_argument);
}

TEST_CASE("hopf compatibility of S(L) and s(L)") {
  auto S = catalog("sl2-sym", p3);
  Report r1 = hopf_check(S, 2);
  CHECK(r1.all_pass());
  // The antipode/p-map row is informational and should also hold here.
  for (const auto& c : r1.checks)
    if (c.informational) CHECK(c.pass);

  auto t = catalog("sl2-trunc", p3);
  CHECK(hopf_check(t, 2).all_pass());

  auto solv = symmetric_poisson(RestrictedLieAlgebra::solvable2(p3));
  CHECK(hopf_check(solv, 2).all_pass());
}

TEST_CASE("catalog entries resolve and unknown names fail") {
  for (const auto& name : catalog_names()) {
    PrimeChar p = name == "classical2-p5" ? p5 : p3;
    auto A = catalog(name, p);
    CHECK(A.base->nvars() >= 2);
  }
  CHECK_THROWS_AS(catalog("nope", p3), std::invalid_argument);
  CHECK_THROWS_AS(catalog("classical2", p5), std::invalid_argument);
}

TEST_CASE("catalog p-map values from the worked examples") {
  auto c2 = catalog("classical2", p3);
  auto x = c2.base->generator(0), y = c2.base->generator(1);
  CHECK(c2.pp(x * y) == x * y);
  CHECK(c2.pp(x).is_zero());

  auto te = catalog("trivial-extension", p3);
  CHECK(te.pp(te.base->generator(1)) == te.base->generator(1));

  auto cb = catalog("constant-bracket-n", p3);
  CHECK(cb.base->nvars() == 3);
  CHECK(cb.base->generator_bracket(0, 1) == Poly::constant(2, p3));
  CHECK(cb.base->generator_bracket(0, 2) == Poly::constant(1, p3));
  CHECK(cb.base->generator_bracket(1, 2) == Poly::constant(2, p3));
}

TEST_CASE("catalog closed forms agree with the inductive construction") {
  // constant-bracket-n: gamma = 0 satisfies the adjoint hypothesis since
  // every ad_{x_i}^p is a p-th derivative power, hence zero.
  auto cb = catalog("constant-bracket-n", p3);
  auto cb_built = build_pmap(cb.base, std::vector<Poly>(3, Poly::zero(p3)));
  for (const auto& m : basis_monomials(cb.base, 4)) {
    Poly mono = Poly::from_monomial(m, Scalar::one(p3));
    CHECK(cb.pmap->eval_poly(mono) == cb_built.pmap->eval_poly(mono));
  }

  // affine-bracket-p3 with phi = lam x + mu y + nu: ad_x^3 = mu^2 phi d/dy
  // because the third iterated derivative vanishes, so gamma(x) = mu^2 x
  // and gamma(y) = lam^2 y reproduce the structure ((lam, mu) = (1, 1)).
  auto af = catalog("affine-bracket-p3", p3);
  auto af_built =
      build_pmap(af.base, {Poly::variable(0, p3), Poly::variable(1, p3)});
  for (const auto& m : basis_monomials(af.base, 4)) {
    Poly mono = Poly::from_monomial(m, Scalar::one(p3));
    CHECK(af.pmap->eval_poly(mono) == af_built.pmap->eval_poly(mono));
  }
}

TEST_CASE("truncated-B2n p-map is normalized") {
  auto B = catalog("truncated-B2n", p3);
  CHECK(B.base->nvars() == 2);
  CHECK(B.pp(B.base->one()).is_zero());
  Rng rng(13);
  // pp(f) lands in m^2 for f in m^2.
  for (int s = 0; s < 20; ++s) {
    Poly f = rng.poly(p3, 2, 3, 3);
    Poly stripped = Poly::zero(p3);
    for (const auto& [m, c] : f.terms())
      if (m.degree() >= 2) stripped.add_term(m, c);
    Poly img = B.pmap->eval_poly(stripped);
    for (const auto& [m, c] : img.terms()) CHECK(m.degree() >= 2);
  }
}
