// Acceptance gate: exact, seeded, one pass/fail line per criterion.
// Exit status 0 iff every criterion holds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "rpa/kahler.hpp"
#include "rpa/lie.hpp"
#include "rpa/star.hpp"
#include "rpa/tograph.hpp"

using namespace rpa;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& title,
               const std::function<bool(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::printf("[%s] criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", number,
              title.c_str(), secs);
  if (!detail.empty()) std::printf("       %s\n", detail.c_str());
  if (!ok) ++g_failures;
}

StarAlgebra classical_star(PrimeChar p) {
  std::vector<std::vector<Scalar>> c(2, std::vector<Scalar>(2, Scalar::zero(p)));
  c[0][1] = Scalar::one(p);
  return StarAlgebra(p, {"x", "y"}, std::move(c), StarMode::onesided);
}

RestrictedPoissonAlgebra built_classical(PrimeChar p) {
  PoissonAlgebra::BracketTable t;
  t.insert_or_assign({0, 1}, Poly::constant(1, p));
  auto alg = PoissonAlgebra::make(p, {"x", "y"}, std::move(t));
  return build_pmap(alg, {Poly::zero(p), Poly::zero(p)});
}

bool report_ok(const Report& r, std::string& detail) {
  if (r.all_pass()) return true;
  for (const auto& c : r.checks)
    if (!c.pass && !c.informational) {
      detail = r.suite + ": " + c.name;
      for (const auto& w : c.witness) detail += " | " + w;
      return false;
    }
  return false;
}

}  // namespace

int main() {
  criterion(1, "quantization-derived p-map equals the closed forms (p=3,5)",
            [](std::string& detail) {
              for (uint32_t pv : {3u, 5u}) {
                PrimeChar p(pv);
                auto S = classical_star(p);
                auto D = derive_pmap(S);
                auto C = catalog(pv == 3 ? "classical2" : "classical2-p5", p);
                Rng rng(1001);
                for (int s = 0; s < 50; ++s) {
                  Poly f = rng.poly(p, 2, 4, 4);
                  Poly lhs = D.pmap->eval_poly(f);
                  Poly rhs = C.pmap->eval_poly(f);
                  if (lhs != rhs) {
                    detail = "p=" + std::to_string(pv) + " f = " +
                             f.to_string({"x", "y"});
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(2, "vanishing of M_n for 1 <= n <= p-2 plus certificates (p<=7)",
            [](std::string& detail) {
              for (uint32_t pv : {3u, 5u}) {
                PrimeChar p(pv);
                auto S = classical_star(p);
                Rng rng(1002);
                for (int s = 0; s < 50; ++s) {
                  Poly f = rng.poly(p, 2, 4, 4);
                  for (uint32_t n = 1; n + 1 < pv; ++n)
                    if (!extract_M(f, n, S).is_zero()) {
                      detail = "p=" + std::to_string(pv) +
                               " n=" + std::to_string(n) + " f = " +
                               f.to_string({"x", "y"});
                      return false;
                    }
                }
              }
              for (uint32_t pv : {3u, 5u, 7u}) {
                PrimeChar p(pv);
                for (uint32_t n = 1; n + 1 < pv; ++n) {
                  Report r = vanishing_certificate(n, p);
                  if (!report_ok(r, detail)) return false;
                }
              }
              return true;
            });

  criterion(3, "combinatorial M equals the star-power coefficients (p=3,5)",
            [](std::string& detail) {
              for (uint32_t pv : {3u, 5u}) {
                PrimeChar p(pv);
                auto S = classical_star(p);
                Rng rng(1003);
                for (int s = 0; s < 20; ++s) {
                  Poly f = rng.poly(p, 2, 3, 4);
                  for (uint32_t n = 1; n < pv; ++n)
                    if (combinatorial_M(f, n, p) != extract_M(f, n, S)) {
                      detail = "p=" + std::to_string(pv) +
                               " n=" + std::to_string(n) + " f = " +
                               f.to_string({"x", "y"});
                      return false;
                    }
                }
              }
              return true;
            });

  criterion(
      4, "inductive construction passes all axioms on monomial pairs",
      [](std::string& detail) {
        for (uint32_t pv : {3u, 5u}) {
          PrimeChar p(pv);
          uint64_t bound = pv == 3 ? 5 : 3;
          auto A = built_classical(p);
          auto monos = basis_monomials(A.base, bound);
          for (const auto& mu : monos)
            for (const auto& mv : monos) {
              if (mu.degree() + mv.degree() > bound) continue;
              auto u = A.base->element(Poly::from_monomial(mu, Scalar::one(p)));
              auto v = A.base->element(Poly::from_monomial(mv, Scalar::one(p)));
              auto fail = [&](const std::string& what) {
                detail = "p=" + std::to_string(pv) + " " + what + " at (" +
                         u.str() + ", " + v.str() + ")";
                return false;
              };
              if (ad_power(u, pv, v) != bracket(A.pp(u), v))
                return fail("ad_u^p = ad_{pp(u)}");
              for (uint32_t cv = 0; cv < pv; ++cv) {
                Scalar c(cv, p);
                if (A.pp(u * c) != A.pp(u) * c.frobenius())
                  return fail("semilinearity");
              }
              if (A.pp(u + v) != A.pp(u) + A.pp(v) + lambda_p(u, v))
                return fail("additivity with Lambda");
              if (A.pp(u * u) != u.frobenius() * A.pp(u) * Scalar(2, p))
                return fail("square condition");
              if (A.pp(u * v) !=
                  u.frobenius() * A.pp(v) + v.frobenius() * A.pp(u) +
                      phi_p(u, v))
                return fail("product condition");
            }
        }
        return true;
      });

  criterion(5, "phi = phi' and the defect identities, 100 seeded samples",
            [](std::string& detail) {
              for (uint32_t pv : {3u, 5u}) {
                PrimeChar p(pv);
                auto A = built_classical(p);
                Rng rng(1005);
                for (int s = 0; s < 100; ++s) {
                  auto f = A.base->random_element(rng, 2, 3);
                  auto g = A.base->random_element(rng, 2, 3);
                  auto h = A.base->random_element(rng, 2, 3);
                  if (phi_p(f, g) != phi_p_prime(f, g)) {
                    detail = "phi mismatch at p=" + std::to_string(pv);
                    return false;
                  }
                  auto r1 = f.frobenius() * phi_p(g, h) - phi_p(f * g, h) +
                            phi_p(f, g * h) - h.frobenius() * phi_p(f, g);
                  if (!r1.is_zero()) {
                    detail = "four-term phi identity residual nonzero at p=" + std::to_string(pv);
                    return false;
                  }
                  auto lhs = phi_p(f, g + h) - phi_p(f, g) - phi_p(f, h);
                  auto rhs = lambda_p(f * g, f * h) -
                             f.frobenius() * lambda_p(g, h);
                  if (lhs != rhs) {
                    detail = "phi additivity-defect identity mismatch at p=" + std::to_string(pv);
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(
      6, "every catalog entry passes the poisson/lie/frobenius suites",
      [](std::string& detail) {
        for (const auto& name : catalog_names()) {
          PrimeChar p(name == "classical2-p5" ? 5 : 3);
          auto A = catalog(name, p);
          bool finite = name == "trivial-extension" || name == "sl2-trunc";
          // Exhaustive over the full finite basis for the two finite
          // algebras (degree bound past p*dim), sampled otherwise.
          uint64_t bound = finite ? 3 * A.base->nvars() : 2;
          uint64_t samples = finite ? 16 : 24;
          Report reports[] = {
              verify_poisson(A.base, samples, 2026),
              verify_restricted_lie(A, samples, 2026),
              verify_frobenius_condition(A, FrobeniusMode::square, samples,
                                         2026),
              verify_frobenius_condition(A, FrobeniusMode::product,
                                         finite ? 4 : 12, 2026, bound)};
          for (const auto& r : reports)
            if (!r.all_pass()) {
              report_ok(r, detail);
              detail = name + ": " + detail;
              return false;
            }
        }
        return true;
      });

  criterion(
      7, "tensor square of classical2 at p=3",
      [](std::string& detail) {
        PrimeChar p(3);
        auto A = catalog("classical2", p);
        auto T = tensor_product(A, A);
        // Generators stay primitive under the split rule.
        for (uint32_t i = 0; i < 2; ++i)
          for (uint32_t j = 0; j < 2; ++j) {
            Poly a = Poly::variable(i, p);
            Poly b = Poly::variable(2 + j, p);
            Poly lhs = T.pmap->eval_poly(a * b);
            Poly pa = A.pmap->eval_poly(a);
            Poly pb = A.pmap->eval_poly(Poly::variable(j, p))
                          .rename_variables({2, 3});
            Poly rhs = pa * b.frobenius() + a.frobenius() * pb;
            if (lhs != rhs) {
              detail = "split rule fails on generators";
              return false;
            }
          }
        // pp(a (x) 1) = pp(a) (x) 1 on the left factor's monomials.
        for (const auto& m : basis_monomials(A.base, 3)) {
          Poly mono = Poly::from_monomial(m, Scalar::one(p));
          if (T.pmap->eval_poly(mono) != A.pmap->eval_poly(mono)) {
            detail = "pp(a (x) 1) != pp(a) (x) 1 at a = " +
                     m.to_string(A.base->variables());
            return false;
          }
        }
        Report r = verify_frobenius_condition(T, FrobeniusMode::product, 0,
                                              2026, 3);
        return report_ok(r, detail);
      });

  criterion(
      8, "lie-rinehart suite passes; mutated p-map fails with a witness",
      [](std::string& detail) {
        PrimeChar p(3);
        for (const char* name : {"classical2", "sl2-sym"}) {
          auto S = make_lie_rinehart(catalog(name, p));
          Report r = verify_lie_rinehart(S, 64, 2026);
          if (!report_ok(r, detail)) {
            detail = std::string(name) + ": " + detail;
            return false;
          }
        }
        // Negative control: drop the D^{p-1} tail of the form p-map.
        auto A = catalog("classical2", p);
        LieRinehartStructure broken{
            A, [A, p](const KahlerForm& w) {
              KahlerForm acc(A.base);
              for (uint32_t i = 0; i < A.base->nvars(); ++i) {
                if (w.coeff(i).is_zero()) continue;
                Poly pp_xi = A.pmap->eval_poly(Poly::variable(i, p));
                acc = acc + differential(A.base->element(pp_xi))
                                .scaled_by(w.coeff(i).frobenius());
              }
              return acc;
            }};
        Report r = verify_lie_rinehart(broken, 64, 2026);
        for (const auto& c : r.checks)
          if (!c.pass && c.name.find("(aX)^[p]") != std::string::npos &&
              !c.witness.empty()) {
            detail = "negative control witness: " + c.witness.front();
            return true;
          }
        detail = "module identity did not fail on the mutated p-map";
        return false;
      });

  criterion(
      9, "frobenius-derivation modification; semilinear non-derivation fails",
      [](std::string& detail) {
        PrimeChar p(3);
        auto A = catalog("classical2", p);
        auto mod = modify_pmap(A, {Poly::constant(1, p), Poly::zero(p)});
        Report suites[] = {
            verify_restricted_lie(mod, 64, 2026),
            verify_frobenius_condition(mod, FrobeniusMode::square, 64, 2026),
            verify_frobenius_condition(mod, FrobeniusMode::product, 32, 2026,
                                       3)};
        for (const auto& r : suites)
          if (!report_ok(r, detail)) return false;

        auto broken = perturb_semilinear_central(A, 0);
        if (!verify_restricted_lie(broken, 32, 2026).all_pass()) {
          detail = "perturbation should stay weakly restricted";
          return false;
        }
        Report r =
            verify_frobenius_condition(broken, FrobeniusMode::square, 64, 2026);
        for (const auto& c : r.checks)
          if (!c.pass && !c.witness.empty()) {
            detail = "negative control witness: " + c.witness.front();
            return true;
          }
        detail = "square condition did not fail on the semilinear map";
        return false;
      });

  criterion(10, "reports are byte-identical for a fixed seed",
            [](std::string& detail) {
              auto render = [] {
                auto A = catalog("classical2", PrimeChar(3));
                std::string out;
                out += verify_poisson(A.base, 32, 77).json();
                out += verify_restricted_lie(A, 32, 77).json();
                out += verify_frobenius_condition(A, FrobeniusMode::square, 32,
                                                  77)
                           .json();
                out += verify_frobenius_condition(A, FrobeniusMode::product, 32,
                                                  77, 3)
                           .json();
                out += phi_identities(A.base, 32, 77).json();
                out += vanishing_certificate(1, PrimeChar(3)).json();
                return out;
              };
              std::string a = render();
              std::string b = render();
              if (a != b) {
                detail = "two in-process renderings differ";
                return false;
              }
              return true;
            });

  if (g_failures == 0) {
    std::printf("acceptance: all criteria PASS\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  return 1;
}
