#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rpa/restricted.hpp"

namespace rpa {

/// Parse / input error with a location hint; the CLI maps it to exit 2.
class SpecError : public std::runtime_error {
 public:
  explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses a polynomial string over the named variables: `^` for powers,
/// `*` optional (juxtaposition multiplies), integer coefficients,
/// parentheses and unary minus allowed.
Poly parse_poly(const std::string& text, const std::vector<std::string>& names,
                PrimeChar p);

/// Algebra description file:
///   {"p": 3, "vars": ["x","y"], "bracket": {"x,y": "1"},
///    "quotient": ["x^3","y^3"], "pmap": {"x": "0", "y": "0"},
///    "catalog": "classical2", "perturb": {"semilinear-central": "x"}}
/// A catalog name overrides everything else. "pmap" holds the generator
/// images of the inductive construction.
struct AlgebraSpec {
  std::optional<std::string> catalog_name;
  uint32_t p = 3;
  std::vector<std::string> vars;
  std::vector<std::pair<std::pair<uint32_t, uint32_t>, std::string>> bracket;
  std::vector<std::string> quotient;
  std::optional<std::vector<std::string>> pmap_images;  // aligned with vars
  std::optional<std::pair<std::string, std::string>> perturb;  // kind, var
};

AlgebraSpec parse_spec_file(const std::string& path);
AlgebraSpec parse_spec_json(const std::string& text);

/// Realized spec: the algebra always, the restricted structure when the
/// file (or catalog) provides a p-map.
struct RealizedSpec {
  AlgebraPtr algebra;
  std::optional<RestrictedPoissonAlgebra> restricted;
};

RealizedSpec realize(const AlgebraSpec& spec, uint64_t jacobson_samples = 32,
                     uint64_t seed = 0, uint64_t jacobson_exact_bound = 0);

}  // namespace rpa
