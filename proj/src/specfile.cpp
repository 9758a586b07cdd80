#include "rpa/specfile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rpa/lie.hpp"

namespace rpa {

namespace {

struct PolyParser {
  const std::string& text;
  const std::vector<std::string>& names;
  PrimeChar p;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw SpecError("polynomial parse error at position " +
                    std::to_string(pos) + " in \"" + text + "\": " + msg);
  }

  Poly parse() {
    Poly r = expr();
    skip_ws();
    if (pos != text.size()) fail("trailing input");
    return r;
  }

  Poly expr() {
    Poly r = term();
    while (true) {
      skip_ws();
      if (eat('+'))
        r += term();
      else if (eat('-'))
        r -= term();
      else
        return r;
    }
  }

  bool starts_factor() {
    skip_ws();
    if (pos >= text.size()) return false;
    char c = text[pos];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }

  Poly term() {
    Poly r = factor();
    while (true) {
      skip_ws();
      if (eat('*')) {
        r *= factor();
      } else if (starts_factor()) {
        r *= factor();  // juxtaposition
      } else {
        return r;
      }
    }
  }

  Poly factor() {
    Poly b = base();
    skip_ws();
    if (eat('^')) {
      uint64_t e = integer();
      return b.pow(e);
    }
    return b;
  }

  uint64_t integer() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected integer");
    uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = checked_add(checked_mul(v, 10), text[pos] - '0');
      ++pos;
    }
    return v;
  }

  Poly base() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Poly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (c == '-') {
      ++pos;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      uint64_t v = integer();
      return Poly::constant(Scalar(static_cast<uint32_t>(v % p.value()), p));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) ||
              text[pos] == '_'))
        ++pos;
      std::string ident = text.substr(start, pos - start);
      // Longest-match identifier, then greedy splitting into variable names
      // so that juxtaposed names like "xy" work when both "x" and "y" exist.
      auto find = [&](const std::string& s) {
        return std::find(names.begin(), names.end(), s) - names.begin();
      };
      if (static_cast<size_t>(find(ident)) < names.size())
        return Poly::variable(static_cast<uint32_t>(find(ident)),
                              p);
      Poly prod = Poly::constant(1, p);
      size_t i = 0;
      while (i < ident.size()) {
        size_t best = 0;
        for (size_t len = ident.size() - i; len >= 1; --len) {
          if (static_cast<size_t>(find(ident.substr(i, len))) < names.size()) {
            best = len;
            break;
          }
        }
        if (best == 0) fail("unknown variable in '" + ident + "'");
        prod *= Poly::variable(
            static_cast<uint32_t>(find(ident.substr(i, best))), p);
        i += best;
      }
      return prod;
    }
    fail("unexpected character");
  }
};

}  // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& names,
                PrimeChar p) {
  PolyParser parser{text, names, p};
  return parser.parse();
}

AlgebraSpec parse_spec_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("invalid JSON: ") + e.what());
  }
  AlgebraSpec spec;
  if (j.contains("catalog")) {
    if (!j["catalog"].is_string())
      throw SpecError("field 'catalog' must be a string");
    spec.catalog_name = j["catalog"].get<std::string>();
  }
  if (j.contains("p")) {
    if (!j["p"].is_number_unsigned())
      throw SpecError("field 'p' must be a non-negative integer");
    spec.p = j["p"].get<uint32_t>();
  }
  if (j.contains("vars")) {
    if (!j["vars"].is_array()) throw SpecError("field 'vars' must be an array");
    for (const auto& v : j["vars"]) {
      if (!v.is_string()) throw SpecError("entries of 'vars' must be strings");
      spec.vars.push_back(v.get<std::string>());
    }
  }
  auto var_index = [&](const std::string& name, const std::string& where) {
    auto it = std::find(spec.vars.begin(), spec.vars.end(), name);
    if (it == spec.vars.end())
      throw SpecError("unknown variable '" + name + "' in field '" + where +
                      "'");
    return static_cast<uint32_t>(it - spec.vars.begin());
  };
  if (j.contains("bracket")) {
    if (!j["bracket"].is_object())
      throw SpecError("field 'bracket' must be an object");
    for (const auto& [key, val] : j["bracket"].items()) {
      auto comma = key.find(',');
      if (comma == std::string::npos)
        throw SpecError("bracket key '" + key + "' must look like \"x,y\"");
      std::string a = key.substr(0, comma), b = key.substr(comma + 1);
      uint32_t i = var_index(a, "bracket"), k = var_index(b, "bracket");
      if (i == k) throw SpecError("bracket key '" + key + "' repeats a variable");
      if (!val.is_string())
        throw SpecError("bracket values must be polynomial strings");
      if (i < k)
        spec.bracket.push_back({{i, k}, val.get<std::string>()});
      else
        spec.bracket.push_back({{k, i}, "-(" + val.get<std::string>() + ")"});
    }
  }
  if (j.contains("quotient")) {
    if (!j["quotient"].is_array())
      throw SpecError("field 'quotient' must be an array of monomial strings");
    for (const auto& q : j["quotient"]) {
      if (!q.is_string()) throw SpecError("quotient entries must be strings");
      spec.quotient.push_back(q.get<std::string>());
    }
  }
  if (j.contains("pmap")) {
    if (!j["pmap"].is_object())
      throw SpecError("field 'pmap' must map generators to polynomials");
    std::vector<std::string> images(spec.vars.size(), "");
    std::vector<bool> seen(spec.vars.size(), false);
    for (const auto& [key, val] : j["pmap"].items()) {
      uint32_t i = var_index(key, "pmap");
      if (!val.is_string()) throw SpecError("pmap values must be strings");
      images[i] = val.get<std::string>();
      seen[i] = true;
    }
    for (uint32_t i = 0; i < spec.vars.size(); ++i)
      if (!seen[i])
        throw SpecError("pmap image missing for generator '" + spec.vars[i] +
                        "'");
    spec.pmap_images = std::move(images);
  }
  if (j.contains("perturb")) {
    if (!j["perturb"].is_object() || j["perturb"].size() != 1)
      throw SpecError("field 'perturb' must hold exactly one entry");
    for (const auto& [key, val] : j["perturb"].items()) {
      if (key != "semilinear-central" && key != "semilinear-shift")
        throw SpecError("unknown perturbation kind '" + key + "'");
      if (!val.is_string()) throw SpecError("perturb value must name a variable");
      spec.perturb = {key, val.get<std::string>()};
    }
  }
  if (!spec.catalog_name && spec.vars.empty())
    throw SpecError("spec must provide 'vars' or a 'catalog' name");
  return spec;
}

AlgebraSpec parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec_json(ss.str());
}

RealizedSpec realize(const AlgebraSpec& spec, uint64_t jacobson_samples,
                     uint64_t seed, uint64_t jacobson_exact_bound) {
  PrimeChar p = [&] {
    try {
      return PrimeChar(spec.p);
    } catch (const std::invalid_argument& e) {
      throw SpecError(std::string("p must be an odd prime: ") + e.what());
    }
  }();

  RealizedSpec out;
  if (spec.catalog_name) {
    try {
      auto A = catalog(*spec.catalog_name, p);
      out.algebra = A.base;
      out.restricted = A;
    } catch (const std::invalid_argument& e) {
      throw SpecError(e.what());
    }
  } else {
    PoissonAlgebra::BracketTable table;
    for (const auto& [key, text] : spec.bracket)
      table.insert_or_assign(key, parse_poly(text, spec.vars, p));
    std::optional<MonomialIdeal> quotient;
    if (!spec.quotient.empty()) {
      std::vector<Monomial> gens;
      for (const auto& q : spec.quotient) {
        Poly f = parse_poly(q, spec.vars, p);
        if (f.terms().size() != 1 || !(f.terms().begin()->second == Scalar::one(p)))
          throw SpecError("quotient entry '" + q + "' is not a monomial");
        gens.push_back(f.terms().begin()->first);
      }
      quotient = MonomialIdeal(std::move(gens));
    }
    try {
      out.algebra = PoissonAlgebra::make(p, spec.vars, std::move(table),
                                         std::move(quotient));
    } catch (const std::invalid_argument& e) {
      throw SpecError(e.what());
    }
    if (spec.pmap_images) {
      std::vector<Poly> gamma;
      for (const auto& text : *spec.pmap_images)
        gamma.push_back(parse_poly(text, spec.vars, p));
      out.restricted = build_pmap(out.algebra, std::move(gamma),
                                  /*check_jacobson=*/true, jacobson_samples,
                                  seed, jacobson_exact_bound);
    }
  }

  if (spec.perturb) {
    if (!out.restricted)
      throw SpecError("'perturb' requires a p-map to perturb");
    auto it = std::find(out.algebra->variables().begin(),
                        out.algebra->variables().end(), spec.perturb->second);
    if (it == out.algebra->variables().end())
      throw SpecError("perturb names unknown variable '" +
                      spec.perturb->second + "'");
    uint32_t v =
        static_cast<uint32_t>(it - out.algebra->variables().begin());
    out.restricted = spec.perturb->first == "semilinear-central"
                         ? perturb_semilinear_central(*out.restricted, v)
                         : perturb_semilinear_shift(*out.restricted, v);
  }
  return out;
}

}  // namespace rpa
