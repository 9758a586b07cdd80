#include "rpa/tograph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace rpa {

Tograph::Tograph(uint32_t vertex_count,
                 std::vector<std::pair<uint32_t, uint32_t>> edge_multiset)
    : p(vertex_count), edges(std::move(edge_multiset)) {
  for (const auto& [s, t] : edges)
    if (s < 1 || s >= t || t > p)
      throw std::invalid_argument("edge must satisfy 1 <= s < t <= p");
  std::sort(edges.begin(), edges.end());
}

uint32_t Tograph::outdegree(uint32_t v) const {
  uint32_t d = 0;
  for (const auto& [s, t] : edges) d += (s == v);
  return d;
}

uint32_t Tograph::indegree(uint32_t v) const {
  uint32_t d = 0;
  for (const auto& [s, t] : edges) d += (t == v);
  return d;
}

std::string Tograph::to_string() const {
  std::string s = "p=" + std::to_string(p) + " edges={";
  for (size_t i = 0; i < edges.size(); ++i) {
    if (i) s += ",";
    s += "(" + std::to_string(edges[i].first) + "," +
         std::to_string(edges[i].second) + ")";
  }
  return s + "}";
}

uint32_t ComponentProfile::vertex_total() const {
  uint32_t n = 0;
  for (const auto& c : classes) n += c.multiplicity * c.size;
  return n;
}

std::string ComponentProfile::to_string() const {
  std::string s;
  for (const auto& c : classes) {
    if (!s.empty()) s += " | ";
    s += "[" + c.signature + "] x" + std::to_string(c.multiplicity);
  }
  return s;
}

std::vector<std::pair<uint32_t, uint32_t>> all_edges(uint32_t p) {
  std::vector<std::pair<uint32_t, uint32_t>> e;
  for (uint32_t i = 1; i <= p; ++i)
    for (uint32_t j = i + 1; j <= p; ++j) e.emplace_back(i, j);
  return e;
}

void enumerate_gamma(
    uint32_t n, uint32_t p,
    const std::function<void(const std::vector<std::pair<uint32_t, uint32_t>>&)>&
        visit) {
  if (n < 1) throw std::invalid_argument("tuple length must be positive");
  auto edges = all_edges(p);
  std::vector<size_t> idx(n, 0);
  std::vector<std::pair<uint32_t, uint32_t>> tuple(n);
  while (true) {
    for (uint32_t t = 0; t < n; ++t) tuple[t] = edges[idx[t]];
    visit(tuple);
    uint32_t pos = n;
    while (pos > 0 && ++idx[pos - 1] == edges.size()) idx[--pos] = 0;
    if (pos == 0) break;
  }
}

uint64_t gamma_cardinality(uint32_t n, uint32_t p) {
  uint64_t m = static_cast<uint64_t>(p) * (p - 1) / 2;
  uint64_t r = 1;
  for (uint32_t t = 0; t < n; ++t) r = checked_mul(r, m);
  return r;
}

Poly graph_weight(const Tograph& g, const Poly& f) {
  Poly w = Poly::constant(1, f.characteristic());
  for (uint32_t v = 1; v <= g.p; ++v) {
    Poly dv = f.iterated_partial(0, g.outdegree(v)).iterated_partial(
        1, g.indegree(v));
    if (dv.is_zero()) return Poly::zero(f.characteristic());
    w *= dv;
  }
  return w;
}

ComponentProfile equivalence_class(const Tograph& g) {
  // Union-find over vertices with the undirected adjacency.
  std::vector<uint32_t> parent(g.p + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<uint32_t(uint32_t)> find = [&](uint32_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [s, t] : g.edges) parent[find(s)] = find(t);

  std::map<uint32_t, std::vector<uint32_t>> members;
  for (uint32_t v = 1; v <= g.p; ++v) members[find(v)].push_back(v);

  std::map<std::pair<std::string, uint32_t>, uint32_t> census;
  for (const auto& [root, verts] : members) {
    // Order-preserving relabeling onto 1..size.
    std::map<uint32_t, uint32_t> relabel;
    for (uint32_t i = 0; i < verts.size(); ++i) relabel[verts[i]] = i + 1;
    std::vector<std::pair<uint32_t, uint32_t>> comp_edges;
    for (const auto& [s, t] : g.edges)
      if (relabel.count(s)) comp_edges.emplace_back(relabel[s], relabel[t]);
    std::sort(comp_edges.begin(), comp_edges.end());
    std::string sig = "n=" + std::to_string(verts.size());
    for (const auto& [s, t] : comp_edges)
      sig += ";" + std::to_string(s) + ">" + std::to_string(t);
    census[{sig, static_cast<uint32_t>(verts.size())}]++;
  }

  ComponentProfile profile;
  for (const auto& [key, mult] : census)
    profile.classes.push_back({key.first, mult, key.second});
  std::sort(profile.classes.begin(), profile.classes.end());
  return profile;
}

namespace {

uint64_t factorial_exact(uint32_t n) {
  uint64_t r = 1;
  for (uint32_t i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

}  // namespace

uint64_t count_equivalent(const ComponentProfile& profile) {
  uint32_t p = profile.vertex_total();
  uint64_t denom = 1;
  for (const auto& c : profile.classes) {
    for (uint32_t k = 0; k < c.multiplicity; ++k)
      denom = checked_mul(denom, factorial_exact(c.size));
    denom = checked_mul(denom, factorial_exact(c.multiplicity));
  }
  uint64_t num = factorial_exact(p);
  if (num % denom != 0)
    throw std::logic_error("class count is not an integer; profile broken");
  return num / denom;
}

void for_each_tograph(
    uint32_t n, uint32_t p,
    const std::function<void(const Tograph&, uint64_t)>& visit) {
  auto edges = all_edges(p);
  std::vector<size_t> pick(n, 0);
  std::vector<std::pair<uint32_t, uint32_t>> chosen(n);

  std::function<void(uint32_t, size_t)> rec = [&](uint32_t depth, size_t lo) {
    if (depth == n) {
      uint64_t denom = 1;
      size_t run = 1;
      for (uint32_t t = 1; t <= n; ++t) {
        if (t < n && pick[t] == pick[t - 1]) {
          ++run;
        } else {
          denom = checked_mul(denom, factorial_exact(static_cast<uint32_t>(run)));
          run = 1;
        }
      }
      for (uint32_t t = 0; t < n; ++t) chosen[t] = edges[pick[t]];
      visit(Tograph(p, chosen), factorial_exact(n) / denom);
      return;
    }
    for (size_t e = lo; e < edges.size(); ++e) {
      pick[depth] = e;
      rec(depth + 1, e);
    }
  };
  rec(0, 0);
}

std::map<ComponentProfile, ClassCount> tograph_classes(uint32_t n, uint32_t p) {
  std::map<ComponentProfile, ClassCount> classes;
  for_each_tograph(n, p, [&](const Tograph& g, uint64_t tuples) {
    auto& data = classes[equivalence_class(g)];
    data.members += 1;
    data.tuples += tuples;
  });
  return classes;
}

Poly combinatorial_M(const Poly& f, uint32_t n, PrimeChar p) {
  if (n < 1 || n > p.value() - 1)
    throw std::out_of_range("order must satisfy 1 <= n <= p-1");
  Poly total = Poly::zero(p);
  for_each_tograph(n, p.value(), [&](const Tograph& g, uint64_t tuples) {
    Scalar mult(static_cast<uint32_t>(tuples % p.value()), p);
    if (mult.is_zero()) return;
    total += graph_weight(g, f) * mult;
  });
  return total * factorial_mod(n, p).inverse();
}

Report vanishing_certificate(uint32_t n, PrimeChar p) {
  if (n < 1 || n > p.value() - 2)
    throw std::out_of_range("certificate requires 1 <= n <= p-2");
  Report rep;
  rep.suite = "tograph-vanishing";

  auto classes = tograph_classes(n, p.value());

  Check& div = rep.add("p divides N for every class of Gamma_" +
                       std::to_string(n));
  Check& size = rep.add("N equals the enumerated class size");
  Check& part = rep.add("classes partition Gamma_" + std::to_string(n));
  uint64_t tuple_total = 0;
  for (const auto& [profile, data] : classes) {
    uint64_t count = count_equivalent(profile);
    if (div.pass && count % p.value() != 0) {
      div.pass = false;
      div.witness = {"profile = " + profile.to_string(),
                     "N = " + std::to_string(count)};
    }
    if (size.pass && count != data.members) {
      size.pass = false;
      size.witness = {"profile = " + profile.to_string(),
                      "N = " + std::to_string(count),
                      "enumerated = " + std::to_string(data.members)};
    }
    tuple_total += data.tuples;
  }
  if (tuple_total != gamma_cardinality(n, p.value())) {
    part.pass = false;
    part.witness = {"covered = " + std::to_string(tuple_total),
                    "expected = " + std::to_string(gamma_cardinality(n, p.value()))};
  }

  Check& census = rep.add("census: " + std::to_string(classes.size()) +
                          " classes");
  census.informational = true;
  for (const auto& [profile, data] : classes)
    census.witness.push_back("N = " + std::to_string(count_equivalent(profile)) +
                             "  " + profile.to_string());
  return rep;
}

}  // namespace rpa
