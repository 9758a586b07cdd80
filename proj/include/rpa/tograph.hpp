#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rpa/poly.hpp"
#include "rpa/report.hpp"

namespace rpa {

/// Totally ordered graph on vertices 1..p: every edge points from the
/// smaller to the larger endpoint. Edges form a multiset, kept
/// lexicographically sorted (the canonical form).
struct Tograph {
  uint32_t p = 0;
  std::vector<std::pair<uint32_t, uint32_t>> edges;

  Tograph(uint32_t vertex_count,
          std::vector<std::pair<uint32_t, uint32_t>> edge_multiset);

  uint32_t outdegree(uint32_t v) const;
  uint32_t indegree(uint32_t v) const;

  bool operator==(const Tograph& o) const {
    return p == o.p && edges == o.edges;
  }
  std::string to_string() const;
};

/// One component class inside an equivalence profile: the canonical
/// relabeled component (vertices 1..size), how many copies, and its size.
struct ComponentClass {
  std::string signature;  // canonical edge multiset, serialized
  uint32_t multiplicity = 0;
  uint32_t size = 0;

  bool operator==(const ComponentClass&) const = default;
  auto operator<=>(const ComponentClass&) const = default;
};

struct ComponentProfile {
  std::vector<ComponentClass> classes;  // sorted

  uint32_t vertex_total() const;
  bool operator==(const ComponentProfile&) const = default;
  auto operator<=>(const ComponentProfile&) const = default;
  std::string to_string() const;
};

/// All C(p,2) admissible edges, lexicographically ordered.
std::vector<std::pair<uint32_t, uint32_t>> all_edges(uint32_t p);

/// Streams every tuple (i_1..i_n; j_1..j_n) with 1 <= i_t < j_t <= p;
/// cardinality C(p,2)^n.
void enumerate_gamma(
    uint32_t n, uint32_t p,
    const std::function<void(const std::vector<std::pair<uint32_t, uint32_t>>&)>&
        visit);

uint64_t gamma_cardinality(uint32_t n, uint32_t p);

/// Product over vertices of the mixed plain partial
/// d^{deg(v)} f / dx^{outdeg(v)} dy^{indeg(v)}; f in two variables.
Poly graph_weight(const Tograph& g, const Poly& f);

/// Decomposition into connected components of the underlying graph, each
/// canonicalized by the order-preserving relabeling onto 1..size.
ComponentProfile equivalence_class(const Tograph& g);

/// Number of tographs equivalent to a representative with this profile:
/// p! / ((n_1!)^{k_1} ... (n_r!)^{k_r} k_1! ... k_r!), as an exact integer.
uint64_t count_equivalent(const ComponentProfile& profile);

/// Streams every distinct tograph with n edges (edge multisets) together
/// with the number of Gamma_n tuples collapsing onto it, n!/prod nu(u,v)!.
void for_each_tograph(uint32_t n, uint32_t p,
                      const std::function<void(const Tograph&, uint64_t)>& visit);

struct ClassCount {
  uint64_t members = 0;  // distinct tographs in the class
  uint64_t tuples = 0;   // Gamma_n tuples covered
};

/// Equivalence classes of Gamma_n keyed by component profile.
std::map<ComponentProfile, ClassCount> tograph_classes(uint32_t n, uint32_t p);

/// Combinatorial reconstruction of the t^n coefficient of f^{*p} for the
/// two-variable bracket {x, y} = 1:
///   M_n(f) = (1/n!) sum over Gamma_n of the graph weight,
/// with tuples collapsed to edge multisets carrying multiplicity
/// n! / prod nu(u,v)!. Requires 1 <= n <= p-1.
Poly combinatorial_M(const Poly& f, uint32_t n, PrimeChar p);

/// Census of the equivalence classes of Gamma_n and the structural
/// vanishing proof: for n <= p-2 every class size N is divisible by p.
/// Also cross-checks each N against the enumerated class size.
Report vanishing_certificate(uint32_t n, PrimeChar p);

}  // namespace rpa
