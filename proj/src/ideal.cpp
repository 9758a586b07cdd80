#include "rpa/ideal.hpp"

#include <algorithm>

namespace rpa {

MonomialIdeal::MonomialIdeal(std::vector<Monomial> generators) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  // Drop generators divisible by another one; membership tests stay cheap.
  for (const auto& g : generators) {
    bool redundant = false;
    for (const auto& h : generators)
      if (!(h == g) && g.divisible_by(h)) {
        redundant = true;
        break;
      }
    if (!redundant) gens_.push_back(g);
  }
}

}  // namespace rpa
