#pragma once

#include <set>
#include <string>
#include <vector>

#include "rpa/monomial.hpp"

namespace rpa {

/// Monomial ideal, given by generators. Membership of a monomial is
/// divisibility by some generator; a polynomial lies in the ideal iff
/// every term does.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(std::vector<Monomial> generators);

  const std::vector<Monomial>& generators() const { return gens_; }
  bool empty() const { return gens_.empty(); }

  bool contains(const Monomial& m) const {
    for (const auto& g : gens_)
      if (m.divisible_by(g)) return true;
    return false;
  }

  bool operator==(const MonomialIdeal& o) const { return gens_ == o.gens_; }

 private:
  std::vector<Monomial> gens_;  // minimal, sorted
};

}  // namespace rpa
