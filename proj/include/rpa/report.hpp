#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <vector>

namespace rpa {

/// One verified identity (or a batch of samples of it).
struct Check {
  std::string name;
  bool pass = true;
  /// Inputs and both sides of the first violated identity, as canonical
  /// polynomial strings. Empty when the check passed.
  std::vector<std::string> witness;
  /// Informational rows are reported but do not affect the verdict.
  bool informational = false;
};

struct Report {
  std::string suite;
  uint64_t seed = 0;
  uint64_t samples = 0;
  // deque: Check& handed out by add() stays valid across later adds
  std::deque<Check> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass && !c.informational) return false;
    return true;
  }

  Check& add(const std::string& name) {
    Check c;
    c.name = name;
    checks.push_back(std::move(c));
    return checks.back();
  }

  /// Human-readable form, one line per check. Timing is appended here and
  /// deliberately kept out of the JSON form so reports stay byte-identical
  /// for a fixed seed.
  std::string text() const;

  /// Machine-readable form; deterministic for fixed (input, seed).
  std::string json() const;
};

}  // namespace rpa
