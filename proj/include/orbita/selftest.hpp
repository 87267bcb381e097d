#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "orbita/rational.hpp"

namespace orbita {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // failure reason, empty on pass
};

// The full acceptance suite on bundled data. cutoff_override widens the
// windows of the cutoff-driven criteria, never narrows them.
std::vector<CriterionResult> run_acceptance(const std::optional<Rat>& cutoff_override);

// Prints one pass/fail line per criterion; returns 0 when all pass, 4 otherwise.
int run_selftest(std::ostream& out, const std::optional<Rat>& cutoff_override);

}  // namespace orbita
