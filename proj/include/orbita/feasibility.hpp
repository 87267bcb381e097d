#pragma once

#include <optional>
#include <vector>

#include "orbita/rational.hpp"

namespace orbita {

// One linear constraint  a.x >= b  (or strict a.x > b).
struct LinearConstraint {
  Vec coeffs;
  Rat bound;
  bool strict = false;
};

// Exact Fourier-Motzkin feasibility over the rationals. Returns a witness
// point when the system is feasible. Variable count is small here (torus
// rank or a handful of cone coefficients), so the elimination blowup is a
// non-issue at the scales this engine targets.
std::optional<Vec> feasible_point(const std::vector<LinearConstraint>& constraints,
                                  std::size_t num_vars);

}  // namespace orbita
