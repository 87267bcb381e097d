#pragma once

#include <vector>

#include "orbita/rootdata.hpp"

namespace orbita {

// A connected component of the strongly elliptic part of the Weyl chamber,
// identified by the signs taken on the base positive noncompact roots.
struct Chamber {
  std::size_t id = 0;
  std::vector<int> signs;  // +1/-1, indexed against noncompact_positive()
  Vec representative;      // exact interior witness
};

// A Harish-Chandra parameter: regular, strongly elliptic, admissible.
struct OrbitParam {
  Vec lambda;
  std::size_t chamber_id = 0;
};

bool is_strongly_elliptic_regular(const RootDatum& d, const Vec& lambda);

std::vector<Chamber> enumerate_chambers(const RootDatum& d);

// Throws NotStronglyElliptic. The chamber list must come from
// enumerate_chambers on the same datum.
const Chamber& chamber_of(const RootDatum& d, const std::vector<Chamber>& chambers,
                          const Vec& lambda);

// lambda - rho(lambda) in Lambda. Throws NotRegular.
bool is_admissible_orbit(const RootDatum& d, const Vec& lambda);

// All admissible parameters in the chamber with ||lambda + rho(lambda)|| <= bound.
std::vector<OrbitParam> enumerate_orbits(const RootDatum& d, const Chamber& chamber,
                                         const Rat& bound);

// Lattice points p of Lambda with ||p - center|| <= radius, sorted.
std::vector<Vec> lattice_points_in_ball(const RootDatum& d, const Vec& center,
                                        const Rat& radius);

}  // namespace orbita
