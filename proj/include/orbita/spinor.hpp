#pragma once

#include <map>

#include "orbita/chambers.hpp"
#include "orbita/rootdata.hpp"

namespace orbita {

enum class CoverKind { Isomorphism, DoubleCover };

// The cover K~ -> K together with the reference coset offset rho_n(xi).
struct CoverInfo {
  CoverKind kind = CoverKind::Isomorphism;
  Vec rho_n_ref;
};

enum class WeightCoset { Lattice, RhoNShifted };

// Finite virtual T~-character of the spinor representation, stored fully
// expanded as a signed weight multiset.
struct SpinorCharacter {
  std::map<Vec, long long, VecLess> terms;
  Vec orientation_ref;
};

// Uses the representative of the first enumerated chamber as reference.
CoverInfo cover_type(const RootDatum& d);

// Expansion of prod_{beta in R_n, (beta,ref)>0} (e^{beta/2} - e^{-beta/2}).
// Throws NotStronglyElliptic.
SpinorCharacter spinor_character(const RootDatum& d, const Vec& ref);

// (-1)^{#{beta in R_n^+(lambda1) : (beta, lambda2) < 0}}.
int orientation_ratio(const RootDatum& d, const Vec& lambda1, const Vec& lambda2);

// Which Lambda~-coset a weight lies in; nothing when it is in neither.
std::optional<WeightCoset> coset_of(const RootDatum& d, const CoverInfo& cover,
                                    const Vec& v);

// The injection O -> O_K at the parameter level: identity on coordinates,
// landing in the rho_n + Lambda coset of K~-parameters.
Vec orbit_to_Kout(const RootDatum& d, const OrbitParam& orbit);

// mu - rho_c in rho_n + Lambda, for strictly dominant mu. Throws NotDominant.
bool in_K_out(const RootDatum& d, const CoverInfo& cover, const Vec& mu);

}  // namespace orbita
