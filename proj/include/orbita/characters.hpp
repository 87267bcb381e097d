#pragma once

#include <map>

#include "orbita/rootdata.hpp"
#include "orbita/spinor.hpp"

namespace orbita {

// Exact integer weight function on the torus.
using TorusCharacter = std::map<Vec, long long, VecLess>;

// Truncated element of R^(K): keys are rho_c-shifted Harish-Chandra
// parameters mu (strictly dominant), coefficients exact for all types with
// c^K <= certified_norm.
struct VirtualCharacter {
  std::map<Vec, long long, VecLess> coeffs;
  Rat certified_norm = 0;
};

// prod_{alpha in R_c^+} (mu, alpha) / (rho_c, alpha).
long long weyl_dimension(const RootDatum& d, const Vec& mu);

// Multiplicity function of the irreducible with highest weight mu - rho_c,
// by Freudenthal recursion over the dominant weights, extended by W_K.
TorusCharacter weight_multiplicities(const RootDatum& d, const Vec& mu);

// Unique integer combination of irreducible characters with the given weight
// function, by highest-weight peeling. Throws NonTerminating when the input
// is not W_K-consistent.
VirtualCharacter decompose(const RootDatum& d, const TorusCharacter& tchar,
                           const Rat& certified_norm);

// Weight function of a virtual character (certified range ignored).
TorusCharacter character_weights(const RootDatum& d, const VirtualCharacter& v);

// Restrict one K'-type along the dual projection and decompose over K.
VirtualCharacter branch_compact(const RootDatum& d_kprime, const Vec& mu_prime,
                                const RootDatum& d_k, const Mat& dual_projection);

// Conservative norm loss when tensoring with S: max spinor weight norm plus
// the 2||rho_c|| slack from re-dominantizing parameters.
Rat spinor_shift(const RootDatum& d, const SpinorCharacter& s);

// V tensor S over K~, via signed re-dominantization of mu + s (valid because
// the spinor character is W_K-invariant).
VirtualCharacter tensor_spinor(const RootDatum& d, const VirtualCharacter& v,
                               const SpinorCharacter& s);

}  // namespace orbita
