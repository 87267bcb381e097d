#pragma once

#include <map>
#include <utility>

#include "orbita/chambers.hpp"
#include "orbita/characters.hpp"

namespace orbita {

// Vector partition counts over the positive noncompact roots of one chamber,
// with a shared memo table. Not thread safe; use one instance per thread.
class NoncompactPartition {
 public:
  NoncompactPartition(const RootDatum& d, const Chamber& chamber);

  const Chamber& chamber() const { return chamber_; }

  // #{(n_b) in N^m : sum n_b * b = nu} over R_n^+(chamber).
  Int count(const Vec& nu);

 private:
  Int count_prefix(std::size_t k, const Vec& nu);

  const RootDatum& d_;
  Chamber chamber_;
  std::vector<Vec> roots_;  // R_n^+(chamber), lex order
  std::map<std::pair<std::size_t, Vec>, Int> memo_;
};

struct CNorms {
  Rat cG_sq;  // ||lambda + rho(lambda)||^2
  Rat cK_sq;  // ||mu + rho_c||^2
};

CNorms c_norms(const RootDatum& d, const Vec& lambda, const Vec& mu);

// Multiplicity of the K-type with parameter mu in the discrete series with
// Harish-Chandra parameter lambda; dp must be built on the chamber of lambda.
// Throws NotDominant / NegativeMultiplicity.
long long blattner_multiplicity(const RootDatum& d, NoncompactPartition& dp,
                                const Vec& lambda, const Vec& mu);

// All K-types with ||mu + rho_c|| <= r and their multiplicities;
// certified_norm = r.
VirtualCharacter restrict_to_K(const RootDatum& d, NoncompactPartition& dp,
                               const Vec& lambda, const Rat& r);

// Convenience wrapper that locates the chamber of lambda itself.
VirtualCharacter restrict_to_K(const RootDatum& d, const Vec& lambda, const Rat& r);

}  // namespace orbita
