#pragma once

#include <optional>
#include <vector>

#include "orbita/admissible.hpp"
#include "orbita/blattner.hpp"
#include "orbita/spinor.hpp"

namespace orbita {

// A subgroup pair G inside G', joined at the Cartan level by the dual
// projection of the embedding.
struct PairConfig {
  RootDatum gprime;
  RootDatum g;
  EmbeddingData emb;
};

struct BranchingEntry {
  Vec lambda;                 // Harish-Chandra parameter over G
  long long multiplicity = 0;
  bool certified = false;     // inside the requested window with a valid gap
  std::size_t chamber_id = 0;
};

struct BranchingResult {
  std::vector<BranchingEntry> entries;  // lex by lambda, nonzero only
  Rat cutoff = 0;
  std::optional<Rat> gap;
  std::optional<std::size_t> unique_chamber;     // set when consistent and nonempty
  std::vector<std::pair<Vec, Vec>> violations;   // parameter pairs in distinct chambers
};

// Branching multiplicities of the discrete series of G' with parameter
// lambda' restricted to G, for every admissible orbit parameter of G with
// ||lambda + rho(lambda)|| <= r. Throws NotAdmissiblePair, UnexpectedKtype,
// NegativeMultiplicity.
BranchingResult restrict_discrete_series(const PairConfig& cfg, const Vec& lambda_prime,
                                         const Rat& r);

// Single entry of the table above. Throws UncertifiedRange when lambda sits
// outside the certified window for cutoff r.
long long multiplicity(const PairConfig& cfg, const Vec& lambda_prime,
                       const Vec& lambda, const Rat& r);

// Checks that all nonzero entries share one chamber; fills unique_chamber or
// the violation list on the result.
void verify_unique_chamber(const RootDatum& d_g, BranchingResult& result);

// True when the two runs agree on the r1-certified window.
bool stabilization_check(const PairConfig& cfg, const Vec& lambda_prime,
                         const Rat& r1, const Rat& r2);

}  // namespace orbita
