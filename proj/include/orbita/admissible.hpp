#pragma once

#include <optional>
#include <vector>

#include "orbita/blattner.hpp"
#include "orbita/chambers.hpp"

namespace orbita {

// Cartan-level dual projection from (t')* coordinates to t* coordinates.
struct EmbeddingData {
  Mat dual_projection;
};

// R>=0-span of finitely many rational directions in (t')* coordinates.
struct ConeDesc {
  std::vector<Vec> generators;  // primitive, extreme, lex sorted
  Rat depth = 0;                // K'-type window the cone was read from
};

struct AdmissibilityVerdict {
  enum class Status { Admissible, NotAdmissible, Unknown };
  Status status = Status::Unknown;
  Rat gap = 0;  // certified delta when Admissible
  Vec witness;  // primitive cone direction killed by the projection
};

// Image of Lambda' under the projection must land in Lambda.
// Throws IncompatibleLattices / InvalidCartan on shape mismatch.
void validate_embedding(const RootDatum& d_gprime, const RootDatum& d_g,
                        const EmbeddingData& emb);

// Recession directions of the K'-type support of the discrete series with
// parameter lambda', read off the Blattner window c^{K'} <= depth as the
// primitive differences mu - mu0 from the minimal type, reduced to extreme
// rays. Throws EmptySupport when the window is empty.
ConeDesc asymptotic_support_cone(const RootDatum& d_gprime, NoncompactPartition& dp,
                                 const Vec& lambda_prime, const Rat& depth);

// For each w in W_{K'}, decide whether some nonzero cone direction is sent to
// zero by dual_projection after w. Feasible directions give NotAdmissible
// with an exact witness; otherwise Admissible with gap from truncation_gap.
// Throws DegenerateCone when the generator simplex passes through 0.
AdmissibilityVerdict check_admissibility(const RootDatum& d_gprime,
                                         const RootDatum& d_g,
                                         const ConeDesc& cone,
                                         const EmbeddingData& emb);

// Largest certified delta with ||proj(w v)|| >= delta ||v|| for every cone
// direction v and every w in W_{K'}. Throws ZeroGap when no positive bound
// certifies. Exact on perfect squares (delta = 1 cases).
Rat truncation_gap(const RootDatum& d_gprime, const RootDatum& d_g,
                   const ConeDesc& cone, const EmbeddingData& emb);

}  // namespace orbita
