#include "orbita/blattner.hpp"

#include <algorithm>

namespace orbita {

NoncompactPartition::NoncompactPartition(const RootDatum& d, const Chamber& chamber)
    : d_(d), chamber_(chamber) {
  const auto& rn = d.noncompact_positive();
  for (std::size_t i = 0; i < rn.size(); ++i)
    roots_.push_back(chamber.signs[i] < 0 ? vec_neg(rn[i]) : rn[i]);
  std::sort(roots_.begin(), roots_.end(), VecLess());
}

Int NoncompactPartition::count(const Vec& nu) {
  return count_prefix(roots_.size(), nu);
}

Int NoncompactPartition::count_prefix(std::size_t k, const Vec& nu) {
  if (vec_is_zero(nu)) return 1;
  if (k == 0) return 0;
  // Every usable root has positive pairing with the chamber representative,
  // so a target on the wrong side of it is out of the cone.
  if (d_.inner(nu, chamber_.representative) < 0) return 0;
  auto key = std::make_pair(k, nu);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  Int total = count_prefix(k - 1, nu) + count_prefix(k, vec_sub(nu, roots_[k - 1]));
  memo_.emplace(std::move(key), total);
  return total;
}

CNorms c_norms(const RootDatum& d, const Vec& lambda, const Vec& mu) {
  return {d.csq_G(lambda), d.csq_K(mu)};
}

long long blattner_multiplicity(const RootDatum& d, NoncompactPartition& dp,
                                const Vec& lambda, const Vec& mu) {
  if (!d.is_dominant_compact(mu, /*strict=*/true))
    throw Error(ErrorCode::NotDominant,
                "K-type parameter must be strictly dominant: " + vec_to_string(mu));
  Vec shift = vec_add(lambda, d.rho_n_of(lambda));
  Int total = 0;
  for (const auto& w : d.weyl_K())
    total += w.sign * dp.count(vec_sub(mat_vec(w.matrix, mu), shift));
  if (total < 0)
    throw Error(ErrorCode::NegativeMultiplicity,
                "alternating sum went negative at " + vec_to_string(mu));
  return static_cast<long long>(total);
}

VirtualCharacter restrict_to_K(const RootDatum& d, NoncompactPartition& dp,
                               const Vec& lambda, const Rat& r) {
  VirtualCharacter out;
  out.certified_norm = r;
  if (r < 0) return out;
  Rat rsq = r * r;
  Rat cg_sq = d.csq_G(lambda);
  // Candidates mu = p + rho_c, p in Lambda, inside ||p + 2 rho_c|| <= r.
  // Types below ||lambda + rho(lambda)|| cannot occur.
  Vec center = vec_neg(vec_scale(Rat(2), d.rho_c()));
  for (const auto& p : lattice_points_in_ball(d, center, r)) {
    Vec mu = vec_add(p, d.rho_c());
    if (!d.is_dominant_compact(mu, /*strict=*/true)) continue;
    Rat ck_sq = d.csq_K(mu);
    if (ck_sq < cg_sq || ck_sq > rsq) continue;
    long long m = blattner_multiplicity(d, dp, lambda, mu);
    if (m != 0) out.coeffs[mu] = m;
  }
  return out;
}

VirtualCharacter restrict_to_K(const RootDatum& d, const Vec& lambda, const Rat& r) {
  auto chambers = enumerate_chambers(d);
  NoncompactPartition dp(d, chamber_of(d, chambers, lambda));
  return restrict_to_K(d, dp, lambda, r);
}

}  // namespace orbita
