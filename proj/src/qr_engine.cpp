#include "orbita/qr_engine.hpp"

#include <algorithm>
#include <set>

namespace orbita {

namespace {

// Upper bound on ||rho_n(xi)|| valid in every chamber.
Rat rho_n_bound(const RootDatum& d) {
  Rat b(0);
  for (const auto& beta : d.noncompact_positive())
    b += rat_sqrt_upper(d.norm_sq(beta)) / 2;
  return b;
}

Rat cone_depth(const RootDatum& d_gprime, const Vec& lambda_prime) {
  return 2 * rat_sqrt_upper(d_gprime.csq_G(lambda_prime)) + 6;
}

}  // namespace

BranchingResult restrict_discrete_series(const PairConfig& cfg, const Vec& lambda_prime,
                                         const Rat& r) {
  const RootDatum& gp = cfg.gprime;
  const RootDatum& g = cfg.g;
  validate_embedding(gp, g, cfg.emb);

  auto chambers_p = enumerate_chambers(gp);
  NoncompactPartition dp(gp, chamber_of(gp, chambers_p, lambda_prime));

  ConeDesc cone = asymptotic_support_cone(gp, dp, lambda_prime, cone_depth(gp, lambda_prime));
  AdmissibilityVerdict verdict = check_admissibility(gp, g, cone, cfg.emb);
  if (verdict.status != AdmissibilityVerdict::Status::Admissible)
    throw Error(ErrorCode::NotAdmissiblePair,
                "witness direction " + vec_to_string(verdict.witness));
  Rat delta = verdict.gap;

  auto chambers_g = enumerate_chambers(g);
  if (chambers_g.empty())
    throw Error(ErrorCode::NotStronglyElliptic, "subgroup datum has no chambers");
  Vec oref = chambers_g.front().representative;
  CoverInfo cover = cover_type(g);
  SpinorCharacter spin = spinor_character(g, oref);
  Rat delta_spin = spinor_shift(g, spin);

  // Window on the K side: every admissible lambda with c^G <= r satisfies
  // ||lambda + rho_c|| <= r + ||rho_n(lambda)||.
  Rat target = r + rho_n_bound(g);
  Rat pre_tensor = target + delta_spin;

  // The gap bounds how far up the K'-ladder K-types of a given norm can come
  // from; the additive shortfall is measured on the computed window and the
  // radius re-enlarged until self-consistent.
  Rat radius = pre_tensor / delta + 1;
  VirtualCharacter total;
  for (int iter = 0; iter < 5; ++iter) {
    total = VirtualCharacter{};
    total.certified_norm = pre_tensor;
    VirtualCharacter upstairs = restrict_to_K(gp, dp, lambda_prime, radius);
    Rat shortfall(0);
    for (const auto& [mu_p, m_p] : upstairs.coeffs) {
      VirtualCharacter branched = branch_compact(gp, mu_p, g, cfg.emb.dual_projection);
      Rat min_ck(-1);
      for (const auto& [mu, c] : branched.coeffs) {
        total.coeffs[mu] += m_p * c;
        if (total.coeffs[mu] == 0) total.coeffs.erase(mu);
        Rat ck = g.csq_K(mu);
        if (min_ck < 0 || ck < min_ck) min_ck = ck;
      }
      if (min_ck < 0) continue;
      Rat s = delta * rat_sqrt_upper(gp.csq_K(mu_p)) - rat_sqrt_lower(min_ck);
      if (s > shortfall) shortfall = s;
    }
    Rat needed = (pre_tensor + shortfall) / delta;
    if (radius >= needed) break;
    radius = needed + 1;
  }

  VirtualCharacter tensored = tensor_spinor(g, total, spin);

  BranchingResult result;
  result.cutoff = r;
  result.gap = delta;
  Rat target_sq = target * target;
  Rat rsq = r * r;
  for (const auto& [mu, c] : tensored.coeffs) {
    if (c == 0) continue;
    // Exact coset parity: truncation cannot break it.
    if (!in_K_out(g, cover, mu))
      throw Error(ErrorCode::UnexpectedKtype,
                  "type " + vec_to_string(mu) + " escapes the outer coset");
    if (g.csq_K(mu) > target_sq) continue;  // truncation debris
    if (!is_strongly_elliptic_regular(g, mu) || !is_admissible_orbit(g, mu))
      throw Error(ErrorCode::UnexpectedKtype,
                  "type " + vec_to_string(mu) + " matches no admissible orbit");
    long long m = orientation_ratio(g, oref, vec_neg(mu)) * c;
    bool certified = g.csq_G(mu) <= rsq;
    if (certified && m < 0)
      throw Error(ErrorCode::NegativeMultiplicity,
                  "negative certified multiplicity at " + vec_to_string(mu));
    BranchingEntry e;
    e.lambda = mu;
    e.multiplicity = m;
    e.certified = certified;
    e.chamber_id = chamber_of(g, chambers_g, mu).id;
    result.entries.push_back(std::move(e));
  }
  std::sort(result.entries.begin(), result.entries.end(),
            [](const BranchingEntry& a, const BranchingEntry& b) {
              return VecLess()(a.lambda, b.lambda);
            });
  verify_unique_chamber(g, result);
  return result;
}

long long multiplicity(const PairConfig& cfg, const Vec& lambda_prime,
                       const Vec& lambda, const Rat& r) {
  if (cfg.g.csq_G(lambda) > r * r)
    throw Error(ErrorCode::UncertifiedRange,
                "orbit " + vec_to_string(lambda) + " lies outside cutoff " + rat_to_string(r));
  BranchingResult result = restrict_discrete_series(cfg, lambda_prime, r);
  for (const auto& e : result.entries)
    if (e.lambda == lambda) return e.multiplicity;
  return 0;
}

void verify_unique_chamber(const RootDatum& d_g, BranchingResult& result) {
  result.unique_chamber.reset();
  result.violations.clear();
  const BranchingEntry* first = nullptr;
  for (const auto& e : result.entries) {
    if (e.multiplicity == 0) continue;
    if (!first) {
      first = &e;
      continue;
    }
    if (e.chamber_id != first->chamber_id)
      result.violations.emplace_back(first->lambda, e.lambda);
  }
  if (first && result.violations.empty()) result.unique_chamber = first->chamber_id;
}

bool stabilization_check(const PairConfig& cfg, const Vec& lambda_prime,
                         const Rat& r1, const Rat& r2) {
  if (!(r1 < r2))
    throw Error(ErrorCode::ConfigError, "stabilization needs r1 < r2");
  BranchingResult a = restrict_discrete_series(cfg, lambda_prime, r1);
  BranchingResult b = restrict_discrete_series(cfg, lambda_prime, r2);
  Rat window = r1 * r1;
  std::map<Vec, long long, VecLess> ma, mb;
  for (const auto& e : a.entries)
    if (cfg.g.csq_G(e.lambda) <= window && e.multiplicity != 0) ma[e.lambda] = e.multiplicity;
  for (const auto& e : b.entries)
    if (cfg.g.csq_G(e.lambda) <= window && e.multiplicity != 0) mb[e.lambda] = e.multiplicity;
  return ma == mb;
}

}  // namespace orbita
