#include "orbita/spinor.hpp"

namespace orbita {

CoverInfo cover_type(const RootDatum& d) {
  auto chambers = enumerate_chambers(d);
  if (chambers.empty())
    throw Error(ErrorCode::NotStronglyElliptic, "datum has no chambers");
  CoverInfo info;
  info.rho_n_ref = d.rho_n_of(chambers.front().representative);
  info.kind = d.in_lattice(info.rho_n_ref) ? CoverKind::Isomorphism
                                           : CoverKind::DoubleCover;
  return info;
}

SpinorCharacter spinor_character(const RootDatum& d, const Vec& ref) {
  if (!is_strongly_elliptic_regular(d, ref))
    throw Error(ErrorCode::NotStronglyElliptic, "spinor reference must be strongly elliptic regular");
  std::vector<Vec> half;  // beta/2 over R_n^+(ref)
  for (const auto& r : d.roots())
    if (!r.compact && d.inner(ref, r.coords) > 0)
      half.push_back(vec_scale(Rat(1, 2), r.coords));

  SpinorCharacter s;
  s.orientation_ref = ref;
  std::size_t m = half.size();
  for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
    Vec w(d.rank(), Rat(0));
    int sign = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1) {
        w = vec_sub(w, half[i]);
        sign = -sign;
      } else {
        w = vec_add(w, half[i]);
      }
    }
    s.terms[w] += sign;
    if (s.terms[w] == 0) s.terms.erase(w);
  }
  return s;
}

int orientation_ratio(const RootDatum& d, const Vec& lambda1, const Vec& lambda2) {
  // Both references must avoid the noncompact walls, nothing more: the second
  // argument is typically a negated parameter and not compact-dominant.
  for (const auto& r : d.roots())
    if (!r.compact &&
        (d.inner(lambda1, r.coords) == 0 || d.inner(lambda2, r.coords) == 0))
      throw Error(ErrorCode::NotStronglyElliptic,
                  "orientation references must avoid the noncompact walls");
  int flips = 0;
  for (const auto& r : d.roots())
    if (!r.compact && d.inner(lambda1, r.coords) > 0 && d.inner(lambda2, r.coords) < 0)
      ++flips;
  return flips % 2 == 0 ? 1 : -1;
}

std::optional<WeightCoset> coset_of(const RootDatum& d, const CoverInfo& cover,
                                    const Vec& v) {
  if (d.in_lattice(v)) return WeightCoset::Lattice;
  if (d.in_lattice(vec_sub(v, cover.rho_n_ref))) return WeightCoset::RhoNShifted;
  return std::nullopt;
}

Vec orbit_to_Kout(const RootDatum& d, const OrbitParam& orbit) {
  // lambda - rho_c = (lambda - rho(lambda)) + rho_n(lambda), so the parameter
  // sits in the shifted coset; the map is the identity on coordinates.
  return orbit.lambda;
}

bool in_K_out(const RootDatum& d, const CoverInfo& cover, const Vec& mu) {
  if (!d.is_dominant_compact(mu, /*strict=*/true))
    throw Error(ErrorCode::NotDominant, "K_out membership needs a strictly dominant parameter");
  return d.in_lattice(vec_sub(vec_sub(mu, d.rho_c()), cover.rho_n_ref));
}

}  // namespace orbita
