#include "orbita/chambers.hpp"

#include <algorithm>

#include "orbita/feasibility.hpp"

namespace orbita {

namespace {

// Coefficient vector of x -> (x, v) in the coordinate basis.
Vec pairing_row(const RootDatum& d, const Vec& v) {
  Vec row(d.rank(), Rat(0));
  for (std::size_t i = 0; i < d.rank(); ++i)
    for (std::size_t j = 0; j < d.rank(); ++j) row[i] += d.spec().gram[i][j] * v[j];
  return row;
}

Int rat_floor(const Rat& x) {
  Int q = numerator(x) / denominator(x);
  if (x < 0 && q * denominator(x) != numerator(x)) --q;
  return q;
}

Vec clear_denominators(const Vec& v) {
  Int l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, denominator(x));
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * l;
  return r;
}

}  // namespace

bool is_strongly_elliptic_regular(const RootDatum& d, const Vec& lambda) {
  if (!d.is_dominant_compact(lambda, /*strict=*/true)) return false;
  for (const auto& r : d.roots())
    if (!r.compact && d.inner(lambda, r.coords) == 0) return false;
  return true;
}

std::vector<Chamber> enumerate_chambers(const RootDatum& d) {
  const auto& rn = d.noncompact_positive();
  std::size_t m = rn.size();
  std::vector<Chamber> out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
    std::vector<int> signs(m);
    std::vector<LinearConstraint> cons;
    for (const auto& a : d.compact_positive())
      cons.push_back({pairing_row(d, a), Rat(0), /*strict=*/true});
    for (std::size_t i = 0; i < m; ++i) {
      signs[i] = (mask >> i) & 1 ? -1 : 1;
      Vec row = pairing_row(d, rn[i]);
      if (signs[i] < 0) row = vec_neg(row);
      cons.push_back({row, Rat(0), /*strict=*/true});
    }
    auto witness = feasible_point(cons, d.rank());
    if (!witness) continue;
    Chamber c;
    c.id = out.size();
    c.signs = signs;
    c.representative = clear_denominators(*witness);
    out.push_back(std::move(c));
  }
  return out;
}

const Chamber& chamber_of(const RootDatum& d, const std::vector<Chamber>& chambers,
                          const Vec& lambda) {
  if (!is_strongly_elliptic_regular(d, lambda))
    throw Error(ErrorCode::NotStronglyElliptic,
                "no chamber for " + vec_to_string(lambda));
  const auto& rn = d.noncompact_positive();
  std::vector<int> signs(rn.size());
  for (std::size_t i = 0; i < rn.size(); ++i)
    signs[i] = d.inner(lambda, rn[i]) > 0 ? 1 : -1;
  for (const auto& c : chambers)
    if (c.signs == signs) return c;
  throw Error(ErrorCode::NotStronglyElliptic, "sign vector matches no chamber");
}

bool is_admissible_orbit(const RootDatum& d, const Vec& lambda) {
  if (!d.is_regular(lambda))
    throw Error(ErrorCode::NotRegular, "admissibility needs a regular parameter");
  return d.in_lattice(vec_sub(lambda, d.rho_of(lambda)));
}

std::vector<Vec> lattice_points_in_ball(const RootDatum& d, const Vec& center,
                                        const Rat& radius) {
  std::size_t n = d.rank();
  // Basis columns and their Gram matrix.
  Mat basis_cols(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) basis_cols[i][j] = d.spec().lattice_basis[j][i];
  Mat gram_b(n, Vec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec bi(n), bj(n);
      for (std::size_t k = 0; k < n; ++k) {
        bi[k] = basis_cols[k][i];
        bj[k] = basis_cols[k][j];
      }
      gram_b[i][j] = d.inner(bi, bj);
    }
  auto inv = mat_inverse(gram_b);
  auto center_coords = solve_linear(basis_cols, center);
  if (!inv || !center_coords) return {};

  // Coordinate box: |x_i - c_i| <= sqrt((G^-1)_ii) * radius.
  std::vector<Int> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rat half = rat_sqrt_upper((*inv)[i][i]) * radius;
    lo[i] = rat_floor((*center_coords)[i] - half);
    hi[i] = -rat_floor(-((*center_coords)[i] + half));
  }

  Rat rsq = radius * radius;
  std::vector<Vec> out;
  std::vector<Int> x(n);
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      Vec p(n, Rat(0));
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) p[k] += Rat(x[j]) * basis_cols[k][j];
      Vec diff = vec_sub(p, center);
      if (d.inner(diff, diff) <= rsq) out.push_back(p);
      return;
    }
    for (Int v = lo[i]; v <= hi[i]; ++v) {
      x[i] = v;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end(), VecLess());
  return out;
}

std::vector<OrbitParam> enumerate_orbits(const RootDatum& d, const Chamber& chamber,
                                         const Rat& bound) {
  std::vector<OrbitParam> out;
  if (bound <= 0) return out;
  Vec rho_chamber = d.rho_of(chamber.representative);
  // Admissible parameters in the chamber form rho(C) + Lambda; the window is
  // the ball ||lambda + rho(C)|| <= bound.
  Vec center = vec_neg(vec_scale(Rat(2), rho_chamber));
  for (const auto& p : lattice_points_in_ball(d, center, bound)) {
    Vec lambda = vec_add(p, rho_chamber);
    if (!is_strongly_elliptic_regular(d, lambda)) continue;
    const auto& rn = d.noncompact_positive();
    bool match = true;
    for (std::size_t i = 0; i < rn.size() && match; ++i)
      match = (d.inner(lambda, rn[i]) > 0 ? 1 : -1) == chamber.signs[i];
    if (!match) continue;
    out.push_back({lambda, chamber.id});
  }
  std::sort(out.begin(), out.end(),
            [](const OrbitParam& a, const OrbitParam& b) { return VecLess()(a.lambda, b.lambda); });
  return out;
}

}  // namespace orbita
