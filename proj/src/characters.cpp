#include "orbita/characters.hpp"

#include <algorithm>

namespace orbita {

namespace {

constexpr std::size_t kMaxPeels = 100000;

Int rat_floor(const Rat& x) {
  Int q = numerator(x) / denominator(x);
  if (x < 0 && q * denominator(x) != numerator(x)) --q;
  return q;
}

void check_k_type(const RootDatum& d, const Vec& mu) {
  if (!d.is_dominant_compact(mu, /*strict=*/true))
    throw Error(ErrorCode::NotDominant,
                "K-type parameter must be strictly dominant: " + vec_to_string(mu));
}

}  // namespace

long long weyl_dimension(const RootDatum& d, const Vec& mu) {
  check_k_type(d, mu);
  Rat dim(1);
  for (const auto& a : d.compact_positive())
    dim *= d.inner(mu, a) / d.inner(d.rho_c(), a);
  if (!is_integer(dim) || dim <= 0)
    throw Error(ErrorCode::NotDominant, "Weyl dimension is not a positive integer");
  return static_cast<long long>(numerator(dim));
}

TorusCharacter weight_multiplicities(const RootDatum& d, const Vec& mu) {
  check_k_type(d, mu);
  Vec hw = vec_sub(mu, d.rho_c());
  const auto& simple = d.compact_simple();
  std::size_t k = simple.size();
  if (k == 0) return {{hw, 1}};

  // Dominant candidate weights hw - sum n_i s_i inside the ball
  // ||nu + rho_c|| <= ||hw + rho_c||.
  Vec c = vec_add(hw, d.rho_c());
  Rat rsq = d.inner(c, c);
  Mat gram_s(k, Vec(k));
  Vec rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    rhs[i] = d.inner(c, simple[i]);
    for (std::size_t j = 0; j < k; ++j) gram_s[i][j] = d.inner(simple[i], simple[j]);
  }
  auto inv = mat_inverse(gram_s);
  auto center = solve_linear(gram_s, rhs);
  if (!inv || !center)
    throw Error(ErrorCode::InvalidCartan, "degenerate compact simple system");
  Rat par_sq(0);
  for (std::size_t i = 0; i < k; ++i) par_sq += rhs[i] * (*center)[i];
  Rat slack = rsq - (d.inner(c, c) - par_sq);  // radius^2 - ||c_perp||^2

  std::vector<Vec> dominant;  // candidate dominant weights
  std::vector<Int> n(k);
  auto emit = [&](const std::vector<Int>& coeff) {
    Vec nu = hw;
    for (std::size_t i = 0; i < k; ++i)
      nu = vec_sub(nu, vec_scale(Rat(coeff[i]), simple[i]));
    if (!d.is_dominant_compact(nu, /*strict=*/false)) return;
    Vec shifted = vec_add(nu, d.rho_c());
    if (d.inner(shifted, shifted) > rsq) return;
    dominant.push_back(nu);
  };
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      emit(n);
      return;
    }
    Rat half = rat_sqrt_upper((*inv)[i][i] * (slack < 0 ? Rat(0) : slack));
    Int lo = rat_floor((*center)[i] - half);
    Int hi = -rat_floor(-((*center)[i] + half));
    if (lo < 0) lo = 0;
    for (Int v = lo; v <= hi; ++v) {
      n[i] = v;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);

  // Height-increasing order (decreasing weight).
  std::sort(dominant.begin(), dominant.end(), [&](const Vec& a, const Vec& b) {
    Rat ha(0), hb(0);
    for (std::size_t i = 0; i < d.rank(); ++i) {
      ha += a[i];
      hb += b[i];
    }
    if (ha != hb) return ha > hb;
    return VecLess()(a, b);
  });

  std::map<Vec, Rat, VecLess> mult;  // dominant weights only
  auto lookup = [&](const Vec& w) -> Rat {
    auto it = mult.find(d.dominantize(w));
    return it == mult.end() ? Rat(0) : it->second;
  };

  for (const auto& nu : dominant) {
    if (nu == hw) {
      mult[nu] = 1;
      continue;
    }
    Rat numer(0);
    for (const auto& alpha : d.compact_positive()) {
      // All weights sit in the ball, so k||alpha|| <= 2 R bounds the string.
      Rat kmax_r = 2 * rat_sqrt_upper(rsq) / rat_sqrt_lower(d.inner(alpha, alpha)) + 1;
      Int kmax = rat_floor(kmax_r);
      for (Int step = 1; step <= kmax; ++step) {
        Vec w = vec_add(nu, vec_scale(Rat(step), alpha));
        Rat m = lookup(w);
        if (m != 0) numer += 2 * m * d.inner(w, alpha);
      }
    }
    Rat denom = rsq - d.inner(vec_add(nu, d.rho_c()), vec_add(nu, d.rho_c()));
    if (denom <= 0)
      throw Error(ErrorCode::InvalidCartan, "Freudenthal denominator not positive");
    Rat m = numer / denom;
    if (!is_integer(m) || m < 0)
      throw Error(ErrorCode::InvalidCartan, "Freudenthal produced a non-integer");
    if (m != 0) mult[nu] = m;
  }

  TorusCharacter out;
  for (const auto& [nu, m] : mult) {
    for (const auto& w : d.weyl_K()) {
      Vec img = mat_vec(w.matrix, nu);
      out[img] = static_cast<long long>(numerator(m));
    }
  }
  return out;
}

TorusCharacter character_weights(const RootDatum& d, const VirtualCharacter& v) {
  TorusCharacter out;
  for (const auto& [mu, c] : v.coeffs) {
    for (const auto& [w, m] : weight_multiplicities(d, mu)) {
      out[w] += c * m;
      if (out[w] == 0) out.erase(w);
    }
  }
  return out;
}

VirtualCharacter decompose(const RootDatum& d, const TorusCharacter& tchar,
                           const Rat& certified_norm) {
  VirtualCharacter out;
  out.certified_norm = certified_norm;
  TorusCharacter work;
  for (const auto& [w, c] : tchar)
    if (c != 0) work[w] = c;

  // A decomposable weight function must be W_K-invariant.
  for (const auto& s : d.compact_simple()) {
    Mat refl = d.reflection_matrix(s);
    for (const auto& [w, c] : work) {
      Vec img = mat_vec(refl, w);
      auto it = work.find(img);
      if ((it == work.end() ? 0 : it->second) != c)
        throw Error(ErrorCode::NonTerminating, "weight function is not W_K-invariant");
    }
  }

  std::size_t iterations = 0;
  while (!work.empty()) {
    if (++iterations > kMaxPeels)
      throw Error(ErrorCode::NonTerminating, "highest-weight peeling did not terminate");
    // Maximal remaining dominant weight: largest ||nu + rho_c||, ties by lex.
    const Vec* best = nullptr;
    Rat best_norm(0);
    for (const auto& [w, c] : work) {
      if (c == 0 || !d.is_dominant_compact(w, /*strict=*/false)) continue;
      Rat nrm = d.csq_K(w);
      if (!best || nrm > best_norm || (nrm == best_norm && VecLess()(*best, w))) {
        best = &w;
        best_norm = nrm;
      }
    }
    if (!best)
      throw Error(ErrorCode::NonTerminating, "nonzero weight function with no dominant weight");
    Vec mu = vec_add(*best, d.rho_c());
    long long coeff = work[*best];
    out.coeffs[mu] += coeff;
    for (const auto& [w, m] : weight_multiplicities(d, mu)) {
      work[w] -= coeff * m;
      if (work[w] == 0) work.erase(w);
    }
  }
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
    it = it->second == 0 ? out.coeffs.erase(it) : std::next(it);
  return out;
}

VirtualCharacter branch_compact(const RootDatum& d_kprime, const Vec& mu_prime,
                                const RootDatum& d_k, const Mat& dual_projection) {
  TorusCharacter restricted;
  for (const auto& [w, m] : weight_multiplicities(d_kprime, mu_prime)) {
    Vec img = mat_vec(dual_projection, w);
    restricted[img] += m;
    if (restricted[img] == 0) restricted.erase(img);
  }
  return decompose(d_k, restricted, Rat(0));
}

Rat spinor_shift(const RootDatum& d, const SpinorCharacter& s) {
  Rat max_sq(0);
  for (const auto& [w, c] : s.terms) max_sq = std::max(max_sq, d.norm_sq(w));
  return rat_sqrt_upper(max_sq) + 2 * rat_sqrt_upper(d.norm_sq(d.rho_c()));
}

VirtualCharacter tensor_spinor(const RootDatum& d, const VirtualCharacter& v,
                               const SpinorCharacter& s) {
  VirtualCharacter out;
  out.certified_norm = v.certified_norm - spinor_shift(d, s);
  if (out.certified_norm < 0) out.certified_norm = 0;
  for (const auto& [mu, c] : v.coeffs) {
    for (const auto& [w, cs] : s.terms) {
      auto dom = d.dominantize_regular(vec_add(mu, w));
      if (!dom) continue;  // parameter on a compact wall: character vanishes
      out.coeffs[dom->first] += c * cs * dom->second;
      if (out.coeffs[dom->first] == 0) out.coeffs.erase(dom->first);
    }
  }
  return out;
}

}  // namespace orbita
