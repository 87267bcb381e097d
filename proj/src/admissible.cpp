#include "orbita/admissible.hpp"

#include <algorithm>
#include <set>

#include "orbita/feasibility.hpp"

namespace orbita {

namespace {

constexpr int kSubdivisionDepth = 14;
constexpr int kBisectionSteps = 24;

Vec project(const EmbeddingData& emb, const Vec& v) {
  return mat_vec(emb.dual_projection, v);
}

// Primitive integer vector on the same ray; unlike primitive_ray this never
// flips the direction.
Vec primitive_direction(const Vec& v) {
  Vec p = primitive_ray(v);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if ((v[i] < 0) != (p[i] < 0)) return vec_neg(p);
    break;
  }
  return p;
}

// Is target a nonnegative combination of the given generators?
bool in_cone_of(const std::vector<Vec>& gens, const Vec& target, std::size_t dim) {
  if (gens.empty()) return vec_is_zero(target);
  std::vector<LinearConstraint> cons;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Vec row(gens.size(), Rat(0));
    row[i] = 1;
    cons.push_back({row, Rat(0), /*strict=*/false});
  }
  for (std::size_t j = 0; j < dim; ++j) {
    Vec row(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) row[i] = gens[i][j];
    cons.push_back({row, target[j], false});
    cons.push_back({vec_neg(row), -target[j], false});
  }
  return feasible_point(cons, gens.size()).has_value();
}

// Gram of Q(v) = ||proj(w v)||^2 - dsq ||v||^2 on the given vertex list.
Mat q_gram(const RootDatum& d_gprime, const RootDatum& d_g, const EmbeddingData& emb,
           const Mat& w, const std::vector<Vec>& verts, const Rat& dsq) {
  std::size_t k = verts.size();
  std::vector<Vec> imgs(k);
  for (std::size_t i = 0; i < k; ++i) imgs[i] = project(emb, mat_vec(w, verts[i]));
  Mat h(k, Vec(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      h[i][j] = d_g.inner(imgs[i], imgs[j]) - dsq * d_gprime.inner(verts[i], verts[j]);
  return h;
}

// Certify Q >= 0 on the cone of verts by simplex subdivision: on any vertex
// list with all pairwise Gram entries nonnegative the form is nonnegative.
bool certify_nonneg(const RootDatum& d_gprime, const RootDatum& d_g,
                    const EmbeddingData& emb, const Mat& w,
                    const std::vector<Vec>& verts, const Rat& dsq, int depth) {
  Mat h = q_gram(d_gprime, d_g, emb, w, verts, dsq);
  std::size_t k = verts.size();
  std::size_t bi = 0, bj = 0;
  Rat worst(0);
  for (std::size_t i = 0; i < k; ++i) {
    if (h[i][i] < 0) return false;  // a vertex direction already fails
    for (std::size_t j = i + 1; j < k; ++j)
      if (h[i][j] < worst) {
        worst = h[i][j];
        bi = i;
        bj = j;
      }
  }
  if (worst >= 0) return true;
  if (depth == 0) return false;
  Vec mid = vec_scale(Rat(1, 2), vec_add(verts[bi], verts[bj]));
  std::vector<Vec> a = verts, b = verts;
  a[bi] = mid;
  b[bj] = mid;
  return certify_nonneg(d_gprime, d_g, emb, w, a, dsq, depth - 1) &&
         certify_nonneg(d_gprime, d_g, emb, w, b, dsq, depth - 1);
}

bool certify_all_weyl(const RootDatum& d_gprime, const RootDatum& d_g,
                      const EmbeddingData& emb, const std::vector<Vec>& gens,
                      const Rat& dsq) {
  for (const auto& w : d_gprime.weyl_K())
    if (!certify_nonneg(d_gprime, d_g, emb, w.matrix, gens, dsq, kSubdivisionDepth))
      return false;
  return true;
}

}  // namespace

void validate_embedding(const RootDatum& d_gprime, const RootDatum& d_g,
                        const EmbeddingData& emb) {
  if (emb.dual_projection.size() != d_g.rank())
    throw Error(ErrorCode::InvalidCartan, "projection row count != subgroup rank");
  for (const auto& row : emb.dual_projection)
    if (row.size() != d_gprime.rank())
      throw Error(ErrorCode::InvalidCartan, "projection column count != ambient rank");
  for (const auto& b : d_gprime.spec().lattice_basis)
    if (!d_g.in_lattice(project(emb, b)))
      throw Error(ErrorCode::IncompatibleLattices,
                  "lattice basis vector " + vec_to_string(b) +
                      " projects outside the subgroup weight lattice");
}

ConeDesc asymptotic_support_cone(const RootDatum& d_gprime, NoncompactPartition& dp,
                                 const Vec& lambda_prime, const Rat& depth) {
  VirtualCharacter v = restrict_to_K(d_gprime, dp, lambda_prime, depth);
  if (v.coeffs.empty())
    throw Error(ErrorCode::EmptySupport,
                "no K-types below depth " + rat_to_string(depth));
  const Vec* mu0 = nullptr;
  Rat best(0);
  for (const auto& [mu, c] : v.coeffs) {
    Rat n = d_gprime.csq_K(mu);
    if (!mu0 || n < best || (n == best && VecLess()(mu, *mu0))) {
      mu0 = &mu;
      best = n;
    }
  }
  std::set<Vec, VecLess> rays;
  for (const auto& [mu, c] : v.coeffs)
    if (mu != *mu0) rays.insert(primitive_direction(vec_sub(mu, *mu0)));

  // Drop rays generated by the others.
  std::vector<Vec> gens(rays.begin(), rays.end());
  for (std::size_t i = 0; i < gens.size();) {
    std::vector<Vec> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    if (in_cone_of(others, gens[i], d_gprime.rank()))
      gens.erase(gens.begin() + i);
    else
      ++i;
  }
  ConeDesc cone;
  cone.generators = std::move(gens);
  cone.depth = depth;
  return cone;
}

AdmissibilityVerdict check_admissibility(const RootDatum& d_gprime,
                                         const RootDatum& d_g,
                                         const ConeDesc& cone,
                                         const EmbeddingData& emb) {
  validate_embedding(d_gprime, d_g, emb);
  AdmissibilityVerdict verdict;
  if (cone.generators.empty()) {
    verdict.status = AdmissibilityVerdict::Status::Admissible;
    verdict.gap = 1;  // bounded support: any positive gap certifies
    return verdict;
  }
  std::size_t k = cone.generators.size();
  for (const auto& w : d_gprime.weyl_K()) {
    std::vector<Vec> imgs(k);
    for (std::size_t i = 0; i < k; ++i)
      imgs[i] = project(emb, mat_vec(w.matrix, cone.generators[i]));
    std::vector<LinearConstraint> cons;
    for (std::size_t i = 0; i < k; ++i) {
      Vec row(k, Rat(0));
      row[i] = 1;
      cons.push_back({row, Rat(0), false});
    }
    Vec ones(k, Rat(1));
    cons.push_back({ones, Rat(1), false});
    cons.push_back({vec_neg(ones), Rat(-1), false});
    for (std::size_t j = 0; j < d_g.rank(); ++j) {
      Vec row(k);
      for (std::size_t i = 0; i < k; ++i) row[i] = imgs[i][j];
      cons.push_back({row, Rat(0), false});
      cons.push_back({vec_neg(row), Rat(0), false});
    }
    auto c = feasible_point(cons, k);
    if (!c) continue;
    Vec v(d_gprime.rank(), Rat(0));
    for (std::size_t i = 0; i < k; ++i)
      v = vec_add(v, vec_scale((*c)[i], mat_vec(w.matrix, cone.generators[i])));
    if (vec_is_zero(v))
      throw Error(ErrorCode::DegenerateCone,
                  "generator simplex passes through the origin");
    verdict.status = AdmissibilityVerdict::Status::NotAdmissible;
    verdict.witness = primitive_direction(v);
    return verdict;
  }
  verdict.status = AdmissibilityVerdict::Status::Admissible;
  verdict.gap = truncation_gap(d_gprime, d_g, cone, emb);
  return verdict;
}

Rat truncation_gap(const RootDatum& d_gprime, const RootDatum& d_g,
                   const ConeDesc& cone, const EmbeddingData& emb) {
  if (cone.generators.empty()) return 1;
  // Vertex value is an upper bound for the best homogeneous ratio.
  Rat vertex_sq(-1);
  for (const auto& w : d_gprime.weyl_K()) {
    for (const auto& g : cone.generators) {
      Vec img = project(emb, mat_vec(w.matrix, g));
      Rat ratio = d_g.norm_sq(img) / d_gprime.norm_sq(g);
      if (vertex_sq < 0 || ratio < vertex_sq) vertex_sq = ratio;
    }
  }
  if (vertex_sq <= 0)
    throw Error(ErrorCode::ZeroGap, "a generator direction projects to zero");

  Rat certified(-1);
  if (certify_all_weyl(d_gprime, d_g, emb, cone.generators, vertex_sq)) {
    certified = vertex_sq;
  } else {
    Rat lo(0), hi = vertex_sq;  // delta = 0 always certifies
    for (int step = 0; step < kBisectionSteps; ++step) {
      Rat mid = (lo + hi) / 2;
      if (certify_all_weyl(d_gprime, d_g, emb, cone.generators, mid))
        lo = mid;
      else
        hi = mid;
    }
    certified = lo;
  }
  if (certified <= 0)
    throw Error(ErrorCode::ZeroGap, "no positive gap certifies on the cone");
  return rat_sqrt_lower(certified);
}

}  // namespace orbita
