#include "orbita/rootdata.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace orbita {

namespace {

constexpr std::size_t kMaxRoots = 400;
constexpr std::size_t kMaxWeyl = 5000;

bool first_nonzero_positive(const Vec& v) {
  for (const auto& x : v) {
    if (x > 0) return true;
    if (x < 0) return false;
  }
  return false;
}

// Symmetrizer diagonal for the default normalization: short roots get
// (alpha, alpha) = 2.
Mat default_gram(const std::vector<std::vector<long>>& cartan, std::size_t rank) {
  std::vector<Rat> d(rank, Rat(0));
  // Propagate d along the Coxeter graph: d_i * a_ij = d_j * a_ji.
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < rank; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < rank; ++j) {
        if (i == j || cartan[i][j] == 0) continue;
        Rat dj = d[i] * cartan[j][i] / cartan[i][j];
        if (d[j] == 0) {
          d[j] = dj;
          stack.push_back(j);
        } else if (d[j] != dj) {
          throw Error(ErrorCode::InvalidCartan, "Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  Rat dmin = d[0];
  for (const auto& x : d) dmin = std::min(dmin, x);
  Mat gram(rank, Vec(rank, Rat(0)));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) gram[i][j] = d[j] / dmin * cartan[i][j];
  return gram;
}

}  // namespace

Mat RootDatum::reflection_matrix(const Vec& root) const {
  Rat nn = inner(root, root);
  Vec g(rank(), Rat(0));  // gram * root
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) g[i] += spec_.gram[i][j] * root[j];
  Mat m = mat_identity(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) m[i][j] -= 2 / nn * root[i] * g[j];
  return m;
}

RootDatum RootDatum::build(RootDatumSpec spec) {
  std::size_t n = spec.rank;
  if (n == 0 || spec.cartan.size() != n || spec.compact.size() != n)
    throw Error(ErrorCode::InvalidCartan, "rank/cartan/flags size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (spec.cartan[i].size() != n)
      throw Error(ErrorCode::InvalidCartan, "Cartan matrix is not square");
    if (spec.cartan[i][i] != 2)
      throw Error(ErrorCode::InvalidCartan, "Cartan diagonal entry is not 2");
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && spec.cartan[i][j] > 0)
        throw Error(ErrorCode::InvalidCartan, "positive off-diagonal Cartan entry");
  }
  if (spec.gram.empty()) spec.gram = default_gram(spec.cartan, n);
  if (spec.gram.size() != n)
    throw Error(ErrorCode::InvalidCartan, "gram size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (spec.gram[i].size() != n)
      throw Error(ErrorCode::InvalidCartan, "gram size mismatch");
    for (std::size_t j = 0; j < n; ++j)
      if (spec.gram[i][j] != spec.gram[j][i])
        throw Error(ErrorCode::InvalidCartan, "gram is not symmetric");
  }
  // Positive definiteness via leading principal minors.
  for (std::size_t k = 1; k <= n; ++k) {
    Mat minor(k, Vec(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = spec.gram[i][j];
    if (mat_det(minor) <= 0)
      throw Error(ErrorCode::InvalidCartan, "gram is not positive definite");
  }
  // Cartan/gram consistency: a_ij = 2 (a_i, a_j) / (a_j, a_j).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (Rat(spec.cartan[i][j]) != 2 * spec.gram[i][j] / spec.gram[j][j])
        throw Error(ErrorCode::InvalidCartan, "gram does not symmetrize the Cartan matrix");

  if (spec.lattice_basis.size() != n)
    throw Error(ErrorCode::InvalidCartan, "lattice basis must have full rank");

  RootDatum d;
  d.spec_ = spec;

  Mat basis_cols(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (spec.lattice_basis[j].size() != n)
        throw Error(ErrorCode::InvalidCartan, "lattice basis vector of wrong length");
      basis_cols[i][j] = spec.lattice_basis[j][i];
    }
  auto inv = mat_inverse(basis_cols);
  if (!inv)
    throw Error(ErrorCode::InvalidCartan, "lattice basis is singular");
  d.lattice_inverse_ = *inv;

  // Reflection closure starting from the simple roots.
  std::set<Vec, VecLess> root_set;
  std::vector<Vec> queue;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, Rat(0));
    e[i] = 1;
    root_set.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Vec beta = queue.back();
    queue.pop_back();
    for (std::size_t i = 0; i < n; ++i) {
      Vec alpha(n, Rat(0));
      alpha[i] = 1;
      Rat pairing = 2 * d.inner(beta, alpha) / d.inner(alpha, alpha);
      Vec refl = beta;
      refl[i] -= pairing;
      if (root_set.insert(refl).second) {
        queue.push_back(refl);
        if (root_set.size() > kMaxRoots)
          throw Error(ErrorCode::InvalidCartan, "root closure does not terminate (non-finite type)");
      }
    }
  }

  for (const auto& coords : root_set) {
    Root r;
    r.coords = coords;
    // Z/2 grading from the noncompact simple multiplicities; this encodes
    // [k,k] in k, [k,p] in p, [p,p] in k.
    Int parity = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!spec.compact[i]) {
        if (!is_integer(coords[i]))
          throw Error(ErrorCode::InvalidCartan, "non-integral root coordinate");
        parity += numerator(coords[i]);
      }
    }
    r.compact = (parity % 2) == 0;
    r.positive = first_nonzero_positive(coords);
    d.roots_.push_back(r);
    if (!d.in_lattice(coords))
      throw Error(ErrorCode::InconsistentFlags, "root outside the weight lattice");
  }

  // Exhaustive closure-rule check over all root pairs.
  std::map<Vec, bool, VecLess> flag_of;
  for (const auto& r : d.roots_) flag_of[r.coords] = r.compact;
  std::size_t noncompact_count = 0;
  for (const auto& r : d.roots_)
    if (!r.compact) ++noncompact_count;
  if (noncompact_count % 2 != 0)
    throw Error(ErrorCode::InconsistentFlags, "|R_n| is odd: no compact Cartan subgroup");
  for (const auto& a : d.roots_) {
    for (const auto& b : d.roots_) {
      auto it = flag_of.find(vec_add(a.coords, b.coords));
      if (it == flag_of.end()) continue;
      bool expect = (a.compact == b.compact);  // cc->c, cn->n, nn->c
      if (it->second != expect)
        throw Error(ErrorCode::InconsistentFlags, "flags violate the closure rules");
    }
  }

  for (const auto& r : d.roots_) {
    if (!r.positive) continue;
    if (r.compact)
      d.compact_pos_.push_back(r.coords);
    else
      d.noncompact_pos_.push_back(r.coords);
  }
  std::sort(d.compact_pos_.begin(), d.compact_pos_.end(), VecLess());
  std::sort(d.noncompact_pos_.begin(), d.noncompact_pos_.end(), VecLess());

  d.rho_c_.assign(n, Rat(0));
  for (const auto& a : d.compact_pos_) d.rho_c_ = vec_add(d.rho_c_, vec_scale(Rat(1, 2), a));

  // Simple system of R_c^+: positive compact roots that are not sums of two.
  for (const auto& a : d.compact_pos_) {
    bool simple = true;
    for (const auto& b : d.compact_pos_) {
      if (flag_of.count(vec_sub(a, b)) && first_nonzero_positive(vec_sub(a, b))) {
        simple = false;
        break;
      }
    }
    if (simple) d.compact_simple_.push_back(a);
  }

  // W_K by closure over the simple compact reflections.
  std::map<Mat, int> seen;
  std::vector<Mat> gens;
  for (const auto& s : d.compact_simple_) gens.push_back(d.reflection_matrix(s));
  std::vector<WeylElement> group{{mat_identity(n), 1}};
  seen[group[0].matrix] = 1;
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (const auto& g : gens) {
      Mat prod = mat_mul(g, group[i].matrix);
      if (seen.emplace(prod, 1).second) {
        group.push_back({prod, -group[i].sign});
        if (group.size() > kMaxWeyl)
          throw Error(ErrorCode::InvalidCartan, "compact Weyl group too large");
      }
    }
  }
  d.weyl_K_ = std::move(group);

  return d;
}

Rat RootDatum::inner(const Vec& a, const Vec& b) const {
  Rat s(0);
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) s += a[i] * spec_.gram[i][j] * b[j];
  return s;
}

bool RootDatum::in_lattice(const Vec& v) const {
  Vec x = mat_vec(lattice_inverse_, v);
  for (const auto& c : x)
    if (!is_integer(c)) return false;
  return true;
}

bool RootDatum::is_regular(const Vec& xi) const {
  for (const auto& r : roots_)
    if (inner(xi, r.coords) == 0) return false;
  return true;
}

bool RootDatum::is_dominant_compact(const Vec& v, bool strict) const {
  for (const auto& a : compact_pos_) {
    Rat p = inner(v, a);
    if (p < 0 || (strict && p == 0)) return false;
  }
  return true;
}

RootDatum::HalfSums RootDatum::half_sums(const Vec& xi) const {
  if (!is_regular(xi))
    throw Error(ErrorCode::NotRegular, "half sums need a regular element");
  HalfSums h;
  h.rho.assign(rank(), Rat(0));
  h.rho_n.assign(rank(), Rat(0));
  h.rho_c = rho_c_;
  for (const auto& r : roots_) {
    if (inner(xi, r.coords) <= 0) continue;
    h.rho = vec_add(h.rho, vec_scale(Rat(1, 2), r.coords));
    if (!r.compact) h.rho_n = vec_add(h.rho_n, vec_scale(Rat(1, 2), r.coords));
  }
  return h;
}

Vec RootDatum::dominantize(const Vec& v) const {
  Vec x = v;
  bool moved = true;
  while (moved) {
    moved = false;
    for (const auto& s : compact_simple_) {
      if (inner(x, s) < 0) {
        x = vec_sub(x, vec_scale(2 * inner(x, s) / inner(s, s), s));
        moved = true;
      }
    }
  }
  return x;
}

std::optional<std::pair<Vec, int>> RootDatum::dominantize_regular(const Vec& v) const {
  Vec x = v;
  int sign = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (const auto& s : compact_simple_) {
      Rat p = inner(x, s);
      if (p == 0) return std::nullopt;
      if (p < 0) {
        x = vec_sub(x, vec_scale(2 * p / inner(s, s), s));
        sign = -sign;
        moved = true;
      }
    }
  }
  return std::make_pair(x, sign);
}

Rat RootDatum::csq_K(const Vec& mu) const {
  Vec s = vec_add(mu, rho_c_);
  return inner(s, s);
}

Rat RootDatum::csq_G(const Vec& lambda) const {
  Vec s = vec_add(lambda, rho_of(lambda));
  return inner(s, s);
}

}  // namespace orbita
