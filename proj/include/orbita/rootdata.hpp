#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbita/errors.hpp"
#include "orbita/rational.hpp"

namespace orbita {

// Input description of an equal-rank real form: Cartan matrix, per-simple-root
// compactness flags, a W-invariant positive definite form on t*, and a basis
// of the weight lattice. All coordinates live in the simple-root basis.
struct RootDatumSpec {
  std::string name;
  std::size_t rank = 0;
  std::vector<std::vector<long>> cartan;
  std::vector<bool> compact;
  Mat gram;           // (alpha_i, alpha_j); empty = symmetrized Cartan default
  Mat lattice_basis;  // rows are basis vectors of Lambda
};

struct Root {
  Vec coords;
  bool compact = false;
  bool positive = false;
};

struct WeylElement {
  Mat matrix;
  int sign = 1;  // determinant
};

class RootDatum {
 public:
  // Generates the full root system by reflection closure, propagates the
  // compactness grading, verifies the bracket closure rules and lattice
  // membership, and builds W_K. Throws InvalidCartan / InconsistentFlags.
  static RootDatum build(RootDatumSpec spec);

  std::size_t rank() const { return spec_.rank; }
  const std::string& name() const { return spec_.name; }
  const RootDatumSpec& spec() const { return spec_; }

  const std::vector<Root>& roots() const { return roots_; }
  const std::vector<Vec>& compact_positive() const { return compact_pos_; }
  // Base positive noncompact half (positivity from the simple-root order);
  // chambers carry sign vectors indexed against this list.
  const std::vector<Vec>& noncompact_positive() const { return noncompact_pos_; }
  const std::vector<Vec>& compact_simple() const { return compact_simple_; }

  Rat inner(const Vec& a, const Vec& b) const;
  Rat norm_sq(const Vec& v) const { return inner(v, v); }

  bool in_lattice(const Vec& v) const;

  bool is_regular(const Vec& xi) const;  // (xi, alpha) != 0 for all roots
  bool is_dominant_compact(const Vec& v, bool strict) const;

  const Vec& rho_c() const { return rho_c_; }
  struct HalfSums {
    Vec rho;    // rho(xi)
    Vec rho_c;  // half sum over R_c^+
    Vec rho_n;  // rho_n(xi)
  };
  HalfSums half_sums(const Vec& xi) const;  // throws NotRegular
  Vec rho_of(const Vec& xi) const { return half_sums(xi).rho; }
  Vec rho_n_of(const Vec& xi) const { return half_sums(xi).rho_n; }

  const std::vector<WeylElement>& weyl_K() const { return weyl_K_; }

  // Weak dominantization with respect to R_c^+.
  Vec dominantize(const Vec& v) const;
  // Strict version used on infinitesimal characters: returns the dominant
  // regular W_K-translate with the sign of the Weyl element, or nothing when
  // v lies on a compact wall.
  std::optional<std::pair<Vec, int>> dominantize_regular(const Vec& v) const;

  Rat csq_K(const Vec& mu) const;      // ||mu + rho_c||^2
  Rat csq_G(const Vec& lambda) const;  // ||lambda + rho(lambda)||^2

  Mat reflection_matrix(const Vec& root) const;

 private:
  RootDatum() = default;

  RootDatumSpec spec_;
  std::vector<Root> roots_;
  std::vector<Vec> compact_pos_;
  std::vector<Vec> noncompact_pos_;
  std::vector<Vec> compact_simple_;
  Vec rho_c_;
  std::vector<WeylElement> weyl_K_;
  Mat lattice_inverse_;  // inverse of the matrix with lattice basis columns
};

}  // namespace orbita
