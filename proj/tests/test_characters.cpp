#include <doctest.h>

#include "orbita/blattner.hpp"
#include "orbita/characters.hpp"
#include "orbita/config.hpp"

using namespace orbita;

namespace {
RootDatum bundled(const std::string& name) {
  return RootDatum::build(parse_config(bundled_configs().at(name)).g);
}
}  // namespace

TEST_CASE("su21 compact factor behaves like su(2)") {
  RootDatum d = bundled("su21");
  // highest weight m * alpha1 pairs to 2m against the coroot: a (2m+1)-string
  for (int m = 0; m <= 4; ++m) {
    Vec mu = vec_add(Vec{Rat(m), Rat(0)}, d.rho_c());
    CHECK(weyl_dimension(d, mu) == 2 * m + 1);
    TorusCharacter wts = weight_multiplicities(d, mu);
    long long total = 0;
    for (const auto& [w, c] : wts) total += c;
    CHECK(total == 2 * m + 1);
  }
}

TEST_CASE("weight diagrams are W_K-invariant and bounded by the top norm") {
  for (const char* name : {"su21", "sp4"}) {
    RootDatum d = bundled(name);
    Vec mu = vec_add(d.dominantize({Rat(2), Rat(1)}), d.rho_c());
    if (!d.is_dominant_compact(mu, true)) continue;
    TorusCharacter wts = weight_multiplicities(d, mu);
    long long total = 0;
    Rat top = d.norm_sq(mu);  // ||hw + rho_c||^2
    for (const auto& [w, c] : wts) {
      total += c;
      CHECK(d.norm_sq(vec_add(d.dominantize(w), d.rho_c())) <= top);
      for (const auto& alpha : d.compact_simple()) {
        Mat refl = d.reflection_matrix(alpha);
        CHECK(wts.at(mat_vec(refl, w)) == c);
      }
    }
    CHECK(total == weyl_dimension(d, mu));
  }
}

TEST_CASE("decompose recovers Clebsch-Gordan") {
  RootDatum d = bundled("su21");
  Vec mu1 = vec_add(Vec{Rat(1), Rat(0)}, d.rho_c());  // the 3 of su(2)
  TorusCharacter a = weight_multiplicities(d, mu1);
  TorusCharacter product;
  for (const auto& [w1, c1] : a)
    for (const auto& [w2, c2] : a) product[vec_add(w1, w2)] += c1 * c2;
  VirtualCharacter dec = decompose(d, product, Rat(0));
  REQUIRE(dec.coeffs.size() == 3);  // 3 x 3 = 5 + 3 + 1
  CHECK(dec.coeffs.at(vec_add(Vec{Rat(2), Rat(0)}, d.rho_c())) == 1);
  CHECK(dec.coeffs.at(vec_add(Vec{Rat(1), Rat(0)}, d.rho_c())) == 1);
  CHECK(dec.coeffs.at(d.rho_c()) == 1);
}

TEST_CASE("decompose rejects weight functions that are not W_K-consistent") {
  RootDatum d = bundled("su21");
  TorusCharacter broken;
  broken[{Rat(1), Rat(0)}] = 1;  // missing the reflected partner
  CHECK_THROWS_AS(decompose(d, broken, Rat(0)), Error);
}

TEST_CASE("branch_compact along the identity is a roundtrip") {
  RootDatum d = bundled("sp4");
  Vec mu = vec_add(Vec{Rat(2), Rat(1)}, d.rho_c());
  REQUIRE(d.is_dominant_compact(mu, true));
  VirtualCharacter b = branch_compact(d, mu, d, mat_identity(2));
  REQUIRE(b.coeffs.size() == 1);
  CHECK(b.coeffs.at(mu) == 1);
}

TEST_CASE("tensor_spinor agrees with the torus-level product") {
  for (const char* name : {"su21", "sp4"}) {
    RootDatum d = bundled(name);
    auto chambers = enumerate_chambers(d);
    Vec oref = chambers.front().representative;
    SpinorCharacter spin = spinor_character(d, oref);
    auto orbits = enumerate_orbits(d, chambers.front(), Rat(6));
    REQUIRE(!orbits.empty());
    NoncompactPartition dp(d, chambers.front());
    VirtualCharacter v = restrict_to_K(d, dp, orbits.front().lambda, Rat(9));
    REQUIRE(!v.coeffs.empty());

    VirtualCharacter fast = tensor_spinor(d, v, spin);

    TorusCharacter product;
    for (const auto& [w1, c1] : character_weights(d, v))
      for (const auto& [s, c2] : spin.terms) {
        product[vec_add(w1, s)] += c1 * c2;
        if (product[vec_add(w1, s)] == 0) product.erase(vec_add(w1, s));
      }
    VirtualCharacter slow = decompose(d, product, Rat(0));
    CHECK(fast.coeffs == slow.coeffs);  // exact equality of virtual characters
  }
}

TEST_CASE("spinor_shift dominates every spinor weight") {
  RootDatum d = bundled("sp4");
  SpinorCharacter spin = spinor_character(d, enumerate_chambers(d).front().representative);
  Rat shift = spinor_shift(d, spin);
  for (const auto& [w, c] : spin.terms) CHECK(d.norm_sq(w) <= shift * shift);
}
