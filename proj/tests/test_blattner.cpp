#include <doctest.h>

#include <algorithm>

#include "orbita/blattner.hpp"
#include "orbita/config.hpp"

using namespace orbita;

namespace {
RootDatum bundled(const std::string& name) {
  return RootDatum::build(parse_config(bundled_configs().at(name)).g);
}

const Chamber& holomorphic(const RootDatum& d, const std::vector<Chamber>& chambers) {
  for (const auto& c : chambers)
    if (std::all_of(c.signs.begin(), c.signs.end(), [](int s) { return s > 0; })) return c;
  throw std::runtime_error("no all-positive chamber");
}
}  // namespace

TEST_CASE("partition function basics") {
  RootDatum d = bundled("sp4");
  auto chambers = enumerate_chambers(d);
  NoncompactPartition dp(d, holomorphic(d, chambers));
  CHECK(dp.count(Vec{Rat(0), Rat(0)}) == 1);            // empty sum
  CHECK(dp.count(Vec{Rat(-1), Rat(0)}) == 0);           // outside the cone
  CHECK(dp.count(Vec{Rat(1), Rat(0)}) == 0);            // e1 - e2 is compact
  CHECK(dp.count(Vec{Rat(2), Rat(2)}) == 2);            // 2e1 + 2e2, two ways
  CHECK(dp.count(Vec{Rat(1), Rat(1)}) == 1);            // e1 + e2
  CHECK(dp.count(Vec{Rat(2), Rat(1)}) == 1);            // 2e1
}

TEST_CASE("c-norm examples") {
  RootDatum sl2 = bundled("sl2");
  for (int k = 1; k <= 3; ++k) {
    CNorms n = c_norms(sl2, {Rat(k, 2)}, {Rat(k + 1, 2)});
    CHECK(n.cG_sq == (k + 1) * (k + 1));
    CHECK(n.cK_sq == (k + 1) * (k + 1));  // torus K: plain norm of mu
  }
  RootDatum su = bundled("su21");
  Vec rho = {Rat(1), Rat(1)};
  CHECK(c_norms(su, rho, vec_add(rho, su.rho_c())).cG_sq == su.norm_sq(vec_scale(Rat(2), rho)));
}

TEST_CASE("sl2 ladder multiplicities") {
  RootDatum d = bundled("sl2");
  auto chambers = enumerate_chambers(d);
  for (int k = 1; k <= 3; ++k) {
    Vec lambda = {Rat(k, 2)};
    NoncompactPartition dp(d, chamber_of(d, chambers, lambda));
    for (int m = 0; m <= 4; ++m)
      CHECK(blattner_multiplicity(d, dp, lambda, {Rat(k + 1 + 2 * m, 2)}) == 1);
    if (k > 1) CHECK(blattner_multiplicity(d, dp, lambda, {Rat(k - 1, 2)}) == 0);
    CHECK(blattner_multiplicity(d, dp, lambda, {Rat(k + 2, 2)}) == 0);  // parity
  }
}

TEST_CASE("su21 minimal K-type has multiplicity one") {
  RootDatum d = bundled("su21");
  auto chambers = enumerate_chambers(d);
  Vec lambda = {Rat(1), Rat(1)};  // rho, holomorphic chamber
  NoncompactPartition dp(d, chamber_of(d, chambers, lambda));
  Vec minimal = vec_add(lambda, d.rho_n_of(lambda));
  CHECK(blattner_multiplicity(d, dp, lambda, minimal) == 1);
  CHECK(d.csq_K(minimal) == d.csq_G(lambda));  // equality case of the window
}

TEST_CASE("restrict_to_K truncates exactly at the cutoff") {
  RootDatum d = bundled("sl2");
  Vec lambda = {Rat(1)};  // 2 gamma, c^G = 3
  VirtualCharacter v = restrict_to_K(d, lambda, Rat(11));
  std::map<Vec, long long, VecLess> want = {
      {{Rat(3, 2)}, 1}, {{Rat(5, 2)}, 1}, {{Rat(7, 2)}, 1}, {{Rat(9, 2)}, 1}, {{Rat(11, 2)}, 1}};
  CHECK(v.coeffs == want);
  CHECK(v.certified_norm == 11);
  CHECK(restrict_to_K(d, lambda, Rat(2)).coeffs.empty());  // below c^G
}

TEST_CASE("restriction respects the vanishing window") {
  RootDatum d = bundled("sp4");
  auto chambers = enumerate_chambers(d);
  const Chamber& c = holomorphic(d, chambers);
  Vec lambda = {Rat(2), Rat(3, 2)};
  NoncompactPartition dp(d, c);
  VirtualCharacter v = restrict_to_K(d, dp, lambda, Rat(10));
  REQUIRE(!v.coeffs.empty());
  Rat cg = d.csq_G(lambda);
  for (const auto& [mu, m] : v.coeffs) {
    CHECK(m > 0);
    CHECK(d.csq_K(mu) >= cg);
  }
  // minimal type sits exactly on the window boundary
  Vec minimal = vec_add(lambda, d.rho_n_of(lambda));
  CHECK(v.coeffs.count(minimal) == 1);
  CHECK(d.csq_K(minimal) == cg);
}
