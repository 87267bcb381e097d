#include <doctest.h>

#include "orbita/chambers.hpp"
#include "orbita/config.hpp"

using namespace orbita;

namespace {
RootDatum bundled(const std::string& name) {
  return RootDatum::build(parse_config(bundled_configs().at(name)).g);
}
}  // namespace

TEST_CASE("chamber counts on bundled data") {
  CHECK(enumerate_chambers(bundled("sl2")).size() == 2);
  CHECK(enumerate_chambers(bundled("su21")).size() == 3);
  CHECK(enumerate_chambers(bundled("sp4")).size() == 4);
}

TEST_CASE("representatives live in their own chamber") {
  for (const char* name : {"sl2", "su21", "sp4"}) {
    RootDatum d = bundled(name);
    auto chambers = enumerate_chambers(d);
    for (const auto& c : chambers) {
      CHECK(is_strongly_elliptic_regular(d, c.representative));
      CHECK(chamber_of(d, chambers, c.representative).id == c.id);
    }
  }
}

TEST_CASE("chamber_of rejects wall points") {
  RootDatum d = bundled("sl2");
  auto chambers = enumerate_chambers(d);
  CHECK_THROWS_AS(chamber_of(d, chambers, {Rat(0)}), Error);
}

TEST_CASE("sl2 admissible orbits form the integer ladder") {
  RootDatum d = bundled("sl2");
  auto chambers = enumerate_chambers(d);
  const Chamber* plus = nullptr;
  for (const auto& c : chambers)
    if (c.signs == std::vector<int>{1}) plus = &c;
  REQUIRE(plus);
  auto orbits = enumerate_orbits(d, *plus, Rat(6));
  // lambda = k gamma, k >= 1, with c^G = k+1 <= 6
  REQUIRE(orbits.size() == 5);
  for (std::size_t i = 0; i < orbits.size(); ++i)
    CHECK(orbits[i].lambda == Vec{Rat(i + 1, 2)});
}

TEST_CASE("admissibility of orbit parameters") {
  RootDatum d = bundled("su21");
  Vec rho = {Rat(1), Rat(1)};
  CHECK(is_admissible_orbit(d, rho));
  CHECK(is_admissible_orbit(d, vec_add(rho, Vec{Rat(2, 3), Rat(1, 3)})));
  CHECK(!is_admissible_orbit(d, vec_add(rho, Vec{Rat(1, 2), Rat(0)})));
  CHECK_THROWS_AS(is_admissible_orbit(d, {Rat(0), Rat(0)}), Error);
}

TEST_CASE("lattice points in a ball") {
  RootDatum d = bundled("sl2");
  auto pts = lattice_points_in_ball(d, {Rat(0)}, Rat(1));
  REQUIRE(pts.size() == 3);  // -gamma, 0, gamma
  CHECK(pts[0] == Vec{Rat(-1, 2)});
  CHECK(pts[2] == Vec{Rat(1, 2)});
  // off-center
  auto shifted = lattice_points_in_ball(d, {Rat(1, 4)}, Rat(1, 2));
  REQUIRE(shifted.size() == 2);
  CHECK(shifted[0] == Vec{Rat(0)});
  CHECK(shifted[1] == Vec{Rat(1, 2)});
}

TEST_CASE("orbit windows are monotone in the bound") {
  RootDatum d = bundled("su21");
  auto chambers = enumerate_chambers(d);
  for (const auto& c : chambers) {
    auto small = enumerate_orbits(d, c, Rat(5));
    auto large = enumerate_orbits(d, c, Rat(8));
    CHECK(small.size() <= large.size());
    for (const auto& o : small) {
      bool found = false;
      for (const auto& p : large) found = found || p.lambda == o.lambda;
      CHECK(found);
    }
  }
}
