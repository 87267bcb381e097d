#include <doctest.h>

#include "orbita/config.hpp"
#include "orbita/rootdata.hpp"

using namespace orbita;

namespace {
RootDatum bundled(const std::string& name) {
  return RootDatum::build(parse_config(bundled_configs().at(name)).g);
}
}  // namespace

TEST_CASE("sl2 datum") {
  RootDatum d = bundled("sl2");
  CHECK(d.roots().size() == 2);
  CHECK(d.compact_positive().empty());
  CHECK(d.noncompact_positive().size() == 1);
  CHECK(d.weyl_K().size() == 1);  // trivial
  CHECK(d.norm_sq({Rat(1)}) == 4);
  CHECK(d.in_lattice({Rat(1, 2)}));
  CHECK(!d.in_lattice({Rat(1, 4)}));
}

TEST_CASE("su21 datum") {
  RootDatum d = bundled("su21");
  CHECK(d.roots().size() == 6);
  CHECK(d.compact_positive().size() == 1);
  CHECK(d.noncompact_positive().size() == 2);
  CHECK(d.weyl_K().size() == 2);
  CHECK(d.rho_c() == Vec{Rat(1, 2), Rat(0)});
  // default gram falls back to the symmetrized Cartan matrix
  CHECK(d.spec().gram[0][0] == 2);
  CHECK(d.spec().gram[0][1] == -1);
  // fundamental weights generate the lattice; roots lie inside it
  CHECK(d.in_lattice({Rat(1), Rat(0)}));
  CHECK(d.in_lattice({Rat(2, 3), Rat(1, 3)}));
  CHECK(!d.in_lattice({Rat(1, 2), Rat(0)}));
}

TEST_CASE("sp4 datum") {
  RootDatum d = bundled("sp4");
  CHECK(d.roots().size() == 8);
  CHECK(d.compact_positive().size() == 1);
  CHECK(d.noncompact_positive().size() == 3);
  CHECK(d.weyl_K().size() == 2);
  // symmetrizer: short alpha1 has norm 2, long alpha2 norm 4
  CHECK(d.norm_sq({Rat(1), Rat(0)}) == 2);
  CHECK(d.norm_sq({Rat(0), Rat(1)}) == 4);
}

TEST_CASE("half sums split as rho = rho_c + rho_n") {
  for (const char* name : {"sl2", "su21", "sp4"}) {
    RootDatum d = bundled(name);
    Vec xi(d.rank(), Rat(0));
    // a strictly dominant regular point: sum of all positive roots
    for (const auto& r : d.roots())
      if (r.positive) xi = vec_add(xi, r.coords);
    auto hs = d.half_sums(xi);
    CHECK(hs.rho == vec_add(hs.rho_c, hs.rho_n));
    CHECK(hs.rho_c == d.rho_c());
  }
}

TEST_CASE("su21 rho for the dominant order") {
  RootDatum d = bundled("su21");
  CHECK(d.rho_of({Rat(5), Rat(4)}) == Vec{Rat(1), Rat(1)});
}

TEST_CASE("dominantize tracks signs") {
  RootDatum d = bundled("su21");
  Vec v = {Rat(-1), Rat(2)};  // negative on alpha1
  Vec dom = d.dominantize(v);
  CHECK(d.is_dominant_compact(dom, false));
  auto reg = d.dominantize_regular(v);
  REQUIRE(reg);
  CHECK(reg->first == dom);
  CHECK(reg->second == -1);  // one compact reflection
  // compact wall: alpha1-fixed points collapse
  CHECK(!d.dominantize_regular({Rat(0), Rat(0)}));
}

TEST_CASE("c-norm helpers") {
  RootDatum d = bundled("sl2");
  // lambda = k gamma: c^G squared is (k+1)^2
  for (int k = 1; k <= 4; ++k) CHECK(d.csq_G({Rat(k, 2)}) == Rat((k + 1) * (k + 1)));
  // torus K: c^K squared is the plain norm
  CHECK(d.csq_K({Rat(3, 2)}) == 9);
}

TEST_CASE("invalid cartan is rejected") {
  RootDatumSpec spec;
  spec.name = "bad";
  spec.rank = 1;
  spec.cartan = {{3}};
  spec.compact = {false};
  spec.lattice_basis = {{Rat(1)}};
  CHECK_THROWS_AS(RootDatum::build(spec), Error);
}

TEST_CASE("roots outside the lattice are rejected") {
  RootDatumSpec spec;
  spec.name = "coarse";
  spec.rank = 1;
  spec.cartan = {{2}};
  spec.compact = {false};
  spec.lattice_basis = {{Rat(2)}};  // does not contain alpha
  CHECK_THROWS_AS(RootDatum::build(spec), Error);
}
