#include <doctest.h>

#include "orbita/admissible.hpp"
#include "orbita/config.hpp"

using namespace orbita;

namespace {
PairConfig pair_for(const std::string& name) {
  return make_pair(parse_config(bundled_configs().at(name)));
}

ConeDesc cone_for(const PairConfig& pair, const Vec& lambda_prime, const Rat& depth) {
  auto chambers = enumerate_chambers(pair.gprime);
  NoncompactPartition dp(pair.gprime, chamber_of(pair.gprime, chambers, lambda_prime));
  return asymptotic_support_cone(pair.gprime, dp, lambda_prime, depth);
}
}  // namespace

TEST_CASE("embedding lattice compatibility") {
  PairConfig pair = pair_for("diag-sl2");
  CHECK_NOTHROW(validate_embedding(pair.gprime, pair.g, pair.emb));
  EmbeddingData bad;
  bad.dual_projection = {{Rat(1, 3), Rat(0)}};  // sends gamma to a third of gamma
  CHECK_THROWS_AS(validate_embedding(pair.gprime, pair.g, bad), Error);
  EmbeddingData wrong_shape;
  wrong_shape.dual_projection = {{Rat(1)}};
  CHECK_THROWS_AS(validate_embedding(pair.gprime, pair.g, wrong_shape), Error);
}

TEST_CASE("support cones of the bundled pairs") {
  PairConfig identity = pair_for("sl2");
  ConeDesc single = cone_for(identity, {Rat(1)}, Rat(12));
  REQUIRE(single.generators.size() == 1);
  CHECK(single.generators[0] == Vec{Rat(1)});  // the ladder direction

  PairConfig diag = pair_for("diag-sl2");
  ConeDesc quadrant = cone_for(diag, {Rat(1, 2), Rat(1, 2)}, Rat(12));
  REQUIRE(quadrant.generators.size() == 2);
  CHECK(quadrant.generators[0] == Vec{Rat(0), Rat(1)});
  CHECK(quadrant.generators[1] == Vec{Rat(1), Rat(0)});

  PairConfig mixed = pair_for("hol-antihol-sl2");
  ConeDesc wedge = cone_for(mixed, {Rat(1, 2), Rat(-1, 2)}, Rat(12));
  REQUIRE(wedge.generators.size() == 2);
  CHECK(wedge.generators[0] == Vec{Rat(0), Rat(-1)});
  CHECK(wedge.generators[1] == Vec{Rat(1), Rat(0)});
}

TEST_CASE("cone reading fails below the minimal type") {
  PairConfig identity = pair_for("sl2");
  auto chambers = enumerate_chambers(identity.gprime);
  NoncompactPartition dp(identity.gprime, chamber_of(identity.gprime, chambers, {Rat(1)}));
  CHECK_THROWS_AS(asymptotic_support_cone(identity.gprime, dp, {Rat(1)}, Rat(2)), Error);
}

TEST_CASE("deepening the window only refines the cone") {
  PairConfig diag = pair_for("diag-sl2");
  ConeDesc shallow = cone_for(diag, {Rat(1, 2), Rat(1, 2)}, Rat(8));
  ConeDesc deep = cone_for(diag, {Rat(1, 2), Rat(1, 2)}, Rat(16));
  CHECK(shallow.generators == deep.generators);
  // same chamber, different parameter: identical recession data
  ConeDesc other = cone_for(diag, {Rat(1), Rat(1, 2)}, Rat(16));
  CHECK(other.generators == deep.generators);
}

TEST_CASE("admissibility verdicts") {
  PairConfig diag = pair_for("diag-sl2");
  AdmissibilityVerdict v =
      check_admissibility(diag.gprime, diag.g, cone_for(diag, {Rat(1, 2), Rat(1, 2)}, Rat(12)), diag.emb);
  CHECK(v.status == AdmissibilityVerdict::Status::Admissible);
  CHECK(v.gap == 1);

  PairConfig mixed = pair_for("hol-antihol-sl2");
  AdmissibilityVerdict w = check_admissibility(
      mixed.gprime, mixed.g, cone_for(mixed, {Rat(1, 2), Rat(-1, 2)}, Rat(12)), mixed.emb);
  CHECK(w.status == AdmissibilityVerdict::Status::NotAdmissible);
  CHECK(w.witness == Vec{Rat(1), Rat(-1)});
  CHECK(vec_is_zero(mat_vec(mixed.emb.dual_projection, w.witness)));

  PairConfig identity = pair_for("sl2");
  AdmissibilityVerdict u =
      check_admissibility(identity.gprime, identity.g, cone_for(identity, {Rat(1)}, Rat(12)), identity.emb);
  CHECK(u.status == AdmissibilityVerdict::Status::Admissible);
  CHECK(u.gap == 1);
}

TEST_CASE("verdict survives positive rescaling of the generators") {
  PairConfig diag = pair_for("diag-sl2");
  ConeDesc cone = cone_for(diag, {Rat(1, 2), Rat(1, 2)}, Rat(12));
  ConeDesc scaled = cone;
  for (auto& g : scaled.generators) g = vec_scale(Rat(7, 3), g);
  AdmissibilityVerdict a = check_admissibility(diag.gprime, diag.g, cone, diag.emb);
  AdmissibilityVerdict b = check_admissibility(diag.gprime, diag.g, scaled, diag.emb);
  CHECK(a.status == b.status);
  CHECK(a.gap == b.gap);
}

TEST_CASE("truncation gap on simple cones") {
  PairConfig identity = pair_for("sl2");
  ConeDesc ray;
  ray.generators = {{Rat(1)}};
  CHECK(truncation_gap(identity.gprime, identity.g, ray, identity.emb) == 1);
  ConeDesc empty;
  CHECK(truncation_gap(identity.gprime, identity.g, empty, identity.emb) == 1);
}
