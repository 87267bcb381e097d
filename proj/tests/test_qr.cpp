#include <doctest.h>

#include "orbita/config.hpp"
#include "orbita/qr_engine.hpp"

using namespace orbita;

namespace {
PairConfig pair_for(const std::string& name) {
  return make_pair(parse_config(bundled_configs().at(name)));
}
}  // namespace

TEST_CASE("identity pair returns the original orbit once") {
  PairConfig pair = pair_for("sl2");
  Vec lambda = {Rat(1)};  // 2 gamma
  BranchingResult res = restrict_discrete_series(pair, lambda, Rat(10));
  std::map<Vec, long long, VecLess> certified;
  for (const auto& e : res.entries)
    if (e.certified && e.multiplicity != 0) certified[e.lambda] = e.multiplicity;
  std::map<Vec, long long, VecLess> want = {{lambda, 1}};
  CHECK(certified == want);
  CHECK(res.gap == Rat(1));
  CHECK(multiplicity(pair, lambda, lambda, Rat(10)) == 1);
}

TEST_CASE("diagonal pair follows the holomorphic ladder") {
  PairConfig pair = pair_for("diag-sl2");
  Vec lp = {Rat(1, 2), Rat(1, 2)};
  CHECK(multiplicity(pair, lp, {Rat(3, 2)}, Rat(12)) == 1);  // 3 gamma
  CHECK(multiplicity(pair, lp, {Rat(5, 2)}, Rat(12)) == 1);  // 5 gamma
  CHECK(multiplicity(pair, lp, {Rat(2)}, Rat(12)) == 0);     // 4 gamma, wrong parity
  CHECK(multiplicity(pair, lp, {Rat(1, 2)}, Rat(12)) == 0);  // below the ladder
  CHECK_THROWS_AS(multiplicity(pair, lp, {Rat(25)}, Rat(12)), Error);  // outside window
}

TEST_CASE("non-admissible pairs are rejected") {
  PairConfig pair = pair_for("hol-antihol-sl2");
  try {
    restrict_discrete_series(pair, {Rat(1, 2), Rat(-1, 2)}, Rat(10));
    FAIL("expected NotAdmissiblePair");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAdmissiblePair);
  }
}

TEST_CASE("unique chamber bookkeeping") {
  PairConfig pair = pair_for("diag-sl2");
  BranchingResult res = restrict_discrete_series(pair, {Rat(1, 2), Rat(1, 2)}, Rat(12));
  REQUIRE(res.unique_chamber);
  CHECK(res.violations.empty());

  // synthetic two-chamber table
  BranchingResult synthetic;
  synthetic.entries.push_back({{Rat(3, 2)}, 1, true, 0});
  synthetic.entries.push_back({{Rat(-3, 2)}, 1, true, 1});
  verify_unique_chamber(pair.g, synthetic);
  CHECK(!synthetic.unique_chamber);
  REQUIRE(synthetic.violations.size() == 1);

  BranchingResult empty;
  verify_unique_chamber(pair.g, empty);
  CHECK(!empty.unique_chamber);
  CHECK(empty.violations.empty());
}

TEST_CASE("stabilization across cutoffs") {
  PairConfig identity = pair_for("sl2");
  CHECK(stabilization_check(identity, {Rat(1)}, Rat(6), Rat(9)));
  CHECK(stabilization_check(identity, {Rat(1)}, Rat(1), Rat(5)));  // vacuous window
  CHECK_THROWS_AS(stabilization_check(identity, {Rat(1)}, Rat(9), Rat(6)), Error);

  PairConfig diag = pair_for("diag-sl2");
  CHECK(stabilization_check(diag, {Rat(1, 2), Rat(1, 2)}, Rat(10), Rat(14)));
}

TEST_CASE("all certified entries are nonnegative and in the outer coset") {
  PairConfig pair = pair_for("diag-sl2");
  CoverInfo cover = cover_type(pair.g);
  for (auto lp : {Vec{Rat(1, 2), Rat(1)}, Vec{Rat(1), Rat(1)}}) {
    BranchingResult res = restrict_discrete_series(pair, lp, Rat(14));
    for (const auto& e : res.entries) {
      if (!e.certified) continue;
      CHECK(e.multiplicity >= 0);
      CHECK(in_K_out(pair.g, cover, e.lambda));
      CHECK(is_admissible_orbit(pair.g, e.lambda));
    }
  }
}

TEST_CASE("the result is independent of the orientation convention") {
  // flipping the ambient orbit between the two holomorphic-type parameters
  // keeps multiplicities of the shared ladder identical
  PairConfig pair = pair_for("diag-sl2");
  BranchingResult a = restrict_discrete_series(pair, {Rat(1, 2), Rat(1)}, Rat(14));
  BranchingResult b = restrict_discrete_series(pair, {Rat(1), Rat(1, 2)}, Rat(14));
  std::map<Vec, long long, VecLess> ma, mb;
  for (const auto& e : a.entries)
    if (e.certified && e.multiplicity != 0) ma[e.lambda] = e.multiplicity;
  for (const auto& e : b.entries)
    if (e.certified && e.multiplicity != 0) mb[e.lambda] = e.multiplicity;
  CHECK(ma == mb);
}
