#include "orbita/selftest.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "orbita/config.hpp"

namespace orbita {

namespace {

RootDatum bundled_datum(const std::string& name) {
  return RootDatum::build(parse_config(bundled_configs().at(name)).g);
}

Rat widened(const std::optional<Rat>& override_value, const Rat& fallback) {
  if (override_value && *override_value > fallback) return *override_value;
  return fallback;
}

// Independent of the DP: direct enumeration of nonnegative root combinations.
Int naive_partition(const RootDatum& d, const std::vector<Vec>& roots, const Vec& rep,
                    const Vec& nu) {
  std::function<Int(std::size_t, const Vec&)> go = [&](std::size_t i, const Vec& rest) -> Int {
    if (vec_is_zero(rest)) return 1;  // remaining coefficients forced to zero
    if (i == roots.size()) return 0;
    Rat height = d.inner(rest, rep);
    if (height < 0) return 0;
    Rat ratio = height / d.inner(roots[i], rep);
    Int bound = numerator(ratio) / denominator(ratio);
    Int total = 0;
    Vec cur = rest;
    for (Int n = 0; n <= bound; ++n) {
      total += go(i + 1, cur);
      cur = vec_sub(cur, roots[i]);
    }
    return total;
  };
  return go(0, nu);
}

std::vector<Vec> chamber_roots(const RootDatum& d, const Chamber& c) {
  std::vector<Vec> out;
  const auto& rn = d.noncompact_positive();
  for (std::size_t i = 0; i < rn.size(); ++i)
    out.push_back(c.signs[i] < 0 ? vec_neg(rn[i]) : rn[i]);
  return out;
}

long long naive_blattner(const RootDatum& d, const Chamber& c, const Vec& lambda,
                         const Vec& mu) {
  std::vector<Vec> roots = chamber_roots(d, c);
  Vec shift = vec_add(lambda, d.rho_n_of(lambda));
  Int total = 0;
  for (const auto& w : d.weyl_K())
    total += w.sign *
             naive_partition(d, roots, c.representative, vec_sub(mat_vec(w.matrix, mu), shift));
  return static_cast<long long>(total);
}

// Integer coordinate vectors with ||nu||^2 <= cap (box of +-12 suffices for
// the bundled rank <= 2 data).
std::vector<Vec> small_integer_vectors(const RootDatum& d, const Rat& cap) {
  std::vector<Vec> out;
  std::vector<long> x(d.rank());
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == d.rank()) {
      Vec v(d.rank());
      for (std::size_t j = 0; j < d.rank(); ++j) v[j] = x[j];
      if (d.norm_sq(v) <= cap) out.push_back(v);
      return;
    }
    for (long v = -12; v <= 12; ++v) {
      x[i] = v;
      go(i + 1);
    }
  };
  go(0);
  return out;
}

OrbitParam smallest_orbit(const RootDatum& d, const Chamber& c, const Rat& bound) {
  auto orbits = enumerate_orbits(d, c, bound);
  if (orbits.empty())
    throw Error(ErrorCode::EmptySupport, "no orbit below bound in chamber");
  const OrbitParam* best = &orbits.front();
  for (const auto& o : orbits)
    if (d.csq_G(o.lambda) < d.csq_G(best->lambda)) best = &o;
  return *best;
}

using Check = std::function<void(std::ostringstream&)>;

CriterionResult run_one(int id, const std::string& name, const Check& body) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  std::ostringstream fail;
  try {
    body(fail);
    r.detail = fail.str();
    r.passed = r.detail.empty();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = e.what();
  }
  return r;
}

const std::vector<std::string> kDatumNames = {"sl2", "su21", "sp4"};

void criterion_root_closure(std::ostringstream& fail) {
  for (const auto& name : kDatumNames) {
    RootDatum d = bundled_datum(name);
    std::map<Vec, bool, VecLess> flags;
    for (const auto& r : d.roots()) flags[r.coords] = r.compact;
    for (const auto& a : d.roots())
      for (const auto& b : d.roots()) {
        auto it = flags.find(vec_add(a.coords, b.coords));
        if (it == flags.end()) continue;
        bool expected = a.compact == b.compact;
        if (it->second != expected) {
          fail << name << ": flag rule fails at " << vec_to_string(a.coords) << " + "
               << vec_to_string(b.coords);
          return;
        }
      }
  }
}

void criterion_chamber_counts(std::ostringstream& fail) {
  const std::map<std::string, std::size_t> expected = {{"sl2", 2}, {"su21", 3}, {"sp4", 4}};
  for (const auto& [name, want] : expected) {
    std::size_t got = enumerate_chambers(bundled_datum(name)).size();
    if (got != want) {
      fail << name << ": " << got << " chambers, expected " << want;
      return;
    }
  }
}

void criterion_partition_oracle(std::ostringstream& fail) {
  for (const auto& name : kDatumNames) {
    RootDatum d = bundled_datum(name);
    auto targets = small_integer_vectors(d, 50);
    for (const auto& c : enumerate_chambers(d)) {
      NoncompactPartition dp(d, c);
      std::vector<Vec> roots = chamber_roots(d, c);
      for (const auto& nu : targets) {
        Int got = dp.count(nu);
        Int want = naive_partition(d, roots, c.representative, nu);
        if (got != want) {
          fail << name << " chamber " << c.id << ": count(" << vec_to_string(nu)
               << ") = " << got.str() << ", oracle " << want.str();
          return;
        }
      }
    }
  }
}

void criterion_blattner_ladder(std::ostringstream& fail, const Rat& cutoff) {
  RootDatum d = bundled_datum("sl2");
  auto chambers = enumerate_chambers(d);
  for (int k = 1; k <= 3; ++k) {
    Vec lambda = {Rat(k, 2)};
    const Chamber& c = chamber_of(d, chambers, lambda);
    NoncompactPartition dp(d, c);
    VirtualCharacter v = restrict_to_K(d, dp, lambda, cutoff);
    // Expected: exactly the parameters (k+1+2m) in gamma units, each once.
    std::map<Vec, long long, VecLess> want;
    for (int q = k + 1; Rat(q) <= cutoff; q += 2) want[{Rat(q, 2)}] = 1;
    if (v.coeffs != want) {
      fail << "sl2 ladder mismatch at k=" << k;
      return;
    }
    // Cross-check every candidate against the naive alternating sum.
    for (const auto& p : lattice_points_in_ball(d, vec_neg(vec_scale(Rat(2), d.rho_c())), cutoff)) {
      Vec mu = vec_add(p, d.rho_c());
      if (!d.is_dominant_compact(mu, true)) continue;
      long long want_m = naive_blattner(d, c, lambda, mu);
      auto it = v.coeffs.find(mu);
      long long got_m = it == v.coeffs.end() ? 0 : it->second;
      if (got_m != want_m) {
        fail << "sl2 k=" << k << ": oracle disagrees at " << vec_to_string(mu);
        return;
      }
    }
  }
}

void criterion_vanishing_window(std::ostringstream& fail) {
  for (const auto& name : kDatumNames) {
    RootDatum d = bundled_datum(name);
    Rat bound(8);
    for (const auto& c : enumerate_chambers(d)) {
      NoncompactPartition dp(d, c);
      for (const auto& orbit : enumerate_orbits(d, c, bound)) {
        Rat cg_sq = d.csq_G(orbit.lambda);
        for (const auto& p :
             lattice_points_in_ball(d, vec_neg(vec_scale(Rat(2), d.rho_c())), bound)) {
          Vec mu = vec_add(p, d.rho_c());
          if (!d.is_dominant_compact(mu, true)) continue;
          if (d.csq_K(mu) >= cg_sq) continue;
          long long m = blattner_multiplicity(d, dp, orbit.lambda, mu);
          if (m != 0) {
            fail << name << ": nonzero multiplicity below c^G at " << vec_to_string(mu);
            return;
          }
        }
      }
    }
  }
}

void criterion_telescoping(std::ostringstream& fail) {
  struct Case {
    std::string name;
    std::function<bool(const Chamber&)> use_chamber;
  };
  auto all = [](const Chamber&) { return true; };
  auto holomorphic = [](const Chamber& c) {
    return std::all_of(c.signs.begin(), c.signs.end(), [](int s) { return s > 0; });
  };
  std::vector<Case> cases = {{"sl2", all}, {"su21", all}, {"sp4", holomorphic}};
  for (const auto& cs : cases) {
    RootDatum d = bundled_datum(cs.name);
    auto chambers = enumerate_chambers(d);
    Vec oref = chambers.front().representative;
    SpinorCharacter spin = spinor_character(d, oref);
    Rat shift = spinor_shift(d, spin);
    for (const auto& c : chambers) {
      if (!cs.use_chamber(c)) continue;
      OrbitParam orbit = smallest_orbit(d, c, Rat(6));
      NoncompactPartition dp(d, c);
      Rat r = rat_sqrt_upper(d.csq_G(orbit.lambda)) + shift + 8;
      VirtualCharacter v;
      for (int attempt = 0; attempt < 8; ++attempt) {
        v = restrict_to_K(d, dp, orbit.lambda, r);
        std::set<Rat> shells;
        Rat window = (r - shift) * (r - shift);
        for (const auto& [mu, m] : v.coeffs)
          if (d.csq_K(mu) <= window) shells.insert(d.csq_K(mu));
        if (shells.size() >= 10) break;
        r += 6;
      }
      VirtualCharacter t = tensor_spinor(d, v, spin);
      int ratio = orientation_ratio(d, oref, vec_neg(orbit.lambda));
      Rat window = (r - shift) * (r - shift);
      bool found = false;
      for (const auto& [mu, coeff] : t.coeffs) {
        if (d.csq_K(mu) > window) continue;
        if (mu == orbit.lambda && coeff == ratio) {
          found = true;
          continue;
        }
        fail << cs.name << " chamber " << c.id << ": stray certified term at "
             << vec_to_string(mu);
        return;
      }
      if (!found) {
        fail << cs.name << " chamber " << c.id << ": expected single term missing";
        return;
      }
    }
  }
}

std::map<Vec, long long, VecLess> certified_map(const RootDatum& g, const BranchingResult& res,
                                                const Rat& window_sq) {
  std::map<Vec, long long, VecLess> out;
  for (const auto& e : res.entries)
    if (e.certified && e.multiplicity != 0 && g.csq_G(e.lambda) <= window_sq)
      out[e.lambda] = e.multiplicity;
  return out;
}

// D_k x D_l oracle: level counts A(p) of diagonal torus types, unfolded into
// discrete-series multiplicities m(q) = A(q+1) - A(q-1).
std::map<Vec, long long, VecLess> ladder_oracle(int k, int l, const Rat& cutoff) {
  auto level = [&](long long p) -> long long {
    long long base = k + l + 2;
    if (p < base || (p - base) % 2 != 0) return 0;
    return (p - base) / 2 + 1;
  };
  std::map<Vec, long long, VecLess> out;
  for (long long q = 1; Rat(q + 1) <= cutoff; ++q) {
    long long m = level(q + 1) - level(q - 1);
    if (m != 0) out[{Rat(q, 2)}] = m;
  }
  return out;
}

void criterion_pipeline(std::ostringstream& fail, const Rat& cutoff) {
  ParsedConfig parsed = parse_config(bundled_configs().at("diag-sl2"));
  PairConfig pair = make_pair(parsed);
  auto chambers_g = enumerate_chambers(pair.g);
  std::size_t holo = chamber_of(pair.g, chambers_g, {Rat(1, 2)}).id;
  const std::vector<std::pair<int, int>> params = {{1, 1}, {1, 2}, {2, 2}};
  for (auto [k, l] : params) {
    Vec lambda_prime = {Rat(k, 2), Rat(l, 2)};
    BranchingResult res = restrict_discrete_series(pair, lambda_prime, cutoff);
    auto got = certified_map(pair.g, res, cutoff * cutoff);
    auto want = ladder_oracle(k, l, cutoff);
    if (got != want) {
      fail << "diag-sl2 (" << k << "," << l << "): ladder mismatch";
      return;
    }
    if (!res.unique_chamber || *res.unique_chamber != holo) {
      fail << "diag-sl2 (" << k << "," << l << "): chamber check failed";
      return;
    }
  }
}

void criterion_admissibility(std::ostringstream& fail) {
  // Diagonal pair.
  {
    PairConfig pair = make_pair(parse_config(bundled_configs().at("diag-sl2")));
    auto chambers = enumerate_chambers(pair.gprime);
    Vec lp = {Rat(1, 2), Rat(1, 2)};
    NoncompactPartition dp(pair.gprime, chamber_of(pair.gprime, chambers, lp));
    ConeDesc cone = asymptotic_support_cone(pair.gprime, dp, lp, Rat(12));
    AdmissibilityVerdict v = check_admissibility(pair.gprime, pair.g, cone, pair.emb);
    if (v.status != AdmissibilityVerdict::Status::Admissible || v.gap != 1) {
      fail << "diag-sl2: expected Admissible with gap 1";
      return;
    }
  }
  // Holomorphic against antiholomorphic factor.
  {
    PairConfig pair = make_pair(parse_config(bundled_configs().at("hol-antihol-sl2")));
    auto chambers = enumerate_chambers(pair.gprime);
    Vec lp = {Rat(1, 2), Rat(-1, 2)};
    NoncompactPartition dp(pair.gprime, chamber_of(pair.gprime, chambers, lp));
    ConeDesc cone = asymptotic_support_cone(pair.gprime, dp, lp, Rat(12));
    AdmissibilityVerdict v = check_admissibility(pair.gprime, pair.g, cone, pair.emb);
    Vec want = {Rat(1), Rat(-1)};
    if (v.status != AdmissibilityVerdict::Status::NotAdmissible || v.witness != want) {
      fail << "hol-antihol-sl2: expected NotAdmissible with witness 1,-1";
      return;
    }
    if (!vec_is_zero(mat_vec(pair.emb.dual_projection, v.witness))) {
      fail << "hol-antihol-sl2: witness does not project to zero";
      return;
    }
  }
  // Identity pair.
  {
    PairConfig pair = make_pair(parse_config(bundled_configs().at("sl2")));
    auto chambers = enumerate_chambers(pair.gprime);
    Vec lp = {Rat(1)};
    NoncompactPartition dp(pair.gprime, chamber_of(pair.gprime, chambers, lp));
    ConeDesc cone = asymptotic_support_cone(pair.gprime, dp, lp, Rat(12));
    AdmissibilityVerdict v = check_admissibility(pair.gprime, pair.g, cone, pair.emb);
    if (v.status != AdmissibilityVerdict::Status::Admissible || v.gap != 1) {
      fail << "identity pair: expected Admissible with gap 1";
      return;
    }
  }
}

void criterion_stability(std::ostringstream& fail, const Rat& cutoff) {
  ParsedConfig parsed = parse_config(bundled_configs().at("diag-sl2"));
  PairConfig pair = make_pair(parsed);
  Vec lp = {Rat(1, 2), Rat(1, 2)};
  Rat half = cutoff / 2;
  if (!stabilization_check(pair, lp, half, cutoff)) {
    fail << "doubling the cutoff changed certified entries";
    return;
  }
  Rat window_sq = half * half;
  BranchingResult base = restrict_discrete_series(pair, lp, half);
  auto base_map = certified_map(pair.g, base, window_sq);

  // Rescale either invariant form by 3/2; multiplicities must not move.
  Rat scale(3, 2);
  Rat sqrt_scale_up = rat_sqrt_upper(scale);
  {
    ParsedConfig scaled = parsed;
    for (auto& row : scaled.gprime->gram)
      for (auto& x : row) x *= scale;
    PairConfig p2 = make_pair(scaled);
    BranchingResult res = restrict_discrete_series(p2, lp, half);
    if (certified_map(pair.g, res, window_sq) != base_map) {
      fail << "rescaling the ambient form changed the multiplicity map";
      return;
    }
  }
  {
    ParsedConfig scaled = parsed;
    for (auto& row : scaled.g.gram)
      for (auto& x : row) x *= scale;
    PairConfig p2 = make_pair(scaled);
    // Norms on the subgroup side grew; widen the run window, compare on the
    // original one.
    BranchingResult res = restrict_discrete_series(p2, lp, half * sqrt_scale_up + 1);
    std::map<Vec, long long, VecLess> got;
    for (const auto& e : res.entries)
      if (e.multiplicity != 0 && pair.g.csq_G(e.lambda) <= window_sq)
        got[e.lambda] = e.multiplicity;
    if (got != base_map) {
      fail << "rescaling the subgroup form changed the multiplicity map";
      return;
    }
  }
}

void criterion_coset_parity(std::ostringstream& fail) {
  // Recomputed from the library pieces, independent of the engine internals.
  {
    PairConfig pair = make_pair(parse_config(bundled_configs().at("diag-sl2")));
    auto chambers_p = enumerate_chambers(pair.gprime);
    Vec lp = {Rat(1, 2), Rat(1, 2)};
    NoncompactPartition dp(pair.gprime, chamber_of(pair.gprime, chambers_p, lp));
    VirtualCharacter upstairs = restrict_to_K(pair.gprime, dp, lp, Rat(12));
    VirtualCharacter total;
    total.certified_norm = 12;
    for (const auto& [mu_p, m_p] : upstairs.coeffs) {
      VirtualCharacter b = branch_compact(pair.gprime, mu_p, pair.g, pair.emb.dual_projection);
      for (const auto& [mu, c] : b.coeffs) total.coeffs[mu] += m_p * c;
    }
    CoverInfo cover = cover_type(pair.g);
    Vec oref = enumerate_chambers(pair.g).front().representative;
    VirtualCharacter t = tensor_spinor(pair.g, total, spinor_character(pair.g, oref));
    for (const auto& [mu, c] : t.coeffs) {
      if (c == 0) continue;
      if (!in_K_out(pair.g, cover, mu)) {
        fail << "diag-sl2: surviving type outside the outer coset: " << vec_to_string(mu);
        return;
      }
    }
  }
  // Identity pipeline on sp(4,R): exercises the genuine double cover; the
  // engine checks parity on every surviving type and the result must be the
  // single original orbit.
  {
    PairConfig pair = make_pair(parse_config(bundled_configs().at("sp4")));
    Vec lambda = {Rat(2), Rat(3, 2)};
    BranchingResult res = restrict_discrete_series(pair, lambda, Rat(8));
    auto got = certified_map(pair.g, res, Rat(64));
    std::map<Vec, long long, VecLess> want = {{lambda, 1}};
    if (got != want) {
      fail << "sp4 identity pipeline did not return the single original orbit";
      return;
    }
  }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::optional<Rat>& cutoff_override) {
  Rat ladder_cut = widened(cutoff_override, Rat(25));
  Rat pipeline_cut = widened(cutoff_override, Rat(20));
  std::vector<CriterionResult> out;
  out.push_back(run_one(1, "root closure rules", criterion_root_closure));
  out.push_back(run_one(2, "chamber counts", criterion_chamber_counts));
  out.push_back(run_one(3, "partition oracle", criterion_partition_oracle));
  out.push_back(run_one(4, "Blattner ladder", [&](std::ostringstream& f) {
    criterion_blattner_ladder(f, ladder_cut);
  }));
  out.push_back(run_one(5, "vanishing window", criterion_vanishing_window));
  out.push_back(run_one(6, "telescoping identity", criterion_telescoping));
  out.push_back(run_one(7, "diagonal pipeline", [&](std::ostringstream& f) {
    criterion_pipeline(f, pipeline_cut);
  }));
  out.push_back(run_one(8, "admissibility verdicts", criterion_admissibility));
  out.push_back(run_one(9, "stability and scale invariance", [&](std::ostringstream& f) {
    criterion_stability(f, pipeline_cut);
  }));
  out.push_back(run_one(10, "coset parity", criterion_coset_parity));
  return out;
}

int run_selftest(std::ostream& out, const std::optional<Rat>& cutoff_override) {
  auto results = run_acceptance(cutoff_override);
  bool all = true;
  for (const auto& r : results) {
    out << "criterion " << r.id << " (" << r.name << "): " << (r.passed ? "PASS" : "FAIL");
    if (!r.passed) out << " [" << r.detail << "]";
    out << "\n";
    all = all && r.passed;
  }
  return all ? 0 : 4;
}

}  // namespace orbita
