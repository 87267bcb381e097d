#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbita/config.hpp"
#include "orbita/selftest.hpp"

using json = nlohmann::ordered_json;

namespace {

using namespace orbita;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAdmissiblePair:
      return 3;
    case ErrorCode::NegativeMultiplicity:
    case ErrorCode::UnexpectedKtype:
      return 4;
    default:
      return 2;
  }
}

json rat_json(const Rat& x) { return rat_to_string(x); }

json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat_to_string(x));
  return a;
}

std::string vec_field(const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += rat_to_string(v[i]);
  }
  return out;
}

Vec parse_orbit(const std::string& s, std::size_t rank) {
  Vec v;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      v.push_back(parse_rat(cur));
      cur.clear();
    }
  };
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '\t')
      flush();
    else
      cur += c;
  }
  flush();
  if (v.size() != rank)
    throw Error(ErrorCode::ConfigError,
                "orbit needs " + std::to_string(rank) + " coordinates");
  return v;
}

struct CommonOpts {
  std::string pair;
  std::string format;  // json or csv
  std::string orbit;
  std::optional<Rat> cutoff;
  std::optional<Rat> depth;
  bool stabilize = false;
};

Vec resolve_orbit(const CommonOpts& opts, const ParsedConfig& cfg, std::size_t rank) {
  if (!opts.orbit.empty()) return parse_orbit(opts.orbit, rank);
  if (cfg.run.orbit) {
    if (cfg.run.orbit->size() != rank)
      throw Error(ErrorCode::ConfigError, "config orbit has the wrong rank");
    return *cfg.run.orbit;
  }
  throw Error(ErrorCode::ConfigError, "no orbit given (flag --orbit or [run] orbit)");
}

Rat resolve_cutoff(const CommonOpts& opts, const ParsedConfig& cfg) {
  if (opts.cutoff) return *opts.cutoff;
  if (cfg.run.cutoff) return *cfg.run.cutoff;
  throw Error(ErrorCode::ConfigError, "no cutoff given (flag --cutoff or [run] cutoff)");
}

Rat resolve_depth(const CommonOpts& opts, const ParsedConfig& cfg) {
  if (opts.depth) return *opts.depth;
  if (cfg.run.depth) return *cfg.run.depth;
  if (opts.cutoff) return *opts.cutoff;
  if (cfg.run.cutoff) return *cfg.run.cutoff;
  throw Error(ErrorCode::ConfigError, "no depth given (flag --depth or [run] depth)");
}

void emit(const CommonOpts& opts, const std::string& default_format,
          const std::vector<json>& rows, const std::vector<std::string>& csv_header) {
  std::string fmt = opts.format.empty() ? default_format : opts.format;
  if (fmt == "json") {
    for (const auto& row : rows) std::cout << row.dump() << "\n";
    return;
  }
  std::string header;
  for (std::size_t i = 0; i < csv_header.size(); ++i) {
    if (i) header += ",";
    header += csv_header[i];
  }
  std::cout << header << "\n";
  for (const auto& row : rows) {
    std::string line;
    bool first = true;
    for (const auto& [key, value] : row.items()) {
      if (!first) line += ",";
      first = false;
      if (value.is_string())
        line += value.get<std::string>();
      else if (value.is_array())
        line += vec_field([&] {
          Vec v;
          for (const auto& x : value) v.push_back(parse_rat(x.get<std::string>()));
          return v;
        }());
      else
        line += value.dump();
    }
    std::cout << line << "\n";
  }
}

int cmd_chambers(const CommonOpts& opts) {
  ParsedConfig cfg = load_config(opts.pair);
  RootDatum d = RootDatum::build(cfg.g);
  std::vector<json> rows;
  for (const auto& c : enumerate_chambers(d)) {
    std::string signs;
    for (int s : c.signs) signs += s > 0 ? '+' : '-';
    rows.push_back({{"id", c.id}, {"signs", signs}, {"representative", vec_json(c.representative)}});
  }
  emit(opts, "json", rows, {"id", "signs", "representative"});
  return 0;
}

int cmd_orbits(const CommonOpts& opts) {
  ParsedConfig cfg = load_config(opts.pair);
  RootDatum d = RootDatum::build(cfg.g);
  Rat cutoff = resolve_cutoff(opts, cfg);
  std::vector<json> rows;
  for (const auto& c : enumerate_chambers(d))
    for (const auto& o : enumerate_orbits(d, c, cutoff))
      rows.push_back({{"chamber", c.id},
                      {"lambda", vec_json(o.lambda)},
                      {"cG_sq", rat_json(d.csq_G(o.lambda))}});
  emit(opts, "json", rows, {"chamber", "lambda", "cG_sq"});
  return 0;
}

int cmd_spinor(const CommonOpts& opts) {
  ParsedConfig cfg = load_config(opts.pair);
  RootDatum d = RootDatum::build(cfg.g);
  CoverInfo cover = cover_type(d);
  Vec oref = enumerate_chambers(d).front().representative;
  SpinorCharacter s = spinor_character(d, oref);
  std::vector<json> rows;
  rows.push_back({{"kind", "cover"},
                  {"value", cover.kind == CoverKind::DoubleCover ? "double" : "isomorphism"},
                  {"coeff", vec_json(cover.rho_n_ref)}});
  for (const auto& [w, c] : s.terms)
    rows.push_back({{"kind", "term"}, {"value", vec_field(w)}, {"coeff", std::to_string(c)}});
  emit(opts, "json", rows, {"kind", "value", "coeff"});
  return 0;
}

int cmd_blattner(const CommonOpts& opts) {
  ParsedConfig cfg = load_config(opts.pair);
  RootDatum d = RootDatum::build(cfg.g);
  Vec lambda = resolve_orbit(opts, cfg, d.rank());
  Rat cutoff = resolve_cutoff(opts, cfg);
  VirtualCharacter v = restrict_to_K(d, lambda, cutoff);
  std::vector<json> rows;
  for (const auto& [mu, m] : v.coeffs)
    rows.push_back({{"mu", vec_json(mu)},
                    {"multiplicity", m},
                    {"cK_sq", rat_json(d.csq_K(mu))}});
  emit(opts, "csv", rows, {"mu", "multiplicity", "cK_sq"});
  return 0;
}

int cmd_admissible(const CommonOpts& opts) {
  ParsedConfig cfg = load_config(opts.pair);
  PairConfig pair = make_pair(cfg);
  Vec lambda_prime = resolve_orbit(opts, cfg, pair.gprime.rank());
  Rat depth = resolve_depth(opts, cfg);
  auto chambers = enumerate_chambers(pair.gprime);
  NoncompactPartition dp(pair.gprime, chamber_of(pair.gprime, chambers, lambda_prime));
  ConeDesc cone = asymptotic_support_cone(pair.gprime, dp, lambda_prime, depth);
  AdmissibilityVerdict v = check_admissibility(pair.gprime, pair.g, cone, pair.emb);
  json row;
  switch (v.status) {
    case AdmissibilityVerdict::Status::Admissible:
      row = {{"status", "admissible"}, {"gap", rat_json(v.gap)}};
      break;
    case AdmissibilityVerdict::Status::NotAdmissible:
      row = {{"status", "not-admissible"}, {"witness", vec_json(v.witness)}};
      break;
    case AdmissibilityVerdict::Status::Unknown:
      row = {{"status", "unknown"}};
      break;
  }
  row["backend"] = "exact";
  row["depth"] = rat_json(cone.depth);
  json gens = json::array();
  for (const auto& g : cone.generators) gens.push_back(vec_json(g));
  row["cone"] = gens;
  std::string fmt = opts.format.empty() ? "json" : opts.format;
  if (fmt == "csv") {
    std::cout << "status,detail,backend,depth\n";
    std::string detail = v.status == AdmissibilityVerdict::Status::Admissible
                             ? rat_to_string(v.gap)
                             : vec_field(v.witness);
    std::cout << row["status"].get<std::string>() << "," << detail << ",exact,"
              << rat_to_string(cone.depth) << "\n";
  } else {
    std::cout << row.dump() << "\n";
  }
  return 0;
}

int cmd_restrict(const CommonOpts& opts) {
  ParsedConfig cfg = load_config(opts.pair);
  PairConfig pair = make_pair(cfg);
  Vec lambda_prime = resolve_orbit(opts, cfg, pair.gprime.rank());
  Rat cutoff = resolve_cutoff(opts, cfg);
  BranchingResult res = restrict_discrete_series(pair, lambda_prime, cutoff);
  std::vector<json> rows;
  for (const auto& e : res.entries)
    rows.push_back({{"orbit", vec_json(e.lambda)},
                    {"multiplicity", e.multiplicity},
                    {"certified", e.certified},
                    {"chamber", e.chamber_id}});
  emit(opts, "json", rows, {"orbit", "multiplicity", "certified", "chamber"});
  json summary = {{"summary", true},
                  {"cutoff", rat_json(res.cutoff)},
                  {"gap", res.gap ? rat_json(*res.gap) : json(nullptr)},
                  {"unique_chamber",
                   res.unique_chamber ? json(*res.unique_chamber) : json(nullptr)}};
  if (opts.stabilize)
    summary["stabilized"] = stabilization_check(pair, lambda_prime, cutoff, cutoff + 4);
  std::string fmt = opts.format.empty() ? "json" : opts.format;
  if (fmt == "json")
    std::cout << summary.dump() << "\n";
  else
    std::cout << "# cutoff=" << rat_to_string(res.cutoff)
              << " gap=" << (res.gap ? rat_to_string(*res.gap) : "none") << "\n";
  return 0;
}

int cmd_selftest(const CommonOpts& opts) {
  return run_selftest(std::cout, opts.cutoff);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact branching laws for discrete series via orbit parameters"};
  app.require_subcommand(1);

  const char* threads_env = std::getenv("ORBITA_THREADS");
  if (threads_env) {
    // Worker cap; the current pipeline stages run sequentially, so this only
    // validates the setting.
    char* end = nullptr;
    long n = std::strtol(threads_env, &end, 10);
    if (!end || *end != '\0' || n <= 0) {
      std::cerr << "{\"error\":\"ConfigError\",\"reason\":\"ORBITA_THREADS must be a positive integer\"}\n";
      return 2;
    }
  }

  CommonOpts opts;
  std::string cutoff_str, depth_str;
  auto add_common = [&](CLI::App* cmd, bool need_pair) {
    auto* p = cmd->add_option("--pair", opts.pair, "config file path or bundled name");
    if (need_pair) p->required();
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--cutoff", cutoff_str, "norm cutoff, rational p/q");
    cmd->add_option("--depth", depth_str, "cone reading depth, rational p/q");
    cmd->add_option("--orbit", opts.orbit, "orbit coordinates, comma separated rationals");
    cmd->add_flag("--stabilize", opts.stabilize, "verify by a second run at a larger cutoff");
  };

  auto* chambers = app.add_subcommand("chambers", "list chambers of the group");
  auto* orbits = app.add_subcommand("orbits", "admissible orbit parameters per chamber");
  auto* spinor = app.add_subcommand("spinor", "cover type and spinor character");
  auto* blattner = app.add_subcommand("blattner", "K-type multiplicities of one orbit");
  auto* admissible = app.add_subcommand("admissible", "admissibility verdict for the pair");
  auto* restrict_cmd = app.add_subcommand("restrict", "branching multiplicities for the pair");
  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  for (auto* cmd : {chambers, orbits, spinor, blattner, admissible, restrict_cmd})
    add_common(cmd, true);
  add_common(selftest, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (!cutoff_str.empty()) opts.cutoff = orbita::parse_rat(cutoff_str);
    if (!depth_str.empty()) opts.depth = orbita::parse_rat(depth_str);
    if (chambers->parsed()) return cmd_chambers(opts);
    if (orbits->parsed()) return cmd_orbits(opts);
    if (spinor->parsed()) return cmd_spinor(opts);
    if (blattner->parsed()) return cmd_blattner(opts);
    if (admissible->parsed()) return cmd_admissible(opts);
    if (restrict_cmd->parsed()) return cmd_restrict(opts);
    if (selftest->parsed()) return cmd_selftest(opts);
  } catch (const orbita::Error& e) {
    json err = {{"error", orbita::error_code_name(e.code())}, {"reason", e.what()}};
    std::cerr << err.dump() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    json err = {{"error", "ConfigError"}, {"reason", e.what()}};
    std::cerr << err.dump() << "\n";
    return 2;
  }
  return 2;
}
