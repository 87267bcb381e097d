#pragma once

#include <map>
#include <optional>
#include <string>

#include "orbita/qr_engine.hpp"

namespace orbita {

struct RunDefaults {
  std::optional<Rat> cutoff;
  std::optional<Rat> depth;
  std::optional<Vec> orbit;
};

struct ParsedConfig {
  int schema = 0;
  RootDatumSpec g;
  std::optional<RootDatumSpec> gprime;
  std::optional<Mat> dual_projection;
  RunDefaults run;
};

// Throws ConfigError on malformed input.
ParsedConfig parse_config(const std::string& text);

std::string serialize_config(const ParsedConfig& cfg);

// Bundled configuration texts, keyed by name (sl2, su21, sp4, diag-sl2,
// hol-antihol-sl2).
const std::map<std::string, std::string>& bundled_configs();

// Reads a file path, or falls back to a bundled name (with or without the
// .cfg suffix). Throws ConfigError when neither resolves.
ParsedConfig load_config(const std::string& path_or_name);

// Builds the root data; without an explicit ambient group the pair is the
// identity embedding of G in itself.
PairConfig make_pair(const ParsedConfig& cfg);

}  // namespace orbita
