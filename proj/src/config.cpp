#include "orbita/config.hpp"

#include <fstream>
#include <sstream>

namespace orbita {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

Vec parse_row(const std::string& s) {
  Vec row;
  for (const auto& tok : split_ws(s)) row.push_back(parse_rat(tok));
  return row;
}

Mat parse_matrix(const std::string& s) {
  Mat m;
  std::string rest = s;
  std::size_t pos;
  while ((pos = rest.find(';')) != std::string::npos) {
    m.push_back(parse_row(rest.substr(0, pos)));
    rest = rest.substr(pos + 1);
  }
  m.push_back(parse_row(rest));
  return m;
}

struct GroupBlock {
  RootDatumSpec spec;
  bool seen = false;
};

void set_group_key(GroupBlock& block, const std::string& key, const std::string& value) {
  block.seen = true;
  if (key == "name") {
    block.spec.name = value;
  } else if (key == "rank") {
    block.spec.rank = static_cast<std::size_t>(std::stoul(value));
  } else if (key == "cartan") {
    Mat m = parse_matrix(value);
    block.spec.cartan.clear();
    for (const auto& row : m) {
      std::vector<long> r;
      for (const auto& x : row) {
        if (!is_integer(x))
          throw Error(ErrorCode::ConfigError, "cartan entries must be integers");
        r.push_back(static_cast<long>(numerator(x)));
      }
      block.spec.cartan.push_back(std::move(r));
    }
  } else if (key == "compact") {
    block.spec.compact.clear();
    for (const auto& tok : split_ws(value)) {
      if (tok == "compact")
        block.spec.compact.push_back(true);
      else if (tok == "noncompact")
        block.spec.compact.push_back(false);
      else
        throw Error(ErrorCode::ConfigError, "compact flag must be compact|noncompact");
    }
  } else if (key == "gram") {
    block.spec.gram = parse_matrix(value);
  } else if (key == "lattice") {
    block.spec.lattice_basis = parse_matrix(value);
  } else {
    throw Error(ErrorCode::ConfigError, "unknown group key: " + key);
  }
}

}  // namespace

ParsedConfig parse_config(const std::string& text) {
  ParsedConfig cfg;
  GroupBlock g, gprime;
  std::string section;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw Error(ErrorCode::ConfigError, "unterminated section header: " + line);
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::ConfigError, "expected key = value: " + line);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    try {
      if (section.empty()) {
        if (key == "schema")
          cfg.schema = std::stoi(value);
        else
          throw Error(ErrorCode::ConfigError, "unknown top-level key: " + key);
      } else if (section == "group.G") {
        set_group_key(g, key, value);
      } else if (section == "group.Gprime") {
        set_group_key(gprime, key, value);
      } else if (section == "embedding") {
        if (key != "dual_projection")
          throw Error(ErrorCode::ConfigError, "unknown embedding key: " + key);
        cfg.dual_projection = parse_matrix(value);
      } else if (section == "run") {
        if (key == "cutoff")
          cfg.run.cutoff = parse_rat(value);
        else if (key == "depth")
          cfg.run.depth = parse_rat(value);
        else if (key == "orbit")
          cfg.run.orbit = parse_row(value);
        else
          throw Error(ErrorCode::ConfigError, "unknown run key: " + key);
      } else {
        throw Error(ErrorCode::ConfigError, "unknown section: " + section);
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw Error(ErrorCode::ConfigError, "bad value for " + key + ": " + e.what());
    }
  }
  if (cfg.schema != 1)
    throw Error(ErrorCode::ConfigError, "missing or unsupported schema version");
  if (!g.seen) throw Error(ErrorCode::ConfigError, "missing [group.G] block");
  cfg.g = g.spec;
  if (gprime.seen) cfg.gprime = gprime.spec;
  return cfg;
}

namespace {

std::string matrix_text(const Mat& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += " ; ";
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j) out += " ";
      out += rat_to_string(m[i][j]);
    }
  }
  return out;
}

void write_group(std::ostringstream& out, const std::string& header,
                 const RootDatumSpec& s) {
  out << "[" << header << "]\n";
  out << "name = " << s.name << "\n";
  out << "rank = " << s.rank << "\n";
  Mat cartan;
  for (const auto& row : s.cartan) {
    Vec r;
    for (long x : row) r.push_back(Rat(x));
    cartan.push_back(std::move(r));
  }
  out << "cartan = " << matrix_text(cartan) << "\n";
  out << "compact =";
  for (bool c : s.compact) out << " " << (c ? "compact" : "noncompact");
  out << "\n";
  if (!s.gram.empty()) out << "gram = " << matrix_text(s.gram) << "\n";
  out << "lattice = " << matrix_text(s.lattice_basis) << "\n";
}

}  // namespace

std::string serialize_config(const ParsedConfig& cfg) {
  std::ostringstream out;
  out << "schema = " << cfg.schema << "\n\n";
  write_group(out, "group.G", cfg.g);
  if (cfg.gprime) {
    out << "\n";
    write_group(out, "group.Gprime", *cfg.gprime);
  }
  if (cfg.dual_projection) {
    out << "\n[embedding]\n";
    out << "dual_projection = " << matrix_text(*cfg.dual_projection) << "\n";
  }
  if (cfg.run.cutoff || cfg.run.depth || cfg.run.orbit) {
    out << "\n[run]\n";
    if (cfg.run.cutoff) out << "cutoff = " << rat_to_string(*cfg.run.cutoff) << "\n";
    if (cfg.run.depth) out << "depth = " << rat_to_string(*cfg.run.depth) << "\n";
    if (cfg.run.orbit) {
      out << "orbit =";
      for (const auto& x : *cfg.run.orbit) out << " " << rat_to_string(x);
      out << "\n";
    }
  }
  return out.str();
}

const std::map<std::string, std::string>& bundled_configs() {
  static const std::map<std::string, std::string> configs = {
      {"sl2", R"(schema = 1

[group.G]
name = sl2
rank = 1
cartan = 2
compact = noncompact
gram = 4
lattice = 1/2

[run]
cutoff = 25
orbit = 1
)"},
      {"su21", R"(schema = 1

[group.G]
name = su21
rank = 2
cartan = 2 -1 ; -1 2
compact = compact noncompact
lattice = 2/3 1/3 ; 1/3 2/3

[run]
cutoff = 16
orbit = 1 1
)"},
      {"sp4", R"(schema = 1

[group.G]
name = sp4
rank = 2
cartan = 2 -1 ; -2 2
compact = compact noncompact
lattice = 1 1/2 ; 0 1/2

[run]
cutoff = 16
orbit = 2 3/2
)"},
      {"diag-sl2", R"(schema = 1

[group.G]
name = diag-sl2
rank = 1
cartan = 2
compact = noncompact
gram = 4
lattice = 1/2

[group.Gprime]
name = sl2xsl2
rank = 2
cartan = 2 0 ; 0 2
compact = noncompact noncompact
gram = 4 0 ; 0 4
lattice = 1/2 0 ; 0 1/2

[embedding]
dual_projection = 1 1

[run]
cutoff = 20
orbit = 1/2 1/2
)"},
      {"hol-antihol-sl2", R"(schema = 1

[group.G]
name = diag-sl2
rank = 1
cartan = 2
compact = noncompact
gram = 4
lattice = 1/2

[group.Gprime]
name = sl2xsl2
rank = 2
cartan = 2 0 ; 0 2
compact = noncompact noncompact
gram = 4 0 ; 0 4
lattice = 1/2 0 ; 0 1/2

[embedding]
dual_projection = 1 1

[run]
cutoff = 20
orbit = 1/2 -1/2
)"},
  };
  return configs;
}

ParsedConfig load_config(const std::string& path_or_name) {
  std::ifstream file(path_or_name);
  if (file) {
    std::ostringstream buf;
    buf << file.rdbuf();
    return parse_config(buf.str());
  }
  const auto& bundled = bundled_configs();
  std::string key = path_or_name;
  std::size_t dot = key.rfind(".cfg");
  if (dot != std::string::npos && dot == key.size() - 4) key = key.substr(0, dot);
  auto it = bundled.find(key);
  if (it == bundled.end())
    throw Error(ErrorCode::ConfigError, "no such file or bundled config: " + path_or_name);
  return parse_config(it->second);
}

PairConfig make_pair(const ParsedConfig& cfg) {
  RootDatum g = RootDatum::build(cfg.g);
  RootDatum gprime = RootDatum::build(cfg.gprime ? *cfg.gprime : cfg.g);
  EmbeddingData emb;
  if (cfg.dual_projection)
    emb.dual_projection = *cfg.dual_projection;
  else if (!cfg.gprime)
    emb.dual_projection = mat_identity(g.rank());
  else
    throw Error(ErrorCode::ConfigError, "ambient group given without an embedding");
  PairConfig pair{std::move(gprime), std::move(g), std::move(emb)};
  validate_embedding(pair.gprime, pair.g, pair.emb);
  return pair;
}

}  // namespace orbita
