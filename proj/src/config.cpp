#include "reflectrace/config.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <unistd.h>

namespace reflectrace {

std::vector<std::string> const kOptionNames = {"ball_cap", "conj_radius",
                                               "centralizer_radius", "order_cap",
                                               "coset_cap"};

namespace {

std::string trim(std::string const& s) {
  auto const b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) {
    return "";
  }
  auto const e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(std::string const& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) {
    out.push_back(tok);
  }
  return out;
}

std::optional<std::size_t> parse_positive(std::string const& s) {
  if (s.empty() || s.size() > 18 ||
      s.find_first_not_of("0123456789") != std::string::npos) {
    return std::nullopt;
  }
  std::size_t const v = std::stoull(s);
  if (v == 0) {
    return std::nullopt;
  }
  return v;
}

}  // namespace

CoxeterMatrix SystemConfig::matrix() const {
  std::vector<int> labels;
  for (auto const& r : rows) {
    labels.insert(labels.end(), r.begin(), r.end());
  }
  return CoxeterMatrix(rows.size(), labels);
}

CoxeterSystem SystemConfig::system() const { return CoxeterSystem(matrix(), generators); }

VerifyOptions SystemConfig::verify_options() const {
  VerifyOptions o;
  auto get = [&](char const* key, std::size_t& field) {
    auto it = options.find(key);
    if (it != options.end()) {
      field = it->second;
    }
  };
  get("ball_cap", o.ball_cap);
  get("conj_radius", o.conj_radius);
  get("centralizer_radius", o.centralizer_radius);
  get("order_cap", o.order_cap);
  get("coset_cap", o.coset_cap);
  return o;
}

SystemConfig parse_config(std::string const& text) {
  SystemConfig cfg;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  std::size_t last_row_line = 0;
  bool have_name = false;
  bool have_generators = false;
  std::size_t generators_line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string const content = trim(raw.substr(0, raw.find('#')));
    if (content.empty()) {
      continue;
    }
    auto const eq = content.find('=');
    if (eq == std::string::npos) {
      throw config_error(line, "expected 'key = value', got '" + content + "'");
    }
    std::string const key = trim(content.substr(0, eq));
    std::string const value = trim(content.substr(eq + 1));
    if (key == "name") {
      if (have_name) {
        throw config_error(line, "duplicate key 'name'");
      }
      if (value.empty() || value.find_first_of(" \t") != std::string::npos) {
        throw config_error(line, "name must be a single non-empty token");
      }
      cfg.name = value;
      have_name = true;
    } else if (key == "generators") {
      if (have_generators) {
        throw config_error(line, "duplicate key 'generators'");
      }
      cfg.generators = split(value);
      if (cfg.generators.empty() || cfg.generators.size() > 32) {
        throw config_error(line, "between 1 and 32 generators required");
      }
      std::set<std::string> const unique(cfg.generators.begin(), cfg.generators.end());
      if (unique.size() != cfg.generators.size()) {
        throw config_error(line, "generator names must be distinct");
      }
      have_generators = true;
      generators_line = line;
    } else if (key == "row") {
      std::vector<int> row;
      for (auto const& tok : split(value)) {
        if (tok == "inf") {
          row.push_back(kInfinity);
        } else if (auto v = parse_positive(tok); v && *v < 1000000) {
          row.push_back(static_cast<int>(*v));
        } else {
          throw config_error(line, "bad Coxeter label '" + tok + "'");
        }
      }
      if (row.empty()) {
        throw config_error(line, "empty row");
      }
      cfg.rows.push_back(std::move(row));
      last_row_line = line;
    } else if (std::find(kOptionNames.begin(), kOptionNames.end(), key) !=
               kOptionNames.end()) {
      if (cfg.options.count(key)) {
        throw config_error(line, "duplicate key '" + key + "'");
      }
      auto v = parse_positive(value);
      if (!v) {
        throw config_error(line, "option '" + key + "' needs a positive integer");
      }
      cfg.options[key] = *v;
    } else {
      throw config_error(line, "unknown key '" + key + "'");
    }
  }
  if (!have_name) {
    throw config_error(line, "missing 'name'");
  }
  if (!have_generators) {
    throw config_error(line, "missing 'generators'");
  }
  std::size_t const n = cfg.generators.size();
  if (cfg.rows.size() != n) {
    throw config_error(last_row_line ? last_row_line : generators_line,
                       "expected " + std::to_string(n) + " matrix rows, got " +
                           std::to_string(cfg.rows.size()));
  }
  for (auto const& r : cfg.rows) {
    if (r.size() != n) {
      throw config_error(last_row_line, "every row needs " + std::to_string(n) + " labels");
    }
  }
  try {
    (void)cfg.matrix();
  } catch (coxeter_error const& e) {
    throw config_error(last_row_line, e.what());
  }
  return cfg;
}

SystemConfig load_config(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw config_error(0, "cannot open " + path);
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string serialize_config(SystemConfig const& cfg) {
  std::ostringstream os;
  os << "name = " << cfg.name << "\n";
  os << "generators =";
  for (auto const& g : cfg.generators) {
    os << " " << g;
  }
  os << "\n";
  for (auto const& r : cfg.rows) {
    os << "row =";
    for (int m : r) {
      os << " " << label_to_string(m);
    }
    os << "\n";
  }
  for (auto const& key : kOptionNames) {
    auto it = cfg.options.find(key);
    if (it != cfg.options.end()) {
      os << key << " = " << it->second << "\n";
    }
  }
  return os.str();
}

// ------------------------------------------------------------------- cache

std::uint64_t system_fingerprint(CoxeterMatrix const& m) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&](std::string const& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  feed(std::string("reflectrace ") + kVersion + "\n");
  feed(std::to_string(m.rank()) + ":");
  for (int l : m.labels()) {
    feed(std::to_string(l) + ",");
  }
  return h;
}

namespace {

constexpr char const* kCacheMagic = "reflectrace-ball 1";

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

}  // namespace

std::optional<BallCache> BallCache::from_environment() {
  char const* dir = std::getenv("REFLECTRACE_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') {
    return std::nullopt;
  }
  return BallCache(dir);
}

std::string BallCache::path_for(CoxeterSystem const& sys, std::size_t radius) const {
  return (std::filesystem::path(dir_) /
          ("ball-" + hex(system_fingerprint(sys.matrix())) + "-r" +
           std::to_string(radius) + ".txt"))
      .string();
}

std::optional<CayleyBall> BallCache::load(CoxeterSystem const& sys,
                                          std::size_t radius) const {
  std::ifstream in(path_for(sys, radius));
  if (!in) {
    return std::nullopt;
  }
  std::string line;
  if (!std::getline(in, line) || line != kCacheMagic) {
    return std::nullopt;
  }
  if (!std::getline(in, line) ||
      line != "fingerprint " + hex(system_fingerprint(sys.matrix()))) {
    return std::nullopt;
  }
  if (!std::getline(in, line) || line != "radius " + std::to_string(radius)) {
    return std::nullopt;
  }
  std::vector<std::vector<Word>> layers;
  while (std::getline(in, line)) {
    std::istringstream head(line);
    std::string tag;
    std::size_t k = 0;
    std::size_t count = 0;
    if (!(head >> tag >> k >> count) || tag != "layer" || k != layers.size()) {
      return std::nullopt;
    }
    std::vector<Word> layer;
    for (std::size_t i = 0; i < count; ++i) {
      if (!std::getline(in, line)) {
        return std::nullopt;
      }
      Word w;
      std::istringstream ws(line);
      std::string tok;
      while (ws >> tok) {
        if (tok == "-") {
          continue;
        }
        if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 4) {
          return std::nullopt;
        }
        w.push_back(std::stoi(tok));
      }
      layer.push_back(std::move(w));
    }
    layers.push_back(std::move(layer));
  }
  if (layers.size() != radius + 1) {
    return std::nullopt;
  }
  try {
    return sys.ball_from_layers(layers);
  } catch (coxeter_error const&) {
    return std::nullopt;
  }
}

void BallCache::store(CoxeterSystem const& sys, CayleyBall const& ball) const {
  std::filesystem::create_directories(dir_);
  std::string const path = path_for(sys, ball.radius());
  std::string const tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << kCacheMagic << "\n";
    out << "fingerprint " << hex(system_fingerprint(sys.matrix())) << "\n";
    out << "radius " << ball.radius() << "\n";
    for (std::size_t k = 0; k <= ball.radius(); ++k) {
      std::size_t const begin = ball.layer_begin(k);
      std::size_t const size = ball.layer_size(k);
      out << "layer " << k << " " << size << "\n";
      for (std::size_t i = begin; i < begin + size; ++i) {
        Word const& w = ball.elements()[i].word();
        if (w.empty()) {
          out << "-";
        }
        for (std::size_t j = 0; j < w.size(); ++j) {
          out << (j ? " " : "") << w[j];
        }
        out << "\n";
      }
    }
    if (!out) {
      throw std::runtime_error("cannot write cache file " + tmp);
    }
  }
  std::filesystem::rename(tmp, path);
}

CayleyBall BallCache::load_or_build(CoxeterSystem const& sys, std::size_t radius,
                                    std::size_t cap, bool* hit) const {
  if (auto b = load(sys, radius)) {
    if (hit) {
      *hit = true;
    }
    return std::move(*b);
  }
  if (hit) {
    *hit = false;
  }
  CayleyBall b = sys.ball(radius, cap);
  store(sys, b);
  return b;
}

}  // namespace reflectrace
