#pragma once

// System definitions from flat text files and the on-disk Cayley ball cache.
//
//   # comment
//   name = affine_a1
//   generators = s0 s1
//   row = 1 inf
//   row = inf 1
//   conj_radius = 6
//
// Options: ball_cap, conj_radius, centralizer_radius, order_cap, coset_cap.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reflectrace/coxeter.hpp"
#include "reflectrace/verify.hpp"

namespace reflectrace {

// line 0: not tied to a line.
class config_error : public std::runtime_error {
 public:
  config_error(std::size_t line, std::string const& message)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct SystemConfig {
  std::string name;
  std::vector<std::string> generators;
  std::vector<std::vector<int>> rows;  // kInfinity for inf
  // Only the options present in the file.
  std::map<std::string, std::size_t> options;

  CoxeterMatrix matrix() const;
  CoxeterSystem system() const;
  VerifyOptions verify_options() const;

  friend bool operator==(SystemConfig const&, SystemConfig const&) = default;
};

extern std::vector<std::string> const kOptionNames;

// Throws config_error with the offending line number.
SystemConfig parse_config(std::string const& text);
SystemConfig load_config(std::string const& path);
// Canonical text: name, generators, rows, then options in kOptionNames order.
std::string serialize_config(SystemConfig const& cfg);

// FNV-1a over the version string and the Coxeter matrix.
std::uint64_t system_fingerprint(CoxeterMatrix const& m);

class BallCache {
 public:
  explicit BallCache(std::string directory) : dir_(std::move(directory)) {}
  // From $REFLECTRACE_CACHE_DIR, if set.
  static std::optional<BallCache> from_environment();

  std::string path_for(CoxeterSystem const& sys, std::size_t radius) const;
  // nullopt when missing, stale or invalid.
  std::optional<CayleyBall> load(CoxeterSystem const& sys, std::size_t radius) const;
  // Writes to a temporary file and renames it into place.
  void store(CoxeterSystem const& sys, CayleyBall const& ball) const;
  CayleyBall load_or_build(CoxeterSystem const& sys, std::size_t radius,
                           std::size_t cap, bool* hit = nullptr) const;

 private:
  std::string dir_;
};

}  // namespace reflectrace
