#pragma once

// Randomized property suites. Each returns how many cases it checked and how
// many violated the property; the unit tests and the acceptance gate both
// require zero violations.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace rt_test {

struct PropertyResult {
  explicit PropertyResult(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::string first_violation;

  void fail(std::string const& what) {
    if (violations++ == 0) {
      first_violation = what;
    }
  }
  bool ok() const { return checked > 0 && violations == 0; }
};

PropertyResult scalar_field_axioms(std::uint64_t seed, std::size_t samples);
PropertyResult scalar_sign_consistency(std::uint64_t seed, std::size_t samples);
// Over every shipped system.
PropertyResult reflection_involution_and_form();
PropertyResult fold_orbit_canonical(std::uint64_t seed, std::size_t samples);
PropertyResult stabilizer_equals_fixator(std::string const& system, std::size_t radius);
PropertyResult invariant_conjugation_invariance(std::uint64_t seed, std::size_t samples);
// Over every component of every shipped system.
PropertyResult phi_soundness_and_centrality();

}  // namespace rt_test
