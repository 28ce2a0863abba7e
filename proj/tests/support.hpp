#pragma once

// Shared fixtures for the unit tests and the acceptance gate.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "reflectrace/config.hpp"
#include "reflectrace/coxeter.hpp"
#include "reflectrace/scalars.hpp"

#ifndef REFLECTRACE_CONFIG_DIR
#define REFLECTRACE_CONFIG_DIR "configs"
#endif
#ifndef REFLECTRACE_GOLDEN_PATH
#define REFLECTRACE_GOLDEN_PATH "data/golden.json"
#endif

namespace rt_test {

namespace rt = reflectrace;

inline std::vector<std::string> const& shipped_names() {
  static std::vector<std::string> const names = {
      "a1", "a1xa1", "a2", "b2", "g2", "affine_a1", "affine_a2", "triangle_23inf"};
  return names;
}

inline std::string config_path(std::string const& name) {
  return std::string(REFLECTRACE_CONFIG_DIR) + "/" + name + ".cfg";
}

inline rt::SystemConfig load_shipped(std::string const& name) {
  return rt::load_config(config_path(name));
}

inline rt::CoxeterSystem shipped_system(std::string const& name) {
  return load_shipped(name).system();
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen_);
  }
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
  }
  bool coin() { return uniform(0, 1) == 1; }

  rt::Rational rational(long num_bound = 9, long den_bound = 6) {
    return rt::make_rational(uniform(-num_bound, num_bound), uniform(1, den_bound));
  }

  // A random element of the field with a few nonzero coordinates.
  rt::QScalar scalar() {
    std::array<rt::Rational, rt::QScalar::kDegree> c;
    for (auto& x : c) {
      x = 0;
    }
    std::size_t const terms = index(4);
    for (std::size_t i = 0; i <= terms; ++i) {
      c[index(rt::QScalar::kDegree)] = rational();
    }
    return rt::QScalar::from_basis(c);
  }

  rt::Word word(std::size_t rank, std::size_t max_length) {
    rt::Word w(index(max_length + 1));
    for (int& s : w) {
      s = static_cast<int>(index(rank));
    }
    return w;
  }

 private:
  std::mt19937_64 gen_;
};

// Dihedral group of order 2m as pairs (k, e) for rotation^k reflection^e.
struct Dihedral {
  int m;
  using E = std::pair<int, int>;
  E mul(E a, E b) const {
    int const k = a.second ? a.first - b.first : a.first + b.first;
    return {((k % m) + m) % m, a.second ^ b.second};
  }
  std::vector<E> elements() const {
    std::vector<E> out;
    for (int e = 0; e < 2; ++e) {
      for (int k = 0; k < m; ++k) {
        out.push_back({k, e});
      }
    }
    return out;
  }
  // Sorted centralizer orders, one per conjugacy class.
  std::vector<std::size_t> class_centralizers() const {
    auto const all = elements();
    std::set<E> done;
    std::vector<std::size_t> out;
    for (auto w : all) {
      if (done.count(w)) {
        continue;
      }
      std::size_t c = 0;
      for (auto g : all) {
        c += mul(g, w) == mul(w, g);
        // g^-1 equals g for reflections and (m - k, 0) for rotations.
        E const gi = g.second ? g : E{(m - g.first) % m, 0};
        done.insert(mul(mul(g, w), gi));
      }
      out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

}  // namespace rt_test
