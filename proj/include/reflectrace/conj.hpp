#pragma once

// Conjugacy in the full group W: invariants, bounded search for
// conjugators, centralizers inside a ball and translation classes.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reflectrace/coxeter.hpp"

namespace reflectrace {

struct FoldedPoint {
  Subset face;   // type of the face of the closed chamber
  QVector point; // dominant, scaled to coordinate sum 1

  friend bool operator==(FoldedPoint const&, FoldedPoint const&) = default;
};

struct InvariantVector {
  std::optional<std::size_t> order;  // nullopt: above the order cap
  std::vector<QScalar> char_poly;    // c0 .. cn of det(xI - M)
  std::size_t fixed_dim = 0;
  std::vector<std::uint8_t> abelianization;
  // Folds of the two generators +-v of a one-dimensional fixed line of a
  // torsion element in an infinite group, those that fold, sorted.
  std::optional<std::vector<FoldedPoint>> folded_fixed_point;
  // Affine type with trivial linear part: least matrix in the orbit of
  // M - I under right multiplication by W.
  std::optional<QMatrix> translation_orbit;
};

inline constexpr std::size_t kDefaultOrderCap = 48;

InvariantVector invariants(CoxeterSystem const& sys, Element const& w,
                           std::size_t order_cap = kDefaultOrderCap);

// Name of the first field (in declaration order) where a and b differ.
std::optional<std::string> separating_invariant(InvariantVector const& a,
                                                InvariantVector const& b);

// The linear part of w is trivial: B (M - I) = 0.
bool is_translation(CoxeterSystem const& sys, Element const& w);

// Exponent N such that every torsion element of W satisfies w^N = e: the
// lcm of element orders over the finite standard parabolics.
unsigned long torsion_exponent(CoxeterSystem const& sys);
// Certified: w^N != e for N = torsion_exponent.
bool has_infinite_order(CoxeterSystem const& sys, Element const& w);

enum class VerdictKind { conjugate, not_conjugate, unknown };

struct ConjugacyVerdict {
  VerdictKind kind = VerdictKind::unknown;
  std::optional<Element> conjugator;  // g with g w g^-1 = w'
  std::string separating_invariant;   // for not_conjugate
  std::size_t radius = 0;             // for unknown

  std::string to_string(CoxeterSystem const& sys) const;
};

// Invariants first, then a search over g in the ball for g w = w' g. When
// the ball is the whole (finite) group a failed search is conclusive and
// cites "exhaustive_search".
ConjugacyVerdict conjugacy_decide(CoxeterSystem const& sys, Element const& w,
                                  Element const& w2, CayleyBall const& ball,
                                  std::size_t radius,
                                  std::size_t order_cap = kDefaultOrderCap);
ConjugacyVerdict conjugacy_decide(CoxeterSystem const& sys, Element const& w,
                                  Element const& w2, std::size_t radius,
                                  std::size_t order_cap = kDefaultOrderCap);

// Elements of the ball (up to length `radius`) commuting with w.
std::vector<Element> centralizer_ball(CoxeterSystem const& sys, Element const& w,
                                      CayleyBall const& ball, std::size_t radius);
std::vector<Element> centralizer_ball(CoxeterSystem const& sys, Element const& w,
                                      std::size_t radius);

// t, t^2, ..., t^n for the first nontrivial translation t found in BFS
// order. Throws coxeter_error unless the system is affine.
std::vector<Element> translation_witnesses(CoxeterSystem const& sys, std::size_t n);

}  // namespace reflectrace
