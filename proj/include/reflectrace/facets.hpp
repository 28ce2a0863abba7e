#pragma once

// Faces of the closed fundamental chamber are indexed by spherical subsets
// T of S (the face fixed by exactly W_T); an arbitrary facet of the
// chamber complex is a pair (T, g W_T) with g the minimal coset
// representative.

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "reflectrace/coxeter.hpp"

namespace reflectrace {

// Leading principal minors of B restricted to T (T in increasing order).
std::vector<QScalar> spherical_minors(CoxeterSystem const& sys, Subset t);
bool is_spherical(CoxeterSystem const& sys, Subset t);

// Spherical subsets ordered by inclusion. Inclusion T <= T' corresponds to
// the reverse of the face order: the face of type T' lies in the closure
// of the face of type T.
class FacePoset {
 public:
  FacePoset() = default;
  explicit FacePoset(std::vector<Subset> nodes);

  std::vector<Subset> const& nodes() const& { return nodes_; }
  // By value on temporaries, so range-for over spherical_subsets(sys).nodes() is safe.
  std::vector<Subset> nodes() && { return std::move(nodes_); }
  std::size_t size() const { return nodes_.size(); }
  std::optional<std::size_t> index_of(Subset t) const;
  bool contains(Subset t) const { return index_of(t).has_value(); }
  // Pairs (i, j) with nodes[i] a maximal proper subset of nodes[j].
  std::vector<std::pair<std::size_t, std::size_t>> const& covers() const {
    return covers_;
  }
  // Indices of all nodes containing nodes[i] (including i).
  std::vector<std::size_t> supersets(std::size_t i) const;

 private:
  std::vector<Subset> nodes_;
  std::unordered_map<std::uint32_t, std::size_t> index_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

FacePoset spherical_subsets(CoxeterSystem const& sys);

struct FacetInSpace {
  Subset type;
  Element coset_rep;

  friend bool operator==(FacetInSpace const& a, FacetInSpace const& b) {
    return a.type == b.type && a.coset_rep == b.coset_rep;
  }
};

struct FacetHash {
  std::size_t operator()(FacetInSpace const& f) const {
    return f.coset_rep.hash() * 31U + f.type.bits();
  }
};

// Minimal length representative of g W_T.
Element minimal_coset_rep(CoxeterSystem const& sys, Element const& g, Subset t);
FacetInSpace make_facet(CoxeterSystem const& sys, Element const& g, Subset t);
// w . (T, g W_T) = (T, w g W_T).
FacetInSpace translate(CoxeterSystem const& sys, Element const& w,
                       FacetInSpace const& f);

std::vector<FacetInSpace> facets_in_ball(CoxeterSystem const& sys,
                                         FacePoset const& poset,
                                         CayleyBall const& ball);
std::vector<FacetInSpace> facets_in_ball(CoxeterSystem const& sys,
                                         std::size_t radius,
                                         std::size_t cap = 1000000);

// Sum of the dual basis vectors over S \ T: a point in the relative
// interior of the face of type T of the closed chamber.
QVector generic_point(CoxeterSystem const& sys, Subset t);
// p is in the closure of the face of type T: dominant with p_s = 0 on T.
bool in_closed_face(QVector const& p, Subset t);
// Type of the face of the closed chamber containing a dominant point.
Subset face_type(QVector const& p);

// Facet J = (T_J, g) has I = face of type T_I in its closure.
bool facet_contains_face(CoxeterSystem const& sys, FacetInSpace const& j,
                         Subset face);

struct FixCheck {
  bool setwise;    // w (g W_T) = g W_T
  bool pointwise;  // w fixes g . omega_s for every s outside T
  bool member;     // g^-1 w g in W_T, by its reduced word
};
FixCheck facet_fix_check(CoxeterSystem const& sys, Element const& w,
                         FacetInSpace const& f);

}  // namespace reflectrace
