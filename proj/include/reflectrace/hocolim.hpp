#pragma once

// The Grothendieck construction of T -> W_T / W_T over the spherical
// subsets, its connected components and a presentation of the fundamental
// group of each component.
//
// Objects are pairs (T, w) with w in W_T. A morphism (T <= T', u) with
// u in W_T' goes from (T, w) to (T', u w u^-1); (T' <= T'', u') o (T <= T', u)
// = (T <= T'', u' u).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "reflectrace/coxeter.hpp"
#include "reflectrace/facets.hpp"
#include "reflectrace/parabolics.hpp"
#include "reflectrace/presentation.hpp"

namespace reflectrace {

struct GCObject {
  std::size_t type;     // index into the poset
  std::size_t element;  // index into that parabolic
};

struct GCMorphism {
  std::size_t source;      // object ids
  std::size_t target;
  std::size_t conjugator;  // index into the parabolic of the target type
  bool is_identity() const { return source == target && conjugator == 0; }
};

// second o first = composite.
struct GCTriangle {
  std::size_t first;
  std::size_t second;
  std::size_t composite;
};

class GCCategory {
 public:
  explicit GCCategory(CoxeterSystem const& sys);

  CoxeterSystem const& system() const { return *sys_; }
  FacePoset const& poset() const { return poset_; }
  FiniteParabolic const& parabolic(std::size_t type) const { return parabolics_.at(type); }

  std::vector<GCObject> const& objects() const { return objects_; }
  std::vector<GCMorphism> const& morphisms() const { return morphisms_; }
  std::vector<GCTriangle> const& triangles() const { return triangles_; }

  Subset type_of(std::size_t object) const { return poset_.nodes()[objects_[object].type]; }
  Element const& element_of(std::size_t object) const;
  Element const& conjugator_of(std::size_t morphism) const;
  std::size_t object_id(std::size_t type, std::size_t element) const {
    return object_offset_[type] + element;
  }
  std::string object_to_string(std::size_t object) const;

 private:
  std::size_t morphism_id(std::size_t from_type, std::size_t to_type,
                          std::size_t element, std::size_t conjugator) const;
  // Index in W_to of element i of W_from (from <= to).
  std::size_t embed(std::size_t from_type, std::size_t to_type, std::size_t i) const;

  CoxeterSystem const* sys_;
  FacePoset poset_;
  std::vector<FiniteParabolic> parabolics_;
  std::vector<std::size_t> object_offset_;
  std::vector<GCObject> objects_;
  std::vector<GCMorphism> morphisms_;
  std::vector<GCTriangle> triangles_;
  // Keyed by from_type * poset size + to_type; empty when not comparable.
  std::vector<std::size_t> pair_offset_;
  std::vector<std::vector<std::size_t>> embedding_;
};

GCCategory build_grothendieck(CoxeterSystem const& sys);

struct Component {
  std::size_t base;                  // ShortLex-least object
  std::vector<std::size_t> objects;  // ascending ids, base first
  // certificates[i] carries the base element to objects[i]:
  // U w_base U^-1 = w_object, checked exactly on construction.
  std::vector<Element> certificates;
};

// Components ordered by base object. Throws coxeter_error if a path
// certificate fails to verify.
std::vector<Component> components(GCCategory const& cat);

struct Loop {
  std::size_t morphism;
  Element label;  // image in C_W(w_base)
};

struct ComponentPresentation {
  std::size_t base;
  std::vector<Loop> generators;
  Presentation presentation;
  std::vector<std::size_t> spanning_tree;  // morphism ids
};

ComponentPresentation pi1_presentation(GCCategory const& cat, Component const& comp);

// phi applied to a word in the presentation's generators.
Element evaluate(CoxeterSystem const& sys, std::vector<Element> const& labels,
                 Relator const& word);

// Proof that the presented group is W itself: the surviving generators of
// the simplified presentation are labelled by the simple reflections
// bijectively, every relator maps to the identity and each rank <= 2
// spherical sub-presentation has order |W_T| by coset enumeration.
bool coxeter_certificate(GCCategory const& cat, ComponentPresentation const& cp,
                         TietzeResult const& simplified, std::size_t coset_cap);

struct ComponentRecognition {
  Recognition recognition;
  bool certified_coxeter = false;  // recognition came from coxeter_certificate
};

ComponentRecognition recognize_component(GCCategory const& cat,
                                         ComponentPresentation const& cp,
                                         RecognizeOptions const& opts = {});

}  // namespace reflectrace
