#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "reflectrace/coxeter.hpp"

namespace reflectrace {

// The finite standard parabolic subgroup W_T, fully enumerated. Elements are
// stored in ShortLex order of their canonical words; index 0 is the
// identity. Group operations are by table lookup.
class FiniteParabolic {
 public:
  FiniteParabolic() = default;
  // Throws coxeter_error if T is not spherical.
  FiniteParabolic(CoxeterSystem const& sys, Subset t);

  Subset type() const { return type_; }
  std::size_t order() const { return elements_.size(); }
  std::vector<Element> const& elements() const { return elements_; }
  Element const& element(std::size_t i) const { return elements_.at(i); }
  Word const& canonical_word(std::size_t i) const { return words_.at(i); }

  std::optional<std::size_t> index_of(QMatrix const& m) const;
  std::optional<std::size_t> index_of(Element const& w) const {
    return index_of(w.matrix());
  }
  bool contains(Element const& w) const { return index_of(w).has_value(); }

  std::size_t multiply(std::size_t a, std::size_t b) const {
    return product_[a * order() + b];
  }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t conjugate(std::size_t u, std::size_t w) const {
    return multiply(multiply(u, w), inverse(u));
  }
  // Order of element i.
  std::size_t element_order(std::size_t i) const;

 private:
  Subset type_;
  std::vector<Element> elements_;
  std::vector<Word> words_;
  std::unordered_map<QMatrix, std::size_t, QMatrixHash> index_;
  std::vector<std::size_t> product_;
  std::vector<std::size_t> inverse_;
};

FiniteParabolic enumerate_parabolic(CoxeterSystem const& sys, Subset t);

// Indices (into P) of elements commuting with w. Throws if w is not in P.
std::vector<std::size_t> centralizer_in_parabolic(FiniteParabolic const& p,
                                                  Element const& w);
// Conjugacy classes as sorted index lists; classes ordered by their
// ShortLex-least member.
std::vector<std::vector<std::size_t>> conjugacy_classes(FiniteParabolic const& p);

// Tr(W_T) ~ W_T / W_T: one summand bullet / C(w) per conjugacy class.
struct TraceSummand {
  std::size_t representative;
  std::vector<std::size_t> class_members;
  std::vector<std::size_t> centralizer;
};
using TraceDecomposition = std::vector<TraceSummand>;

TraceDecomposition trace_decomposition(FiniteParabolic const& p);

}  // namespace reflectrace
