#pragma once

// Coxeter systems in their geometric (Tits) representation.
//
// W acts on the root space V with basis {alpha_s} by
//   s(v) = v - 2 B(alpha_s, v) alpha_s,
// and contragrediently on V*, where points are written in weight
// coordinates p_s = <p, alpha_s>. The closed fundamental chamber is
// {p : p_s >= 0 for all s}.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "reflectrace/scalars.hpp"

namespace reflectrace {

// Coxeter label for m_st = infinity.
inline constexpr int kInfinity = 0;

using Word = std::vector<int>;

class coxeter_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A subset of the generating set S, as a bitmask (rank <= 32).
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}
  static Subset of(std::vector<int> const& members);
  static Subset full(std::size_t rank);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int s) const { return (bits_ >> s) & 1U; }
  constexpr bool empty() const { return bits_ == 0; }
  std::size_t size() const { return static_cast<std::size_t>(__builtin_popcount(bits_)); }
  constexpr bool is_subset_of(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  Subset with(int s) const { return Subset(bits_ | (1U << s)); }
  Subset without(int s) const { return Subset(bits_ & ~(1U << s)); }
  std::vector<int> members() const;

  friend constexpr bool operator==(Subset a, Subset b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(Subset a, Subset b) { return a.bits_ != b.bits_; }

 private:
  std::uint32_t bits_ = 0;
};

// ShortLex order on subsets: by size, then by sorted member list.
bool shortlex_less(Subset a, Subset b);

class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  // `labels` is row-major rank x rank; kInfinity encodes infinity.
  CoxeterMatrix(std::size_t rank, std::vector<int> labels);

  std::size_t rank() const { return rank_; }
  int operator()(std::size_t s, std::size_t t) const { return labels_[s * rank_ + t]; }
  std::vector<int> const& labels() const { return labels_; }

  friend bool operator==(CoxeterMatrix const&, CoxeterMatrix const&) = default;

  std::string to_string() const;

 private:
  std::size_t rank_ = 0;
  std::vector<int> labels_;
};

std::string label_to_string(int m);

enum class TypeClass { finite, affine, indefinite };
std::string to_string(TypeClass t);

// A group element: its matrix on the root space (the canonical form) and a
// witness word whose product is that matrix.
class Element {
 public:
  Element() = default;
  Element(QMatrix matrix, Word word)
      : matrix_(std::move(matrix)), word_(std::move(word)) {}

  QMatrix const& matrix() const { return matrix_; }
  Word const& word() const { return word_; }
  bool is_identity() const { return matrix_.is_identity(); }

  friend bool operator==(Element const& a, Element const& b) {
    return a.matrix_ == b.matrix_;
  }
  friend bool operator!=(Element const& a, Element const& b) {
    return !(a == b);
  }
  std::size_t hash() const { return matrix_.hash(); }

 private:
  QMatrix matrix_;
  Word word_;
};

struct ElementHash {
  std::size_t operator()(Element const& e) const { return e.hash(); }
};

struct FoldResult {
  Element g;  // q = g . p
  QVector q;
};

// All elements of length <= radius, layer k holding the elements of length
// exactly k, in deterministic BFS order.
class CayleyBall {
 public:
  std::size_t radius() const { return layer_start_.empty() ? 0 : layer_start_.size() - 1; }
  std::size_t size() const { return elements_.size(); }
  std::vector<Element> const& elements() const { return elements_; }
  std::size_t layer_size(std::size_t k) const;
  std::size_t layer_begin(std::size_t k) const { return layer_start_.at(k); }
  std::optional<std::size_t> find(QMatrix const& m) const;
  // Elements of length <= r (a prefix of elements()).
  std::size_t prefix_size(std::size_t r) const;

 private:
  friend class CoxeterSystem;
  std::vector<Element> elements_;
  std::vector<std::size_t> layer_start_;
  std::unordered_map<QMatrix, std::size_t, QMatrixHash> index_;
};

class ball_cap_exceeded : public coxeter_error {
 public:
  using coxeter_error::coxeter_error;
};

class CoxeterSystem {
 public:
  // Throws coxeter_error naming any unsupported label.
  explicit CoxeterSystem(CoxeterMatrix m, std::vector<std::string> names = {});

  std::size_t rank() const { return matrix_.rank(); }
  CoxeterMatrix const& matrix() const { return matrix_; }
  std::vector<std::string> const& generator_names() const { return names_; }
  QMatrix const& bilinear_form() const { return form_; }
  // 2 B(alpha_s, alpha_t).
  QScalar const& twice_form(int s, int t) const { return form2_(s, t); }
  QMatrix const& reflection(int s) const { return reflections_[s]; }
  TypeClass type_class() const { return type_; }

  Element identity() const;
  Element generator(int s) const;
  Element from_word(Word const& w) const;
  Element multiply(Element const& a, Element const& b) const;
  Element multiply_generator(Element const& a, int s) const;  // a * s
  Element inverse(Element const& a) const;
  Element power(Element const& a, unsigned long n) const;
  Element conjugate(Element const& u, Element const& w) const;  // u w u^-1
  bool commute(Element const& a, Element const& b) const;

  // Right descent test: w(alpha_s) is a negative root.
  bool is_right_descent(Element const& w, int s) const;
  Subset right_descents(Element const& w) const;
  Word canonical_word(Element const& w) const;
  std::size_t length(Element const& w) const;
  // Compare by (length, canonical word lexicographic).
  bool shortlex_less(Element const& a, Element const& b) const;

  // Contragredient action on weight coordinates.
  QVector act(Element const& g, QVector const& p) const;
  QVector act_generator(int s, QVector const& p) const;
  FoldResult fold(QVector const& p, std::size_t step_cap = 100000) const;

  CayleyBall ball(std::size_t radius, std::size_t cap = 1000000) const;
  // Rebuild a ball from stored witness words, layer by layer. Each word is
  // re-multiplied and must have length equal to its layer; throws
  // coxeter_error on any inconsistency.
  CayleyBall ball_from_layers(std::vector<std::vector<Word>> const& layers) const;
  // Elements of the subgroup generated by `gens` (all spherical) by closure.
  std::vector<Element> enumerate_subgroup(Subset gens, std::size_t cap = 1000000) const;

  // Connected components of the graph on S with edges for odd m_st.
  std::vector<std::size_t> odd_component_of() const { return odd_component_; }
  std::size_t odd_component_count() const { return odd_count_; }
  std::vector<std::uint8_t> abelianization_class(Element const& w) const;

  std::string subset_to_string(Subset t) const;
  std::string word_to_string(Word const& w) const;
  std::optional<Subset> parse_subset(std::string const& text) const;

 private:
  CoxeterMatrix matrix_;
  std::vector<std::string> names_;
  QMatrix form_;
  QMatrix form2_;
  std::vector<QMatrix> reflections_;
  TypeClass type_ = TypeClass::indefinite;
  std::vector<std::size_t> odd_component_;
  std::size_t odd_count_ = 0;
};

// -2 cos(pi/m), the value of 2 B(alpha_s, alpha_t); -2 for infinity.
QScalar twice_cosine_term(int m);

// Classification by definiteness of the form: positive definite -> finite,
// positive semidefinite singular -> affine, otherwise indefinite.
TypeClass classify_form(QMatrix const& form);
bool is_positive_definite(QMatrix const& form);

inline constexpr char const* kVersion = "0.1.0";

}  // namespace reflectrace
