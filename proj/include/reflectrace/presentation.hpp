#pragma once

// Finitely presented groups: Tietze simplification, coset enumeration,
// abelian invariants and a conservative recognizer.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "reflectrace/coxeter.hpp"

namespace reflectrace {

// Letters are +(g+1) for generator g and -(g+1) for its inverse.
using Relator = std::vector<int>;

inline int letter(std::size_t g, bool inverse = false) {
  int const l = static_cast<int>(g) + 1;
  return inverse ? -l : l;
}
inline std::size_t generator_of(int l) {
  return static_cast<std::size_t>(l < 0 ? -l : l) - 1;
}

struct Presentation {
  std::size_t generator_count = 0;
  std::vector<Relator> relators;
};

Relator free_reduce(Relator const& w);
Relator cyclic_reduce(Relator const& w);
Relator inverse_word(Relator const& w);
// Least among the rotations of w and of w^-1 (w cyclically reduced), with
// letters ordered a < a^-1 < b < b^-1 < ...
Relator cyclic_normal_form(Relator const& w);
// Cyclically reduce, drop trivial relators, dedupe up to rotation and
// inversion, sort.
Presentation normalize(Presentation const& p);
// Generators print as a, b, c, ...; runs as powers, e.g. "ab^-1a^2".
std::string relator_to_string(Relator const& r);
std::string to_string(Presentation const& p);

// Exponent-sum matrix in Smith normal form: the abelianization is
// Z/d_1 + ... + Z/d_k + Z^r; returned as d_1 | ... | d_k (all > 1) followed
// by r zeros.
std::vector<long> abelian_invariants(Presentation const& p);

struct TietzeResult {
  Presentation presentation;
  // kept[i] is the original index of simplified generator i.
  std::vector<std::size_t> kept;
};

// Repeats to a fixed point: exponent reduction against pure-power
// relators, elimination of a generator occurring once in some relator
// (shortest relator first, then highest generator index), cyclic
// reduction and duplicate removal. Generators are only ever removed.
TietzeResult tietze_simplify(Presentation const& p,
                             std::size_t max_substitution_length = 64);

// Todd-Coxeter (HLT with coincidence processing) over the trivial
// subgroup. Returns the group order, or nullopt if more than `coset_cap`
// cosets were defined.
std::optional<std::size_t> coset_enumerate(Presentation const& p,
                                           std::size_t coset_cap);

enum class GroupKind {
  trivial,
  integers,
  cyclic,
  direct_product,
  finite,
  coxeter,
  unknown
};

struct Recognition {
  GroupKind kind = GroupKind::unknown;
  // Group order when finite and certified; 0 otherwise.
  std::size_t order = 0;
  // Cyclic factors for direct_product (0 stands for Z), or {n} for cyclic.
  std::vector<long> factors;
  std::optional<CoxeterMatrix> coxeter;
  std::vector<long> abelian_invariants;
  TietzeResult simplified;

  bool finite() const { return order > 0; }
  std::string to_string() const;
};

struct RecognizeOptions {
  std::size_t coset_cap = 50000;
};

// Layered: syntactic patterns (Coxeter presentations, Z/2 x Z), bounded
// coset enumeration, abelian invariants as a consistency filter. Returns
// unknown rather than guessing.
Recognition recognize(Presentation const& p, RecognizeOptions const& opts = {});

// Coxeter presentation <S | s^2, (st)^m_st for finite m_st>.
Presentation coxeter_presentation(CoxeterMatrix const& m);
// Equal up to a permutation of generators.
bool coxeter_matrices_isomorphic(CoxeterMatrix const& a, CoxeterMatrix const& b);

}  // namespace reflectrace
