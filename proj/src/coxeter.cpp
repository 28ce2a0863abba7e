#include "reflectrace/coxeter.hpp"

#include <algorithm>
#include <sstream>

#include "reflectrace/union_find.hpp"

namespace reflectrace {

// ------------------------------------------------------------------ Subset

Subset Subset::of(std::vector<int> const& members) {
  std::uint32_t bits = 0;
  for (int s : members) {
    bits |= 1U << s;
  }
  return Subset(bits);
}

Subset Subset::full(std::size_t rank) {
  return Subset(rank >= 32 ? ~0U : ((1U << rank) - 1U));
}

std::vector<int> Subset::members() const {
  std::vector<int> out;
  for (int s = 0; s < 32; ++s) {
    if (contains(s)) {
      out.push_back(s);
    }
  }
  return out;
}

bool shortlex_less(Subset a, Subset b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return a.members() < b.members();
}

// ----------------------------------------------------------- CoxeterMatrix

CoxeterMatrix::CoxeterMatrix(std::size_t rank, std::vector<int> labels)
    : rank_(rank), labels_(std::move(labels)) {
  if (rank_ == 0) {
    throw coxeter_error("Coxeter matrix must have positive rank");
  }
  if (rank_ > 32) {
    throw coxeter_error("Coxeter matrix rank above 32 is not supported");
  }
  if (labels_.size() != rank_ * rank_) {
    throw coxeter_error("Coxeter matrix must be square");
  }
  for (std::size_t s = 0; s < rank_; ++s) {
    for (std::size_t t = 0; t < rank_; ++t) {
      int const m = (*this)(s, t);
      if (m != (*this)(t, s)) {
        throw coxeter_error("Coxeter matrix is not symmetric at (" +
                            std::to_string(s) + "," + std::to_string(t) + ")");
      }
      if (s == t && m != 1) {
        throw coxeter_error("Coxeter matrix diagonal entry must be 1");
      }
      if (s != t && m != kInfinity && m < 2) {
        throw coxeter_error("off-diagonal Coxeter label " + std::to_string(m) +
                            " must be >= 2 or inf");
      }
    }
  }
}

std::string label_to_string(int m) {
  return m == kInfinity ? "inf" : std::to_string(m);
}

std::string CoxeterMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t s = 0; s < rank_; ++s) {
    os << (s ? "; " : "");
    for (std::size_t t = 0; t < rank_; ++t) {
      os << (t ? " " : "") << label_to_string((*this)(s, t));
    }
  }
  return os.str();
}

std::string to_string(TypeClass t) {
  switch (t) {
    case TypeClass::finite:
      return "finite";
    case TypeClass::affine:
      return "affine";
    case TypeClass::indefinite:
      return "indefinite";
  }
  return "indefinite";
}

// -------------------------------------------------------------- CayleyBall

std::size_t CayleyBall::layer_size(std::size_t k) const {
  std::size_t const end =
      k + 1 < layer_start_.size() ? layer_start_[k + 1] : elements_.size();
  return end - layer_start_.at(k);
}

std::optional<std::size_t> CayleyBall::find(QMatrix const& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::size_t CayleyBall::prefix_size(std::size_t r) const {
  if (r + 1 >= layer_start_.size()) {
    return elements_.size();
  }
  return layer_start_[r + 1];
}

// ------------------------------------------------------------ construction

QScalar twice_cosine_term(int m) {
  switch (m) {
    case kInfinity:
      return QScalar(-2);
    case 2:
      return QScalar(0);
    case 3:
      return QScalar(-1);
    case 4:
      return -QScalar::sqrt_of(2);
    case 5:
      // 2 cos(pi/5) = (1 + sqrt5) / 2
      return -(QScalar(1) + QScalar::sqrt_of(5)) * QScalar(make_rational(1, 2));
    case 6:
      return -QScalar::sqrt_of(3);
    default:
      throw coxeter_error("unsupported Coxeter label " + label_to_string(m) +
                          " (supported: 2,3,4,5,6,inf)");
  }
}

bool is_positive_definite(QMatrix const& form) {
  for (auto const& minor : leading_principal_minors(form)) {
    if (minor.sign() != Sign::positive) {
      return false;
    }
  }
  return true;
}

TypeClass classify_form(QMatrix const& form) {
  if (is_positive_definite(form)) {
    return TypeClass::finite;
  }
  std::size_t const n = form.dim();
  for (std::uint32_t bits = 1; bits < (1U << n); ++bits) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if ((bits >> i) & 1U) {
        idx.push_back(i);
      }
    }
    if (determinant(principal_submatrix(form, idx)).sign() == Sign::negative) {
      return TypeClass::indefinite;
    }
  }
  return TypeClass::affine;
}

CoxeterSystem::CoxeterSystem(CoxeterMatrix m, std::vector<std::string> names)
    : matrix_(std::move(m)), names_(std::move(names)) {
  std::size_t const n = matrix_.rank();
  if (names_.empty()) {
    for (std::size_t s = 0; s < n; ++s) {
      names_.push_back("s" + std::to_string(s));
    }
  }
  if (names_.size() != n) {
    throw coxeter_error("generator name count does not match rank");
  }
  form_ = QMatrix(n);
  form2_ = QMatrix(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      form2_(s, t) = s == t ? QScalar(2) : twice_cosine_term(matrix_(s, t));
      form_(s, t) = form2_(s, t) * QScalar(make_rational(1, 2));
    }
  }
  for (std::size_t s = 0; s < n; ++s) {
    QMatrix r = QMatrix::identity(n);
    for (std::size_t t = 0; t < n; ++t) {
      r(s, t) -= form2_(s, t);
    }
    reflections_.push_back(std::move(r));
  }
  type_ = classify_form(form_);

  UnionFind uf(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      int const label = matrix_(s, t);
      if (label != kInfinity && label % 2 == 1) {
        uf.unite(s, t);
      }
    }
  }
  std::vector<std::size_t> root_index(n, n);
  odd_component_.assign(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t const r = uf.find(s);
    if (root_index[r] == n) {
      root_index[r] = odd_count_++;
    }
    odd_component_[s] = root_index[r];
  }
}

// ------------------------------------------------------------- elements

Element CoxeterSystem::identity() const {
  return Element(QMatrix::identity(rank()), {});
}

Element CoxeterSystem::generator(int s) const {
  if (s < 0 || static_cast<std::size_t>(s) >= rank()) {
    throw coxeter_error("generator index out of range: " + std::to_string(s));
  }
  return Element(reflections_[s], {s});
}

Element CoxeterSystem::multiply_generator(Element const& a, int s) const {
  std::size_t const n = rank();
  QMatrix m = a.matrix();
  for (std::size_t i = 0; i < n; ++i) {
    QScalar const ais = a.matrix()(i, s);
    if (ais.is_zero()) {
      continue;
    }
    for (std::size_t u = 0; u < n; ++u) {
      if (!form2_(s, u).is_zero()) {
        m(i, u) -= ais * form2_(s, u);
      }
    }
  }
  Word w = a.word();
  w.push_back(s);
  return Element(std::move(m), std::move(w));
}

Element CoxeterSystem::from_word(Word const& w) const {
  Element e = identity();
  for (int s : w) {
    if (s < 0 || static_cast<std::size_t>(s) >= rank()) {
      throw coxeter_error("generator index out of range: " + std::to_string(s));
    }
    e = multiply_generator(e, s);
  }
  return e;
}

Element CoxeterSystem::multiply(Element const& a, Element const& b) const {
  Word w = a.word();
  w.insert(w.end(), b.word().begin(), b.word().end());
  return Element(a.matrix() * b.matrix(), std::move(w));
}

Element CoxeterSystem::inverse(Element const& a) const {
  Word w(a.word().rbegin(), a.word().rend());
  return from_word(w);
}

Element CoxeterSystem::power(Element const& a, unsigned long n) const {
  Element result = identity();
  Element base = a;
  while (n > 0) {
    if (n & 1UL) {
      result = multiply(result, base);
    }
    n >>= 1;
    if (n > 0) {
      base = multiply(base, base);
    }
  }
  return result;
}

Element CoxeterSystem::conjugate(Element const& u, Element const& w) const {
  return multiply(multiply(u, w), inverse(u));
}

bool CoxeterSystem::commute(Element const& a, Element const& b) const {
  return a.matrix() * b.matrix() == b.matrix() * a.matrix();
}

bool CoxeterSystem::is_right_descent(Element const& w, int s) const {
  // The column w(alpha_s) is a root: all coordinates share one sign.
  Sign seen = Sign::zero;
  for (std::size_t r = 0; r < rank(); ++r) {
    Sign const c = w.matrix()(r, s).sign();
    if (c == Sign::zero) {
      continue;
    }
    if (seen != Sign::zero && c != seen) {
      throw coxeter_error("column is not a root: mixed coordinate signs");
    }
    seen = c;
  }
  return seen == Sign::negative;
}

Subset CoxeterSystem::right_descents(Element const& w) const {
  Subset d;
  for (std::size_t s = 0; s < rank(); ++s) {
    if (is_right_descent(w, static_cast<int>(s))) {
      d = d.with(static_cast<int>(s));
    }
  }
  return d;
}

Word CoxeterSystem::canonical_word(Element const& w) const {
  Word reversed;
  Element cur = w;
  for (;;) {
    int found = -1;
    for (std::size_t s = 0; s < rank(); ++s) {
      if (is_right_descent(cur, static_cast<int>(s))) {
        found = static_cast<int>(s);
        break;
      }
    }
    if (found < 0) {
      break;
    }
    cur = multiply_generator(cur, found);
    reversed.push_back(found);
  }
  return Word(reversed.rbegin(), reversed.rend());
}

std::size_t CoxeterSystem::length(Element const& w) const {
  return canonical_word(w).size();
}

bool CoxeterSystem::shortlex_less(Element const& a, Element const& b) const {
  Word const wa = canonical_word(a);
  Word const wb = canonical_word(b);
  if (wa.size() != wb.size()) {
    return wa.size() < wb.size();
  }
  return wa < wb;
}

// ------------------------------------------------------------- geometry

QVector CoxeterSystem::act_generator(int s, QVector const& p) const {
  QVector q = p;
  QScalar const ps = p[s];
  if (ps.is_zero()) {
    return q;
  }
  for (std::size_t t = 0; t < rank(); ++t) {
    if (!form2_(s, t).is_zero()) {
      q[t] -= form2_(s, t) * ps;
    }
  }
  return q;
}

QVector CoxeterSystem::act(Element const& g, QVector const& p) const {
  QVector q = p;
  for (auto it = g.word().rbegin(); it != g.word().rend(); ++it) {
    q = act_generator(*it, q);
  }
  return q;
}

FoldResult CoxeterSystem::fold(QVector const& p, std::size_t step_cap) const {
  QVector q = p;
  Word reversed;
  for (std::size_t step = 0;; ++step) {
    int negative = -1;
    for (std::size_t s = 0; s < rank(); ++s) {
      if (q[s].sign() == Sign::negative) {
        negative = static_cast<int>(s);
        break;
      }
    }
    if (negative < 0) {
      break;
    }
    if (step >= step_cap) {
      throw coxeter_error("fold: point outside Tits cone or cap too low");
    }
    q = act_generator(negative, q);
    reversed.push_back(negative);
  }
  // q = s_k ... s_1 p where s_1 was applied first.
  Word w(reversed.rbegin(), reversed.rend());
  return FoldResult{from_word(w), std::move(q)};
}

CayleyBall CoxeterSystem::ball(std::size_t radius, std::size_t cap) const {
  CayleyBall b;
  b.elements_.push_back(identity());
  b.index_.emplace(b.elements_.back().matrix(), 0);
  b.layer_start_.push_back(0);
  for (std::size_t k = 0; k < radius; ++k) {
    std::size_t const begin = b.layer_start_.back();
    std::size_t const end = b.elements_.size();
    b.layer_start_.push_back(end);
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t s = 0; s < rank(); ++s) {
        if (is_right_descent(b.elements_[i], static_cast<int>(s))) {
          continue;
        }
        Element next = multiply_generator(b.elements_[i], static_cast<int>(s));
        if (b.index_.count(next.matrix())) {
          continue;
        }
        if (b.elements_.size() >= cap) {
          throw ball_cap_exceeded("ball: element cap " + std::to_string(cap) +
                                  " exceeded");
        }
        b.index_.emplace(next.matrix(), b.elements_.size());
        b.elements_.push_back(std::move(next));
      }
    }
  }
  return b;
}

CayleyBall CoxeterSystem::ball_from_layers(
    std::vector<std::vector<Word>> const& layers) const {
  CayleyBall b;
  for (std::size_t k = 0; k < layers.size(); ++k) {
    b.layer_start_.push_back(b.elements_.size());
    for (Word const& w : layers[k]) {
      if (w.size() != k) {
        throw coxeter_error("ball layer " + std::to_string(k) +
                            " holds a word of length " + std::to_string(w.size()));
      }
      Element e = from_word(w);
      if (length(e) != k) {
        throw coxeter_error("ball layer " + std::to_string(k) +
                            " holds a non-reduced word");
      }
      if (!b.index_.emplace(e.matrix(), b.elements_.size()).second) {
        throw coxeter_error("ball holds a duplicate element");
      }
      b.elements_.push_back(std::move(e));
    }
  }
  if (layers.empty() || layers[0].size() != 1) {
    throw coxeter_error("ball must start with the identity layer");
  }
  return b;
}

std::vector<Element> CoxeterSystem::enumerate_subgroup(Subset gens,
                                                       std::size_t cap) const {
  std::vector<Element> out{identity()};
  std::unordered_map<QMatrix, std::size_t, QMatrixHash> seen;
  seen.emplace(out[0].matrix(), 0);
  std::size_t begin = 0;
  while (begin < out.size()) {
    std::size_t const end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (int s : gens.members()) {
        if (is_right_descent(out[i], s)) {
          continue;
        }
        Element next = multiply_generator(out[i], s);
        if (seen.count(next.matrix())) {
          continue;
        }
        if (out.size() >= cap) {
          throw ball_cap_exceeded("subgroup enumeration cap exceeded");
        }
        seen.emplace(next.matrix(), out.size());
        out.push_back(std::move(next));
      }
    }
    begin = end;
  }
  return out;
}

std::vector<std::uint8_t> CoxeterSystem::abelianization_class(
    Element const& w) const {
  std::vector<std::uint8_t> v(odd_count_, 0);
  for (int s : w.word()) {
    v[odd_component_[s]] ^= 1U;
  }
  return v;
}

// -------------------------------------------------------------- strings

std::string CoxeterSystem::subset_to_string(Subset t) const {
  std::string out = "{";
  bool first = true;
  for (int s : t.members()) {
    out += (first ? "" : ",") + names_[s];
    first = false;
  }
  return out + "}";
}

std::string CoxeterSystem::word_to_string(Word const& w) const {
  if (w.empty()) {
    return "e";
  }
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    out += (i ? " " : "") + names_[w[i]];
  }
  return out;
}

std::optional<Subset> CoxeterSystem::parse_subset(std::string const& text) const {
  std::string cleaned;
  for (char c : text) {
    cleaned += (c == ',' || c == '{' || c == '}') ? ' ' : c;
  }
  std::istringstream is(cleaned);
  std::string token;
  Subset t;
  while (is >> token) {
    auto it = std::find(names_.begin(), names_.end(), token);
    if (it == names_.end()) {
      return std::nullopt;
    }
    t = t.with(static_cast<int>(it - names_.begin()));
  }
  return t;
}

}  // namespace reflectrace
