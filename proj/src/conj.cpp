#include "reflectrace/conj.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "reflectrace/facets.hpp"
#include "reflectrace/parabolics.hpp"

namespace reflectrace {

namespace {

constexpr std::size_t kFoldCap = 4096;

// Matrix of the contragredient action on weight coordinates.
QMatrix dual_matrix(CoxeterSystem const& sys, Element const& g) {
  std::size_t const n = sys.rank();
  QMatrix a(n);
  for (std::size_t c = 0; c < n; ++c) {
    QVector e(n);
    e[c] = 1;
    QVector const col = sys.act(g, e);
    for (std::size_t r = 0; r < n; ++r) {
      a(r, c) = col[r];
    }
  }
  return a;
}

std::optional<FoldedPoint> fold_ray(CoxeterSystem const& sys, QVector const& v) {
  try {
    FoldResult const f = sys.fold(v, kFoldCap);
    QScalar sum;
    for (auto const& x : f.q) {
      sum += x;
    }
    if (sum.sign() != Sign::positive) {
      return std::nullopt;
    }
    QScalar const inv = sum.inverse();
    QVector p = f.q;
    for (auto& x : p) {
      x = x * inv;
    }
    return FoldedPoint{face_type(p), std::move(p)};
  } catch (coxeter_error const&) {
    return std::nullopt;
  }
}

bool point_less(FoldedPoint const& a, FoldedPoint const& b) {
  if (a.face != b.face) {
    return a.face.bits() < b.face.bits();
  }
  for (std::size_t i = 0; i < a.point.size(); ++i) {
    int const c = compare(a.point[i], b.point[i]);
    if (c != 0) {
      return c < 0;
    }
  }
  return false;
}

QMatrix translation_part(CoxeterSystem const& sys, Element const& w) {
  return w.matrix() - QMatrix::identity(sys.rank());
}

}  // namespace

bool is_translation(CoxeterSystem const& sys, Element const& w) {
  return (sys.bilinear_form() * translation_part(sys, w)).is_zero();
}

InvariantVector invariants(CoxeterSystem const& sys, Element const& w,
                           std::size_t order_cap) {
  InvariantVector iv;
  QMatrix p = w.matrix();
  for (std::size_t k = 1; k <= order_cap; ++k) {
    if (p.is_identity()) {
      iv.order = k;
      break;
    }
    p = p * w.matrix();
  }
  iv.char_poly = characteristic_polynomial(w.matrix());
  iv.fixed_dim = fixed_space(w.matrix()).size();
  iv.abelianization = sys.abelianization_class(w);

  if (iv.order && iv.fixed_dim == 1 && sys.type_class() != TypeClass::finite) {
    auto line = fixed_space(dual_matrix(sys, w));
    if (line.size() == 1) {
      std::vector<FoldedPoint> found;
      QVector neg = line[0];
      for (auto& x : neg) {
        x = -x;
      }
      for (QVector const& v : {line[0], neg}) {
        if (auto f = fold_ray(sys, v)) {
          found.push_back(std::move(*f));
        }
      }
      if (!found.empty()) {
        std::sort(found.begin(), found.end(), point_less);
        found.erase(std::unique(found.begin(), found.end()), found.end());
        iv.folded_fixed_point = std::move(found);
      }
    }
  }

  if (sys.type_class() == TypeClass::affine && is_translation(sys, w)) {
    QMatrix const d = translation_part(sys, w);
    std::unordered_set<QMatrix, QMatrixHash> seen{d};
    std::vector<QMatrix> queue{d};
    QMatrix best = d;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (std::size_t s = 0; s < sys.rank(); ++s) {
        QMatrix next = queue[i] * sys.reflection(static_cast<int>(s));
        if (seen.insert(next).second) {
          if (compare(next, best) < 0) {
            best = next;
          }
          queue.push_back(std::move(next));
        }
      }
    }
    iv.translation_orbit = std::move(best);
  }
  return iv;
}

std::optional<std::string> separating_invariant(InvariantVector const& a,
                                                InvariantVector const& b) {
  if (a.order != b.order) {
    return "order";
  }
  if (a.char_poly != b.char_poly) {
    return "char_poly";
  }
  if (a.fixed_dim != b.fixed_dim) {
    return "fixed_dim";
  }
  if (a.abelianization != b.abelianization) {
    return "abelianization";
  }
  if (a.folded_fixed_point != b.folded_fixed_point) {
    return "folded_fixed_point";
  }
  if (a.translation_orbit != b.translation_orbit) {
    return "translation_orbit";
  }
  return std::nullopt;
}

unsigned long torsion_exponent(CoxeterSystem const& sys) {
  unsigned long n = 1;
  FacePoset const poset = spherical_subsets(sys);
  for (Subset t : poset.nodes()) {
    FiniteParabolic const p(sys, t);
    for (std::size_t i = 0; i < p.order(); ++i) {
      n = std::lcm(n, static_cast<unsigned long>(p.element_order(i)));
    }
  }
  return n;
}

bool has_infinite_order(CoxeterSystem const& sys, Element const& w) {
  QMatrix p = QMatrix::identity(sys.rank());
  QMatrix base = w.matrix();
  for (unsigned long n = torsion_exponent(sys); n > 0; n >>= 1) {
    if (n & 1UL) {
      p = p * base;
    }
    base = base * base;
  }
  return !p.is_identity();
}

std::string ConjugacyVerdict::to_string(CoxeterSystem const& sys) const {
  switch (kind) {
    case VerdictKind::conjugate:
      return "Conjugate(" + sys.word_to_string(conjugator->word()) + ")";
    case VerdictKind::not_conjugate:
      return "NotConjugate(" + separating_invariant + ")";
    case VerdictKind::unknown:
      return "Unknown(" + std::to_string(radius) + ")";
  }
  return "Unknown";
}

ConjugacyVerdict conjugacy_decide(CoxeterSystem const& sys, Element const& w,
                                  Element const& w2, CayleyBall const& ball,
                                  std::size_t radius, std::size_t order_cap) {
  ConjugacyVerdict v;
  if (auto name = separating_invariant(invariants(sys, w, order_cap),
                                       invariants(sys, w2, order_cap))) {
    v.kind = VerdictKind::not_conjugate;
    v.separating_invariant = *name;
    return v;
  }
  std::size_t const r = std::min(radius, ball.radius());
  std::size_t const limit = ball.prefix_size(r);
  for (std::size_t i = 0; i < limit; ++i) {
    Element const& g = ball.elements()[i];
    if (g.matrix() * w.matrix() == w2.matrix() * g.matrix()) {
      if (sys.conjugate(g, w) != w2) {
        throw coxeter_error("conjugator failed exact verification");
      }
      v.kind = VerdictKind::conjugate;
      v.conjugator = Element(g.matrix(), sys.canonical_word(g));
      return v;
    }
  }
  bool whole_group = false;
  for (std::size_t k = 1; k <= r; ++k) {
    if (ball.layer_size(k) == 0) {
      whole_group = true;
    }
  }
  if (whole_group) {
    v.kind = VerdictKind::not_conjugate;
    v.separating_invariant = "exhaustive_search";
    return v;
  }
  v.kind = VerdictKind::unknown;
  v.radius = radius;
  return v;
}

ConjugacyVerdict conjugacy_decide(CoxeterSystem const& sys, Element const& w,
                                  Element const& w2, std::size_t radius,
                                  std::size_t order_cap) {
  return conjugacy_decide(sys, w, w2, sys.ball(radius), radius, order_cap);
}

std::vector<Element> centralizer_ball(CoxeterSystem const& sys, Element const& w,
                                      CayleyBall const& ball, std::size_t radius) {
  std::vector<Element> out;
  std::size_t const limit = ball.prefix_size(std::min(radius, ball.radius()));
  for (std::size_t i = 0; i < limit; ++i) {
    Element const& g = ball.elements()[i];
    if (sys.commute(g, w)) {
      out.push_back(g);
    }
  }
  return out;
}

std::vector<Element> centralizer_ball(CoxeterSystem const& sys, Element const& w,
                                      std::size_t radius) {
  return centralizer_ball(sys, w, sys.ball(radius), radius);
}

std::vector<Element> translation_witnesses(CoxeterSystem const& sys, std::size_t n) {
  if (sys.type_class() != TypeClass::affine) {
    throw coxeter_error("translation witnesses need an affine system, got " +
                        to_string(sys.type_class()));
  }
  std::optional<Element> t;
  for (std::size_t r = 1; r <= 4 * sys.rank() + 4 && !t; ++r) {
    CayleyBall const ball = sys.ball(r);
    for (std::size_t i = ball.layer_begin(r); i < ball.size(); ++i) {
      if (is_translation(sys, ball.elements()[i])) {
        t = ball.elements()[i];
        break;
      }
    }
  }
  if (!t) {
    throw coxeter_error("no translation found");
  }
  std::vector<Element> out;
  Element cur = *t;
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(cur);
    cur = sys.multiply(cur, *t);
  }
  return out;
}

}  // namespace reflectrace
