#include "reflectrace/facets.hpp"

#include <algorithm>

namespace reflectrace {

std::vector<QScalar> spherical_minors(CoxeterSystem const& sys, Subset t) {
  std::vector<std::size_t> idx;
  for (int s : t.members()) {
    idx.push_back(static_cast<std::size_t>(s));
  }
  return leading_principal_minors(principal_submatrix(sys.bilinear_form(), idx));
}

bool is_spherical(CoxeterSystem const& sys, Subset t) {
  for (auto const& m : spherical_minors(sys, t)) {
    if (m.sign() != Sign::positive) {
      return false;
    }
  }
  return true;
}

FacePoset::FacePoset(std::vector<Subset> nodes) : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end(),
            [](Subset a, Subset b) { return shortlex_less(a, b); });
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    index_.emplace(nodes_[i].bits(), i);
  }
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    for (int s : nodes_[j].members()) {
      if (auto i = index_of(nodes_[j].without(s))) {
        covers_.emplace_back(*i, j);
      }
    }
  }
  std::sort(covers_.begin(), covers_.end());
}

std::optional<std::size_t> FacePoset::index_of(Subset t) const {
  auto it = index_.find(t.bits());
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::vector<std::size_t> FacePoset::supersets(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    if (nodes_[i].is_subset_of(nodes_[j])) {
      out.push_back(j);
    }
  }
  return out;
}

FacePoset spherical_subsets(CoxeterSystem const& sys) {
  // Grow level by level; a subset of a non-spherical set is never tested
  // twice since sphericity is closed under taking subsets.
  std::vector<Subset> found{Subset()};
  std::vector<Subset> frontier{Subset()};
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (Subset t : frontier) {
      int const top = t.empty() ? -1 : t.members().back();
      for (int s = top + 1; s < static_cast<int>(sys.rank()); ++s) {
        Subset const u = t.with(s);
        bool all_faces = true;
        for (int r : u.members()) {
          if (std::find(found.begin(), found.end(), u.without(r)) == found.end()) {
            all_faces = false;
            break;
          }
        }
        if (all_faces && is_spherical(sys, u)) {
          next.push_back(u);
        }
      }
    }
    found.insert(found.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return FacePoset(std::move(found));
}

Element minimal_coset_rep(CoxeterSystem const& sys, Element const& g, Subset t) {
  Element cur = g;
  for (;;) {
    int found = -1;
    for (int s : t.members()) {
      if (sys.is_right_descent(cur, s)) {
        found = s;
        break;
      }
    }
    if (found < 0) {
      return cur;
    }
    cur = sys.multiply_generator(cur, found);
  }
}

FacetInSpace make_facet(CoxeterSystem const& sys, Element const& g, Subset t) {
  return FacetInSpace{t, minimal_coset_rep(sys, g, t)};
}

FacetInSpace translate(CoxeterSystem const& sys, Element const& w,
                       FacetInSpace const& f) {
  return make_facet(sys, sys.multiply(w, f.coset_rep), f.type);
}

std::vector<FacetInSpace> facets_in_ball(CoxeterSystem const& sys,
                                         FacePoset const& poset,
                                         CayleyBall const& ball) {
  std::vector<FacetInSpace> out;
  for (Subset t : poset.nodes()) {
    for (Element const& g : ball.elements()) {
      bool minimal = true;
      for (int s : t.members()) {
        if (sys.is_right_descent(g, s)) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        out.push_back(FacetInSpace{t, g});
      }
    }
  }
  return out;
}

std::vector<FacetInSpace> facets_in_ball(CoxeterSystem const& sys,
                                         std::size_t radius, std::size_t cap) {
  return facets_in_ball(sys, spherical_subsets(sys), sys.ball(radius, cap));
}

QVector generic_point(CoxeterSystem const& sys, Subset t) {
  QVector p(sys.rank());
  for (std::size_t s = 0; s < sys.rank(); ++s) {
    if (!t.contains(static_cast<int>(s))) {
      p[s] = 1;
    }
  }
  return p;
}

bool in_closed_face(QVector const& p, Subset t) {
  for (std::size_t s = 0; s < p.size(); ++s) {
    Sign const c = p[s].sign();
    if (c == Sign::negative) {
      return false;
    }
    if (t.contains(static_cast<int>(s)) && c != Sign::zero) {
      return false;
    }
  }
  return true;
}

Subset face_type(QVector const& p) {
  Subset t;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (p[s].is_zero()) {
      t = t.with(static_cast<int>(s));
    }
  }
  return t;
}

bool facet_contains_face(CoxeterSystem const& sys, FacetInSpace const& j,
                         Subset face) {
  QVector const x = generic_point(sys, face);
  return in_closed_face(sys.act(sys.inverse(j.coset_rep), x), j.type);
}

FixCheck facet_fix_check(CoxeterSystem const& sys, Element const& w,
                         FacetInSpace const& f) {
  FixCheck r{};
  r.setwise = translate(sys, w, f).coset_rep == f.coset_rep;

  r.pointwise = true;
  for (std::size_t s = 0; s < sys.rank() && r.pointwise; ++s) {
    if (f.type.contains(static_cast<int>(s))) {
      continue;
    }
    QVector omega(sys.rank());
    omega[s] = 1;
    QVector const y = sys.act(f.coset_rep, omega);
    r.pointwise = sys.act(w, y) == y;
  }

  Element const h =
      sys.multiply(sys.multiply(sys.inverse(f.coset_rep), w), f.coset_rep);
  r.member = true;
  for (int s : sys.canonical_word(h)) {
    if (!f.type.contains(s)) {
      r.member = false;
      break;
    }
  }
  return r;
}

}  // namespace reflectrace
