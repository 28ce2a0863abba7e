#include "reflectrace/hocolim.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "reflectrace/union_find.hpp"

namespace reflectrace {

namespace {
constexpr std::size_t kNone = static_cast<std::size_t>(-1);
}

GCCategory::GCCategory(CoxeterSystem const& sys)
    : sys_(&sys), poset_(spherical_subsets(sys)) {
  std::size_t const n = poset_.size();
  for (Subset t : poset_.nodes()) {
    parabolics_.emplace_back(sys, t);
  }
  for (std::size_t i = 0; i < n; ++i) {
    object_offset_.push_back(objects_.size());
    for (std::size_t w = 0; w < parabolics_[i].order(); ++w) {
      objects_.push_back(GCObject{i, w});
    }
  }

  embedding_.assign(n * n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!poset_.nodes()[i].is_subset_of(poset_.nodes()[j])) {
        continue;
      }
      auto& emb = embedding_[i * n + j];
      for (auto const& e : parabolics_[i].elements()) {
        emb.push_back(*parabolics_[j].index_of(e));
      }
    }
  }

  pair_offset_.assign(n * n, kNone);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (embedding_[i * n + j].empty()) {
        continue;
      }
      pair_offset_[i * n + j] = morphisms_.size();
      FiniteParabolic const& pj = parabolics_[j];
      for (std::size_t w = 0; w < parabolics_[i].order(); ++w) {
        std::size_t const wj = embed(i, j, w);
        for (std::size_t u = 0; u < pj.order(); ++u) {
          morphisms_.push_back(GCMorphism{object_id(i, w),
                                          object_id(j, pj.conjugate(u, wj)), u});
        }
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (embedding_[i * n + j].empty()) {
        continue;
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (embedding_[j * n + k].empty()) {
          continue;
        }
        FiniteParabolic const& pj = parabolics_[j];
        FiniteParabolic const& pk = parabolics_[k];
        for (std::size_t w = 0; w < parabolics_[i].order(); ++w) {
          std::size_t const wj = embed(i, j, w);
          for (std::size_t u = 0; u < pj.order(); ++u) {
            std::size_t const f = morphism_id(i, j, w, u);
            std::size_t const mid = pj.conjugate(u, wj);
            std::size_t const uk = embed(j, k, u);
            for (std::size_t v = 0; v < pk.order(); ++v) {
              triangles_.push_back(GCTriangle{f, morphism_id(j, k, mid, v),
                                              morphism_id(i, k, w, pk.multiply(v, uk))});
            }
          }
        }
      }
    }
  }
}

std::size_t GCCategory::morphism_id(std::size_t from_type, std::size_t to_type,
                                    std::size_t element, std::size_t conjugator) const {
  std::size_t const n = poset_.size();
  return pair_offset_[from_type * n + to_type] +
         element * parabolics_[to_type].order() + conjugator;
}

std::size_t GCCategory::embed(std::size_t from_type, std::size_t to_type,
                              std::size_t i) const {
  return embedding_[from_type * poset_.size() + to_type][i];
}

Element const& GCCategory::element_of(std::size_t object) const {
  GCObject const& o = objects_.at(object);
  return parabolics_[o.type].element(o.element);
}

Element const& GCCategory::conjugator_of(std::size_t morphism) const {
  GCMorphism const& m = morphisms_.at(morphism);
  return parabolics_[objects_[m.target].type].element(m.conjugator);
}

std::string GCCategory::object_to_string(std::size_t object) const {
  GCObject const& o = objects_.at(object);
  return "(" + sys_->subset_to_string(poset_.nodes()[o.type]) + ", " +
         sys_->word_to_string(parabolics_[o.type].canonical_word(o.element)) + ")";
}

GCCategory build_grothendieck(CoxeterSystem const& sys) { return GCCategory(sys); }

namespace {

Element tidy(CoxeterSystem const& sys, Element const& e) {
  return Element(e.matrix(), sys.canonical_word(e));
}

struct Tree {
  std::vector<std::size_t> order;       // objects in BFS order
  std::vector<Element> certificate;     // indexed by object id
  std::vector<bool> in_tree;            // indexed by morphism id
  std::vector<std::size_t> edges;
};

std::vector<std::vector<std::size_t>> incidence(GCCategory const& cat) {
  std::vector<std::vector<std::size_t>> adj(cat.objects().size());
  for (std::size_t m = 0; m < cat.morphisms().size(); ++m) {
    GCMorphism const& f = cat.morphisms()[m];
    if (f.source == f.target) {
      continue;
    }
    adj[f.source].push_back(m);
    adj[f.target].push_back(m);
  }
  return adj;
}

Tree spanning_tree(GCCategory const& cat,
                   std::vector<std::vector<std::size_t>> const& adj,
                   std::size_t base) {
  CoxeterSystem const& sys = cat.system();
  Tree t;
  t.certificate.assign(cat.objects().size(), Element());
  t.in_tree.assign(cat.morphisms().size(), false);
  std::vector<bool> seen(cat.objects().size(), false);
  std::deque<std::size_t> queue{base};
  seen[base] = true;
  t.certificate[base] = sys.identity();
  while (!queue.empty()) {
    std::size_t const x = queue.front();
    queue.pop_front();
    t.order.push_back(x);
    for (std::size_t m : adj[x]) {
      GCMorphism const& f = cat.morphisms()[m];
      std::size_t const y = f.source == x ? f.target : f.source;
      if (seen[y]) {
        continue;
      }
      seen[y] = true;
      Element const& u = cat.conjugator_of(m);
      // Forward edge: U_y = u U_x. Backward: U_y = u^-1 U_x.
      Element const step = f.source == x ? u : sys.inverse(u);
      t.certificate[y] = tidy(sys, sys.multiply(step, t.certificate[x]));
      t.in_tree[m] = true;
      t.edges.push_back(m);
      queue.push_back(y);
    }
  }
  return t;
}

}  // namespace

std::vector<Component> components(GCCategory const& cat) {
  CoxeterSystem const& sys = cat.system();
  std::size_t const n = cat.objects().size();
  UnionFind uf(n);
  for (GCMorphism const& f : cat.morphisms()) {
    uf.unite(f.source, f.target);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t x = 0; x < n; ++x) {
    groups[uf.find(x)].push_back(x);
  }
  std::vector<Component> out;
  auto const adj = incidence(cat);
  for (auto& [root, members] : groups) {
    Component c;
    c.base = members.front();
    c.objects = members;
    Tree const t = spanning_tree(cat, adj, c.base);
    Element const& w0 = cat.element_of(c.base);
    for (std::size_t x : c.objects) {
      Element const& u = t.certificate[x];
      if (sys.conjugate(u, w0) != cat.element_of(x)) {
        throw coxeter_error("path certificate failed for object " +
                            cat.object_to_string(x));
      }
      c.certificates.push_back(u);
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](Component const& a, Component const& b) { return a.base < b.base; });
  return out;
}

ComponentPresentation pi1_presentation(GCCategory const& cat, Component const& comp) {
  CoxeterSystem const& sys = cat.system();
  Tree const t = spanning_tree(cat, incidence(cat), comp.base);
  std::vector<bool> member(cat.objects().size(), false);
  for (std::size_t x : comp.objects) {
    member[x] = true;
  }

  struct Candidate {
    std::size_t morphism;
    Element label;
    Word word;
  };
  std::vector<Candidate> cands;
  for (std::size_t m = 0; m < cat.morphisms().size(); ++m) {
    GCMorphism const& f = cat.morphisms()[m];
    if (!member[f.source] || t.in_tree[m] || f.is_identity()) {
      continue;
    }
    Element const label = tidy(
        sys, sys.multiply(sys.multiply(sys.inverse(t.certificate[f.target]),
                                       cat.conjugator_of(m)),
                          t.certificate[f.source]));
    cands.push_back(Candidate{m, label, label.word()});
  }
  // Loops with trivial label come last, then longer labels: elimination
  // removes high indices first, so short nontrivial labels survive.
  std::sort(cands.begin(), cands.end(), [](Candidate const& a, Candidate const& b) {
    auto key = [](Candidate const& c) {
      return std::make_tuple(c.word.empty() ? 1 : 0, c.word.size());
    };
    if (key(a) != key(b)) {
      return key(a) < key(b);
    }
    if (a.word != b.word) {
      return a.word < b.word;
    }
    return a.morphism < b.morphism;
  });

  ComponentPresentation cp;
  cp.base = comp.base;
  cp.spanning_tree = t.edges;
  std::vector<std::size_t> gen_of(cat.morphisms().size(), kNone);
  for (std::size_t i = 0; i < cands.size(); ++i) {
    gen_of[cands[i].morphism] = i;
    cp.generators.push_back(Loop{cands[i].morphism, cands[i].label});
  }
  cp.presentation.generator_count = cands.size();
  for (GCTriangle const& tri : cat.triangles()) {
    if (!member[cat.morphisms()[tri.first].source]) {
      continue;
    }
    Relator r;
    auto push = [&](std::size_t m, bool inverse) {
      if (gen_of[m] != kNone) {
        r.push_back(letter(gen_of[m], inverse));
      }
    };
    push(tri.second, false);
    push(tri.first, false);
    push(tri.composite, true);
    r = free_reduce(r);
    if (!r.empty()) {
      cp.presentation.relators.push_back(std::move(r));
    }
  }
  return cp;
}

Element evaluate(CoxeterSystem const& sys, std::vector<Element> const& labels,
                 Relator const& word) {
  Element e = sys.identity();
  for (int l : word) {
    Element const& g = labels.at(generator_of(l));
    e = sys.multiply(e, l > 0 ? g : sys.inverse(g));
  }
  return e;
}

bool coxeter_certificate(GCCategory const& cat, ComponentPresentation const& cp,
                         TietzeResult const& simplified, std::size_t coset_cap) {
  CoxeterSystem const& sys = cat.system();
  std::size_t const n = sys.rank();
  if (simplified.kept.size() != n) {
    return false;
  }
  std::vector<Element> labels;
  std::vector<int> reflection_of;
  std::vector<bool> hit(n, false);
  for (std::size_t g : simplified.kept) {
    Element const& label = cp.generators.at(g).label;
    int found = -1;
    for (std::size_t s = 0; s < n; ++s) {
      if (label == sys.generator(static_cast<int>(s))) {
        found = static_cast<int>(s);
      }
    }
    if (found < 0 || hit[static_cast<std::size_t>(found)]) {
      return false;
    }
    hit[static_cast<std::size_t>(found)] = true;
    labels.push_back(label);
    reflection_of.push_back(found);
  }
  Presentation const& p = simplified.presentation;
  for (auto const& r : p.relators) {
    if (!evaluate(sys, labels, r).is_identity()) {
      return false;
    }
  }
  for (std::size_t i = 0; i < cat.poset().size(); ++i) {
    Subset const t = cat.poset().nodes()[i];
    if (t.empty() || t.size() > 2) {
      continue;
    }
    std::vector<std::size_t> local(n, kNone);
    Presentation sub;
    for (std::size_t g = 0; g < n; ++g) {
      if (t.contains(reflection_of[g])) {
        local[g] = sub.generator_count++;
      }
    }
    for (auto const& r : p.relators) {
      Relator mapped;
      bool inside = true;
      for (int l : r) {
        std::size_t const g = local[generator_of(l)];
        if (g == kNone) {
          inside = false;
          break;
        }
        mapped.push_back(letter(g, l < 0));
      }
      if (inside) {
        sub.relators.push_back(std::move(mapped));
      }
    }
    auto order = coset_enumerate(sub, coset_cap);
    if (!order || *order != cat.parabolic(i).order()) {
      return false;
    }
  }
  return true;
}

ComponentRecognition recognize_component(GCCategory const& cat,
                                         ComponentPresentation const& cp,
                                         RecognizeOptions const& opts) {
  ComponentRecognition out;
  out.recognition = recognize(cp.presentation, opts);
  Recognition& r = out.recognition;
  if ((r.kind == GroupKind::unknown || r.kind == GroupKind::coxeter) &&
      coxeter_certificate(cat, cp, r.simplified, opts.coset_cap)) {
    r.kind = GroupKind::coxeter;
    r.coxeter = cat.system().matrix();
    out.certified_coxeter = true;
  }
  return out;
}

}  // namespace reflectrace
