#include "reflectrace/parabolics.hpp"

#include <algorithm>
#include <numeric>

#include "reflectrace/facets.hpp"

namespace reflectrace {

FiniteParabolic::FiniteParabolic(CoxeterSystem const& sys, Subset t) : type_(t) {
  if (!is_spherical(sys, t)) {
    throw coxeter_error("subset " + sys.subset_to_string(t) +
                        " is not spherical: W_T is infinite");
  }
  std::vector<Element> raw = sys.enumerate_subgroup(t);
  std::vector<Word> raw_words;
  raw_words.reserve(raw.size());
  for (auto const& e : raw) {
    raw_words.push_back(sys.canonical_word(e));
  }
  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (raw_words[a].size() != raw_words[b].size()) {
      return raw_words[a].size() < raw_words[b].size();
    }
    return raw_words[a] < raw_words[b];
  });
  for (std::size_t i : order) {
    index_.emplace(raw[i].matrix(), elements_.size());
    // Carry the canonical word as the witness.
    elements_.emplace_back(raw[i].matrix(), raw_words[i]);
    words_.push_back(raw_words[i]);
  }

  std::size_t const n = elements_.size();
  product_.resize(n * n);
  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      QMatrix const m = elements_[a].matrix() * elements_[b].matrix();
      auto it = index_.find(m);
      if (it == index_.end()) {
        throw coxeter_error("parabolic enumeration is not closed");
      }
      product_[a * n + b] = it->second;
      if (it->second == 0) {
        inverse_[a] = b;
      }
    }
  }
}

std::optional<std::size_t> FiniteParabolic::index_of(QMatrix const& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::size_t FiniteParabolic::element_order(std::size_t i) const {
  std::size_t k = 1;
  for (std::size_t x = i; x != 0; x = multiply(x, i)) {
    ++k;
  }
  // k counts the powers x^1 .. x^(order-1) plus one.
  return i == 0 ? 1 : k;
}

FiniteParabolic enumerate_parabolic(CoxeterSystem const& sys, Subset t) {
  return FiniteParabolic(sys, t);
}

namespace {

std::vector<std::size_t> centralizer_of_index(FiniteParabolic const& p,
                                              std::size_t w) {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < p.order(); ++g) {
    if (p.multiply(g, w) == p.multiply(w, g)) {
      out.push_back(g);
    }
  }
  return out;
}

}  // namespace

std::vector<std::size_t> centralizer_in_parabolic(FiniteParabolic const& p,
                                                  Element const& w) {
  auto idx = p.index_of(w);
  if (!idx) {
    throw coxeter_error("element is not in the parabolic subgroup");
  }
  return centralizer_of_index(p, *idx);
}

std::vector<std::vector<std::size_t>> conjugacy_classes(
    FiniteParabolic const& p) {
  std::vector<bool> seen(p.order(), false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t w = 0; w < p.order(); ++w) {
    if (seen[w]) {
      continue;
    }
    std::vector<std::size_t> cls;
    for (std::size_t g = 0; g < p.order(); ++g) {
      std::size_t const c = p.conjugate(g, w);
      if (!seen[c]) {
        seen[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

TraceDecomposition trace_decomposition(FiniteParabolic const& p) {
  TraceDecomposition out;
  for (auto& cls : conjugacy_classes(p)) {
    TraceSummand s;
    s.representative = cls.front();
    s.centralizer = centralizer_of_index(p, s.representative);
    s.class_members = std::move(cls);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace reflectrace
