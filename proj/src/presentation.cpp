#include "reflectrace/presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <gmpxx.h>

#include "reflectrace/facets.hpp"

namespace reflectrace {

// ------------------------------------------------------------------ words

Relator free_reduce(Relator const& w) {
  Relator out;
  out.reserve(w.size());
  for (int l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Relator cyclic_reduce(Relator const& w) {
  Relator r = free_reduce(w);
  std::size_t b = 0;
  std::size_t e = r.size();
  while (e - b >= 2 && r[b] == -r[e - 1]) {
    ++b;
    --e;
  }
  return Relator(r.begin() + static_cast<std::ptrdiff_t>(b),
                 r.begin() + static_cast<std::ptrdiff_t>(e));
}

Relator inverse_word(Relator const& w) {
  Relator r(w.rbegin(), w.rend());
  for (int& l : r) {
    l = -l;
  }
  return r;
}

namespace {

// Letters ordered a < a^-1 < b < b^-1 < ...
bool letters_less(Relator const& x, Relator const& y) {
  return std::lexicographical_compare(
      x.begin(), x.end(), y.begin(), y.end(), [](int l, int m) {
        auto key = [](int v) { return 2 * generator_of(v) + (v < 0 ? 1U : 0U); };
        return key(l) < key(m);
      });
}

}  // namespace

Relator cyclic_normal_form(Relator const& w) {
  Relator best = w;
  if (w.empty()) {
    return best;
  }
  for (Relator const& base : {w, inverse_word(w)}) {
    Relator rot = base;
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (letters_less(rot, best)) {
        best = rot;
      }
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    }
  }
  return best;
}

Presentation normalize(Presentation const& p) {
  std::set<Relator> seen;
  for (auto const& r : p.relators) {
    Relator c = cyclic_reduce(r);
    if (!c.empty()) {
      seen.insert(cyclic_normal_form(c));
    }
  }
  Presentation out;
  out.generator_count = p.generator_count;
  out.relators.assign(seen.begin(), seen.end());
  std::stable_sort(out.relators.begin(), out.relators.end(),
                   [](Relator const& a, Relator const& b) {
                     return a.size() < b.size();
                   });
  return out;
}

namespace {

std::string generator_name(std::size_t g) {
  if (g < 26) {
    return std::string(1, static_cast<char>('a' + g));
  }
  return "x" + std::to_string(g);
}

}  // namespace

std::string relator_to_string(Relator const& r) {
  if (r.empty()) {
    return "1";
  }
  std::string out;
  // Runs are written as powers.
  for (std::size_t j = 0; j < r.size();) {
    std::size_t k = j;
    while (k < r.size() && r[k] == r[j]) {
      ++k;
    }
    long const e = static_cast<long>(k - j) * (r[j] < 0 ? -1 : 1);
    out += generator_name(generator_of(r[j]));
    if (e != 1) {
      out += "^" + std::to_string(e);
    }
    j = k;
  }
  return out;
}

std::string to_string(Presentation const& p) {
  std::string out = "<";
  for (std::size_t g = 0; g < p.generator_count; ++g) {
    out += (g ? "," : "") + generator_name(g);
  }
  out += " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    out += (i ? ", " : "") + relator_to_string(p.relators[i]);
  }
  return out + ">";
}

// ------------------------------------------------------- abelianization

std::vector<long> abelian_invariants(Presentation const& p) {
  std::size_t const n = p.generator_count;
  std::size_t const m = p.relators.size();
  std::vector<std::vector<mpz_class>> a(m, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (int l : p.relators[i]) {
      a[i][generator_of(l)] += l > 0 ? 1 : -1;
    }
  }
  std::vector<mpz_class> diagonal;
  std::size_t const limit = std::min(m, n);
  for (std::size_t t = 0; t < limit; ++t) {
    for (;;) {
      // Smallest nonzero entry in the trailing block becomes the pivot.
      std::size_t pr = m;
      std::size_t pc = n;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (sgn(a[i][j]) != 0 &&
              (pr == m || abs(a[i][j]) < abs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == m) {
        goto done;
      }
      std::swap(a[t], a[pr]);
      for (auto& row : a) {
        std::swap(row[t], row[pc]);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(a[i][t]) == 0) {
          continue;
        }
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < n; ++j) {
          a[i][j] -= q * a[t][j];
        }
        if (sgn(a[i][t]) != 0) {
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(a[t][j]) == 0) {
          continue;
        }
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < m; ++i) {
          a[i][j] -= q * a[i][t];
        }
        if (sgn(a[t][j]) != 0) {
          clean = false;
        }
      }
      if (!clean) {
        continue;
      }
      // Enforce divisibility of the trailing block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (sgn(a[i][j]) != 0 && !mpz_divisible_p(a[i][j].get_mpz_t(),
                                                     a[t][t].get_mpz_t())) {
            for (std::size_t k = t; k < n; ++k) {
              a[t][k] += a[i][k];
            }
            divides = false;
            break;
          }
        }
      }
      if (divides) {
        diagonal.push_back(abs(a[t][t]));
        break;
      }
    }
  }
done:
  std::vector<long> out;
  for (auto const& d : diagonal) {
    if (d != 1) {
      out.push_back(d.get_si());
    }
  }
  std::sort(out.begin(), out.end());
  for (std::size_t i = diagonal.size(); i < n; ++i) {
    out.push_back(0);
  }
  return out;
}

// ----------------------------------------------------------------- Tietze

namespace {

bool is_pure_power(Relator const& r) {
  return !r.empty() && std::all_of(r.begin(), r.end(), [&](int l) {
    return generator_of(l) == generator_of(r.front());
  });
}

std::vector<Relator> clean_relators(std::vector<Relator> const& rels) {
  std::set<Relator> seen;
  std::vector<Relator> out;
  for (auto const& r : rels) {
    Relator c = cyclic_reduce(r);
    if (c.empty()) {
      continue;
    }
    Relator nf = cyclic_normal_form(c);
    if (seen.insert(nf).second) {
      out.push_back(std::move(nf));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](Relator const& a, Relator const& b) {
    return a.size() < b.size();
  });
  return out;
}

// Reduce exponents of x modulo n wherever x^n is a relator. Returns true
// if anything changed.
bool reduce_powers(std::vector<Relator>& rels, std::size_t n) {
  std::vector<long> power(n, 0);
  for (auto const& r : rels) {
    if (is_pure_power(r)) {
      std::size_t const g = generator_of(r.front());
      power[g] = std::gcd(power[g], static_cast<long>(r.size()));
    }
  }
  bool changed = false;
  std::vector<Relator> out;
  for (std::size_t g = 0; g < n; ++g) {
    if (power[g] > 0) {
      out.push_back(Relator(static_cast<std::size_t>(power[g]), letter(g)));
    }
  }
  for (auto const& r : rels) {
    if (is_pure_power(r)) {
      std::size_t const g = generator_of(r.front());
      if (static_cast<long>(r.size()) != power[g]) {
        changed = true;
      }
      continue;
    }
    Relator w = r;
    // Rotate so no run straddles the end.
    std::size_t guard = 0;
    while (generator_of(w.front()) == generator_of(w.back()) && guard++ < w.size()) {
      std::rotate(w.begin(), w.begin() + 1, w.end());
    }
    Relator reduced;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) {
        ++j;
      }
      std::size_t const g = generator_of(w[i]);
      long k = static_cast<long>(j - i) * (w[i] > 0 ? 1 : -1);
      // Exponents end up in (-n/2, n/2]; involutions lose their inverses.
      if (power[g] > 0 && (2 * (k < 0 ? -k : k) > power[g] ||
                           (k < 0 && 2 * -k == power[g]))) {
        long const n_g = power[g];
        long rem = ((k % n_g) + n_g) % n_g;
        if (2 * rem > n_g) {
          rem -= n_g;
        }
        k = rem;
      }
      for (long e = 0; e < (k < 0 ? -k : k); ++e) {
        reduced.push_back(letter(g, k < 0));
      }
      i = j;
    }
    Relator const settled = cyclic_reduce(reduced);
    if (settled.empty() || cyclic_normal_form(settled) != cyclic_normal_form(r)) {
      changed = true;
    }
    out.push_back(std::move(reduced));
  }
  rels = std::move(out);
  return changed;
}

Relator substitute(Relator const& r, std::size_t g, Relator const& image) {
  Relator const inv = inverse_word(image);
  Relator out;
  for (int l : r) {
    if (generator_of(l) == g) {
      Relator const& rep = l > 0 ? image : inv;
      out.insert(out.end(), rep.begin(), rep.end());
    } else {
      out.push_back(l);
    }
  }
  return free_reduce(out);
}

}  // namespace

TietzeResult tietze_simplify(Presentation const& p,
                             std::size_t max_substitution_length) {
  std::size_t const n = p.generator_count;
  std::vector<bool> alive(n, true);
  std::vector<Relator> rels = p.relators;
  for (;;) {
    rels = clean_relators(rels);
    if (reduce_powers(rels, n)) {
      continue;
    }
    rels = clean_relators(rels);

    // Shortest relator containing some generator exactly once; ties go to
    // the highest generator index.
    std::size_t best_rel = rels.size();
    std::size_t best_gen = 0;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      if (best_rel < rels.size() && rels[i].size() > rels[best_rel].size()) {
        break;  // relators are sorted by length
      }
      std::map<std::size_t, int> count;
      for (int l : rels[i]) {
        ++count[generator_of(l)];
      }
      for (auto it = count.rbegin(); it != count.rend(); ++it) {
        if (it->second == 1) {
          if (best_rel == rels.size() || it->first > best_gen) {
            best_rel = i;
            best_gen = it->first;
          }
          break;
        }
      }
    }
    if (best_rel == rels.size() ||
        rels[best_rel].size() - 1 > max_substitution_length) {
      break;
    }
    Relator r = rels[best_rel];
    auto pos = std::find_if(r.begin(), r.end(), [&](int l) {
      return generator_of(l) == best_gen;
    });
    std::rotate(r.begin(), pos, r.end());
    bool const positive = r.front() > 0;
    Relator rest(r.begin() + 1, r.end());
    // g rest = 1  =>  g = rest^-1;   g^-1 rest = 1  =>  g = rest.
    Relator const image = positive ? inverse_word(rest) : rest;
    rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(best_rel));
    for (auto& other : rels) {
      other = substitute(other, best_gen, image);
    }
    alive[best_gen] = false;
  }

  TietzeResult out;
  std::vector<std::size_t> renumber(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    if (alive[g]) {
      renumber[g] = out.kept.size();
      out.kept.push_back(g);
    }
  }
  out.presentation.generator_count = out.kept.size();
  for (auto const& r : rels) {
    Relator mapped;
    for (int l : r) {
      mapped.push_back(letter(renumber[generator_of(l)], l < 0));
    }
    out.presentation.relators.push_back(std::move(mapped));
  }
  out.presentation = normalize(out.presentation);
  return out;
}

// ----------------------------------------------------------- Todd-Coxeter

namespace {

class CosetEnumerator {
 public:
  CosetEnumerator(Presentation const& p, std::size_t cap)
      : columns_(2 * p.generator_count), cap_(cap) {
    for (auto const& r : p.relators) {
      Relator c = cyclic_reduce(r);
      if (c.empty()) {
        continue;
      }
      std::vector<std::size_t> cols;
      for (int l : c) {
        cols.push_back(column(l));
      }
      relators_.push_back(std::move(cols));
    }
  }

  std::optional<std::size_t> run() {
    if (!new_coset()) {
      return std::nullopt;
    }
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (parent_[c] != c) {
        continue;
      }
      for (auto const& r : relators_) {
        if (!scan_and_fill(c, r)) {
          return std::nullopt;
        }
        if (parent_[c] != c) {
          break;
        }
      }
      if (parent_[c] != c) {
        continue;
      }
      for (std::size_t x = 0; x < columns_; ++x) {
        if (entry(c, x) == kUndefined) {
          if (!define(c, x)) {
            return std::nullopt;
          }
        }
      }
    }
    std::size_t alive = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      alive += parent_[c] == c ? 1 : 0;
    }
    return alive;
  }

 private:
  static constexpr std::size_t kUndefined = static_cast<std::size_t>(-1);

  static std::size_t column(int l) {
    return 2 * generator_of(l) + (l < 0 ? 1 : 0);
  }
  static std::size_t inverse_column(std::size_t x) { return x ^ 1U; }

  std::size_t& entry(std::size_t c, std::size_t x) {
    return table_[c * columns_ + x];
  }

  bool new_coset() {
    if (parent_.size() >= cap_) {
      return false;
    }
    parent_.push_back(parent_.size());
    table_.resize(table_.size() + columns_, kUndefined);
    return true;
  }

  bool define(std::size_t c, std::size_t x) {
    if (!new_coset()) {
      return false;
    }
    std::size_t const d = parent_.size() - 1;
    entry(c, x) = d;
    entry(d, inverse_column(x)) = c;
    return true;
  }

  bool scan_and_fill(std::size_t c, std::vector<std::size_t> const& w) {
    std::size_t f = c;
    std::size_t b = c;
    std::size_t i = 0;
    std::size_t j = w.size();  // one past the backward position
    for (;;) {
      while (i < j && entry(f, w[i]) != kUndefined) {
        f = entry(f, w[i]);
        ++i;
      }
      if (i == j) {
        if (f != b) {
          coincidence(f, b);
        }
        return true;
      }
      while (j > i && entry(b, inverse_column(w[j - 1])) != kUndefined) {
        b = entry(b, inverse_column(w[j - 1]));
        --j;
      }
      if (j == i) {
        coincidence(f, b);
        return true;
      }
      if (j == i + 1) {
        entry(f, w[i]) = b;
        entry(b, inverse_column(w[i])) = f;
        return true;
      }
      if (!define(f, w[i])) {
        return false;
      }
    }
  }

  std::size_t rep(std::size_t k) {
    std::size_t root = k;
    while (parent_[root] != root) {
      root = parent_[root];
    }
    while (parent_[k] != root) {
      std::size_t const next = parent_[k];
      parent_[k] = root;
      k = next;
    }
    return root;
  }

  void merge(std::size_t k, std::size_t l, std::vector<std::size_t>& queue) {
    std::size_t const phi = rep(k);
    std::size_t const psi = rep(l);
    if (phi == psi) {
      return;
    }
    std::size_t const mu = std::min(phi, psi);
    std::size_t const nu = std::max(phi, psi);
    parent_[nu] = mu;
    queue.push_back(nu);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::vector<std::size_t> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      std::size_t const gamma = queue[q];
      for (std::size_t x = 0; x < columns_; ++x) {
        std::size_t const delta = entry(gamma, x);
        if (delta == kUndefined) {
          continue;
        }
        if (entry(delta, inverse_column(x)) == gamma) {
          entry(delta, inverse_column(x)) = kUndefined;
        }
        std::size_t const mu = rep(gamma);
        std::size_t const nu = rep(delta);
        if (entry(mu, x) != kUndefined) {
          merge(nu, entry(mu, x), queue);
        } else if (entry(nu, inverse_column(x)) != kUndefined) {
          merge(mu, entry(nu, inverse_column(x)), queue);
        } else {
          entry(mu, x) = nu;
          entry(nu, inverse_column(x)) = mu;
        }
      }
    }
  }

  std::size_t columns_;
  std::size_t cap_;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> table_;
};

}  // namespace

std::optional<std::size_t> coset_enumerate(Presentation const& p,
                                           std::size_t coset_cap) {
  if (p.generator_count == 0) {
    return 1;
  }
  return CosetEnumerator(p, coset_cap).run();
}

// ------------------------------------------------------------ recognition

namespace {

// Replace every letter of an involution generator by the positive letter
// and cancel cyclically adjacent equal involution letters.
Relator involution_reduce(Relator const& r, std::vector<bool> const& involution) {
  Relator out;
  for (int l : r) {
    std::size_t const g = generator_of(l);
    int const x = involution[g] ? letter(g) : l;
    if (!out.empty() && (out.back() == -x || (involution[g] && out.back() == x))) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  while (out.size() >= 2) {
    int const f = out.front();
    int const b = out.back();
    bool const inv_pair = involution[generator_of(f)] && f == b;
    if (f == -b || inv_pair) {
      out.erase(out.begin());
      out.pop_back();
    } else {
      break;
    }
  }
  return out;
}

std::optional<CoxeterMatrix> match_coxeter(Presentation const& p) {
  std::size_t const n = p.generator_count;
  std::vector<bool> involution(n, false);
  std::vector<Relator> others;
  for (auto const& r : p.relators) {
    if (is_pure_power(r)) {
      if (r.size() != 2) {
        return std::nullopt;
      }
      involution[generator_of(r.front())] = true;
    } else {
      others.push_back(r);
    }
  }
  if (std::find(involution.begin(), involution.end(), false) != involution.end()) {
    return std::nullopt;
  }
  std::vector<int> labels(n * n, kInfinity);
  for (std::size_t s = 0; s < n; ++s) {
    labels[s * n + s] = 1;
  }
  for (auto const& r : others) {
    Relator const w = involution_reduce(r, involution);
    if (w.empty()) {
      continue;
    }
    if (w.size() < 4 || w.size() % 2 != 0) {
      return std::nullopt;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != w[i % 2]) {
        return std::nullopt;
      }
    }
    std::size_t const a = generator_of(w[0]);
    std::size_t const b = generator_of(w[1]);
    int const m = static_cast<int>(w.size() / 2);
    int& cur = labels[a * n + b];
    cur = cur == kInfinity ? m : std::gcd(cur, m);
    if (cur < 2) {
      return std::nullopt;
    }
    labels[b * n + a] = cur;
  }
  try {
    return CoxeterMatrix(n, labels);
  } catch (coxeter_error const&) {
    return std::nullopt;
  }
}

bool match_z2_times_z(Presentation const& p) {
  if (p.generator_count != 2) {
    return false;
  }
  for (std::size_t a = 0; a < 2; ++a) {
    std::size_t const t = 1 - a;
    std::vector<bool> involution(2, false);
    involution[a] = true;
    bool has_square = false;
    bool ok = true;
    std::size_t commutators = 0;
    Relator const target = cyclic_normal_form(
        Relator{letter(a), letter(t), letter(a), letter(t, true)});
    for (auto const& r : p.relators) {
      if (is_pure_power(r)) {
        if (generator_of(r.front()) == a && r.size() == 2) {
          has_square = true;
          continue;
        }
        ok = false;
        break;
      }
      Relator const w = involution_reduce(r, involution);
      if (w.empty()) {
        continue;
      }
      if (cyclic_normal_form(w) != target) {
        ok = false;
        break;
      }
      ++commutators;
    }
    if (ok && has_square && commutators > 0) {
      return true;
    }
  }
  return false;
}

std::size_t product_of(std::vector<long> const& v) {
  std::size_t p = 1;
  for (long x : v) {
    p *= static_cast<std::size_t>(x);
  }
  return p;
}

}  // namespace

std::string Recognition::to_string() const {
  auto factor = [](long f) { return f == 0 ? std::string("Z") : "Z/" + std::to_string(f); };
  switch (kind) {
    case GroupKind::trivial:
      return "1";
    case GroupKind::integers:
      return "Z";
    case GroupKind::cyclic:
      return factor(factors.at(0));
    case GroupKind::direct_product: {
      std::string out;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        out += (i ? " x " : "") + factor(factors[i]);
      }
      return out;
    }
    case GroupKind::finite:
      return "Finite(" + std::to_string(order) + ")";
    case GroupKind::coxeter: {
      std::string out = "Coxeter(";
      std::size_t const n = coxeter->rank();
      bool first = true;
      for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = s + 1; t < n; ++t) {
          out += (first ? "" : ",") + label_to_string((*coxeter)(s, t));
          first = false;
        }
      }
      return out + ")";
    }
    case GroupKind::unknown:
      return "Unknown";
  }
  return "Unknown";
}

Recognition recognize(Presentation const& p, RecognizeOptions const& opts) {
  Recognition out;
  out.simplified = tietze_simplify(p);
  Presentation const& s = out.simplified.presentation;
  out.abelian_invariants = abelian_invariants(s);
  std::vector<long> const& inv = out.abelian_invariants;

  if (s.generator_count == 0) {
    out.kind = GroupKind::trivial;
    out.order = 1;
    return out;
  }
  if (s.generator_count == 1) {
    long n = 0;
    for (auto const& r : s.relators) {
      long e = 0;
      for (int l : r) {
        e += l > 0 ? 1 : -1;
      }
      n = std::gcd(n, e < 0 ? -e : e);
    }
    if (n == 0) {
      out.kind = GroupKind::integers;
    } else if (n == 1) {
      out.kind = GroupKind::trivial;
      out.order = 1;
    } else {
      out.kind = GroupKind::cyclic;
      out.order = static_cast<std::size_t>(n);
      out.factors = {n};
    }
    return out;
  }

  if (match_z2_times_z(s) && inv == std::vector<long>{2, 0}) {
    out.kind = GroupKind::direct_product;
    out.factors = {2, 0};
    return out;
  }

  bool try_enumeration = true;
  if (auto cm = match_coxeter(s)) {
    bool finite_type = false;
    try {
      finite_type = CoxeterSystem(*cm).type_class() == TypeClass::finite;
    } catch (coxeter_error const&) {
      finite_type = false;
    }
    if (!finite_type) {
      // An infinite Coxeter group: coset enumeration cannot terminate.
      out.kind = GroupKind::coxeter;
      out.coxeter = *cm;
      return out;
    }
  }

  if (try_enumeration) {
    if (auto order = coset_enumerate(s, opts.coset_cap)) {
      std::size_t const k = *order;
      bool const abelian_finite =
          std::find(inv.begin(), inv.end(), 0L) == inv.end();
      if (!abelian_finite || k % product_of(inv) != 0) {
        return out;  // inconsistent: leave unknown
      }
      out.order = k;
      if (k == 1) {
        out.kind = GroupKind::trivial;
      } else if (product_of(inv) == k) {
        out.kind = inv.size() == 1 ? GroupKind::cyclic : GroupKind::direct_product;
        out.factors = inv;
      } else {
        out.kind = GroupKind::finite;
      }
      return out;
    }
  }
  return out;
}

Presentation coxeter_presentation(CoxeterMatrix const& m) {
  Presentation p;
  p.generator_count = m.rank();
  for (std::size_t s = 0; s < m.rank(); ++s) {
    p.relators.push_back({letter(s), letter(s)});
  }
  for (std::size_t s = 0; s < m.rank(); ++s) {
    for (std::size_t t = s + 1; t < m.rank(); ++t) {
      if (m(s, t) == kInfinity) {
        continue;
      }
      Relator r;
      for (int k = 0; k < m(s, t); ++k) {
        r.push_back(letter(s));
        r.push_back(letter(t));
      }
      p.relators.push_back(std::move(r));
    }
  }
  return p;
}

bool coxeter_matrices_isomorphic(CoxeterMatrix const& a, CoxeterMatrix const& b) {
  if (a.rank() != b.rank()) {
    return false;
  }
  if (a == b) {
    return true;
  }
  std::size_t const n = a.rank();
  if (n > 9) {
    return false;
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool same = true;
    for (std::size_t s = 0; s < n && same; ++s) {
      for (std::size_t t = 0; t < n; ++t) {
        if (a(s, t) != b(perm[s], perm[t])) {
          same = false;
          break;
        }
      }
    }
    if (same) {
      return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace reflectrace
