#include "reflectrace/verify.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

namespace reflectrace {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::unknown:
      return "unknown";
    case Status::fail:
      return "fail";
  }
  return "fail";
}

Status combine(Status a, Status b) {
  return static_cast<int>(a) > static_cast<int>(b) ? a : b;
}

std::string to_string(Overall o) {
  switch (o) {
    case Overall::verified:
      return "Verified";
    case Overall::verified_with_unknowns:
      return "VerifiedWithUnknowns";
    case Overall::failed:
      return "Failed";
  }
  return "Failed";
}

Overall overall_of(Status s) {
  switch (s) {
    case Status::pass:
      return Overall::verified;
    case Status::unknown:
      return Overall::verified_with_unknowns;
    case Status::fail:
      return Overall::failed;
  }
  return Overall::failed;
}

int exit_code(Overall o) {
  switch (o) {
    case Overall::verified:
      return 0;
    case Overall::verified_with_unknowns:
      return 10;
    case Overall::failed:
      return 20;
  }
  return 20;
}

// ------------------------------------------------------------------ golden

GoldenTable parse_golden(nlohmann::json const& j) {
  GoldenTable out;
  for (auto const& [name, entry] : j.items()) {
    GoldenEntry g;
    g.components = entry.at("components").get<std::size_t>();
    if (entry.contains("pi1")) {
      g.pi1 = entry.at("pi1").get<std::vector<std::string>>();
    }
    out.emplace(name, std::move(g));
  }
  return out;
}

GoldenTable load_golden(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open golden table " + path);
  }
  return parse_golden(nlohmann::json::parse(in));
}

// ---------------------------------------------------------------- analysis

Analysis::Analysis(CoxeterSystem const& system, VerifyOptions const& options,
                   CayleyBall const* cached)
    : sys(system), opts(options), cat(system) {
  comps = components(cat);
  RecognizeOptions ropts;
  ropts.coset_cap = opts.coset_cap;
  for (auto const& c : comps) {
    presentations.push_back(pi1_presentation(cat, c));
    recognitions.push_back(recognize_component(cat, presentations.back(), ropts));
  }
  std::size_t const radius = std::max(opts.conj_radius, opts.centralizer_radius);
  if (cached != nullptr && cached->radius() >= radius) {
    ball = *cached;
  } else {
    ball = sys.ball(radius, opts.ball_cap);
  }
}

std::size_t Analysis::component_of(std::size_t object) const {
  for (std::size_t c = 0; c < comps.size(); ++c) {
    auto const& objs = comps[c].objects;
    if (std::binary_search(objs.begin(), objs.end(), object)) {
      return c;
    }
  }
  throw coxeter_error("object in no component");
}

std::string recognition_token(CoxeterSystem const& sys, Recognition const& r) {
  if (r.kind == GroupKind::coxeter && r.coxeter &&
      coxeter_matrices_isomorphic(*r.coxeter, sys.matrix())) {
    return "W";
  }
  return r.to_string();
}

// --------------------------------------------------------------------- pi0

Pi0Report check_pi0_injectivity(Analysis const& a) {
  std::size_t const n = a.comps.size();
  Pi0Report rep;
  rep.verdicts.assign(n, std::vector<ConjugacyVerdict>(n));
  for (std::size_t i = 0; i < n; ++i) {
    rep.verdicts[i][i].kind = VerdictKind::conjugate;
    rep.verdicts[i][i].conjugator = a.sys.identity();
    for (std::size_t j = i + 1; j < n; ++j) {
      ConjugacyVerdict v = conjugacy_decide(a.sys, a.base_element(i), a.base_element(j),
                                            a.ball, a.opts.conj_radius, a.opts.order_cap);
      ConjugacyVerdict back = v;
      if (v.kind == VerdictKind::conjugate) {
        Element const inv = a.sys.inverse(*v.conjugator);
        back.conjugator = Element(inv.matrix(), a.sys.canonical_word(inv));
        rep.status = Status::fail;
      } else if (v.kind == VerdictKind::unknown) {
        rep.status = combine(rep.status, Status::unknown);
      }
      rep.verdicts[i][j] = std::move(v);
      rep.verdicts[j][i] = std::move(back);
    }
  }
  return rep;
}

// --------------------------------------------------------------------- pi1

std::vector<Element> outside_generated(CoxeterSystem const& sys,
                                       std::vector<Element> const& gens,
                                       std::vector<Element> const& targets,
                                       std::size_t cap) {
  std::unordered_set<QMatrix, QMatrixHash> wanted;
  for (auto const& t : targets) {
    wanted.insert(t.matrix());
  }
  std::vector<QMatrix> steps;
  for (auto const& g : gens) {
    steps.push_back(g.matrix());
    QMatrix const inv = sys.inverse(g).matrix();
    if (inv != g.matrix()) {
      steps.push_back(inv);
    }
  }
  std::unordered_set<QMatrix, QMatrixHash> seen;
  std::vector<QMatrix> queue{QMatrix::identity(sys.rank())};
  seen.insert(queue[0]);
  wanted.erase(queue[0]);
  for (std::size_t i = 0; i < queue.size() && !wanted.empty() && seen.size() < cap; ++i) {
    for (auto const& s : steps) {
      QMatrix next = queue[i] * s;
      if (seen.insert(next).second) {
        wanted.erase(next);
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<Element> out;
  for (auto const& t : targets) {
    if (wanted.count(t.matrix())) {
      out.push_back(t);
    }
  }
  return out;
}

namespace {

std::optional<std::size_t> element_order(Element const& e, std::size_t cap) {
  QMatrix p = e.matrix();
  for (std::size_t k = 1; k <= cap; ++k) {
    if (p.is_identity()) {
      return k;
    }
    p = p * e.matrix();
  }
  return std::nullopt;
}

// Size of the finite subgroup generated by gens, or nullopt past cap.
std::optional<std::size_t> generated_order(CoxeterSystem const& sys,
                                           std::vector<Element> const& gens,
                                           std::size_t cap) {
  std::unordered_set<QMatrix, QMatrixHash> seen{QMatrix::identity(sys.rank())};
  std::vector<QMatrix> queue{QMatrix::identity(sys.rank())};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto const& g : gens) {
      QMatrix next = queue[i] * g.matrix();
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          return std::nullopt;
        }
        queue.push_back(std::move(next));
      }
    }
  }
  return seen.size();
}

std::vector<Element> kept_labels(ComponentPresentation const& cp,
                                 Recognition const& r) {
  std::vector<Element> out;
  for (std::size_t g : r.simplified.kept) {
    out.push_back(cp.generators[g].label);
  }
  return out;
}

Status faithfulness(Analysis const& a, std::size_t c) {
  CoxeterSystem const& sys = a.sys;
  Recognition const& r = a.recognitions[c].recognition;
  std::vector<Element> const labels = kept_labels(a.presentations[c], r);
  switch (r.kind) {
    case GroupKind::trivial:
      return Status::pass;
    case GroupKind::integers:
      return has_infinite_order(sys, labels.at(0)) ? Status::pass : Status::fail;
    case GroupKind::cyclic: {
      auto o = element_order(labels.at(0), r.order);
      return o && *o == r.order ? Status::pass : Status::fail;
    }
    case GroupKind::direct_product:
    case GroupKind::finite: {
      if (r.finite()) {
        auto o = generated_order(sys, labels, r.order);
        return o && *o == r.order ? Status::pass : Status::fail;
      }
      // Z/2 x Z: the involution must stay an involution and the free
      // generator must have infinite order; then no a^e t^k can vanish.
      Presentation const& p = r.simplified.presentation;
      for (std::size_t inv = 0; inv < 2; ++inv) {
        bool squared = false;
        for (auto const& rel : p.relators) {
          if (rel.size() == 2 && generator_of(rel[0]) == inv &&
              generator_of(rel[1]) == inv) {
            squared = true;
          }
        }
        if (!squared) {
          continue;
        }
        Element const& s = labels.at(inv);
        Element const& t = labels.at(1 - inv);
        bool const ok = !s.is_identity() && element_order(s, 2) == std::size_t{2} &&
                        has_infinite_order(sys, t);
        return ok ? Status::pass : Status::fail;
      }
      return Status::unknown;
    }
    case GroupKind::coxeter:
      return a.recognitions[c].certified_coxeter ? Status::pass : Status::unknown;
    case GroupKind::unknown:
      return Status::unknown;
  }
  return Status::unknown;
}

}  // namespace

Pi1Report check_pi1(Analysis const& a, std::size_t c) {
  CoxeterSystem const& sys = a.sys;
  ComponentPresentation const& cp = a.presentations[c];
  Element const& base = a.base_element(c);
  Pi1Report rep;

  std::vector<Element> all_labels;
  for (auto const& g : cp.generators) {
    all_labels.push_back(g.label);
  }
  rep.well_defined = std::all_of(
      cp.presentation.relators.begin(), cp.presentation.relators.end(),
      [&](Relator const& r) { return evaluate(sys, all_labels, r).is_identity(); });
  rep.central = std::all_of(all_labels.begin(), all_labels.end(),
                            [&](Element const& l) { return sys.commute(l, base); });

  auto const cent = centralizer_ball(sys, base, a.ball, a.opts.centralizer_radius);
  rep.centralizer_sample = cent.size();
  auto const missing = outside_generated(
      sys, kept_labels(cp, a.recognitions[c].recognition), cent, a.opts.subgroup_cap);
  rep.fullness = missing.empty() ? Status::pass : Status::unknown;
  rep.faithfulness = faithfulness(a, c);

  if (!rep.well_defined || !rep.central) {
    rep.status = Status::fail;
  } else {
    rep.status = combine(rep.fullness, rep.faithfulness);
  }
  return rep;
}

// ------------------------------------------------------------------ finite

FiniteReport finite_exact_check(Analysis const& a) {
  CoxeterSystem const& sys = a.sys;
  if (sys.type_class() != TypeClass::finite) {
    throw coxeter_error("finite_exact_check needs a finite system, got " +
                        to_string(sys.type_class()));
  }
  FiniteParabolic const w(sys, Subset::full(sys.rank()));
  auto const classes = conjugacy_classes(w);
  std::vector<std::size_t> class_of(w.order());
  for (std::size_t k = 0; k < classes.size(); ++k) {
    for (std::size_t x : classes[k]) {
      class_of[x] = k;
    }
  }
  FiniteReport rep;
  rep.classes = classes.size();
  rep.components = a.comps.size();
  std::vector<bool> hit(classes.size(), false);
  bool injective = true;
  Status orders = Status::pass;
  for (std::size_t c = 0; c < a.comps.size(); ++c) {
    std::size_t const x = *w.index_of(a.base_element(c));
    std::size_t const k = class_of[x];
    if (hit[k]) {
      injective = false;
    }
    hit[k] = true;
    std::size_t const centralizer = w.order() / classes[k].size();
    std::size_t const pi1 = a.recognitions[c].recognition.order;
    rep.orders.emplace_back(pi1, centralizer);
    if (pi1 == 0) {
      orders = combine(orders, Status::unknown);
    } else if (pi1 != centralizer) {
      orders = Status::fail;
    }
  }
  rep.bijective = injective && std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  rep.status = rep.bijective ? orders : Status::fail;
  return rep;
}

// ----------------------------------------------------------------- amalgam

AmalgamReport amalgam_vs_coxeter(CoxeterSystem const& sys) {
  AmalgamReport rep;
  Presentation colim;
  colim.generator_count = sys.rank();
  FacePoset const poset = spherical_subsets(sys);
  for (Subset t : poset.nodes()) {
    FiniteParabolic const p(sys, t);
    auto order_of = [&](Word const& w) {
      return p.element_order(*p.index_of(sys.from_word(w)));
    };
    auto const members = t.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
      std::size_t const s = static_cast<std::size_t>(members[i]);
      colim.relators.push_back(Relator(order_of({members[i]}), letter(s)));
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        std::size_t const u = static_cast<std::size_t>(members[j]);
        Relator r;
        for (std::size_t k = order_of({members[i], members[j]}); k > 0; --k) {
          r.push_back(letter(s));
          r.push_back(letter(u));
        }
        colim.relators.push_back(std::move(r));
      }
    }
  }
  rep.colimit = normalize(colim);
  rep.coxeter = normalize(coxeter_presentation(sys.matrix()));
  rep.status = rep.colimit.relators == rep.coxeter.relators &&
                       rep.colimit.generator_count == rep.coxeter.generator_count
                   ? Status::pass
                   : Status::fail;
  return rep;
}

// ------------------------------------------------------------------- lemma

LemmaReport lemma_groupoid_check(CoxeterSystem const& sys, Subset face,
                                 std::size_t radius) {
  LemmaReport rep;
  FacePoset const poset = spherical_subsets(sys);
  if (!poset.contains(face)) {
    throw coxeter_error("subset " + sys.subset_to_string(face) + " is not spherical");
  }
  FiniteParabolic const wi(sys, face);
  CayleyBall const ball = sys.ball(radius);
  for (FacetInSpace const& j : facets_in_ball(sys, poset, ball)) {
    if (!facet_contains_face(sys, j, face)) {
      continue;
    }
    ++rep.facets_in_star;
    std::unordered_set<FacetInSpace, FacetHash> orbit;
    for (Element const& w : wi.elements()) {
      FixCheck const fc = facet_fix_check(sys, w, j);
      ++rep.pairs_checked;
      if (fc.setwise != fc.pointwise || fc.pointwise != fc.member) {
        ++rep.fix_mismatches;
      }
      orbit.insert(translate(sys, w, j));
    }
    std::size_t at_chamber = 0;
    bool stays_in_star = true;
    for (FacetInSpace const& f : orbit) {
      if (f.coset_rep.is_identity()) {
        ++at_chamber;
      }
      if (!facet_contains_face(sys, f, face)) {
        stays_in_star = false;
      }
    }
    if (at_chamber != 1 || !stays_in_star) {
      ++rep.orbit_failures;
    }
  }
  rep.status = rep.fix_mismatches == 0 && rep.orbit_failures == 0 && rep.facets_in_star > 0
                   ? Status::pass
                   : Status::fail;
  return rep;
}

// ----------------------------------------------------------------- witness

WitnessReport pi0_infinite_witness(CoxeterSystem const& sys, std::size_t n,
                                   std::size_t pi0_size, std::size_t order_cap) {
  WitnessReport rep;
  rep.witnesses = translation_witnesses(sys, n);
  rep.pi0_size = pi0_size;
  std::vector<InvariantVector> inv;
  for (auto const& w : rep.witnesses) {
    inv.push_back(invariants(sys, w, order_cap));
  }
  bool distinct_orbits = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ++rep.pairs;
      if (separating_invariant(inv[i], inv[j])) {
        ++rep.non_conjugate_pairs;
      }
      if (!inv[i].translation_orbit || inv[i].translation_orbit == inv[j].translation_orbit) {
        distinct_orbits = false;
      }
    }
  }
  if (n == 1 && !inv[0].translation_orbit) {
    distinct_orbits = false;
  }
  rep.status = rep.non_conjugate_pairs == rep.pairs && distinct_orbits ? Status::pass
                                                                        : Status::fail;
  return rep;
}

// ------------------------------------------------------------------ report

TheoremReport verify_system(Analysis const& a, std::string const& name,
                            GoldenTable const& golden) {
  CoxeterSystem const& sys = a.sys;
  TheoremReport rep;
  rep.system = name;
  rep.type = sys.type_class();
  Status total = Status::pass;

  for (std::size_t c = 0; c < a.comps.size(); ++c) {
    ComponentSummary s;
    s.base = a.comps[c].base;
    s.size = a.comps[c].objects.size();
    s.pi1 = check_pi1(a, c);
    s.status = s.pi1.status;
    total = combine(total, s.status);
    rep.components.push_back(std::move(s));
  }

  rep.pi0 = check_pi0_injectivity(a);
  total = combine(total, rep.pi0.status);

  if (rep.type == TypeClass::finite) {
    rep.finite = finite_exact_check(a);
    total = combine(total, rep.finite->status);
  }

  rep.amalgam = amalgam_vs_coxeter(sys);
  total = combine(total, rep.amalgam.status);

  for (Subset t : a.cat.poset().nodes()) {
    LemmaReport l = lemma_groupoid_check(sys, t, a.opts.lemma_radius);
    total = combine(total, l.status);
    rep.lemma.emplace_back(t, std::move(l));
  }

  if (rep.type == TypeClass::affine) {
    rep.witness = pi0_infinite_witness(sys, a.opts.witness_count, a.comps.size(),
                                       a.opts.order_cap);
    total = combine(total, rep.witness->status);
  }

  auto it = golden.find(name);
  if (it != golden.end()) {
    GoldenEntry const& g = it->second;
    if (g.components != a.comps.size()) {
      rep.golden = Status::fail;
    }
    if (!g.pi1.empty()) {
      std::vector<std::string> got;
      bool unknown = false;
      for (std::size_t c = 0; c < a.comps.size(); ++c) {
        Recognition const& r = a.recognitions[c].recognition;
        unknown = unknown || r.kind == GroupKind::unknown;
        got.push_back(recognition_token(sys, r));
      }
      std::vector<std::string> want = g.pi1;
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      if (got != want) {
        rep.golden = combine(rep.golden, unknown ? Status::unknown : Status::fail);
      }
    }
  }
  total = combine(total, rep.golden);
  rep.overall = overall_of(total);
  return rep;
}

namespace {

nlohmann::json status_json(Status s) { return to_string(s); }

}  // namespace

nlohmann::json to_json(Analysis const& a, TheoremReport const& r) {
  CoxeterSystem const& sys = a.sys;
  nlohmann::json j;
  j["system"] = r.system;
  j["type_class"] = to_string(r.type);
  nlohmann::json poset = nlohmann::json::array();
  for (Subset t : a.cat.poset().nodes()) {
    poset.push_back(sys.subset_to_string(t));
  }
  j["spherical_poset"] = poset;

  nlohmann::json comps = nlohmann::json::array();
  for (std::size_t c = 0; c < a.comps.size(); ++c) {
    ComponentSummary const& s = r.components[c];
    Recognition const& rec = a.recognitions[c].recognition;
    nlohmann::json cj;
    cj["base"] = a.cat.object_to_string(s.base);
    nlohmann::json objs = nlohmann::json::array();
    for (std::size_t x : a.comps[c].objects) {
      objs.push_back(a.cat.object_to_string(x));
    }
    cj["objects"] = objs;

    nlohmann::json gens = nlohmann::json::array();
    for (std::size_t g : rec.simplified.kept) {
      gens.push_back(sys.word_to_string(a.presentations[c].generators[g].label.word()));
    }
    nlohmann::json rels = nlohmann::json::array();
    for (auto const& rel : rec.simplified.presentation.relators) {
      rels.push_back(relator_to_string(rel));
    }
    cj["pi1"] = {{"generators", gens},
                 {"relators", rels},
                 {"recognized", rec.to_string()},
                 {"raw_generators", a.presentations[c].generators.size()},
                 {"raw_relators", a.presentations[c].presentation.relators.size()},
                 {"well_defined", s.pi1.well_defined},
                 {"central", s.pi1.central},
                 {"fullness", status_json(s.pi1.fullness)},
                 {"faithfulness", status_json(s.pi1.faithfulness)},
                 {"centralizer_sample", s.pi1.centralizer_sample}};
    nlohmann::json verdicts = nlohmann::json::array();
    for (auto const& v : r.pi0.verdicts[c]) {
      verdicts.push_back(v.to_string(sys));
    }
    cj["pi0_verdicts"] = verdicts;
    cj["status"] = status_json(s.status);
    comps.push_back(std::move(cj));
  }
  j["components"] = comps;

  nlohmann::json claims;
  claims["amalgam"] = {{"status", status_json(r.amalgam.status)},
                       {"colimit", to_string(r.amalgam.colimit)},
                       {"coxeter", to_string(r.amalgam.coxeter)}};
  nlohmann::json lemma = nlohmann::json::array();
  for (auto const& [t, l] : r.lemma) {
    lemma.push_back({{"face", sys.subset_to_string(t)},
                     {"radius", a.opts.lemma_radius},
                     {"facets_in_star", l.facets_in_star},
                     {"pairs_checked", l.pairs_checked},
                     {"fix_mismatches", l.fix_mismatches},
                     {"orbit_failures", l.orbit_failures},
                     {"status", status_json(l.status)}});
  }
  claims["lemma_groupoid"] = lemma;
  if (r.witness) {
    nlohmann::json ws = nlohmann::json::array();
    for (auto const& w : r.witness->witnesses) {
      ws.push_back(sys.word_to_string(w.word()));
    }
    claims["pi0_witness"] = {{"witnesses", ws},
                             {"pi0", r.witness->pi0_size},
                             {"non_conjugate_pairs", r.witness->non_conjugate_pairs},
                             {"pairs", r.witness->pairs},
                             {"status", status_json(r.witness->status)}};
  } else {
    claims["pi0_witness"] = nullptr;
  }
  j["claims"] = claims;
  if (r.finite) {
    nlohmann::json orders = nlohmann::json::array();
    for (auto const& [p, c] : r.finite->orders) {
      orders.push_back({{"pi1", p}, {"centralizer", c}});
    }
    j["finite_exact"] = {{"classes", r.finite->classes},
                         {"components", r.finite->components},
                         {"bijective", r.finite->bijective},
                         {"orders", orders},
                         {"status", status_json(r.finite->status)}};
  }
  j["pi0_status"] = status_json(r.pi0.status);
  j["golden"] = status_json(r.golden);
  j["overall"] = to_string(r.overall);
  return j;
}

// -------------------------------------------------------------- decompose

namespace {

std::string system_label(CoxeterMatrix const& m) {
  if (m.rank() == 2) {
    return m(0, 1) == kInfinity ? "inf-dihedral" : "I2(" + label_to_string(m(0, 1)) + ")";
  }
  std::string out;
  for (std::size_t s = 0; s < m.rank(); ++s) {
    for (std::size_t t = s + 1; t < m.rank(); ++t) {
      out += (out.empty() ? "" : ",") + label_to_string(m(s, t));
    }
  }
  return out;
}

std::string factor_label(long f) { return f == 0 ? "Z" : "C" + std::to_string(f); }

}  // namespace

std::string decomposition(Analysis const& a) {
  CoxeterSystem const& sys = a.sys;
  std::string out;
  for (std::size_t c = 0; c < a.comps.size(); ++c) {
    Recognition const& r = a.recognitions[c].recognition;
    std::string group;
    bool const identity = a.base_element(c).is_identity();
    bool const whole =
        recognition_token(sys, r) == "W" ||
        (sys.type_class() == TypeClass::finite && identity && r.finite() &&
         r.order == a.cat.parabolic(a.cat.poset().size() - 1).order());
    if (whole) {
      group = "W(" + system_label(sys.matrix()) + ")";
    } else {
      switch (r.kind) {
        case GroupKind::trivial:
          group = "1";
          break;
        case GroupKind::integers:
          group = "Z";
          break;
        case GroupKind::cyclic:
          group = factor_label(r.factors.at(0));
          break;
        case GroupKind::direct_product: {
          group = "(";
          for (std::size_t i = 0; i < r.factors.size(); ++i) {
            group += (i ? " x " : "") + factor_label(r.factors[i]);
          }
          group += ")";
          break;
        }
        case GroupKind::finite:
          group = "G(" + std::to_string(r.order) + ")";
          break;
        case GroupKind::coxeter:
          group = "W(" + system_label(*r.coxeter) + ")";
          break;
        case GroupKind::unknown:
          group = "?";
          break;
      }
    }
    out += (c ? " ⊔ " : "") + std::string("•/") + group;
  }
  return out;
}

}  // namespace reflectrace
