// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "properties.hpp"
#include "reflectrace/conj.hpp"
#include "reflectrace/verify.hpp"
#include "support.hpp"

namespace rt = reflectrace;
using rt_test::shipped_system;

namespace {

// Time limits per criterion, in seconds.
constexpr double kSmallLimit = 5.0;
constexpr double kLargeLimit = 60.0;
constexpr std::size_t kCentralizerRadius = 6;
constexpr std::size_t kSampledElements = 10;
constexpr std::uint64_t kSampleSeed = 0x23;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, std::string const& what) {
    if (!ok) {
      if (pass) {
        detail << what;
      }
      pass = false;
    }
  }
};

rt::GoldenTable const& golden() {
  static rt::GoldenTable const g = rt::load_golden(REFLECTRACE_GOLDEN_PATH);
  return g;
}

std::vector<std::string> recognized(rt::Analysis const& a) {
  std::vector<std::string> out;
  for (auto const& r : a.recognitions) {
    out.push_back(r.recognition.to_string());
  }
  return out;
}

std::string join(std::vector<std::string> const& v) {
  std::string out;
  for (auto const& s : v) {
    out += (out.empty() ? "" : ", ") + s;
  }
  return out;
}

struct Loaded {
  rt::SystemConfig cfg;
  rt::CoxeterSystem sys;
  explicit Loaded(std::string const& name)
      : cfg(rt_test::load_shipped(name)), sys(cfg.system()) {}
};

void affine_a1(Outcome& o) {
  Loaded const l("affine_a1");
  rt::Analysis const a(l.sys, l.cfg.verify_options());
  auto const rep = rt::verify_system(a, l.cfg.name, golden());
  o.require(a.comps.size() == 3, "component count " + std::to_string(a.comps.size()));
  o.require(recognized(a) == std::vector<std::string>{"Coxeter(inf)", "Z/2", "Z/2"},
            "recognized " + join(recognized(a)));
  o.require(a.recognitions[0].certified_coxeter, "identity component not certified");
  auto const v = rt::conjugacy_decide(l.sys, l.sys.generator(0), l.sys.generator(1),
                                      a.opts.conj_radius);
  o.require(v.to_string(l.sys) == "NotConjugate(abelianization)",
            "s0 vs s1: " + v.to_string(l.sys));
  o.require(rep.overall == rt::Overall::verified, "overall " + rt::to_string(rep.overall));
}

void affine_a2(Outcome& o) {
  Loaded const l("affine_a2");
  auto const& sys = l.sys;
  rt::Analysis const a(sys, l.cfg.verify_options());
  auto const rep = rt::verify_system(a, l.cfg.name, golden());
  o.require(a.comps.size() == 5, "component count " + std::to_string(a.comps.size()));
  std::size_t reflection = 0;
  std::vector<std::size_t> rotations;
  for (std::size_t c = 0; c < a.comps.size(); ++c) {
    auto const& r = a.recognitions[c].recognition;
    if (a.cat.type_of(a.comps[c].base).size() == 1) {
      reflection = c;
    }
    if (r.to_string() == "Z/3") {
      rotations.push_back(c);
    }
  }
  auto const& refl = a.recognitions[reflection].recognition;
  o.require(refl.kind == rt::GroupKind::direct_product && refl.factors == std::vector<long>{2, 0},
            "reflection component " + refl.to_string());
  for (int s = 0; s < 3; ++s) {
    for (int t = s + 1; t < 3; ++t) {
      auto const v = rt::conjugacy_decide(sys, sys.generator(s), sys.generator(t), a.ball,
                                          a.opts.conj_radius);
      bool const ok = v.kind == rt::VerdictKind::conjugate &&
                      sys.conjugate(*v.conjugator, sys.generator(s)) == sys.generator(t);
      o.require(ok, "reflections " + std::to_string(s) + "," + std::to_string(t) + ": " +
                        v.to_string(sys));
    }
  }
  o.require(rotations.size() == 3, "rotation components " + std::to_string(rotations.size()));
  for (std::size_t i = 0; i < rotations.size(); ++i) {
    for (std::size_t j = i + 1; j < rotations.size(); ++j) {
      auto const text = rep.pi0.verdicts[rotations[i]][rotations[j]].to_string(sys);
      o.require(text == "NotConjugate(folded_fixed_point)", "rotations: " + text);
    }
  }
  // The identity component's simplified presentation, with generators
  // labelled by the simple reflections, is the Coxeter presentation.
  auto const& id = a.recognitions[0];
  auto const& simplified = id.recognition.simplified;
  bool labels_simple = simplified.kept.size() == sys.rank();
  for (std::size_t g = 0; labels_simple && g < simplified.kept.size(); ++g) {
    labels_simple = a.presentations[0].generators[simplified.kept[g]].label ==
                    sys.generator(static_cast<int>(g));
  }
  o.require(id.certified_coxeter && labels_simple &&
                rt::to_string(rt::normalize(simplified.presentation)) ==
                    rt::to_string(rt::normalize(rt::coxeter_presentation(sys.matrix()))),
            "identity component " + rt::to_string(simplified.presentation));
  o.require(rep.overall == rt::Overall::verified, "overall " + rt::to_string(rep.overall));
}

void triangle(Outcome& o) {
  Loaded const l("triangle_23inf");
  auto const& sys = l.sys;
  rt::Analysis const a(sys, l.cfg.verify_options());
  auto const rep = rt::verify_system(a, l.cfg.name, golden());
  o.require(a.comps.size() == 5, "component count " + std::to_string(a.comps.size()));
  std::vector<std::string> tokens;
  for (auto const& r : a.recognitions) {
    tokens.push_back(rt::recognition_token(sys, r.recognition));
  }
  std::sort(tokens.begin(), tokens.end());
  std::vector<std::string> expected = {"W", "Z/2 x Z/2", "Z/2 x Z/2", "Z/2 x Z/2", "Z/3"};
  std::sort(expected.begin(), expected.end());
  o.require(tokens == expected, "recognized " + join(tokens));
  o.require(a.recognitions[0].certified_coxeter, "identity component not certified");

  // Sample (I, w) over the nonempty spherical I.
  std::vector<std::size_t> candidates;
  for (std::size_t obj = 0; obj < a.cat.objects().size(); ++obj) {
    if (!a.cat.type_of(obj).empty()) {
      candidates.push_back(obj);
    }
  }
  rt_test::Rng rng(kSampleSeed);
  for (std::size_t k = candidates.size() - 1; k > 0; --k) {
    std::swap(candidates[k], candidates[rng.index(k + 1)]);
  }
  candidates.resize(kSampledElements);
  for (std::size_t obj : candidates) {
    auto const& w = a.cat.element_of(obj);
    rt::FiniteParabolic const& p = a.cat.parabolic(a.cat.objects()[obj].type);
    std::string const where = a.cat.object_to_string(obj);
    auto const ball_c = rt::centralizer_ball(sys, w, a.ball, kCentralizerRadius);

    std::vector<std::size_t> in_parabolic;
    for (auto const& g : ball_c) {
      if (auto i = p.index_of(g)) {
        in_parabolic.push_back(*i);
      }
    }
    std::sort(in_parabolic.begin(), in_parabolic.end());
    o.require(in_parabolic == rt::centralizer_in_parabolic(p, w),
              where + ": ball centralizer meets W_I wrongly");

    std::size_t const c = a.component_of(obj);
    auto const& comp = a.comps[c];
    auto const pos = std::lower_bound(comp.objects.begin(), comp.objects.end(), obj) -
                     comp.objects.begin();
    rt::Element const& u = comp.certificates[static_cast<std::size_t>(pos)];
    std::vector<rt::Element> images;
    for (auto const& g : a.presentations[c].generators) {
      images.push_back(sys.conjugate(u, g.label));
    }
    auto const missing = rt::outside_generated(sys, images, ball_c, a.opts.subgroup_cap);
    o.require(missing.empty(), where + ": " + std::to_string(missing.size()) +
                                   " centralizer elements outside the image");
  }
  o.require(rep.overall == rt::Overall::verified, "overall " + rt::to_string(rep.overall));
}

void finite(Outcome& o, std::string const& name, int dihedral_m) {
  Loaded const l(name);
  rt::Analysis const a(l.sys, l.cfg.verify_options());
  auto const f = rt::finite_exact_check(a);
  std::vector<std::size_t> oracle =
      dihedral_m ? rt_test::Dihedral{dihedral_m}.class_centralizers() : std::vector<std::size_t>{2, 2};
  o.require(f.components == oracle.size(), name + ": " + std::to_string(f.components) +
                                               " components vs " +
                                               std::to_string(oracle.size()) + " classes");
  std::vector<std::size_t> pi1;
  for (auto [p, c] : f.orders) {
    o.require(p == c, name + ": pi1 order " + std::to_string(p) + " vs centralizer " +
                          std::to_string(c));
    pi1.push_back(p);
  }
  std::sort(pi1.begin(), pi1.end());
  o.require(pi1 == oracle, name + ": pi1 orders disagree with the class oracle");
  o.require(f.status == rt::Status::pass, name + ": status " + rt::to_string(f.status));
}

void amalgam(Outcome& o) {
  for (auto const& name : rt_test::shipped_names()) {
    auto const r = rt::amalgam_vs_coxeter(shipped_system(name));
    o.require(r.status == rt::Status::pass, name + ": " + rt::to_string(r.colimit) + " vs " +
                                                rt::to_string(r.coxeter));
  }
}

void lemma(Outcome& o) {
  for (auto const* name : {"affine_a1", "affine_a2"}) {
    auto const sys = shipped_system(name);
    rt::FacePoset const poset = rt::spherical_subsets(sys);
    for (auto t : poset.nodes()) {
      auto const r = rt::lemma_groupoid_check(sys, t, 4);
      o.require(r.status == rt::Status::pass,
                std::string(name) + " " + sys.subset_to_string(t) + ": " +
                    std::to_string(r.fix_mismatches) + " fix mismatches, " +
                    std::to_string(r.orbit_failures) + " orbit failures");
    }
  }
}

void witnesses(Outcome& o) {
  for (auto [name, expected] : {std::pair<char const*, std::size_t>{"affine_a1", 3},
                                {"affine_a2", 5}}) {
    auto const sys = shipped_system(name);
    std::size_t const pi0 = rt::components(rt::GCCategory(sys)).size();
    auto const r = rt::pi0_infinite_witness(sys, 10, pi0);
    o.require(pi0 == expected, std::string(name) + ": pi0 " + std::to_string(pi0));
    o.require(r.witnesses.size() == 10 && r.non_conjugate_pairs == 45 && r.pairs == 45 &&
                  r.status == rt::Status::pass,
              std::string(name) + ": " + std::to_string(r.non_conjugate_pairs) + "/" +
                  std::to_string(r.pairs) + " pairs separated");
  }
}

void properties(Outcome& o) {
  std::vector<rt_test::PropertyResult> const results = {
      rt_test::scalar_field_axioms(0x5ca1a2, 300),
      rt_test::scalar_sign_consistency(0x51e9, 500),
      rt_test::reflection_involution_and_form(),
      rt_test::fold_orbit_canonical(0xf01d, 200),
      rt_test::stabilizer_equals_fixator("affine_a1", 3),
      rt_test::stabilizer_equals_fixator("affine_a2", 3),
      rt_test::invariant_conjugation_invariance(0xc0c0, 100),
      rt_test::phi_soundness_and_centrality(),
  };
  std::size_t checked = 0;
  for (auto const& r : results) {
    checked += r.checked;
    o.require(r.ok(), r.name + ": " + std::to_string(r.violations) + " violations, first " +
                          r.first_violation);
  }
  if (o.pass) {
    o.detail << checked << " cases";
  }
}

bool run(int number, std::string const& title, double limit_seconds,
         std::function<void(Outcome&)> const& body) {
  Outcome o;
  auto const start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (std::exception const& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  double const seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0) {
    o.require(seconds < limit_seconds, "over the time limit");
  }
  std::cout << (o.pass ? "PASS" : "FAIL") << "  " << number << ". " << title << " ("
            << std::fixed;
  std::cout.precision(2);
  std::cout << seconds << " s)";
  std::string const detail = o.detail.str();
  if (!detail.empty()) {
    std::cout << ": " << detail;
  }
  std::cout << std::endl;
  return o.pass;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run(1, "affine A1 golden", kSmallLimit, affine_a1);
  ok &= run(2, "affine A2 golden", kLargeLimit, affine_a2);
  ok &= run(3, "(2,3,inf) golden", kLargeLimit, triangle);
  ok &= run(4, "finite exhaustive", 0, [](Outcome& o) {
    struct Case {
      char const* name;
      int m;  // dihedral parameter, 0 for A1
    };
    for (Case c : {Case{"a1", 0}, Case{"a1xa1", 2}, Case{"a2", 3}, Case{"b2", 4}, Case{"g2", 6}}) {
      auto const start = std::chrono::steady_clock::now();
      finite(o, c.name, c.m);
      double const s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      o.require(s < kSmallLimit, std::string(c.name) + " over the time limit");
    }
  });
  ok &= run(5, "amalgam matches the Coxeter presentation", 0, amalgam);
  ok &= run(6, "groupoid lemma on affine A1 and A2", 0, lemma);
  ok &= run(7, "translation witnesses", 0, witnesses);
  ok &= run(8, "property suites", 0, properties);
  std::cout << (ok ? "all criteria pass" : "some criteria fail") << std::endl;
  return ok ? 0 : 1;
}
