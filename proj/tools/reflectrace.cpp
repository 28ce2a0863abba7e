// Command-line front end.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "reflectrace/config.hpp"
#include "reflectrace/conj.hpp"
#include "reflectrace/facets.hpp"
#include "reflectrace/hocolim.hpp"
#include "reflectrace/parabolics.hpp"
#include "reflectrace/verify.hpp"

#ifndef REFLECTRACE_GOLDEN_PATH
#define REFLECTRACE_GOLDEN_PATH "data/golden.json"
#endif

namespace rt = reflectrace;

namespace {

constexpr int kUsageError = 2;

struct Loaded {
  rt::SystemConfig cfg;
  rt::CoxeterSystem sys;
};

Loaded load(std::string const& path) {
  rt::SystemConfig cfg = rt::load_config(path);
  try {
    rt::CoxeterSystem sys = cfg.system();
    return Loaded{std::move(cfg), std::move(sys)};
  } catch (rt::coxeter_error const& e) {
    throw rt::config_error(0, e.what());
  }
}

rt::Subset subset_or_throw(rt::CoxeterSystem const& sys, std::string const& text) {
  auto t = sys.parse_subset(text);
  if (!t) {
    throw rt::config_error(0, "cannot parse subset '" + text + "'");
  }
  return *t;
}

std::optional<rt::CayleyBall> cached_ball(rt::CoxeterSystem const& sys,
                                          rt::VerifyOptions const& opts) {
  auto cache = rt::BallCache::from_environment();
  if (!cache) {
    return std::nullopt;
  }
  std::size_t const radius = std::max(opts.conj_radius, opts.centralizer_radius);
  return cache->load_or_build(sys, radius, opts.ball_cap);
}

int cmd_facets(Loaded const& l, std::size_t radius) {
  rt::FacePoset const poset = rt::spherical_subsets(l.sys);
  std::cout << "system " << l.cfg.name << " (" << rt::to_string(l.sys.type_class()) << ")\n";
  std::cout << "spherical subsets:";
  for (rt::Subset t : poset.nodes()) {
    std::cout << " " << l.sys.subset_to_string(t);
  }
  std::cout << "\n";
  auto const facets = rt::facets_in_ball(l.sys, poset, l.sys.ball(radius));
  std::cout << "facets with coset representative of length <= " << radius << ": "
            << facets.size() << "\n";
  for (auto const& f : facets) {
    std::cout << "  " << l.sys.subset_to_string(f.type) << " "
              << l.sys.word_to_string(f.coset_rep.word()) << "\n";
  }
  return 0;
}

int cmd_trace(Loaded const& l, std::string const& subset) {
  rt::Subset const t = subset_or_throw(l.sys, subset);
  rt::FiniteParabolic const p(l.sys, t);
  auto const trace = rt::trace_decomposition(p);
  std::cout << "W_T for T = " << l.sys.subset_to_string(t) << ": order " << p.order()
            << ", " << trace.size() << " conjugacy classes\n";
  for (auto const& s : trace) {
    std::cout << "  " << l.sys.word_to_string(p.canonical_word(s.representative))
              << ": class size " << s.class_members.size() << ", centralizer order "
              << s.centralizer.size() << "\n";
  }
  return 0;
}

int cmd_hocolim(Loaded const& l) {
  rt::VerifyOptions const opts = l.cfg.verify_options();
  rt::GCCategory const cat(l.sys);
  auto const comps = rt::components(cat);
  rt::RecognizeOptions ropts;
  ropts.coset_cap = opts.coset_cap;
  std::cout << "objects " << cat.objects().size() << ", morphisms "
            << cat.morphisms().size() << ", triangles " << cat.triangles().size()
            << ", components " << comps.size() << "\n";
  for (auto const& c : comps) {
    auto const cp = rt::pi1_presentation(cat, c);
    auto const r = rt::recognize_component(cat, cp, ropts);
    std::cout << "  base " << cat.object_to_string(c.base) << ", " << c.objects.size()
              << " objects, pi1 " << r.recognition.to_string() << " "
              << rt::to_string(r.recognition.simplified.presentation) << "\n";
  }
  return 0;
}

int cmd_verify(Loaded const& l, std::optional<std::size_t> radius,
               std::string const& json_path, std::string const& golden_path) {
  rt::VerifyOptions opts = l.cfg.verify_options();
  if (radius) {
    opts.conj_radius = *radius;
    opts.centralizer_radius = *radius;
  }
  rt::GoldenTable const golden = rt::load_golden(golden_path);
  auto const ball = cached_ball(l.sys, opts);
  rt::Analysis const a(l.sys, opts, ball ? &*ball : nullptr);
  rt::TheoremReport const rep = rt::verify_system(a, l.cfg.name, golden);

  std::cout << "system " << rep.system << " (" << rt::to_string(rep.type) << "), "
            << rep.components.size() << " components\n";
  for (std::size_t c = 0; c < rep.components.size(); ++c) {
    auto const& s = rep.components[c];
    std::cout << "  " << a.cat.object_to_string(s.base) << ": " << s.size
              << " objects, pi1 " << a.recognitions[c].recognition.to_string()
              << ", full " << rt::to_string(s.pi1.fullness) << ", faithful "
              << rt::to_string(s.pi1.faithfulness) << " -> " << rt::to_string(s.status)
              << "\n";
  }
  std::cout << "pi0 injectivity: " << rt::to_string(rep.pi0.status) << "\n";
  if (rep.finite) {
    std::cout << "finite exhaustive: " << rt::to_string(rep.finite->status) << "\n";
  }
  std::cout << "amalgam vs Coxeter presentation: " << rt::to_string(rep.amalgam.status)
            << "\n";
  rt::Status lemma = rt::Status::pass;
  for (auto const& [t, r] : rep.lemma) {
    lemma = rt::combine(lemma, r.status);
  }
  std::cout << "groupoid lemma: " << rt::to_string(lemma) << "\n";
  if (rep.witness) {
    std::cout << "translation witnesses: " << rep.witness->witnesses.size() << " vs "
              << rep.witness->pi0_size << " components: "
              << rt::to_string(rep.witness->status) << "\n";
  }
  std::cout << "golden: " << rt::to_string(rep.golden) << "\n";
  std::cout << "overall: " << rt::to_string(rep.overall) << "\n";

  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "error: cannot write " << json_path << "\n";
      return kUsageError;
    }
    out << rt::to_json(a, rep).dump(2) << "\n";
  }
  return rt::exit_code(rep.overall);
}

int cmd_decompose(Loaded const& l) {
  rt::VerifyOptions opts = l.cfg.verify_options();
  opts.conj_radius = 0;
  opts.centralizer_radius = 0;
  rt::Analysis const a(l.sys, opts);
  std::cout << rt::decomposition(a) << "\n";
  return 0;
}

int cmd_witness(Loaded const& l, std::size_t n) {
  if (l.sys.type_class() != rt::TypeClass::affine) {
    std::cerr << "error: witness-pi0 needs an affine system, " << l.cfg.name << " is "
              << rt::to_string(l.sys.type_class()) << "\n";
    return kUsageError;
  }
  rt::GCCategory const cat(l.sys);
  std::size_t const pi0 = rt::components(cat).size();
  auto const rep = rt::pi0_infinite_witness(l.sys, n, pi0, l.cfg.verify_options().order_cap);
  for (auto const& w : rep.witnesses) {
    std::cout << l.sys.word_to_string(w.word()) << "\n";
  }
  std::cout << rep.witnesses.size() << " pairwise non-conjugate translations ("
            << rep.non_conjugate_pairs << "/" << rep.pairs << " pairs separated); "
            << "components of the glued side: " << pi0 << "\n";
  return rep.status == rt::Status::pass ? 0 : 20;
}

int cmd_lemma(Loaded const& l, std::string const& subset, std::size_t radius) {
  rt::Subset const t = subset_or_throw(l.sys, subset);
  auto const rep = rt::lemma_groupoid_check(l.sys, t, radius);
  std::cout << "face " << l.sys.subset_to_string(t) << ", radius " << radius << ": "
            << rep.facets_in_star << " facets in the star, " << rep.pairs_checked
            << " pairs, " << rep.fix_mismatches << " fix mismatches, "
            << rep.orbit_failures << " orbit failures: " << rt::to_string(rep.status)
            << "\n";
  return rep.status == rt::Status::pass ? 0 : 20;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Traces of Coxeter groups glued from finite parabolics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", rt::kVersion);

  std::string cfg_path;
  std::string subset;
  std::string json_path;
  std::string golden_path = REFLECTRACE_GOLDEN_PATH;
  std::optional<std::size_t> radius;
  std::size_t facet_radius = 2;
  std::size_t n = 10;
  std::size_t lemma_radius = 4;

  auto* facets = app.add_subcommand("facets", "List spherical subsets and facets in a ball");
  facets->add_option("config", cfg_path)->required();
  facets->add_option("-L,--radius", facet_radius, "Coset representative length bound");

  auto* trace = app.add_subcommand("trace", "Conjugacy classes of a finite parabolic");
  trace->add_option("config", cfg_path)->required();
  trace->add_option("--subset", subset, "e.g. {s0,s1}")->required();

  auto* hocolim = app.add_subcommand("hocolim", "Components and fundamental groups");
  hocolim->add_option("config", cfg_path)->required();

  auto* verify = app.add_subcommand("verify", "Run every check and report");
  verify->add_option("config", cfg_path)->required();
  verify->add_option("--radius", radius, "Search radius for conjugacy and centralizers");
  verify->add_option("--json", json_path, "Write the JSON report here");
  verify->add_option("--golden", golden_path, "Golden table");

  auto* decompose = app.add_subcommand("decompose", "Print the decomposition into components");
  decompose->add_option("config", cfg_path)->required();

  auto* witness = app.add_subcommand("witness-pi0", "Pairwise non-conjugate translations");
  witness->add_option("config", cfg_path)->required();
  witness->add_option("-n", n, "Number of witnesses")->check(CLI::PositiveNumber);

  auto* lemma = app.add_subcommand("check-lemma", "Facet stabilizers in the star of a face");
  lemma->add_option("config", cfg_path)->required();
  lemma->add_option("--subset", subset)->required();
  lemma->add_option("-L", lemma_radius, "Ball radius");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForVersion const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    Loaded const l = load(cfg_path);
    if (*facets) {
      return cmd_facets(l, facet_radius);
    }
    if (*trace) {
      return cmd_trace(l, subset);
    }
    if (*hocolim) {
      return cmd_hocolim(l);
    }
    if (*verify) {
      return cmd_verify(l, radius, json_path, golden_path);
    }
    if (*decompose) {
      return cmd_decompose(l);
    }
    if (*witness) {
      return cmd_witness(l, n);
    }
    if (*lemma) {
      return cmd_lemma(l, subset, lemma_radius);
    }
  } catch (rt::config_error const& e) {
    std::cerr << cfg_path << ": " << e.what() << "\n";
    return kUsageError;
  } catch (rt::coxeter_error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
