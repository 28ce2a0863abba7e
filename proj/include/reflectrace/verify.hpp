#pragma once

// Checks of the comparison map from the glued traces of the finite
// parabolics to the trace of W, and of the supporting claims, assembled
// into a report.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "reflectrace/conj.hpp"
#include "reflectrace/hocolim.hpp"

namespace reflectrace {

enum class Status { pass, unknown, fail };
std::string to_string(Status s);
// fail beats unknown beats pass.
Status combine(Status a, Status b);

enum class Overall { verified, verified_with_unknowns, failed };
std::string to_string(Overall o);
Overall overall_of(Status s);
int exit_code(Overall o);  // 0, 10, 20

struct VerifyOptions {
  std::size_t conj_radius = 6;
  std::size_t centralizer_radius = 6;
  std::size_t order_cap = kDefaultOrderCap;
  std::size_t coset_cap = 50000;
  std::size_t ball_cap = 200000;
  std::size_t lemma_radius = 4;
  std::size_t witness_count = 10;
  // Bound on elements visited by the subgroup search in fullness checks.
  std::size_t subgroup_cap = 20000;
};

// Expected answers keyed by system name.
struct GoldenEntry {
  std::size_t components = 0;
  // Recognition tokens; "W" stands for the Coxeter group of the system.
  std::vector<std::string> pi1;
};
using GoldenTable = std::map<std::string, GoldenEntry>;
GoldenTable parse_golden(nlohmann::json const& j);
GoldenTable load_golden(std::string const& path);

// A precomputed analysis shared by the checks.
struct Analysis {
  explicit Analysis(CoxeterSystem const& sys, VerifyOptions const& opts = {},
                    CayleyBall const* ball = nullptr);

  CoxeterSystem const& sys;
  VerifyOptions opts;
  GCCategory cat;
  std::vector<Component> comps;
  std::vector<ComponentPresentation> presentations;
  std::vector<ComponentRecognition> recognitions;
  CayleyBall ball;  // radius max(conj_radius, centralizer_radius)

  Element const& base_element(std::size_t c) const {
    return cat.element_of(comps[c].base);
  }
  // Index of the component containing an object.
  std::size_t component_of(std::size_t object) const;
};

// Text used for golden comparison: "W" when the recognized group is the
// Coxeter group of the system itself.
std::string recognition_token(CoxeterSystem const& sys, Recognition const& r);

struct Pi0Report {
  // verdicts[i][j] for components i != j; the diagonal holds Conjugate(e).
  std::vector<std::vector<ConjugacyVerdict>> verdicts;
  Status status = Status::pass;
};
Pi0Report check_pi0_injectivity(Analysis const& a);

struct Pi1Report {
  bool well_defined = false;  // raw relators map to the identity
  bool central = false;       // labels commute with the base element
  Status fullness = Status::unknown;
  Status faithfulness = Status::unknown;
  std::size_t centralizer_sample = 0;
  Status status = Status::unknown;
};
Pi1Report check_pi1(Analysis const& a, std::size_t component);

// Elements of `targets` not found in the subgroup generated by `gens`
// within `cap` visited elements.
std::vector<Element> outside_generated(CoxeterSystem const& sys,
                                       std::vector<Element> const& gens,
                                       std::vector<Element> const& targets,
                                       std::size_t cap);

struct FiniteReport {
  std::size_t classes = 0;
  std::size_t components = 0;
  bool bijective = false;
  // Per component: recognized pi1 order and centralizer order.
  std::vector<std::pair<std::size_t, std::size_t>> orders;
  Status status = Status::fail;
};
// Throws coxeter_error unless the system is finite.
FiniteReport finite_exact_check(Analysis const& a);

struct AmalgamReport {
  Presentation colimit;
  Presentation coxeter;
  Status status = Status::fail;
};
AmalgamReport amalgam_vs_coxeter(CoxeterSystem const& sys);

struct LemmaReport {
  std::size_t facets_in_star = 0;
  std::size_t pairs_checked = 0;
  std::size_t fix_mismatches = 0;
  std::size_t orbit_failures = 0;
  Status status = Status::fail;
};
LemmaReport lemma_groupoid_check(CoxeterSystem const& sys, Subset face, std::size_t radius);

struct WitnessReport {
  std::vector<Element> witnesses;
  std::size_t pi0_size = 0;
  std::size_t non_conjugate_pairs = 0;
  std::size_t pairs = 0;
  Status status = Status::fail;
};
// Throws coxeter_error unless the system is affine.
WitnessReport pi0_infinite_witness(CoxeterSystem const& sys, std::size_t n,
                                   std::size_t pi0_size,
                                   std::size_t order_cap = kDefaultOrderCap);

struct ComponentSummary {
  std::size_t base;
  std::size_t size;
  Pi1Report pi1;
  Status status = Status::pass;
};

struct TheoremReport {
  std::string system;
  TypeClass type;
  std::vector<ComponentSummary> components;
  Pi0Report pi0;
  std::optional<FiniteReport> finite;
  AmalgamReport amalgam;
  std::vector<std::pair<Subset, LemmaReport>> lemma;
  std::optional<WitnessReport> witness;
  Status golden = Status::pass;  // component count and pi1 multiset
  Overall overall = Overall::verified;
};

TheoremReport verify_system(Analysis const& a, std::string const& name,
                            GoldenTable const& golden);

nlohmann::json to_json(Analysis const& a, TheoremReport const& r);

// Decomposition of the glued side, e.g. "•/W(inf-dihedral) ⊔ •/C2 ⊔ •/C2".
std::string decomposition(Analysis const& a);

}  // namespace reflectrace
