#include <unordered_set>

#include "doctest.h"
#include "properties.hpp"
#include "reflectrace/facets.hpp"
#include "support.hpp"

namespace rt = reflectrace;
using rt_test::shipped_system;

namespace {

std::vector<std::string> names(rt::CoxeterSystem const& sys, rt::FacePoset const& p) {
  std::vector<std::string> out;
  for (auto t : p.nodes()) {
    out.push_back(sys.subset_to_string(t));
  }
  return out;
}

}  // namespace

TEST_SUITE("facets") {
TEST_CASE("spherical subsets") {
  auto const a1t = shipped_system("affine_a1");
  CHECK(names(a1t, rt::spherical_subsets(a1t)) ==
        std::vector<std::string>{"{}", "{s0}", "{s1}"});
  auto const a2t = shipped_system("affine_a2");
  CHECK(rt::spherical_subsets(a2t).size() == 7);
  CHECK_FALSE(rt::spherical_subsets(a2t).contains(rt::Subset::full(3)));
  auto const tri = shipped_system("triangle_23inf");
  CHECK(names(tri, rt::spherical_subsets(tri)) ==
        std::vector<std::string>{"{}", "{a}", "{b}", "{c}", "{a,b}", "{a,c}"});
  auto const g2 = shipped_system("g2");
  CHECK(rt::spherical_subsets(g2).contains(rt::Subset::full(2)));
}

TEST_CASE("spherical certificate by minors") {
  for (auto const& name : rt_test::shipped_names()) {
    auto const sys = shipped_system(name);
    auto const poset = rt::spherical_subsets(sys);
    for (std::uint32_t bits = 0; bits < (1U << sys.rank()); ++bits) {
      rt::Subset const t(bits);
      auto const minors = rt::spherical_minors(sys, t);
      bool all_positive = true;
      for (auto const& m : minors) {
        all_positive = all_positive && m.sign() == rt::Sign::positive;
      }
      CHECK(poset.contains(t) == all_positive);
      CHECK(rt::is_spherical(sys, t) == all_positive);
    }
  }
}

TEST_CASE("poset shape") {
  for (auto const& name : rt_test::shipped_names()) {
    auto const sys = shipped_system(name);
    auto const poset = rt::spherical_subsets(sys);
    CHECK(poset.nodes().front().empty());
    for (auto [i, j] : poset.covers()) {
      CHECK(poset.nodes()[i].is_subset_of(poset.nodes()[j]));
      CHECK(poset.nodes()[i].size() + 1 == poset.nodes()[j].size());
    }
    // Downward closed.
    for (auto t : poset.nodes()) {
      for (int s : t.members()) {
        CHECK(poset.contains(t.without(s)));
      }
    }
    if (sys.type_class() == rt::TypeClass::finite) {
      CHECK(poset.nodes().back() == rt::Subset::full(sys.rank()));
      CHECK(poset.supersets(0).size() == poset.size());
    }
  }
}

TEST_CASE("facets in a ball") {
  auto const a1t = shipped_system("affine_a1");
  CHECK(rt::facets_in_ball(a1t, 2).size() == 11);
  CHECK(rt::facets_in_ball(a1t, 0).size() == 3);
  auto const a2t = shipped_system("affine_a2");
  CHECK(rt::facets_in_ball(a2t, 0).size() == 7);
  // Left translation by w carries the L-ball facets into the (L+|w|)-ball.
  auto const small = rt::facets_in_ball(a2t, 2);
  auto const big = rt::facets_in_ball(a2t, 3);
  std::unordered_set<rt::FacetInSpace, rt::FacetHash> const bigset(big.begin(), big.end());
  for (int s = 0; s < 3; ++s) {
    for (auto const& f : small) {
      CHECK(bigset.count(rt::translate(a2t, a2t.generator(s), f)) == 1);
    }
  }
}

TEST_CASE("orbit transversal") {
  for (auto const* name : {"affine_a1", "affine_a2", "triangle_23inf", "b2"}) {
    auto const sys = shipped_system(name);
    for (auto const& f : rt::facets_in_ball(sys, 3)) {
      rt::QVector const p = sys.act(f.coset_rep, rt::generic_point(sys, f.type));
      auto const folded = sys.fold(p);
      CHECK(rt::face_type(folded.q) == f.type);
      CHECK(rt::in_closed_face(folded.q, f.type));
    }
  }
}

TEST_CASE("fix checks") {
  auto const a1t = shipped_system("affine_a1");
  auto const vertex = rt::make_facet(a1t, a1t.identity(), rt::Subset::of({0}));
  auto const alcove = rt::make_facet(a1t, a1t.identity(), rt::Subset());
  auto const c1 = rt::facet_fix_check(a1t, a1t.generator(0), vertex);
  CHECK((c1.setwise && c1.pointwise && c1.member));
  auto const c2 = rt::facet_fix_check(a1t, a1t.generator(0), alcove);
  CHECK_FALSE((c2.setwise || c2.pointwise || c2.member));
  auto const c3 = rt::facet_fix_check(a1t, a1t.identity(), alcove);
  CHECK((c3.setwise && c3.pointwise && c3.member));
  // Minimal coset representatives strip descents in T.
  auto const f = rt::make_facet(a1t, a1t.from_word({1, 0}), rt::Subset::of({0}));
  CHECK(f.coset_rep == a1t.generator(1));
}

TEST_CASE("stabilizer equals fixator property") {
  for (auto const* name : {"affine_a1", "affine_a2"}) {
    auto const r = rt_test::stabilizer_equals_fixator(name, 3);
    INFO(r.first_violation);
    CHECK(r.ok());
  }
}
}
