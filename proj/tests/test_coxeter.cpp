#include <map>
#include <queue>
#include <set>

#include "doctest.h"
#include "properties.hpp"
#include "reflectrace/coxeter.hpp"
#include "support.hpp"

namespace rt = reflectrace;
using rt_test::shipped_system;

namespace {

// Layer sizes of the Cayley graph of the affine symmetric group on n
// letters, acting on windows [f(1), ..., f(n)] of periodic bijections.
std::vector<std::size_t> affine_permutation_layers(std::size_t n, std::size_t radius) {
  using Window = std::vector<long>;
  Window id(n);
  for (std::size_t i = 0; i < n; ++i) {
    id[i] = static_cast<long>(i) + 1;
  }
  std::set<Window> seen = {id};
  std::vector<Window> layer = {id};
  std::vector<std::size_t> sizes = {1};
  auto const ln = static_cast<long>(n);
  for (std::size_t k = 1; k <= radius; ++k) {
    std::vector<Window> next;
    for (auto const& f : layer) {
      for (std::size_t s = 0; s < n; ++s) {
        Window g = f;
        if (s == 0) {
          g[0] = f[n - 1] - ln;
          g[n - 1] = f[0] + ln;
        } else {
          std::swap(g[s - 1], g[s]);
        }
        if (seen.insert(g).second) {
          next.push_back(g);
        }
      }
    }
    sizes.push_back(next.size());
    layer = std::move(next);
  }
  return sizes;
}

// Signed-exponent-free word problem for the infinite dihedral group: the
// only relations are s^2 = 1.
rt::Word free_involution_reduce(rt::Word const& w) {
  rt::Word out;
  for (int s : w) {
    if (!out.empty() && out.back() == s) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

// The infinite dihedral group on the real line, generated by x -> -x and
// x -> 2 - x; explicit orbit search for the point of [0, 1].
std::pair<rt::Rational, std::size_t> line_fold(rt::Rational x) {
  std::map<rt::Rational, std::size_t> dist = {{x, 0}};
  std::queue<rt::Rational> q;
  q.push(x);
  while (!q.empty()) {
    rt::Rational const y = q.front();
    q.pop();
    if (y >= 0 && y <= 1) {
      return {y, dist[y]};
    }
    for (rt::Rational z : {rt::Rational(-y), rt::Rational(2 - y)}) {
      if (!dist.count(z)) {
        dist[z] = dist[y] + 1;
        q.push(z);
      }
    }
  }
  return {x, 0};
}

}  // namespace

TEST_SUITE("coxeter") {
TEST_CASE("type classification") {
  CHECK(shipped_system("a2").type_class() == rt::TypeClass::finite);
  CHECK(shipped_system("g2").type_class() == rt::TypeClass::finite);
  CHECK(shipped_system("affine_a1").type_class() == rt::TypeClass::affine);
  CHECK(shipped_system("affine_a2").type_class() == rt::TypeClass::affine);
  auto const tri = shipped_system("triangle_23inf");
  CHECK(tri.type_class() == rt::TypeClass::indefinite);
  CHECK(rt::determinant(tri.bilinear_form()).sign() == rt::Sign::negative);
}

TEST_CASE("unsupported labels are named") {
  CHECK_THROWS_WITH_AS(rt::CoxeterSystem(rt::CoxeterMatrix(2, {1, 7, 7, 1})),
                       doctest::Contains("7"), rt::coxeter_error);
  CHECK_THROWS_AS(rt::CoxeterMatrix(2, {1, 3, 4, 1}), rt::coxeter_error);
}

TEST_CASE("words and elements") {
  auto const a2 = shipped_system("a2");
  CHECK(a2.from_word({0, 0}).is_identity());
  CHECK(a2.from_word({0, 1, 0}) == a2.from_word({1, 0, 1}));
  CHECK(a2.length(a2.from_word({0, 1, 0, 1})) == 2);

  auto const a1t = shipped_system("affine_a1");
  rt::Word const w = {0, 1, 0, 0, 1};
  rt::Word const oracle = free_involution_reduce(w);
  CHECK(oracle == rt::Word{0});
  CHECK(a1t.canonical_word(a1t.from_word(w)) == oracle);
  CHECK(a1t.length(a1t.from_word(w)) == 1);
}

TEST_CASE("canonical words are reduced and idempotent") {
  for (auto const* name : {"a2", "b2", "affine_a2", "triangle_23inf"}) {
    auto const sys = shipped_system(name);
    auto const ball = sys.ball(5);
    for (std::size_t k = 0; k <= 5; ++k) {
      for (std::size_t i = ball.layer_begin(k); i < ball.layer_begin(k) + ball.layer_size(k);
           ++i) {
        auto const& e = ball.elements()[i];
        rt::Word const cw = sys.canonical_word(e);
        CHECK(cw.size() == k);
        CHECK(sys.from_word(cw) == e);
        CHECK(sys.canonical_word(sys.from_word(cw)) == cw);
      }
    }
  }
}

TEST_CASE("homomorphism property on sampled words") {
  rt_test::Rng rng(77);
  auto const sys = shipped_system("triangle_23inf");
  for (int i = 0; i < 60; ++i) {
    rt::Word const u = rng.word(sys.rank(), 6);
    rt::Word const v = rng.word(sys.rank(), 6);
    rt::Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(sys.multiply(sys.from_word(u), sys.from_word(v)) == sys.from_word(uv));
  }
}

TEST_CASE("ball sizes") {
  auto const a1t = shipped_system("affine_a1");
  for (std::size_t l = 0; l <= 8; ++l) {
    CHECK(a1t.ball(l).size() == 2 * l + 1);
  }
  auto const a2t = shipped_system("affine_a2");
  auto const ball = a2t.ball(7);
  auto const oracle = affine_permutation_layers(3, 7);
  for (std::size_t k = 0; k <= 7; ++k) {
    CHECK(ball.layer_size(k) == oracle[k]);
  }
  auto const b1 = affine_permutation_layers(2, 6);
  for (std::size_t k = 0; k <= 6; ++k) {
    CHECK(a1t.ball(6).layer_size(k) == b1[k]);
  }
  CHECK(shipped_system("a2").ball(3).size() == 6);
  CHECK(shipped_system("a2").ball(9).size() == 6);
  CHECK(shipped_system("g2").ball(6).size() == 12);
  for (auto const& name : rt_test::shipped_names()) {
    auto const sys = shipped_system(name);
    CHECK(sys.ball(1).size() == sys.rank() + 1);
  }
  CHECK_THROWS_AS(a2t.ball(10, 50), rt::ball_cap_exceeded);
}

TEST_CASE("ball from stored layers") {
  auto const sys = shipped_system("affine_a2");
  auto const ball = sys.ball(4);
  std::vector<std::vector<rt::Word>> layers(5);
  for (std::size_t k = 0; k <= 4; ++k) {
    for (std::size_t i = 0; i < ball.layer_size(k); ++i) {
      layers[k].push_back(ball.elements()[ball.layer_begin(k) + i].word());
    }
  }
  auto const rebuilt = sys.ball_from_layers(layers);
  CHECK(rebuilt.size() == ball.size());
  layers[3][0] = {0, 0, 1};
  CHECK_THROWS_AS(sys.ball_from_layers(layers), rt::coxeter_error);
}

TEST_CASE("fold") {
  auto const a1t = shipped_system("affine_a1");
  // The point x of the line has weight coordinates (x, 1 - x).
  rt::Rational const x(23, 10);
  auto const [oracle_point, oracle_steps] = line_fold(x);
  CHECK(oracle_point == rt::Rational(3, 10));
  CHECK(oracle_steps == 2);
  rt::QVector const p = {rt::QScalar(x), rt::QScalar(rt::Rational(1 - x))};
  auto const f = a1t.fold(p);
  CHECK(f.q[0] == rt::QScalar(oracle_point));
  CHECK(f.q[1] == rt::QScalar(rt::Rational(1 - oracle_point)));
  CHECK(a1t.length(f.g) == oracle_steps);

  rt::QVector const dom = {rt::QScalar(1), rt::QScalar(2)};
  CHECK(a1t.fold(dom).g.is_identity());
  CHECK(a1t.fold(dom).q == dom);

  auto const a2 = shipped_system("a2");
  rt::QVector const one_neg = {rt::QScalar(-1), rt::QScalar(2)};
  auto const g = a2.fold(one_neg);
  CHECK(g.g == a2.generator(0));
  CHECK(g.q == a2.act_generator(0, one_neg));

  // Outside the Tits cone: the negative chamber of an affine system.
  rt::QVector const outside = {rt::QScalar(-1), rt::QScalar(-1)};
  CHECK_THROWS_AS(a1t.fold(outside, 1000), rt::coxeter_error);
}

TEST_CASE("abelianization classes") {
  auto const a1t = shipped_system("affine_a1");
  CHECK(a1t.abelianization_class(a1t.identity()) == std::vector<std::uint8_t>{0, 0});
  CHECK(a1t.abelianization_class(a1t.generator(0)) == std::vector<std::uint8_t>{1, 0});
  CHECK(a1t.abelianization_class(a1t.generator(1)) == std::vector<std::uint8_t>{0, 1});
  auto const a2t = shipped_system("affine_a2");
  for (int s = 0; s < 3; ++s) {
    CHECK(a2t.abelianization_class(a2t.generator(s)) == std::vector<std::uint8_t>{1});
  }
  rt_test::Rng rng(3);
  auto const tri = shipped_system("triangle_23inf");
  for (int i = 0; i < 40; ++i) {
    auto const u = tri.from_word(rng.word(3, 7));
    auto const w = tri.from_word(rng.word(3, 7));
    CHECK(tri.abelianization_class(tri.conjugate(u, w)) == tri.abelianization_class(w));
  }
}

TEST_CASE("reflection property suite") {
  auto const r = rt_test::reflection_involution_and_form();
  INFO(r.first_violation);
  CHECK(r.ok());
}

TEST_CASE("fold orbit-canonicality property") {
  auto const r = rt_test::fold_orbit_canonical(0xf01d, 200);
  INFO(r.first_violation);
  CHECK(r.checked == 200);
  CHECK(r.violations == 0);
}
}
