#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "reflectrace/config.hpp"
#include "support.hpp"

namespace rt = reflectrace;

namespace {

std::size_t error_line(std::string const& text) {
  try {
    rt::parse_config(text);
  } catch (rt::config_error const& e) {
    return e.line();
  }
  return 0;
}

std::filesystem::path scratch_dir(std::string const& tag) {
  auto const dir = std::filesystem::temp_directory_path() /
                   ("reflectrace-test-" + tag + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string report(rt::CoxeterSystem const& sys, rt::VerifyOptions const& opts,
                   std::string const& name, rt::CayleyBall const* ball) {
  rt::Analysis const a(sys, opts, ball);
  auto const golden = rt::load_golden(REFLECTRACE_GOLDEN_PATH);
  return rt::to_json(a, rt::verify_system(a, name, golden)).dump(2);
}

}  // namespace

TEST_SUITE("config") {
TEST_CASE("parse and serialize round trip") {
  std::string const messy =
      "# the affine line\n"
      "conj_radius=4\n"
      "  name =  affine_a1   # trailing comment\n"
      "generators = s0   s1\n"
      "\n"
      "row = 1 inf\n"
      "row = inf 1\n"
      "ball_cap = 1000\n";
  auto const cfg = rt::parse_config(messy);
  CHECK(cfg.name == "affine_a1");
  CHECK(cfg.generators == std::vector<std::string>{"s0", "s1"});
  CHECK(cfg.rows[0][1] == rt::kInfinity);
  CHECK(cfg.verify_options().conj_radius == 4);
  CHECK(cfg.verify_options().ball_cap == 1000);
  CHECK(cfg.verify_options().centralizer_radius == rt::VerifyOptions{}.centralizer_radius);
  std::string const canonical = rt::serialize_config(cfg);
  CHECK(canonical ==
        "name = affine_a1\ngenerators = s0 s1\nrow = 1 inf\nrow = inf 1\n"
        "ball_cap = 1000\nconj_radius = 4\n");
  CHECK(rt::parse_config(canonical) == cfg);
  CHECK(rt::serialize_config(rt::parse_config(canonical)) == canonical);
}

TEST_CASE("shipped configs round trip") {
  for (auto const& name : rt_test::shipped_names()) {
    auto const cfg = rt_test::load_shipped(name);
    CHECK(cfg.name == name);
    CHECK(rt::parse_config(rt::serialize_config(cfg)) == cfg);
  }
}

TEST_CASE("errors carry line numbers") {
  std::string const head = "name = x\ngenerators = a b\n";
  CHECK(error_line(head + "row = 1 3\nrow = 3 1\nbogus = 1\n") == 5);
  CHECK(error_line(head + "row = 1 3\nrow = 3 1\nname = y\n") == 5);
  CHECK(error_line(head + "row = 1 7x\nrow = 3 1\n") == 3);
  CHECK(error_line(head + "row = 1 3\nrow = 4 1\n") == 4);
  CHECK(error_line(head + "row = 1 3\nrow = 3 1\nconj_radius = 0\n") == 5);
  CHECK(error_line(head + "row = 1 3\nrow = 3 1\nconj_radius = -2\n") == 5);
  CHECK(error_line(head + "row = 1 3\nrow = 3 1 2\n") == 4);
  CHECK(error_line(head + "row = 1 3\n") == 3);
  CHECK(error_line("name = x\njust words\n") == 2);
  CHECK(error_line("generators = a a\n") == 1);
  CHECK_THROWS_WITH_AS(rt::parse_config(head + "row = 1 3\nrow = 3 1\nbogus = 1\n"),
                       "line 5: unknown key 'bogus'", rt::config_error);
  CHECK_THROWS_AS(rt::load_config("/nonexistent/file.cfg"), rt::config_error);
}

TEST_CASE("fingerprints") {
  auto const a = rt_test::shipped_system("affine_a1").matrix();
  auto const b = rt_test::shipped_system("a2").matrix();
  CHECK(rt::system_fingerprint(a) == rt::system_fingerprint(a));
  CHECK(rt::system_fingerprint(a) != rt::system_fingerprint(b));
}

TEST_CASE("ball cache") {
  auto const dir = scratch_dir("cache");
  rt::BallCache const cache(dir.string());
  auto const cfg = rt_test::load_shipped("triangle_23inf");
  auto const sys = cfg.system();
  auto const opts = cfg.verify_options();
  std::size_t const radius = std::max(opts.conj_radius, opts.centralizer_radius);

  bool hit = true;
  auto const cold = cache.load_or_build(sys, radius, opts.ball_cap, &hit);
  CHECK_FALSE(hit);
  CHECK(std::filesystem::exists(cache.path_for(sys, radius)));
  auto const warm = cache.load_or_build(sys, radius, opts.ball_cap, &hit);
  CHECK(hit);
  REQUIRE(warm.size() == cold.size());
  for (std::size_t i = 0; i < cold.size(); ++i) {
    CHECK(warm.elements()[i] == cold.elements()[i]);
    CHECK(warm.elements()[i].word() == cold.elements()[i].word());
  }
  // A cache hit yields the same report as a cold run.
  CHECK(report(sys, opts, cfg.name, &warm) == report(sys, opts, cfg.name, nullptr));

  // Another system does not read this file.
  auto const other = rt_test::shipped_system("affine_a2");
  CHECK(cache.path_for(other, radius) != cache.path_for(sys, radius));

  // Corruption: a word that is not of its layer's length.
  std::string text;
  {
    std::ifstream in(cache.path_for(sys, radius));
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  auto const pos = text.find("layer 2 ");
  REQUIRE(pos != std::string::npos);
  auto const line_end = text.find('\n', pos);
  std::string corrupted = text;
  corrupted.replace(line_end + 1, text.find('\n', line_end + 1) - line_end - 1, "0 0");
  {
    std::ofstream out(cache.path_for(sys, radius), std::ios::trunc);
    out << corrupted;
  }
  CHECK_FALSE(cache.load(sys, radius).has_value());
  auto const rebuilt = cache.load_or_build(sys, radius, opts.ball_cap, &hit);
  CHECK_FALSE(hit);
  CHECK(rebuilt.size() == cold.size());
  CHECK(cache.load(sys, radius).has_value());

  // Wrong fingerprint and truncation are both ignored.
  std::string stale = text;
  stale.replace(stale.find("fingerprint ") + 12, 4, "0000");
  {
    std::ofstream out(cache.path_for(sys, radius), std::ios::trunc);
    out << stale;
  }
  CHECK_FALSE(cache.load(sys, radius).has_value());
  {
    std::ofstream out(cache.path_for(sys, radius), std::ios::trunc);
    out << text.substr(0, text.size() / 2);
  }
  CHECK_FALSE(cache.load(sys, radius).has_value());
  std::filesystem::remove_all(dir);
}
}
