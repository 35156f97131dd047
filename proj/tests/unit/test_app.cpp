#include "tcqed/app.hpp"
#include "tcqed/error.hpp"
#include "tcqed/measures.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace tcqed;
using tcqed::testing::pi;

TEST_CASE("parse_angle") {
  CHECK(parse_angle("0") == 0.0);
  CHECK(parse_angle("0.3") == 0.3);
  CHECK(parse_angle("pi") == pi);
  CHECK(parse_angle("-pi") == -pi);
  CHECK(parse_angle("pi/4") == doctest::Approx(pi / 4).epsilon(1e-16));
  CHECK(parse_angle("3pi/4") == doctest::Approx(3 * pi / 4).epsilon(1e-16));
  CHECK(parse_angle("3*pi/4") == doctest::Approx(3 * pi / 4).epsilon(1e-16));
  CHECK(parse_angle("-pi/8") == doctest::Approx(-pi / 8).epsilon(1e-16));
  CHECK(parse_angle(" 1e-3 ") == 1e-3);
  for (const char* bad : {"", "pie", "pi/", "pi/0", "2pi4", "abc", "1.0x"}) CHECK_THROWS_AS(parse_angle(bad), Error);
}

TEST_CASE("run_trajectory samples and columns") {
  RunConfig cfg;
  cfg.params.big_omega = 1.0;
  cfg.t_max = 2.0;
  cfg.steps = 4;
  auto rows = run_trajectory(cfg);
  REQUIRE(rows.size() == 5);
  CHECK(rows.front().t == 0.0);
  CHECK(rows.back().t == 2.0);
  CHECK_FALSE(rows.front().negativity_oracle.has_value());
  CHECK(rows.front().a5 == doctest::Approx(1.0));

  cfg.with_oracle = true;
  cfg.params.theta = pi / 8;
  cfg.params.gamma = 0.1;
  rows = run_trajectory(cfg);
  for (const auto& r : rows) {
    REQUIRE(r.negativity_oracle.has_value());
    CHECK(std::abs(*r.negativity_oracle - r.negativity) < 1e-9);
    CHECK(std::abs(*r.bell_oracle - r.bell) < 1e-9);
  }
}

TEST_CASE("run configuration validation") {
  RunConfig cfg;
  cfg.t_max = -1.0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg.t_max = 1.0;
  cfg.steps = 1;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg.steps = 10;
  cfg.n_max = 1;
  cfg.params.n = 0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg.n_max = 0;
  cfg.sweep = SweepAxis{"n", {0.0, 1.5}};
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg.sweep = SweepAxis{"mass", {1.0}};
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg.sweep = SweepAxis{"gamma", {}};
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg.sweep = SweepAxis{"gamma", {0.0, 0.1}};
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("expand_sweep and run_all keep the input order") {
  RunConfig cfg;
  cfg.t_max = 1.0;
  cfg.steps = 10;
  cfg.sweep = SweepAxis{"theta", {0.0, pi / 8, pi / 4, 3 * pi / 4}};
  const auto cfgs = expand_sweep(cfg);
  REQUIRE(cfgs.size() == 4);
  const auto results = run_all(cfgs);
  for (std::size_t i = 0; i < cfgs.size(); ++i) {
    CHECK(cfgs[i].params.theta == cfg.sweep->values[i]);
    CHECK(results[i].front().negativity == doctest::Approx(std::abs(std::sin(2 * cfg.sweep->values[i]))));
    CHECK(results[i] == run_trajectory(cfgs[i]));
  }
}

TEST_CASE("CSV round trip is exact") {
  RunConfig cfg;
  cfg.params.big_omega = 0.5;
  cfg.params.gamma = 0.1;
  cfg.params.theta = 0.3;
  cfg.t_max = 5.0;
  cfg.steps = 50;
  for (bool oracle : {false, true}) {
    cfg.with_oracle = oracle;
    const auto rows = run_trajectory(cfg);
    std::stringstream ss;
    const auto meta = describe_config(cfg);
    write_csv(ss, meta, rows, oracle);
    CHECK(ss.str().rfind("# ", 0) == 0);
    const auto back = read_csv(ss);
    CHECK(back == rows);
  }
}

TEST_CASE("CSV output is deterministic") {
  RunConfig cfg;
  cfg.params.theta = pi / 8;
  cfg.params.gamma = 0.1;
  cfg.steps = 100;
  std::stringstream a, b;
  const std::vector<std::string> meta{"run"};
  write_csv(a, meta, run_trajectory(cfg), false);
  write_csv(b, meta, run_trajectory(cfg), false);
  CHECK(a.str() == b.str());
}

TEST_CASE("read_csv rejects malformed input") {
  std::stringstream bad_header("t,x\n0,1\n");
  CHECK_THROWS_AS(read_csv(bad_header), Error);
  std::stringstream short_row(csv_header(false) + "\n0,1,2\n");
  CHECK_THROWS_AS(read_csv(short_row), Error);
}

TEST_CASE("figure presets") {
  for (int i = 1; i <= 8; ++i) {
    const std::string id = "fig" + std::to_string(i);
    const auto cfgs = figure_preset(id);
    CHECK_FALSE(cfgs.empty());
    CHECK_FALSE(figure_caption_params(id).empty());
    for (const auto& c : cfgs) {
      CHECK_NOTHROW(c.validate());
      CHECK_FALSE(c.label.empty());
    }
  }
  for (const auto& c : figure_preset("fig1")) {
    CHECK(c.params.big_omega == 1.0);
    CHECK(c.params.gamma == 0.0);
    CHECK(c.params.n == 0);
  }
  for (const auto& c : figure_preset("fig5")) CHECK(c.params.n == 1);
  for (const auto& c : figure_preset("fig8")) {
    CHECK(c.params.big_omega == 5.0);
    CHECK(c.params.n == 0);
  }
  try {
    figure_preset("fig9");
    FAIL("expected UnknownFigure");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownFigure);
  }
}

TEST_CASE("verify battery passes and catches a shifted Delta") {
  VerifyOptions opts;
  opts.samples = 41;
  const VerifyReport ok = verify(opts);
  for (const auto& c : ok.checks) {
    INFO(c.name << " observed " << c.observed << " tol " << c.tolerance);
    CHECK(c.passed);
  }

  opts.delta_perturbation = 1e-3;
  const VerifyReport broken = verify(opts);
  CHECK_FALSE(broken.all_passed());
  bool closed_failed = false;
  for (const auto& c : broken.checks)
    if (c.name.find("closed") != std::string::npos && !c.passed) closed_failed = true;
  CHECK(closed_failed);

  std::stringstream out;
  print_report(out, broken);
  CHECK(out.str().find("FAIL") != std::string::npos);
}
