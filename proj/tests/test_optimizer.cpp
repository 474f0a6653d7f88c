#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fas/baselines.hpp"
#include "fas/errors.hpp"
#include "fas/optimizer.hpp"
#include "oracles.hpp"

using namespace fas;
using std::numbers::pi;

namespace {

constexpr double kLambda = 0.125;

std::vector<Position> random_layout(oracle::Gen& gen, std::size_t n, double half = 0.25) {
  std::vector<Position> pos(n);
  for (auto& p : pos) p = {gen.uniform(-half, half), gen.uniform(-half, half)};
  return pos;
}

double beta_bar_formula(Position t, const SurrogateParams& s) {
  double acc = 0.0;
  for (std::size_t l = 0; l < s.upsilon.size(); ++l) {
    const double rho = t.x * std::sin(s.angles.elevation[l]) * std::cos(s.angles.azimuth[l]) +
                       t.y * std::cos(s.angles.elevation[l]);
    acc += std::abs(s.upsilon[l]) * std::cos(2 * pi / s.wavelength * rho - std::arg(s.upsilon[l]));
  }
  return 2.0 * acc;
}

}  // namespace

TEST_CASE("optimal_beamforming") {
  const auto w = optimal_beamforming(ComplexVector{2.0, 0.0, 0.0, 0.0});
  CHECK(w[0] == cplx(1.0, 0.0));
  CHECK(w[1] == cplx(0.0, 0.0));
  CHECK_THROWS_AS(optimal_beamforming(ComplexVector(3)), DegenerateChannelError);
  CHECK(beamforming_or_fallback(ComplexVector(3))[0] == cplx(1.0, 0.0));

  oracle::Gen gen(21);
  for (int rep = 0; rep < 20; ++rep) {
    ComplexVector h(4);
    for (auto& x : h) x = gen.complex(1e-5);
    const auto w_opt = optimal_beamforming(h);
    CHECK(std::abs(w_opt.norm() - 1.0) < 1e-12);
    const double best = snr(w_opt, h, 0.01, 1e-11);
    for (int k = 0; k < 100; ++k) CHECK(snr(gen.unit_vector(4), h, 0.01, 1e-11) <= best * (1 + 1e-12));
  }
}

TEST_CASE("decompose_gain reconstructs |w^H h|^2") {
  oracle::Gen gen(22);
  for (int rep = 0; rep < 100; ++rep) {
    const auto ch = gen.channel(4);
    const auto pos = random_layout(gen, 4);
    const auto w = gen.unit_vector(4);
    const double direct = oracle::direct_gain(pos, ch, w, kLambda);
    for (std::size_t n = 0; n < 4; ++n) {
      const auto d = decompose_gain(pos, ch, w, n, kLambda);
      const auto f = field_response_vector(pos[n], ch.angles, kLambda);
      const double rebuilt =
          d.alpha + hermitian_quadratic_form(f, d.psi) + 2.0 * inner(f, d.omega).real();
      CHECK(std::abs(rebuilt - direct) <= 1e-10 * std::max(direct, 1.0));
      CHECK(d.psi.hermitian_defect() < 1e-15);
    }
  }
}

TEST_CASE("decompose_gain degenerate cases") {
  oracle::Gen gen(23);
  const auto ch = gen.channel(4);

  const std::vector<Position> single{{0.05, -0.1}};
  const ComplexVector w1{cplx(0.6, 0.8)};
  const auto d = decompose_gain(single, ch, w1, 0, kLambda);
  CHECK(d.alpha == 0.0);
  for (const auto& o : d.omega) CHECK(o == cplx(0.0, 0.0));
  const auto phi = ComplexMatrix::outer(ch.path_gains, ch.path_gains);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) CHECK(std::abs(d.psi(r, c) - phi(r, c)) < 1e-15);

  // w_n = 0 excludes antenna n entirely.
  const auto pos = random_layout(gen, 3);
  ComplexVector w{cplx(0.6, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.8)};
  const auto d1 = decompose_gain(pos, ch, w, 1, kLambda);
  for (std::size_t r = 0; r < 4; ++r) {
    CHECK(d1.omega[r] == cplx(0.0, 0.0));
    for (std::size_t c = 0; c < 4; ++c) CHECK(d1.psi(r, c) == cplx(0.0, 0.0));
  }
  CHECK(d1.alpha == doctest::Approx(oracle::direct_gain(pos, ch, w, kLambda)).epsilon(1e-12));

  CHECK_THROWS_AS(decompose_gain(pos, ch, w, 3, kLambda), DimensionError);
}

TEST_CASE("build_surrogate: curvature and degenerate surrogate") {
  oracle::Gen gen(24);
  const auto ch = gen.channel(4);

  const std::vector<Position> single{{0.0, 0.0}};
  const auto s0 = build_surrogate(single, ch, ComplexVector{0.0}, 0, {0.1, 0.1}, kLambda);
  for (const auto& u : s0.upsilon) CHECK(u == cplx(0.0, 0.0));
  CHECK(s0.kappa == 0.0);
  CHECK(surrogate_value({0.2, -0.1}, s0) == surrogate_value({-0.2, 0.0}, s0));
  const auto g0 = beta_bar_gradient({0.03, 0.02}, s0);
  CHECK(g0.x == 0.0);
  CHECK(g0.y == 0.0);

  // L = 1: kappa = 16 pi^2 |upsilon| / lambda^2.
  const auto ch1 = gen.channel(1);
  const auto s1 = build_surrogate(single, ch1, ComplexVector{1.0}, 0, {0.05, 0.0}, kLambda);
  CHECK(s1.kappa == doctest::Approx(16 * pi * pi * std::abs(s1.upsilon[0]) / (kLambda * kLambda)));
}

TEST_CASE("beta_bar gradient matches central differences") {
  oracle::Gen gen(25);
  for (int rep = 0; rep < 100; ++rep) {
    const auto ch = gen.channel(4);
    const auto pos = random_layout(gen, 4);
    const auto w = gen.unit_vector(4);
    const std::size_t n = rep % 4;
    const auto s = build_surrogate(pos, ch, w, n, pos[n], kLambda);

    const Position t{gen.uniform(-0.25, 0.25), gen.uniform(-0.25, 0.25)};
    // beta_bar is also 2 Re{f(t)^H upsilon}.
    const double via_inner = 2.0 * inner(field_response_vector(t, ch.angles, kLambda), s.upsilon).real();
    CHECK(beta_bar(t, s) == doctest::Approx(via_inner).epsilon(1e-12));
    CHECK(beta_bar(t, s) == doctest::Approx(beta_bar_formula(t, s)).epsilon(1e-12));

    const double h = 1e-6;
    const Position fd{(beta_bar_formula({t.x + h, t.y}, s) - beta_bar_formula({t.x - h, t.y}, s)) / (2 * h),
                      (beta_bar_formula({t.x, t.y + h}, s) - beta_bar_formula({t.x, t.y - h}, s)) / (2 * h)};
    const Position g = beta_bar_gradient(t, s);
    CHECK(std::hypot(g.x - fd.x, g.y - fd.y) <= 1e-6 * std::hypot(g.x, g.y));
  }

  // theta = 0 on every path: rho has no x-component.
  ChannelRealization vertical = gen.channel(3);
  std::fill(vertical.angles.elevation.begin(), vertical.angles.elevation.end(), 0.0);
  const std::vector<Position> pos{{0.1, 0.0}, {-0.1, 0.05}};
  const auto s = build_surrogate(pos, vertical, gen.unit_vector(2), 0, pos[0], kLambda);
  CHECK(beta_bar_gradient({0.02, 0.03}, s).x == 0.0);
}

TEST_CASE("surrogate is a tangent global minorant") {
  oracle::Gen gen(26);
  for (int rep = 0; rep < 30; ++rep) {
    const auto ch = gen.channel(4);
    auto pos = random_layout(gen, 4);
    const auto w = gen.unit_vector(4);
    const std::size_t n = rep % 4;
    const auto s = build_surrogate(pos, ch, w, n, pos[n], kLambda);

    const double at_anchor = oracle::direct_gain(pos, ch, w, kLambda);
    CHECK(std::abs(surrogate_value(pos[n], s) - at_anchor) <= 1e-10 * at_anchor);

    for (int k = 0; k < 1000; ++k) {
      pos[n] = {gen.uniform(-0.25, 0.25), gen.uniform(-0.25, 0.25)};
      CHECK(surrogate_value(pos[n], s) <= oracle::direct_gain(pos, ch, w, kLambda) + 1e-9);
    }

    CHECK(surrogate_value({1e3, -1e3}, s) < -1e6);
  }
}

TEST_CASE("linearized_spacing_halfspaces") {
  const std::vector<Position> one{{0.1, 0.1}};
  CHECK(linearized_spacing_halfspaces(0, one, 0.0625).empty());

  const double D = 0.0625;
  const std::vector<Position> pair{{2 * D, 0.0}, {0.0, 0.0}};
  const auto hs = linearized_spacing_halfspaces(0, pair, D);
  REQUIRE(hs.size() == 1);
  CHECK(hs[0].normal.x == doctest::Approx(1.0));
  CHECK(hs[0].normal.y == doctest::Approx(0.0));
  CHECK(hs[0].offset == doctest::Approx(D));

  oracle::Gen gen(27);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<Position> pos = random_layout(gen, 4);
    const auto planes = linearized_spacing_halfspaces(rep % 4, pos, 0.01);
    for (const auto& h : planes) {
      // Satisfying the plane at a random point implies true distance >= D.
      const Position t{gen.uniform(-0.5, 0.5), gen.uniform(-0.5, 0.5)};
      if (h.slack(t) < 0.0) continue;
      bool ok = false;
      for (std::size_t v = 0; v < pos.size(); ++v) {
        if (v == static_cast<std::size_t>(rep % 4)) continue;
        if (std::abs(h.offset - (0.01 + dot(h.normal, pos[v]))) < 1e-15) ok = distance(t, pos[v]) >= 0.01 - 1e-12;
      }
      CHECK(ok);
    }
  }

  const std::vector<Position> clash{{0.1, 0.1}, {0.1, 0.1}};
  CHECK_THROWS_AS(linearized_spacing_halfspaces(0, clash, D), InfeasibleError);
}

TEST_CASE("sca_update_antenna") {
  ScenarioConfig cfg;
  cfg.num_antennas = 1;
  AOConfig ao;
  ao.inner_tolerance = 1e-12;
  ao.inner_max_iterations = 2000;
  oracle::Gen gen(28);

  SUBCASE("zero curvature keeps the antenna in place") {
    SensingDesign d{{{0.1, -0.05}}, ComplexVector{0.0}, 1e-11};
    const auto upd = sca_update_antenna(0, d, gen.channel(4), cfg, ao);
    CHECK(upd.position == Position{0.1, -0.05});
    CHECK(upd.iterations == 0);
  }

  SUBCASE("single antenna ascends to the lattice optimum") {
    for (int rep = 0; rep < 5; ++rep) {
      const auto ch = gen.channel(2);
      const SensingDesign d{{{gen.uniform(-0.2, 0.2), gen.uniform(-0.2, 0.2)}}, ComplexVector{1.0}, 1e-11};
      std::vector<double> log;
      const auto upd = sca_update_antenna(0, d, ch, cfg, ao, &log);
      for (std::size_t i = 1; i < log.size(); ++i) CHECK(log[i] >= log[i - 1]);
      CHECK(upd.gain >= log.front());

      double grid_best = 0.0;
      for (int i = 0; i <= 200; ++i)
        for (int j = 0; j <= 200; ++j) {
          const std::vector<Position> t{{-0.25 + 0.0025 * i, -0.25 + 0.0025 * j}};
          grid_best = std::max(grid_best, oracle::direct_gain(t, ch, d.beamformer, kLambda));
        }
      CHECK(upd.gain >= grid_best * (1 - 1e-4));
    }
  }
}

TEST_CASE("alternating_optimize") {
  const ScenarioConfig cfg = ScenarioConfig::defaults();
  const AOConfig ao;
  int converged_runs = 0;

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SeededRng rng(seed, 0);
    const auto ch = sample_channel(cfg, rng);
    const auto init = fpa_design(cfg, ch);
    const auto result = alternating_optimize(ch, cfg, ao, init);

    CHECK(is_feasible_design(result.design, cfg));
    CHECK(result.trace.outer_iterations >= 1);
    CHECK(result.trace.iterates.size() == result.trace.outer_iterations + 1);
    for (std::size_t m = 1; m < result.trace.iterates.size(); ++m) {
      CHECK(result.trace.iterates[m].detection >= result.trace.iterates[m - 1].detection - 1e-12);
    }
    const auto& g = result.trace.gain_history;
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] >= g[i - 1] * (1 - 1e-12));

    const double init_pd = detection_prob(init.threshold,
                                          snr(init.beamformer, channel_vector(init.positions, ch, cfg.wavelength),
                                              cfg.tx_power, cfg.noise_power),
                                          DetectorConfig::from(cfg));
    CHECK(result.trace.iterates.back().detection >= init_pd);
    CHECK(result.design.threshold == optimal_threshold(DetectorConfig::from(cfg)));

    // Restarting from a converged design is a fixed point.
    if (!result.trace.converged) continue;
    ++converged_runs;
    const auto again = alternating_optimize(ch, cfg, ao, result.design);
    CHECK(again.trace.outer_iterations == 1);
    CHECK(std::abs(again.trace.iterates.back().detection - result.trace.iterates.back().detection) <
          ao.outer_tolerance);
  }
  CHECK(converged_runs >= 5);
}

TEST_CASE("alternating_optimize rejects bad input and survives a zero channel") {
  const ScenarioConfig cfg = ScenarioConfig::defaults();
  SeededRng rng(1, 1);
  auto ch = sample_channel(cfg, rng);
  auto init = fpa_design(cfg, ch);

  auto clash = init;
  clash.positions[1] = clash.positions[0];
  CHECK_THROWS_AS(alternating_optimize(ch, cfg, AOConfig{}, clash), ContractError);

  auto outside = init;
  outside.positions[0] = {1.0, 0.0};
  CHECK_THROWS_AS(alternating_optimize(ch, cfg, AOConfig{}, outside), ContractError);

  AOConfig bad;
  bad.outer_max_iterations = 0;
  CHECK_THROWS_AS(alternating_optimize(ch, cfg, bad, init), ConfigError);

  ch.path_gains = ComplexVector(4);
  const auto r = alternating_optimize(ch, cfg, AOConfig{}, init);
  CHECK(r.design.beamformer[0] == cplx(1.0, 0.0));
  CHECK(r.trace.iterates.back().snr == 0.0);
}
