#include <cmath>
#include <random>

#include "doctest.h"
#include "gbx/dft.hpp"
#include "gbx/solutions.hpp"
#include "testutil.hpp"

using namespace gbx;

TEST_CASE("soliton_velocity") {
  CHECK(soliton_velocity(1.5, +1) == 0.0);
  CHECK(soliton_velocity(0.375, +1) == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
  CHECK(soliton_velocity(0.2, -1) == doctest::Approx(-0.93094933625126274).epsilon(1e-15));

  CHECK_THROWS_AS(soliton_velocity(1.6, +1), std::domain_error);
  CHECK_THROWS_AS(soliton_velocity(0.0, +1), std::invalid_argument);
  CHECK_THROWS_AS(soliton_velocity(-0.5, +1), std::invalid_argument);
  CHECK_THROWS_AS(soliton_velocity(0.5, 0), std::invalid_argument);
}

TEST_CASE("soliton profile") {
  const SolitonParams p{0.375, 0.0, soliton_velocity(0.375, +1)};

  // peak value -A on the moving crest
  for (double t : {0.0, 1.7, 42.0})
    CHECK(soliton(p.center + p.velocity * t, t, p) == doctest::Approx(-0.375).epsilon(1e-15));

  // -0.375 sech^2(1), value pinned by an extended-precision evaluation
  CHECK(soliton(4.0, 0.0, p) == doctest::Approx(-0.15749037810525978).epsilon(1e-15));

  // even around the crest
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> d(0.0, 20.0);
  for (int i = 0; i < 20; ++i) {
    const double t = d(rng), offset = d(rng);
    const double crest = p.center + p.velocity * t;
    CHECK(soliton(crest + offset, t, p) ==
          doctest::Approx(soliton(crest - offset, t, p)).epsilon(1e-14));
  }

  // translation identity z(x, t) = z(x - v d, t - d)
  for (int i = 0; i < 20; ++i) {
    const double x = d(rng) - 10.0, t = d(rng), shift = d(rng) - 10.0;
    CHECK(soliton(x, t, p) ==
          doctest::Approx(soliton(x - p.velocity * shift, t - shift, p)).epsilon(1e-13));
  }
}

TEST_CASE("soliton time derivative") {
  const SolitonParams p{0.6, -2.0, soliton_velocity(0.6, +1)};

  CHECK(soliton_time_derivative(p.center + p.velocity * 3.0, 3.0, p) == 0.0);

  const SolitonParams rest{0.8, 1.0, 0.0};
  for (double x : {-5.0, 0.0, 3.3})
    CHECK(soliton_time_derivative(x, 2.0, rest) == 0.0);

  // central-difference oracle in t
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> xs(-30.0, 30.0), ts(0.0, 10.0);
  const double eps = 1e-6;
  for (int i = 0; i < 100; ++i) {
    const double x = xs(rng), t = ts(rng);
    const double fd = (soliton(x, t + eps, p) - soliton(x, t - eps, p)) / (2.0 * eps);
    CHECK(std::abs(soliton_time_derivative(x, t, p) - fd) <= 1e-8);
  }
}

TEST_CASE("initial_single families") {
  const TorusGrid g(-60.0, 60.0, 960);

  const InitialData rest = initial_single(g, 0.8, 0.0, 0);
  for (int j = 0; j < g.modes(); ++j) CHECK(rest.z1[j] == 0.0);

  const InitialData moving = initial_single(g, 0.375, 0.0, +1);
  const int center_node = 480;  // x = 0
  CHECK(g.node(center_node) == 0.0);
  CHECK(moving.z0[center_node] == doctest::Approx(-0.375).epsilon(1e-15));

  // traveling data satisfies z1 = -v * dz0/dx to spectral accuracy
  const double v = soliton_velocity(0.375, +1);
  const SpectrumField dz0 = test::spectral_derivative(forward_dft(moving.z0), 1);
  const NodalField dz0_nodal = inverse_dft(dz0);
  double worst = 0.0;
  for (int j = 0; j < g.modes(); ++j)
    worst = std::max(worst, std::abs(moving.z1[j] + v * dz0_nodal[j]));
  CHECK(worst <= 1e-8);
}

TEST_CASE("initial_pair composition and symmetry") {
  const TorusGrid g(-40.0, 40.0, 640);

  const InitialData one = initial_single(g, 0.3, 5.0, +1);
  const InitialData degenerate = initial_pair(g, 0.3, 0.0, 5.0, 0.0, +1, -1);
  for (int j = 0; j < g.modes(); ++j) {
    CHECK(degenerate.z0[j] == one.z0[j]);
    CHECK(degenerate.z1[j] == one.z1[j]);
  }

  // head-on mirrored pair is mirror-symmetric for all time: z0 and z1 both
  // even node-wise.  Equal velocity signs give the z(-x,-t) = z(x,t)
  // symmetry instead, which makes z1 odd.
  const InitialData headon = initial_pair(g, 0.3, 0.3, -10.0, 10.0, +1, -1);
  const InitialData chasing = initial_pair(g, 0.3, 0.3, -10.0, 10.0, +1, +1);
  const int n = g.modes();
  for (int j = 1; j < n; ++j) {
    CHECK(std::abs(headon.z0[j] - headon.z0[n - j]) <= 1e-12);
    CHECK(std::abs(headon.z1[j] - headon.z1[n - j]) <= 1e-12);
    CHECK(std::abs(chasing.z1[j] + chasing.z1[n - j]) <= 1e-12);
  }

  // case (i) parameters against the direct formula, on the preset grid
  const ExperimentConfig cfg = preset_case("case-i");
  const TorusGrid gi(cfg.a, cfg.b, cfg.modes);
  const InitialData ci =
      initial_pair(gi, cfg.a1, cfg.a2, cfg.x1, cfg.x2, cfg.v1_sign, cfg.v2_sign);
  const SolitonParams p1{cfg.a1, cfg.x1, soliton_velocity(cfg.a1, cfg.v1_sign)};
  const SolitonParams p2{cfg.a2, cfg.x2, soliton_velocity(cfg.a2, cfg.v2_sign)};
  for (int j : {0, 1230, 3200, 6399}) {
    const double x = gi.node(j);
    const double z0 = soliton(x, 0.0, p1) + soliton(x, 0.0, p2);
    const double z1 =
        soliton_time_derivative(x, 0.0, p1) + soliton_time_derivative(x, 0.0, p2);
    CHECK(std::abs(ci.z0[j] - z0) <= 1e-14);
    CHECK(std::abs(ci.z1[j] - z1) <= 1e-14);
  }
}

TEST_CASE("closed form satisfies the equation spectrally") {
  // residual of z_tt - z_xx + z_xxxx - (z^2)_xx with z_tt = v^2 z'' for the
  // traveling wave, all derivatives taken in coefficient space
  const TorusGrid g(-60.0, 60.0, 2048);
  const SolitonParams p{0.375, 0.0, soliton_velocity(0.375, +1)};
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> ts(0.0, 5.0);

  for (int trial = 0; trial < 3; ++trial) {
    const double t = ts(rng);
    NodalField z(g), z_sq(g);
    for (int j = 0; j < g.modes(); ++j) {
      z[j] = soliton(g.node(j), t, p);
      z_sq[j] = z[j] * z[j];
    }
    const SpectrumField zc = forward_dft(z);
    const SpectrumField d2 = test::spectral_derivative(zc, 2);
    const SpectrumField d4 = test::spectral_derivative(zc, 4);
    const SpectrumField d2sq = test::spectral_derivative(forward_dft(z_sq), 2);

    SpectrumField residual(g);
    const double v2 = p.velocity * p.velocity;
    for (int l = g.min_mode(); l <= g.max_mode(); ++l)
      residual[l] = v2 * d2[l] - d2[l] + d4[l] - d2sq[l];
    CHECK(inverse_dft(residual, 1e30).max_abs() <= 1e-6);
  }
}

TEST_CASE("soliton mass matches the closed-form integral") {
  // integral of -A sech^2(k x) over the line is -2A/k = -2 sqrt(6A); what is
  // cut off beyond +-60 is about 2A (2/k) exp(-120 k), which only drops below
  // 1e-10 once A >= 0.3
  const TorusGrid g(-60.0, 60.0, 960);
  for (double amplitude : {0.3, 0.375, 1.0}) {
    const InitialData init = initial_single(g, amplitude, 0.0, +1);
    const double spectral_mass = g.length() * forward_dft(init.z0)[0].real();
    CHECK(std::abs(spectral_mass - (-2.0 * std::sqrt(6.0 * amplitude))) <= 1e-10);
  }
  const InitialData wide = initial_single(g, 0.2, 0.0, +1);
  const double spectral_mass = g.length() * forward_dft(wide.z0)[0].real();
  CHECK(std::abs(spectral_mass - (-2.0 * std::sqrt(6.0 * 0.2))) <= 2e-9);
}

TEST_CASE("preset catalog") {
  const ExperimentConfig e1 = preset_case("example1");
  CHECK(e1.a == -60.0);
  CHECK(e1.b == 60.0);
  CHECK(e1.modes == 960);
  CHECK(e1.mesh() == doctest::Approx(0.125));
  CHECK(e1.tau == 1e-3);
  CHECK(e1.amplitude == 0.375);
  CHECK(e1.x0 == 0.0);

  const ExperimentConfig ci = preset_case("case-i");
  CHECK(ci.a1 == 0.2);
  CHECK(ci.a2 == 0.3);
  CHECK(std::abs(ci.x1) == 50.0);
  CHECK(ci.x2 == -ci.x1);
  // the two solitons must approach each other
  CHECK(ci.v1_sign * (ci.x2 - ci.x1) > 0);
  CHECK(ci.v2_sign * (ci.x1 - ci.x2) > 0);
  CHECK(ci.horizon == 100.0);
  CHECK(ci.modes == 6400);

  const ExperimentConfig cix = preset_case("case-ix");
  CHECK(cix.v1_sign == 0);
  CHECK(cix.v2_sign == 0);
  CHECK(std::abs(cix.x1) == 30.0);

  const ExperimentConfig cxi = preset_case("case-xi");
  CHECK(cxi.x1 == -80.0);
  CHECK(cxi.x2 == -50.0);
  CHECK(cxi.a1 == 0.2);
  CHECK(cxi.a2 == 1.0);
  CHECK(cxi.v1_sign == 1);
  CHECK(cxi.v2_sign == 1);

  const ExperimentConfig birth = preset_case("birth-A=1.4");
  CHECK(birth.family == "single");
  CHECK(birth.amplitude == 1.4);
  CHECK(birth.horizon == 30.0);

  CHECK_THROWS_WITH_AS(preset_case("case-xii"), doctest::Contains("valid ids"),
                       std::invalid_argument);

  // every catalog entry yields a config that passes validation
  for (const auto& id : preset_ids()) {
    if (id.find("<value>") != std::string::npos) continue;
    CHECK_NOTHROW(preset_case(id).validate());
  }
}
