#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "gbx/dft.hpp"
#include "gbx/errors.hpp"
#include "gbx/field.hpp"
#include "gbx/grid.hpp"
#include "testutil.hpp"

using namespace gbx;
using test::max_coeff_diff;
using test::max_nodal_diff;

TEST_CASE("grid validation and geometry") {
  CHECK_THROWS_AS(TorusGrid(0.0, 1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(TorusGrid(0.0, 1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(TorusGrid(1.0, 1.0, 8), std::invalid_argument);
  CHECK_THROWS_AS(TorusGrid(2.0, 1.0, 8), std::invalid_argument);

  const TorusGrid g(-60.0, 60.0, 16);
  CHECK(g.spacing() == doctest::Approx(7.5));
  CHECK(g.node(0) == -60.0);
  CHECK(g.node(15) + g.spacing() == doctest::Approx(60.0));
  CHECK(g.min_mode() == -8);
  CHECK(g.max_mode() == 7);
}

TEST_CASE("symbol tables: parity and closed form") {
  const TorusGrid g(-3.0, 7.0, 32);
  const SymbolTable sym(g);

  CHECK(sym.theta_at(0) == 0.0);
  for (int l = 1; l < g.modes() / 2; ++l) {
    CHECK(sym.theta_at(-l) == sym.theta_at(l));
    CHECK(sym.mu_at(-l) == -sym.mu_at(l));
    // independent expression sqrt(mu^2 + mu^4)
    const double mu = sym.mu_at(l);
    const double direct = std::sqrt(mu * mu + mu * mu * mu * mu);
    CHECK(sym.theta_at(l) == doctest::Approx(direct).epsilon(1e-15));
  }
}

TEST_CASE("forward: constant field maps to the zero mode") {
  const TorusGrid g(0.0, 1.0, 4);
  NodalField v(g);
  for (int j = 0; j < 4; ++j) v[j] = 2.5;
  const SpectrumField c = forward_dft(v);
  CHECK(c[0].real() == doctest::Approx(2.5).epsilon(1e-15));
  for (int l : {-2, -1, 1}) CHECK(std::abs(c[l]) <= 1e-15);
}

TEST_CASE("forward: cosine splits into the +-1 pair") {
  const TorusGrid g(-3.0, 7.0, 4);
  NodalField v(g);
  for (int j = 0; j < 4; ++j) v[j] = std::cos(g.mu(1) * (g.node(j) - g.a()));
  const SpectrumField c = forward_dft(v);
  CHECK(c[1].real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(c[-1].real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(std::abs(c[0]) <= 1e-15);
  CHECK(std::abs(c[-2]) <= 1e-15);
  CHECK(std::abs(c[1].imag()) <= 1e-15);
}

TEST_CASE("forward matches the direct summation oracle") {
  const TorusGrid g(-60.0, 60.0, 8);
  NodalField v(g);
  for (int j = 0; j < 8; ++j) {
    const double s = 1.0 / std::cosh(g.node(j));
    v[j] = s * s;
  }
  const SpectrumField fft = forward_dft(v);
  const SpectrumField naive = test::naive_forward_dft(v);
  CHECK(max_coeff_diff(fft, naive) <= 1e-13);
}

TEST_CASE("forward rejects non-finite input") {
  const TorusGrid g(0.0, 1.0, 4);
  NodalField v(g);
  v[2] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(forward_dft(v), divergence_error);
}

TEST_CASE("inverse: pure modes") {
  const TorusGrid g(-1.0, 3.0, 8);

  SpectrumField constant(g);
  constant[0] = 5.0;
  const NodalField v = inverse_dft(constant);
  for (int j = 0; j < 8; ++j) CHECK(v[j] == doctest::Approx(5.0).epsilon(1e-15));

  SpectrumField cosine(g);
  cosine[1] = 0.5;
  cosine[-1] = 0.5;
  const NodalField w = inverse_dft(cosine);
  for (int j = 0; j < 8; ++j)
    CHECK(w[j] == doctest::Approx(std::cos(g.mu(1) * (g.node(j) - g.a()))).epsilon(1e-13));
}

TEST_CASE("inverse flags symmetry violations") {
  const TorusGrid g(0.0, 1.0, 8);
  SpectrumField bad(g);
  bad[1] = {0.0, 1.0};  // no conjugate partner
  CHECK_THROWS_AS(inverse_dft(bad), realness_error);

  SpectrumField bad0(g);
  bad0[0] = {1.0, 0.5};
  CHECK_THROWS_AS(inverse_dft(bad0), realness_error);

  SpectrumField nan_spec(g);
  nan_spec[0] = {std::numeric_limits<double>::quiet_NaN(), 0.0};
  CHECK_THROWS_AS(inverse_dft(nan_spec), divergence_error);
}

TEST_CASE("round trip, Parseval and linearity on random fields") {
  std::mt19937 rng(20240601);
  const int sizes[] = {4, 8, 16, 64};
  for (int trial = 0; trial < 100; ++trial) {
    const TorusGrid g(-5.0, 5.0, sizes[trial % 4]);
    const NodalField v = test::random_nodal(g, rng);
    const Dft dft(g);

    const SpectrumField c = dft.forward(v);
    const NodalField back = dft.inverse(c);
    CHECK(max_nodal_diff(v, back) <= 1e-12 * std::max(1.0, v.max_abs()));

    // real-field symmetry: conjugate pairs, real zero and Nyquist modes
    const double scale = c.max_abs();
    for (int l = 1; l < g.modes() / 2; ++l)
      CHECK(std::abs(c[-l] - std::conj(c[l])) <= 1e-12 * scale);
    CHECK(std::abs(c[0].imag()) <= 1e-12 * scale);
    CHECK(std::abs(c[g.min_mode()].imag()) <= 1e-12 * scale);

    double nodal_energy = 0.0, coeff_energy = 0.0;
    for (int j = 0; j < g.modes(); ++j) nodal_energy += v[j] * v[j];
    nodal_energy /= g.modes();
    for (const auto& cl : c.slots()) coeff_energy += std::norm(cl);
    CHECK(nodal_energy == doctest::Approx(coeff_energy).epsilon(1e-12));

    const NodalField u = test::random_nodal(g, rng);
    const double alpha = 1.7, beta = -0.3;
    NodalField combo(g);
    for (int j = 0; j < g.modes(); ++j) combo[j] = alpha * u[j] + beta * v[j];
    const SpectrumField lhs = dft.forward(combo);
    SpectrumField rhs = dft.forward(u);
    const SpectrumField cv = dft.forward(v);
    for (int l = g.min_mode(); l <= g.max_mode(); ++l)
      rhs[l] = alpha * rhs[l] + beta * cv[l];
    CHECK(max_coeff_diff(lhs, rhs) <= 1e-13);
  }
}

TEST_CASE("interpolant evaluation") {
  const TorusGrid g(-60.0, 60.0, 32);

  SpectrumField constant(g);
  constant[0] = 5.0;
  CHECK(evaluate_interpolant(constant, 12.345) == doctest::Approx(5.0).epsilon(1e-15));

  SpectrumField cosine(g);
  cosine[1] = 0.5;
  cosine[-1] = 0.5;
  CHECK(evaluate_interpolant(cosine, g.a()) == doctest::Approx(1.0).epsilon(1e-13));

  // soliton samples, evaluated off the nodes against a complex-sum oracle
  NodalField v(g);
  for (int j = 0; j < g.modes(); ++j) {
    const double s = 1.0 / std::cosh(0.25 * g.node(j));
    v[j] = -0.375 * s * s;
  }
  const SpectrumField c = forward_dft(v);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> xs(g.a(), g.b());
  for (int trial = 0; trial < 50; ++trial) {
    const double x = xs(rng);
    std::complex<double> oracle{0.0, 0.0};
    for (int l = g.min_mode(); l <= g.max_mode(); ++l)
      oracle += c[l] * std::exp(std::complex<double>(0.0, g.mu(l) * (x - g.a())));
    CHECK(evaluate_interpolant(c, x) == doctest::Approx(oracle.real()).epsilon(1e-12));
  }

  // agrees with nodal values at the nodes
  const NodalField back = inverse_dft(c);
  for (int j : {0, 5, 17, 31})
    CHECK(evaluate_interpolant(c, g.node(j)) == doctest::Approx(back[j]).epsilon(1e-12));

  CHECK_THROWS_AS(evaluate_interpolant(c, g.b() + 1.0), std::domain_error);
  CHECK_THROWS_AS(evaluate_interpolant(c, g.a() - 1e-9), std::domain_error);
}
