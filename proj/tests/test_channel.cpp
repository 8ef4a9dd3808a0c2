#include <cmath>

#include "doctest.h"
#include "omc/channel.hpp"
#include "omc/random.hpp"
#include "oracles.hpp"

using namespace omc;

namespace {

constexpr double kA1 = 68.230229797944951;  // transmit level of bit "1"
constexpr double kDmid = 9.473e-6;

ChannelParams reference(double v = 4.0, double tau = 20e-6, double D = kDmid) {
  return {kA1, 50.0, v, tau, D};
}

ChannelParams random_params(oracle::Lcg& rng) {
  return {rng.uniform(0.1, 1000.0), rng.uniform(0.01, 200.0), rng.uniform(0.05, 20.0),
          std::pow(10.0, rng.uniform(-9.0, -1.0)), std::pow(10.0, rng.uniform(-7.0, -3.0))};
}

// d2Phi/dx2 of the closed form, constant in x and t.
double second_x_derivative(const ChannelParams& p) {
  return -2.0 * p.initial_concentration_A * (p.R + p.tau * p.v) /
         (p.R * p.tau * (2.0 * p.D + p.R * p.v + p.tau * p.v * p.v));
}

}  // namespace

TEST_CASE("boundary conditions at the reference link") {
  const auto p = reference();
  CHECK(concentration_at(0.0, 0.0, p) == doctest::Approx(kA1).epsilon(1e-14));
  CHECK(concentration_at(p.R, 0.0, p) == 0.0);
  CHECK(concentration_at(0.0, p.tau, p) == 0.0);
}

TEST_CASE("boundary conditions hold for arbitrary positive parameters") {
  oracle::Lcg rng(99);
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_params(rng);
    const double A = p.initial_concentration_A;
    REQUIRE(std::fabs(concentration_unclamped(0.0, 0.0, p) - A) <= 1e-12 * A);
    REQUIRE(std::fabs(concentration_unclamped(p.R, 0.0, p)) <= 1e-12 * A);
    REQUIRE(std::fabs(concentration_unclamped(0.0, p.tau, p)) <= 1e-12 * A);
  }
}

TEST_CASE("field value at the receiver sampling point") {
  const double phi = concentration_at(50.0, 12.5, reference());
  CHECK(std::fabs(phi - 64.19) < 0.01);
  CHECK(phi == doctest::Approx(64.190574137646341).epsilon(1e-9));
}

TEST_CASE("field agrees with the term-by-term expansion") {
  oracle::Lcg rng(23);
  for (int i = 0; i < 2000; ++i) {
    const auto p = random_params(rng);
    const double x = rng.uniform(0.0, p.R);
    const double t = rng.uniform(0.0, 2.0 * p.R / p.v);
    const double mine = concentration_unclamped(x, t, p);
    const auto ref =
        oracle::field_expanded(x, t, p.initial_concentration_A, p.R, p.v, p.tau, p.D);
    // Both routes cancel terms of size about A (R + v t)^2 / (R tau v); compare
    // relative to that scale.
    const double scale = p.initial_concentration_A *
                         (1.0 + (p.R + p.v * t) * (p.R + p.v * t) / (p.R * p.tau * p.v));
    REQUIRE(std::fabs(mine - static_cast<double>(ref)) <= 1e-13 * scale);
  }
}

TEST_CASE("received concentration matches the reduced form and reference means") {
  oracle::Lcg rng(5);
  for (int i = 0; i < 2000; ++i) {
    const auto p = random_params(rng);
    const double full = received_concentration(p);
    const double reduced = received_concentration_reduced(p);
    const double indep = static_cast<double>(
        oracle::received(p.initial_concentration_A, p.R, p.v, p.tau, p.D));
    const double scale = p.initial_concentration_A * (1.0 + p.R / (p.v * p.tau));
    REQUIRE(std::fabs(full - reduced) <= 1e-13 * scale);
    REQUIRE(std::fabs(full - indep) <= 1e-13 * scale);
  }

  CHECK(std::fabs(received_concentration(reference(4.0)) - 64.19) < 0.01);
  CHECK(std::fabs(received_concentration(reference(1.0)) - 3.60) < 0.01);
  CHECK(received_concentration(reference(0.5)) == 0.0);
  CHECK(concentration_unclamped(50.0, 100.0, reference(0.5)) < 0.0);
  CHECK(std::fabs(received_concentration(reference(4.0, 1e-3)) - 68.15) < 0.01);
}

TEST_CASE("domain checks") {
  const auto p = reference();
  CHECK_THROWS_AS(concentration_at(-1.0, 0.0, p), std::invalid_argument);
  CHECK_THROWS_AS(concentration_at(51.0, 0.0, p), std::invalid_argument);
  CHECK_THROWS_AS(concentration_at(10.0, -1.0, p), std::invalid_argument);
  CHECK_THROWS_AS((ChannelParams{1.0, 1.0, 0.0, 1.0, 1.0}.check()), std::invalid_argument);
  CHECK_NOTHROW(p.check());
}

TEST_CASE("linearity in A before clamping") {
  oracle::Lcg rng(17);
  for (int i = 0; i < 500; ++i) {
    auto p = random_params(rng);
    const double x = rng.uniform(0.0, p.R);
    const double t = rng.uniform(0.0, 3.0 * p.R / p.v);
    auto p2 = p;
    p2.initial_concentration_A *= 2.0;
    const double single = concentration_unclamped(x, t, p);
    const double doubled = concentration_unclamped(x, t, p2);
    REQUIRE(std::fabs(doubled - 2.0 * single) <= 1e-12 * (std::fabs(doubled) + 1.0));
  }
}

TEST_CASE("PDE residual vanishes at interior points") {
  const auto p = reference();
  const double bound = 1e-6 * p.initial_concentration_A / p.tau;
  const double r1 = pde_residual(10.0, 3.0, p, 1e-3);
  const double r2 = pde_residual(37.5, 9.0, p, 1e-3);
  CHECK(std::fabs(r1) < bound);
  CHECK(std::fabs(r2) < bound);

  oracle::Lcg rng(3);
  for (int i = 0; i < 1000; ++i) {
    const double h = 1e-3;
    const double x = rng.uniform(2.0 * h, p.R - 2.0 * h);
    const double t = rng.uniform(2.0 * h, 2.0 * p.R / p.v);
    REQUIRE(std::fabs(pde_residual(x, t, p, h)) < bound);
  }
  CHECK_THROWS_AS(pde_residual(0.0, 1.0, p, 1e-3), std::invalid_argument);
  CHECK_THROWS_AS(pde_residual(10.0, 0.0, p, 1e-3), std::invalid_argument);
}

TEST_CASE("PDE residual shrinks with h (second order or better)") {
  const auto p = reference();
  // The field is quadratic in x and t, so central differences have no
  // truncation error and the residual stays at rounding level for every h.
  for (double h : {1e-1, 1e-2, 1e-3}) {
    const double r = pde_residual(20.0, 5.0, p, h);
    CHECK(std::fabs(r) <= 1e-3 + std::fabs(second_x_derivative(p)) * h * h);
  }
}

TEST_CASE("negative control: mismatched D in the PDE leaves a predictable residual") {
  const auto p = reference();
  const double bound = 1e-6 * p.initial_concentration_A / p.tau;
  const double dxx = second_x_derivative(p);
  for (double delta : {1e-6, 1e-4, 1e-3}) {
    const double r = pde_residual(25.0, 6.0, p, 0.5, p.D + delta);
    const double expected = -delta * dxx;
    CHECK(r == doctest::Approx(expected).epsilon(1e-6));
  }
  CHECK(std::fabs(pde_residual(25.0, 6.0, p, 1e-2, p.D + 1e-3)) > bound);
}

TEST_CASE("received concentration monotonicity") {
  for (double D = 9.0e-6; D < 1.0e-5; D += 1e-7) {
    CHECK(received_concentration(reference(4.0, 20e-6, D + 1e-7)) <
          received_concentration(reference(4.0, 20e-6, D)));
  }
  for (double v = 1.0; v < 10.0; v += 0.25) {
    CHECK(received_concentration(reference(v + 0.25)) > received_concentration(reference(v)));
  }
  for (double tau = 2e-6; tau < 1e-2; tau *= 1.5) {
    CHECK(received_concentration(reference(4.0, tau * 1.5)) >
          received_concentration(reference(4.0, tau)));
  }
}

TEST_CASE("Fuller temperature scaling") {
  CHECK(diffusion_at_temperature(9.5e-6, 298.0, 298.0) == 9.5e-6);
  CHECK(diffusion_at_temperature(1.0, 400.0, 298.0) ==
        doctest::Approx(1.6738884885088849).epsilon(1e-13));
  CHECK(std::fabs(diffusion_at_temperature(1.0, 400.0, 298.0) - 1.6738) < 1e-3);
  CHECK(diffusion_at_temperature(1.0, 149.0, 298.0) ==
        doctest::Approx(0.29730177875068027).epsilon(1e-13));
  CHECK_THROWS_AS(diffusion_at_temperature(1.0, 0.0, 298.0), std::invalid_argument);

  const OdorantSpec od;
  const auto hot = diffusion_range_at(od, 400.0);
  CHECK(hot.lo == doctest::Approx(od.diffusion_min * 1.6738884885088849));
  CHECK(hot.hi == doctest::Approx(od.diffusion_max * 1.6738884885088849));
}

TEST_CASE("diffusion sampling is uniform over the range") {
  const OdorantSpec od;
  CounterRng rng(1234, 0, 0);
  constexpr int n = 1'000'000;
  double sum = 0.0;
  double sum_sq = 0.0;
  double lo = 1.0;
  double hi = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = sample_diffusion(od, 298.0, rng);
    sum += d;
    sum_sq += d * d;
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  const double mean = sum / n;
  const double std = std::sqrt(sum_sq / n - mean * mean);
  const double width = od.diffusion_max - od.diffusion_min;
  CHECK(std::fabs(mean - 0.5 * (od.diffusion_min + od.diffusion_max)) <
        1e-3 * 0.5 * (od.diffusion_min + od.diffusion_max));
  CHECK(std::fabs(std - width / std::sqrt(12.0)) < 0.01 * width / std::sqrt(12.0));
  CHECK(std::fabs(width / std::sqrt(12.0) - 2.281e-7) < 1e-10);
  CHECK(lo >= od.diffusion_min);
  CHECK(hi <= od.diffusion_max);
}

TEST_CASE("identical seeds give identical draws") {
  const OdorantSpec od;
  CounterRng a(77, 3, 9);
  CounterRng b(77, 3, 9);
  CounterRng c(77, 3, 10);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const double da = sample_diffusion(od, 310.0, a);
    REQUIRE(da == sample_diffusion(od, 310.0, b));
    differs = differs || da != sample_diffusion(od, 310.0, c);
  }
  CHECK(differs);
}
