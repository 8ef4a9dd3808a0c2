#include "omc/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace omc {

void ChannelParams::check() const {
  const auto ok = [](double x) { return std::isfinite(x) && x > 0.0; };
  if (!(ok(initial_concentration_A) && ok(R) && ok(v) && ok(tau) && ok(D))) {
    throw std::invalid_argument("ChannelParams: A, R, v, tau and D must all be positive");
  }
}

double concentration_unclamped(double x, double t, const ChannelParams& p) noexcept {
  const double R = p.R;
  const double v = p.v;
  const double tau = p.tau;
  const double K = 2.0 * p.D + R * v + tau * v * v;

  // The fifteen-term numerator over R tau K, regrouped as a plug-flow term
  // plus a quadratic correction. Every term of the first fraction vanishes
  // identically at (R, 0) and (0, tau), and the second is exactly zero at all
  // three boundary points, so the boundary values hold to the last bit.
  const double plug = (R * (tau - t) - tau * x) / (R * tau);
  const double bulge = x * (R - x) + t * (tau - t) * v * v + 2.0 * x * t * v;
  return p.initial_concentration_A * (plug + (R + tau * v) * bulge / (R * tau * K));
}

double concentration_at(double x, double t, const ChannelParams& p) {
  if (!(x >= 0.0 && x <= p.R)) {
    throw std::invalid_argument("concentration_at: x must lie in [0, R]");
  }
  if (!(t >= 0.0)) throw std::invalid_argument("concentration_at: t must be non-negative");
  return std::max(0.0, concentration_unclamped(x, t, p));
}

double received_concentration(const ChannelParams& p) noexcept {
  return std::max(0.0, concentration_unclamped(p.R, p.R / p.v, p));
}

double received_concentration_reduced(const ChannelParams& p) noexcept {
  const double A = p.initial_concentration_A;
  const double num = p.v * p.R + p.tau * p.v * p.v - 2.0 * p.D * p.R / (p.tau * p.v);
  const double den = 2.0 * p.D + p.R * p.v + p.tau * p.v * p.v;
  return std::max(0.0, A * num / den);
}

double pde_residual(double x, double t, const ChannelParams& p, double h) {
  return pde_residual(x, t, p, h, p.D);
}

double pde_residual(double x, double t, const ChannelParams& p, double h, double D_pde) {
  if (!(h > 0.0 && x > h && x < p.R - h && t > h)) {
    throw std::invalid_argument("pde_residual: (x, t) must be interior with margin h");
  }
  const double f = concentration_unclamped(x, t, p);
  const double f_tp = concentration_unclamped(x, t + h, p);
  const double f_tm = concentration_unclamped(x, t - h, p);
  const double f_xp = concentration_unclamped(x + h, t, p);
  const double f_xm = concentration_unclamped(x - h, t, p);

  const double dt = (f_tp - f_tm) / (2.0 * h);
  const double dx = (f_xp - f_xm) / (2.0 * h);
  const double dxx = (f_xp - 2.0 * f + f_xm) / (h * h);
  return dt + p.v * dx - D_pde * dxx;
}

double diffusion_at_temperature(double D_ref, double T, double T_ref) {
  if (!(T > 0.0 && T_ref > 0.0)) {
    throw std::invalid_argument("diffusion_at_temperature: temperatures must be positive");
  }
  return D_ref * std::pow(T / T_ref, 1.75);
}

DiffusionRange diffusion_range_at(const OdorantSpec& odorant, double T) {
  if (T == odorant.reference_temperature) {
    return {odorant.diffusion_min, odorant.diffusion_max};
  }
  return {diffusion_at_temperature(odorant.diffusion_min, T, odorant.reference_temperature),
          diffusion_at_temperature(odorant.diffusion_max, T, odorant.reference_temperature)};
}

}  // namespace omc
