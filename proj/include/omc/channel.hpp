#pragma once

// One-dimensional advection-diffusion channel between Tx (x = 0) and Rx
// (x = R).
//
// Phi(x, t) is an exact polynomial solution of
//     dPhi/dt + v dPhi/dx = D d2Phi/dx2
// fixed by Phi(0, 0) = A, Phi(R, 0) = 0 and Phi(0, tau) = 0. The receiver
// samples the field at x = R when the airflow front arrives, t = R / v.

#include <concepts>
#include <cstdint>

#include "omc/domain.hpp"
#include "omc/random.hpp"

namespace omc {

struct ChannelParams {
  double initial_concentration_A = 0.0;  // ou/m^3
  double R = 0.0;                        // m
  double v = 0.0;                        // m/s
  double tau = 0.0;                      // s
  double D = 0.0;                        // m^2/s

  /// Throws std::invalid_argument unless every field is finite and positive.
  void check() const;
};

/// Raw closed-form field, may be negative. Used by the PDE oracle.
double concentration_unclamped(double x, double t, const ChannelParams& p) noexcept;

/// Physical concentration: the closed form clamped below at zero.
/// Throws std::invalid_argument unless 0 <= x <= R and t >= 0.
double concentration_at(double x, double t, const ChannelParams& p);

/// concentration_at(R, R / v, p).
double received_concentration(const ChannelParams& p) noexcept;

/// Same quantity via the reduced form A (vR + tau v^2 - 2DR/(tau v)) / (2D + Rv + tau v^2),
/// clamped at zero.
double received_concentration_reduced(const ChannelParams& p) noexcept;

/// Central-difference estimate of dPhi/dt + v dPhi/dx - D_pde d2Phi/dx2 on the
/// unclamped field built from p. D_pde defaults to p.D; passing a different
/// value gives a residual of (p.D - D_pde) * d2Phi/dx2.
double pde_residual(double x, double t, const ChannelParams& p, double h);
double pde_residual(double x, double t, const ChannelParams& p, double h, double D_pde);

/// Fuller scaling D_ref * (T / T_ref)^1.75.
double diffusion_at_temperature(double D_ref, double T, double T_ref);

struct DiffusionRange {
  double lo = 0.0;
  double hi = 0.0;

  double draw(double unit_uniform) const noexcept { return lo + (hi - lo) * unit_uniform; }
};

/// The odorant's D interval with both ends Fuller-scaled to temperature T.
DiffusionRange diffusion_range_at(const OdorantSpec& odorant, double T);

/// Uniform draw from the temperature-scaled D range.
template <class Rng>
  requires std::same_as<typename Rng::result_type, std::uint64_t>
double sample_diffusion(const OdorantSpec& odorant, double T, Rng& rng) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return diffusion_range_at(odorant, T).draw(u);
}

}  // namespace omc
