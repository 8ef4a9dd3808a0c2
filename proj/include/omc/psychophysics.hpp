#pragma once

// Intensity <-> concentration mapping (base-10 Weber-Fechner law with a
// fixed intercept) and construction of OISK symbol alphabets.

#include <cstddef>
#include <optional>
#include <vector>

#include "omc/domain.hpp"

namespace omc {

/// Perceived intensity k*log10(conc) + d. Throws std::domain_error for conc <= 0.
double intensity_of(double conc, const OdorantSpec& odorant);

/// Inverse of intensity_of: 10^((intensity - d) / k). Defined for any real intensity.
double concentration_of(double intensity, const OdorantSpec& odorant);

/// Intensity interval [level - halfwidth, level + halfwidth] and its image
/// concentration interval. Log compression makes the concentration band
/// asymmetric about concentration_of(level).
struct IntensityBand {
  double level_I = 0.0;
  double intensity_lo = 0.0;
  double intensity_hi = 0.0;
  double conc_lo = 0.0;
  double conc_hi = 0.0;

  bool contains(double conc) const noexcept { return conc_lo <= conc && conc <= conc_hi; }
};

/// halfwidth == 0 yields a degenerate band with conc_lo == conc_hi.
/// Throws std::invalid_argument for a negative or non-finite halfwidth.
IntensityBand band_for_level(double level, double halfwidth, const OdorantSpec& odorant);

struct OiskSymbol {
  std::size_t index = 0;
  IntensityBand band;
  // Transmitted at the top of the band so propagation loss keeps it inside.
  double transmit_concentration_A = 0.0;
};

class OiskScheme {
 public:
  /// Throws std::invalid_argument when levels are empty, not strictly
  /// increasing, or closer than 2*halfwidth (overlapping bands).
  OiskScheme(const std::vector<double>& levels, double halfwidth, const OdorantSpec& odorant);

  std::size_t size() const noexcept { return symbols_.size(); }
  const OiskSymbol& operator[](std::size_t i) const { return symbols_.at(i); }
  const std::vector<OiskSymbol>& symbols() const noexcept { return symbols_; }

 private:
  std::vector<OiskSymbol> symbols_;
};

OiskScheme build_scheme(const std::vector<double>& levels, double halfwidth,
                        const OdorantSpec& odorant);

inline OiskScheme build_scheme(const ExperimentConfig& cfg) {
  return build_scheme(cfg.scheme_levels, cfg.intensity_halfwidth, cfg.odorant);
}

/// Index of the symbol whose closed concentration band holds conc, or
/// std::nullopt (an erasure) if no band does.
std::optional<std::size_t> decode(double conc, const OiskScheme& scheme) noexcept;

}  // namespace omc
