#include "omc/psychophysics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace omc {

double intensity_of(double conc, const OdorantSpec& odorant) {
  if (!(conc > 0.0)) {
    throw std::domain_error("intensity_of: concentration must be positive, got " +
                            std::to_string(conc));
  }
  return odorant.weber_fechner_k * std::log10(conc) + odorant.intensity_intercept_d;
}

double concentration_of(double intensity, const OdorantSpec& odorant) {
  return std::pow(10.0, (intensity - odorant.intensity_intercept_d) / odorant.weber_fechner_k);
}

IntensityBand band_for_level(double level, double halfwidth, const OdorantSpec& odorant) {
  if (!(std::isfinite(halfwidth) && halfwidth >= 0.0)) {
    throw std::invalid_argument("band_for_level: halfwidth must be non-negative");
  }
  IntensityBand band;
  band.level_I = level;
  band.intensity_lo = level - halfwidth;
  band.intensity_hi = level + halfwidth;
  band.conc_lo = concentration_of(band.intensity_lo, odorant);
  band.conc_hi = concentration_of(band.intensity_hi, odorant);
  return band;
}

OiskScheme::OiskScheme(const std::vector<double>& levels, double halfwidth,
                       const OdorantSpec& odorant) {
  if (levels.empty()) throw std::invalid_argument("OISK scheme needs at least one level");
  if (!(std::isfinite(halfwidth) && halfwidth > 0.0)) {
    throw std::invalid_argument("OISK scheme needs a positive intensity halfwidth");
  }
  symbols_.reserve(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i > 0) {
      if (!(levels[i] > levels[i - 1])) {
        throw std::invalid_argument("OISK levels must be strictly increasing");
      }
      if (!(levels[i] - levels[i - 1] > 2.0 * halfwidth)) {
        throw std::invalid_argument("OISK bands overlap between levels " +
                                    std::to_string(levels[i - 1]) + " and " +
                                    std::to_string(levels[i]));
      }
    }
    OiskSymbol s;
    s.index = i;
    s.band = band_for_level(levels[i], halfwidth, odorant);
    s.transmit_concentration_A = s.band.conc_hi;
    symbols_.push_back(s);
  }
}

OiskScheme build_scheme(const std::vector<double>& levels, double halfwidth,
                        const OdorantSpec& odorant) {
  return OiskScheme(levels, halfwidth, odorant);
}

std::optional<std::size_t> decode(double conc, const OiskScheme& scheme) noexcept {
  for (const auto& s : scheme.symbols()) {
    if (s.band.contains(conc)) return s.index;
  }
  return std::nullopt;
}

}  // namespace omc
