#include "fas/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fas/errors.hpp"

namespace fas {

double dot(Position a, Position b) { return a.x * b.x + a.y * b.y; }

double distance(Position a, Position b) { return std::hypot(a.x - b.x, a.y - b.y); }

Region::Region(double side) : side_(side) {
  if (!(side > 0.0) || !std::isfinite(side)) throw ConfigError("Region: side must be positive");
}

bool Region::contains(Position p) const noexcept {
  const double h = half_width();
  return p.x >= -h && p.x <= h && p.y >= -h && p.y <= h;
}

Position Region::clamp(Position p) const noexcept {
  const double h = half_width();
  return {std::clamp(p.x, -h, h), std::clamp(p.y, -h, h)};
}

Position PathAngles::direction(std::size_t l) const {
  if (l >= elevation.size() || l >= azimuth.size()) {
    throw DimensionError("path index " + std::to_string(l) + " out of range");
  }
  return {std::sin(elevation[l]) * std::cos(azimuth[l]), std::cos(elevation[l])};
}

double path_difference(Position t, const PathAngles& angles, std::size_t l) {
  return dot(t, angles.direction(l));
}

ComplexVector field_response_vector(Position t, const PathAngles& angles, double wavelength) {
  if (!(wavelength > 0.0)) throw ContractError("field_response_vector: wavelength must be > 0");
  const double k = 2.0 * std::numbers::pi / wavelength;
  ComplexVector f(angles.size());
  for (std::size_t l = 0; l < angles.size(); ++l) {
    f[l] = std::polar(1.0, k * path_difference(t, angles, l));
  }
  return f;
}

ComplexMatrix field_response_matrix(std::span<const Position> positions, const PathAngles& angles,
                                    double wavelength) {
  ComplexMatrix F(angles.size(), positions.size());
  for (std::size_t n = 0; n < positions.size(); ++n) {
    F.set_column(n, field_response_vector(positions[n], angles, wavelength));
  }
  return F;
}

ComplexVector channel_vector(std::span<const Position> positions,
                             const ChannelRealization& realization, double wavelength) {
  if (realization.angles.size() != realization.num_paths()) {
    throw DimensionError("channel_vector: angle count does not match path gains");
  }
  const ComplexVector& sigma = realization.effective_paths();
  ComplexVector h(positions.size());
  for (std::size_t n = 0; n < positions.size(); ++n) {
    h[n] = inner(field_response_vector(positions[n], realization.angles, wavelength), sigma);
  }
  return h;
}

double beamformed_gain(std::span<const Position> positions, const ChannelRealization& realization,
                       const ComplexVector& w, double wavelength) {
  return std::norm(inner(w, channel_vector(positions, realization, wavelength)));
}

ChannelRealization sample_channel(const ScenarioConfig& config, SeededRng& rng) {
  const std::size_t L = config.num_paths;
  ChannelRealization out;
  out.angles.elevation.resize(L);
  out.angles.azimuth.resize(L);
  out.path_gains = ComplexVector(L);
  for (std::size_t l = 0; l < L; ++l) {
    out.angles.elevation[l] = rng.uniform(0.0, std::numbers::pi);
    out.angles.azimuth[l] = rng.uniform(0.0, std::numbers::pi);
  }
  const double variance = config.path_gain_variance();
  for (std::size_t l = 0; l < L; ++l) out.path_gains[l] = rng.complex_normal(variance);
  return out;
}

}  // namespace fas
