#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fas/numerics.hpp"
#include "fas/rng.hpp"
#include "fas/scenario.hpp"

namespace fas {

struct Position {
  double x = 0.0;  // m
  double y = 0.0;  // m

  friend Position operator+(Position a, Position b) { return {a.x + b.x, a.y + b.y}; }
  friend Position operator-(Position a, Position b) { return {a.x - b.x, a.y - b.y}; }
  friend Position operator*(double s, Position p) { return {s * p.x, s * p.y}; }
  friend bool operator==(const Position&, const Position&) = default;
};

double dot(Position a, Position b);
double distance(Position a, Position b);

/// Square antenna region [-A/2, A/2] x [-A/2, A/2].
class Region {
 public:
  explicit Region(double side);

  double side() const noexcept { return side_; }
  double half_width() const noexcept { return 0.5 * side_; }
  bool contains(Position p) const noexcept;
  Position clamp(Position p) const noexcept;

 private:
  double side_;
};

/// Per receive path: elevation theta_l and azimuth phi_l, both in [0, pi].
struct PathAngles {
  std::vector<double> elevation;
  std::vector<double> azimuth;

  std::size_t size() const noexcept { return elevation.size(); }
  /// Direction cosines of path l: (sin(theta) cos(phi), cos(theta)).
  Position direction(std::size_t l) const;
};

// One Monte Carlo draw of the PU -> SU link. The path response matrix is
// diagonal and the PU transmit response is all-ones, so the link is fully
// described by the per-path gain vector sigma = Sigma * 1.
struct ChannelRealization {
  PathAngles angles;
  ComplexVector path_gains;

  std::size_t num_paths() const noexcept { return path_gains.size(); }
  /// sigma = Sigma * 1; equal to the diagonal gains.
  const ComplexVector& effective_paths() const noexcept { return path_gains; }
  ComplexMatrix path_response_matrix() const { return ComplexMatrix::diagonal(path_gains); }
};

/// rho_l(t) = x sin(theta_l) cos(phi_l) + y cos(theta_l). Throws DimensionError
/// when l is out of range.
double path_difference(Position t, const PathAngles& angles, std::size_t l);

/// f(t) with entries exp(j 2 pi / lambda * rho_l(t)).
ComplexVector field_response_vector(Position t, const PathAngles& angles, double wavelength);

/// F = [f(t_1), ..., f(t_N)], L_r x N.
ComplexMatrix field_response_matrix(std::span<const Position> positions, const PathAngles& angles,
                                    double wavelength);

/// h = F^H sigma, length N.
ComplexVector channel_vector(std::span<const Position> positions,
                             const ChannelRealization& realization, double wavelength);

/// |w^H h|^2 evaluated directly from the channel vector.
double beamformed_gain(std::span<const Position> positions, const ChannelRealization& realization,
                       const ComplexVector& w, double wavelength);

/// Angles i.i.d. Uniform[0, pi]; gains i.i.d. CN(0, g0 (d/d0)^-alpha / L).
ChannelRealization sample_channel(const ScenarioConfig& config, SeededRng& rng);

}  // namespace fas
