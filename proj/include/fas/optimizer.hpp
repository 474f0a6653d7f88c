#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fas/channel.hpp"
#include "fas/detector.hpp"
#include "fas/numerics.hpp"
#include "fas/projection.hpp"
#include "fas/scenario.hpp"

namespace fas {

/// Decision variables: antenna positions, receive beamformer, threshold.
struct SensingDesign {
  std::vector<Position> positions;
  ComplexVector beamformer;
  double threshold = 0.0;
};

/// Checks box membership, pairwise spacing >= D - tol and ||w|| = 1.
bool is_feasible_design(const SensingDesign& design, const ScenarioConfig& config,
                        double tolerance = 1e-9);

struct AOConfig {
  double outer_tolerance = 1e-4;  // on P_d change between sweeps
  std::size_t outer_max_iterations = 100;
  double inner_tolerance = 1e-6;  // relative change of |w^H h|^2
  std::size_t inner_max_iterations = 20;

  void validate() const;
};

/// w = h / ||h||. Throws DegenerateChannelError when h = 0.
ComplexVector optimal_beamforming(const ComplexVector& h);

/// optimal_beamforming with the e_1 fallback for a zero channel.
ComplexVector beamforming_or_fallback(const ComplexVector& h);

// Split of |w^H h|^2 around antenna n:
//   |w^H h|^2 = alpha + f_n^H Psi f_n + 2 Re{f_n^H Omega}
// with u = sum_{j != n} w_j f(t_j), Phi = sigma sigma^H,
//   alpha = u^H Phi u, Psi = |w_n|^2 Phi, Omega = conj(w_n) Phi u.
struct GainDecomposition {
  double alpha = 0.0;
  ComplexMatrix psi;
  ComplexVector omega;
};

GainDecomposition decompose_gain(std::span<const Position> positions,
                                 const ChannelRealization& realization, const ComplexVector& w,
                                 std::size_t n, double wavelength);

// Concave quadratic minorant of |w^H h|^2 as a function of t_n, tangent at
// `anchor`. beta_bar(t) = 2 Re{f(t)^H upsilon} = 2 sum_l |upsilon_l| cos(Pi_l(t))
// with Pi_l(t) = (2 pi / lambda) rho_l(t) - arg(upsilon_l).
struct SurrogateParams {
  Position anchor;
  double alpha = 0.0;
  ComplexMatrix psi;
  ComplexVector omega;
  ComplexVector upsilon;      // Psi^H f(anchor) + Omega
  double kappa = 0.0;         // (16 pi^2 / lambda^2) sum_l |upsilon_l|
  double anchor_correction = 0.0;  // f(anchor)^H Psi f(anchor)
  double beta_bar_anchor = 0.0;
  Position gradient_anchor;   // grad beta_bar at the anchor
  PathAngles angles;
  double wavelength = 0.0;
};

SurrogateParams build_surrogate(std::span<const Position> positions,
                                const ChannelRealization& realization, const ComplexVector& w,
                                std::size_t n, Position anchor, double wavelength);

double beta_bar(Position t, const SurrogateParams& params);
Position beta_bar_gradient(Position t, const SurrogateParams& params);

/// g(t) + alpha - f(anchor)^H Psi f(anchor), where
/// g(t) = beta_bar(anchor) + grad^T (t - anchor) - (kappa / 2) ||t - anchor||^2.
double surrogate_value(Position t, const SurrogateParams& params);

/// Maximizer of surrogate_value over the polyhedron: projection of the
/// Newton point anchor + grad / kappa. Returns the anchor when kappa == 0.
Position maximize_surrogate(const SurrogateParams& params, const Region& region,
                            std::span<const Halfspace> halfspaces);

/// First-order restriction of ||t_n - t_v|| >= D for every v != n, taken at
/// the current t_n. Throws InfeasibleError when t_n coincides with some t_v.
std::vector<Halfspace> linearized_spacing_halfspaces(std::size_t n,
                                                     std::span<const Position> positions,
                                                     double min_spacing);

struct AntennaUpdate {
  Position position;
  double gain = 0.0;            // |w^H h|^2 at the returned position
  std::size_t iterations = 0;   // accepted surrogate steps
};

/// SCA for antenna n with w and the other antennas fixed. When `gain_log`
/// is non-null every accepted |w^H h|^2 value (starting point first) is
/// appended to it.
AntennaUpdate sca_update_antenna(std::size_t n, const SensingDesign& design,
                                 const ChannelRealization& realization,
                                 const ScenarioConfig& config, const AOConfig& ao,
                                 std::vector<double>* gain_log = nullptr);

struct AOIterate {
  double detection = 0.0;
  double snr = 0.0;
  std::vector<Position> positions;
};

struct AOTrace {
  /// Entry 0 is the initial layout with optimal w; entry m is after sweep m.
  std::vector<AOIterate> iterates;
  /// Every accepted |w^H h|^2 across beamformer and antenna updates.
  std::vector<double> gain_history;
  std::size_t outer_iterations = 0;
  bool converged = false;
};

struct AOResult {
  SensingDesign design;
  AOTrace trace;
};

/// Alternating optimization: tau fixed at the optimal threshold, then
/// repeated sweeps of (SCA on t_1..t_N, w = h / ||h||) until the P_d gain of
/// a sweep drops below ao.outer_tolerance.
AOResult alternating_optimize(const ChannelRealization& realization, const ScenarioConfig& config,
                              const AOConfig& ao, const SensingDesign& init);

}  // namespace fas
