#include "fas/optimizer.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fas/errors.hpp"

namespace fas {

bool is_feasible_design(const SensingDesign& design, const ScenarioConfig& config,
                        double tolerance) {
  const Region region(config.region_side);
  const double h = region.half_width();
  for (const auto& p : design.positions) {
    if (std::abs(p.x) > h + tolerance || std::abs(p.y) > h + tolerance) return false;
  }
  for (std::size_t i = 0; i < design.positions.size(); ++i) {
    for (std::size_t j = i + 1; j < design.positions.size(); ++j) {
      if (distance(design.positions[i], design.positions[j]) < config.min_spacing - tolerance) {
        return false;
      }
    }
  }
  return std::abs(design.beamformer.norm() - 1.0) <= tolerance;
}

void AOConfig::validate() const {
  if (!(outer_tolerance > 0.0) || !(inner_tolerance > 0.0)) {
    throw ConfigError("AO tolerances must be > 0");
  }
  if (outer_max_iterations < 1 || inner_max_iterations < 1) {
    throw ConfigError("AO iteration caps must be >= 1");
  }
}

ComplexVector optimal_beamforming(const ComplexVector& h) {
  const double norm = h.norm();
  if (!(norm > 0.0)) throw DegenerateChannelError("optimal_beamforming: zero channel");
  return cplx(1.0 / norm, 0.0) * h;
}

ComplexVector beamforming_or_fallback(const ComplexVector& h) {
  if (!(h.norm() > 0.0)) return ComplexVector::unit(h.size(), 0);
  return optimal_beamforming(h);
}

GainDecomposition decompose_gain(std::span<const Position> positions,
                                 const ChannelRealization& realization, const ComplexVector& w,
                                 std::size_t n, double wavelength) {
  if (n >= positions.size()) throw DimensionError("decompose_gain: antenna index out of range");
  if (w.size() != positions.size()) throw DimensionError("decompose_gain: w size != N");

  const ComplexVector& sigma = realization.effective_paths();
  const std::size_t L = sigma.size();

  ComplexVector others(L);
  for (std::size_t j = 0; j < positions.size(); ++j) {
    if (j == n) continue;
    others += w[j] * field_response_vector(positions[j], realization.angles, wavelength);
  }

  const ComplexMatrix phi = ComplexMatrix::outer(sigma, sigma);
  GainDecomposition d;
  d.alpha = hermitian_quadratic_form(others, phi);
  d.psi = std::norm(w[n]) * phi;
  d.omega = std::conj(w[n]) * (phi * others);
  return d;
}

SurrogateParams build_surrogate(std::span<const Position> positions,
                                const ChannelRealization& realization, const ComplexVector& w,
                                std::size_t n, Position anchor, double wavelength) {
  const GainDecomposition d = decompose_gain(positions, realization, w, n, wavelength);
  const ComplexVector f0 = field_response_vector(anchor, realization.angles, wavelength);

  SurrogateParams s;
  s.anchor = anchor;
  s.alpha = d.alpha;
  s.psi = d.psi;
  s.omega = d.omega;
  s.upsilon = s.psi.adjoint() * f0 + s.omega;

  double magnitude_sum = 0.0;
  for (const auto& u : s.upsilon) magnitude_sum += std::abs(u);
  s.kappa = 16.0 * std::numbers::pi * std::numbers::pi / (wavelength * wavelength) * magnitude_sum;

  s.anchor_correction = hermitian_quadratic_form(f0, s.psi);
  s.angles = realization.angles;
  s.wavelength = wavelength;
  s.beta_bar_anchor = beta_bar(anchor, s);
  s.gradient_anchor = beta_bar_gradient(anchor, s);
  return s;
}

namespace {

double phase_term(Position t, const SurrogateParams& p, std::size_t l) {
  const double k = 2.0 * std::numbers::pi / p.wavelength;
  return k * path_difference(t, p.angles, l) - std::arg(p.upsilon[l]);
}

}  // namespace

double beta_bar(Position t, const SurrogateParams& params) {
  double acc = 0.0;
  for (std::size_t l = 0; l < params.upsilon.size(); ++l) {
    acc += std::abs(params.upsilon[l]) * std::cos(phase_term(t, params, l));
  }
  return 2.0 * acc;
}

Position beta_bar_gradient(Position t, const SurrogateParams& params) {
  const double scale = -4.0 * std::numbers::pi / params.wavelength;
  Position g{0.0, 0.0};
  for (std::size_t l = 0; l < params.upsilon.size(); ++l) {
    const double weight = std::abs(params.upsilon[l]) * std::sin(phase_term(t, params, l));
    const Position dir = params.angles.direction(l);
    g.x += weight * dir.x;
    g.y += weight * dir.y;
  }
  return scale * g;
}

double surrogate_value(Position t, const SurrogateParams& params) {
  const Position step = t - params.anchor;
  const double g = params.beta_bar_anchor + dot(params.gradient_anchor, step) -
                   0.5 * params.kappa * dot(step, step);
  return g + params.alpha - params.anchor_correction;
}

Position maximize_surrogate(const SurrogateParams& params, const Region& region,
                            std::span<const Halfspace> halfspaces) {
  if (!(params.kappa > 0.0)) return params.anchor;
  const Position newton = params.anchor + (1.0 / params.kappa) * params.gradient_anchor;
  return project_onto_polyhedron(newton, region, halfspaces);
}

std::vector<Halfspace> linearized_spacing_halfspaces(std::size_t n,
                                                     std::span<const Position> positions,
                                                     double min_spacing) {
  if (n >= positions.size()) throw DimensionError("spacing halfspaces: index out of range");
  std::vector<Halfspace> out;
  out.reserve(positions.size() - 1);
  const Position anchor = positions[n];
  for (std::size_t v = 0; v < positions.size(); ++v) {
    if (v == n) continue;
    const Position diff = anchor - positions[v];
    const double len = std::hypot(diff.x, diff.y);
    if (!(len > 0.0)) {
      throw InfeasibleError("spacing halfspaces: antennas " + std::to_string(n) + " and " +
                            std::to_string(v) + " coincide");
    }
    const Position a = (1.0 / len) * diff;
    out.push_back({a, min_spacing + dot(a, positions[v])});
  }
  return out;
}

AntennaUpdate sca_update_antenna(std::size_t n, const SensingDesign& design,
                                 const ChannelRealization& realization,
                                 const ScenarioConfig& config, const AOConfig& ao,
                                 std::vector<double>* gain_log) {
  if (n >= design.positions.size()) throw DimensionError("sca_update_antenna: bad index");
  const Region region(config.region_side);
  const double lambda = config.wavelength;

  std::vector<Position> positions = design.positions;
  AntennaUpdate result;
  result.position = positions[n];
  result.gain = beamformed_gain(positions, realization, design.beamformer, lambda);
  if (gain_log) gain_log->push_back(result.gain);

  for (std::size_t it = 0; it < ao.inner_max_iterations; ++it) {
    const SurrogateParams params =
        build_surrogate(positions, realization, design.beamformer, n, result.position, lambda);
    if (!(params.kappa > 0.0)) break;

    const auto halfspaces = linearized_spacing_halfspaces(n, positions, config.min_spacing);
    const Position candidate = maximize_surrogate(params, region, halfspaces);

    positions[n] = candidate;
    const double gain = beamformed_gain(positions, realization, design.beamformer, lambda);
    if (gain < result.gain) {
      // Rounding-level decrease: keep the previous point and stop.
      positions[n] = result.position;
      break;
    }

    const double change = (gain - result.gain) / std::max(result.gain, 1e-300);
    result.position = candidate;
    result.gain = gain;
    ++result.iterations;
    if (gain_log) gain_log->push_back(gain);
    if (change < ao.inner_tolerance) break;
  }
  return result;
}

AOResult alternating_optimize(const ChannelRealization& realization, const ScenarioConfig& config,
                              const AOConfig& ao, const SensingDesign& init) {
  config.validate();
  ao.validate();
  if (init.positions.size() != config.num_antennas) {
    throw ContractError("alternating_optimize: initial layout has wrong antenna count");
  }

  const DetectorConfig det = DetectorConfig::from(config);
  const double lambda = config.wavelength;

  AOResult out;
  SensingDesign& design = out.design;
  design.positions = init.positions;
  design.threshold = optimal_threshold(det);

  auto refresh_beamformer = [&] {
    const ComplexVector h = channel_vector(design.positions, realization, lambda);
    design.beamformer = beamforming_or_fallback(h);
    const double gamma = snr(design.beamformer, h, config.tx_power, config.noise_power);
    out.trace.gain_history.push_back(std::norm(inner(design.beamformer, h)));
    return AOIterate{detection_prob(design.threshold, gamma, det), gamma, design.positions};
  };

  // Feasibility is checked with a provisional unit beamformer.
  design.beamformer = ComplexVector::unit(config.num_antennas, 0);
  if (!is_feasible_design(design, config)) {
    throw ContractError("alternating_optimize: initial layout is infeasible");
  }

  out.trace.iterates.push_back(refresh_beamformer());
  for (std::size_t sweep = 1; sweep <= ao.outer_max_iterations; ++sweep) {
    for (std::size_t n = 0; n < design.positions.size(); ++n) {
      std::vector<double> inner_log;
      const AntennaUpdate upd =
          sca_update_antenna(n, design, realization, config, ao, &inner_log);
      design.positions[n] = upd.position;
      out.trace.gain_history.insert(out.trace.gain_history.end(), inner_log.begin() + 1,
                                    inner_log.end());
    }
    out.trace.iterates.push_back(refresh_beamformer());
    out.trace.outer_iterations = sweep;

    const double improvement =
        out.trace.iterates[sweep].detection - out.trace.iterates[sweep - 1].detection;
    if (improvement < ao.outer_tolerance) {
      out.trace.converged = true;
      break;
    }
  }
  return out;
}

}  // namespace fas
