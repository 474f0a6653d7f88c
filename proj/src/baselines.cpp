#include "fas/baselines.hpp"

#include <string>

#include "fas/detector.hpp"
#include "fas/errors.hpp"

namespace fas {

std::string_view to_string(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::kFpa:
      return "FPA";
    case BaselineKind::kRpa:
      return "RPA";
    case BaselineKind::kEas:
      return "EAS";
  }
  return "?";
}

namespace {

SensingDesign complete_design(std::vector<Position> positions, const ScenarioConfig& config,
                              const ChannelRealization& realization) {
  SensingDesign d;
  d.beamformer =
      beamforming_or_fallback(channel_vector(positions, realization, config.wavelength));
  d.positions = std::move(positions);
  d.threshold = optimal_threshold(DetectorConfig::from(config));
  return d;
}

}  // namespace

std::vector<Position> uniform_linear_array(std::size_t count, const ScenarioConfig& config) {
  if (count == 0) throw ConfigError("linear array needs at least one element");
  const double pitch = 0.5 * config.wavelength;
  const double extent = static_cast<double>(count - 1) * pitch;
  if (extent > config.region_side * (1.0 + 1e-12)) {
    throw ConfigError("a " + std::to_string(count) +
                      "-element lambda/2 array does not fit inside the antenna region");
  }
  if (count > 1 && pitch < config.min_spacing * (1.0 - 1e-12)) {
    throw ConfigError("lambda/2 array pitch is below the minimum spacing D");
  }
  std::vector<Position> out(count);
  const double centre = 0.5 * static_cast<double>(count + 1);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = {(static_cast<double>(i + 1) - centre) * pitch, 0.0};
  }
  return out;
}

std::vector<Position> fpa_layout(const ScenarioConfig& config) {
  return uniform_linear_array(config.num_antennas, config);
}

SensingDesign fpa_design(const ScenarioConfig& config, const ChannelRealization& realization) {
  return complete_design(fpa_layout(config), config, realization);
}

std::vector<Position> rpa_layout(const ScenarioConfig& config, SeededRng& rng) {
  const Region region(config.region_side);
  const double h = region.half_width();
  std::vector<Position> out(config.num_antennas);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    for (auto& p : out) p = {rng.uniform(-h, h), rng.uniform(-h, h)};
    bool ok = true;
    for (std::size_t i = 0; ok && i < out.size(); ++i)
      for (std::size_t j = i + 1; ok && j < out.size(); ++j)
        ok = distance(out[i], out[j]) >= config.min_spacing;
    if (ok) return out;
  }
  throw InfeasibleError("rpa_layout: 10^4 consecutive rejections, cannot pack antennas");
}

SensingDesign rpa_design(const ScenarioConfig& config, const ChannelRealization& realization,
                         SeededRng& rng) {
  return complete_design(rpa_layout(config, rng), config, realization);
}

std::vector<Position> eas_candidates(const ScenarioConfig& config) {
  return uniform_linear_array(2 * config.num_antennas, config);
}

EasSelection eas_select(const ScenarioConfig& config, const ChannelRealization& realization) {
  const std::vector<Position> candidates = eas_candidates(config);
  const std::size_t total = candidates.size();
  const std::size_t pick = config.num_antennas;

  // Per-candidate channel coefficient; a subset's ||h||^2 is the sum of |h_i|^2.
  const ComplexVector h_all = channel_vector(candidates, realization, config.wavelength);

  EasSelection best;
  best.gain = -1.0;
  std::vector<std::size_t> idx(pick);
  for (std::size_t i = 0; i < pick; ++i) idx[i] = i;

  // Lexicographic enumeration of k-combinations.
  for (;;) {
    double gain = 0.0;
    for (std::size_t i : idx) gain += std::norm(h_all[i]);
    ++best.subsets_evaluated;
    if (gain > best.gain) {
      best.gain = gain;
      best.indices = idx;
    }

    std::size_t k = pick;
    while (k > 0 && idx[k - 1] == total - pick + (k - 1)) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < pick; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

SensingDesign eas_design(const ScenarioConfig& config, const ChannelRealization& realization) {
  const std::vector<Position> candidates = eas_candidates(config);
  const EasSelection sel = eas_select(config, realization);
  std::vector<Position> chosen;
  chosen.reserve(sel.indices.size());
  for (std::size_t i : sel.indices) chosen.push_back(candidates[i]);
  return complete_design(std::move(chosen), config, realization);
}

}  // namespace fas
