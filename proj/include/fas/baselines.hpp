#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "fas/channel.hpp"
#include "fas/optimizer.hpp"
#include "fas/rng.hpp"
#include "fas/scenario.hpp"

namespace fas {

enum class BaselineKind { kFpa, kRpa, kEas };

std::string_view to_string(BaselineKind kind);

/// Centered uniform linear array on the x-axis with lambda/2 pitch:
/// x_n = (n - (N + 1) / 2) * lambda / 2. Throws ConfigError when it does not
/// fit inside the region or its pitch is below the minimum spacing.
std::vector<Position> uniform_linear_array(std::size_t count, const ScenarioConfig& config);

std::vector<Position> fpa_layout(const ScenarioConfig& config);

/// FPA layout with w = h / ||h|| and the optimal threshold.
SensingDesign fpa_design(const ScenarioConfig& config, const ChannelRealization& realization);

/// Uniform draws in the region, rejected as a whole until every pair is at
/// least D apart. Throws InfeasibleError after 10^4 consecutive rejections.
std::vector<Position> rpa_layout(const ScenarioConfig& config, SeededRng& rng);

SensingDesign rpa_design(const ScenarioConfig& config, const ChannelRealization& realization,
                         SeededRng& rng);

/// 2N-point centered lambda/2 array; the FPA layout is its middle N points.
std::vector<Position> eas_candidates(const ScenarioConfig& config);

struct EasSelection {
  std::vector<std::size_t> indices;  // into eas_candidates(), ascending
  double gain = 0.0;                 // ||h||^2 of the chosen subset
  std::size_t subsets_evaluated = 0;
};

/// Exhaustive search over all C(2N, N) subsets for the largest ||h||^2
/// (= the largest SNR under optimal beamforming). Ties keep the
/// lexicographically smallest index set.
EasSelection eas_select(const ScenarioConfig& config, const ChannelRealization& realization);

SensingDesign eas_design(const ScenarioConfig& config, const ChannelRealization& realization);

}  // namespace fas
