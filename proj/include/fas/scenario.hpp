#pragma once

#include <cstddef>
#include <json.hpp>

namespace fas {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

double db_to_linear(double db);
double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

// Physical and protocol parameters of one sensing scenario, SI units.
struct ScenarioConfig {
  double wavelength = 0.125;        // lambda, m
  double distance = 250.0;          // PU-SU distance, m
  double ref_distance = 1.0;        // d0, m
  double ref_gain = 1e-4;           // g0, linear (-40 dB)
  double pathloss_exponent = 2.8;
  std::size_t num_paths = 4;        // L = L_t = L_r
  std::size_t num_antennas = 4;     // N
  double region_side = 0.5;         // A = 4 lambda, m
  double min_spacing = 0.0625;      // D = lambda / 2, m
  double tx_power = 0.01;           // P, W (10 dBm)
  double noise_power = 1e-11;       // sigma_n^2, W (-80 dBm)
  std::size_t num_samples = 1000;   // K
  double max_false_alarm = 0.1;     // delta

  /// Per-path variance g0 (d / d0)^-alpha / L.
  double path_gain_variance() const;

  /// Throws ConfigError naming the first violated constraint.
  void validate() const;

  static ScenarioConfig defaults() { return {}; }
};

// JSON keys (all optional; absent keys keep the defaults):
//   lambda_m | fc_GHz | fc_Hz       wavelength, or carrier frequency (lambda = c / f)
//   distance_m, d0_m, g0_dB | g0, pathloss_exponent, L, N, K, delta
//   A_m | A_lambda                   region side (default 4 lambda)
//   D_m | D_lambda                   minimum spacing (default lambda / 2)
//   P_dBm | P_W, noise_dBm | noise_W
ScenarioConfig scenario_from_json(const nlohmann::json& doc);
nlohmann::json scenario_to_json(const ScenarioConfig& config);

}  // namespace fas
