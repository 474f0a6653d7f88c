#pragma once

#include <cstddef>
#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fas/detector.hpp"
#include "fas/optimizer.hpp"
#include "fas/scenario.hpp"

namespace fas {

/// FAS is the alternating optimizer; the rest are the comparison baselines.
enum class Scheme { kFas, kFpa, kRpa, kEas };

std::string_view to_string(Scheme scheme);
/// Case-insensitive; throws ConfigError for unknown names.
Scheme parse_scheme(std::string_view name);
std::vector<Scheme> all_schemes();

enum class SweepParameter { kNone, kPowerDbm, kDelta };

std::string_view to_string(SweepParameter parameter);
SweepParameter parse_sweep_parameter(std::string_view name);

/// Copy of `base` with the swept quantity set to `value` (dBm for power).
ScenarioConfig apply_sweep_value(const ScenarioConfig& base, SweepParameter parameter,
                                 double value);

std::vector<double> default_power_grid_dbm();  // 0, 2, ..., 20
std::vector<double> default_delta_grid();      // 0.02, 0.04, ..., 0.20

struct ExperimentConfig {
  ScenarioConfig scenario;
  AOConfig ao;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::vector<Scheme> schemes = all_schemes();
  std::vector<double> power_grid_dbm = default_power_grid_dbm();
  std::vector<double> delta_grid = default_delta_grid();
  std::vector<std::size_t> convergence_antennas = {2, 4, 6};
  std::size_t convergence_trials = 20;
  unsigned threads = 0;  // 0 = hardware concurrency
  bool record_timing = false;
  bool empirical = false;
  std::size_t empirical_trials = 1000;
  std::string output_dir = "results";

  void validate() const;
};

// JSON layout:
// { "scenario": {...}, "ao": {"outer_tolerance", "outer_max_iterations",
//   "inner_tolerance", "inner_max_iterations"}, "trials", "seed", "schemes": [...],
//   "sweep": {"parameter": "P_dBm" | "delta", "values": [...]},
//   "sweep_power_dBm": [...], "sweep_delta": [...],
//   "convergence": {"N": [...], "trials"}, "threads", "timing",
//   "empirical", "empirical_trials", "output_dir" }
ExperimentConfig experiment_from_json(const nlohmann::json& doc);
ExperimentConfig load_experiment_config(const std::string& path);

struct TrialResult {
  std::size_t trial = 0;
  Scheme scheme = Scheme::kFas;
  double sweep_value = 0.0;
  double snr = 0.0;
  double detection = 0.0;
  std::size_t iterations = 0;  // AO sweeps for FAS, 0 for baselines
  double seconds = 0.0;        // 0 unless timing is recorded
  std::optional<double> empirical_detection;
};

struct CurvePoint {
  double sweep_value = 0.0;
  Scheme scheme = Scheme::kFas;
  double mean_detection = 0.0;
  double standard_error = 0.0;
  std::size_t trials = 0;
};

struct TrialOptions {
  bool record_timing = false;
  bool empirical = false;
  std::size_t empirical_trials = 1000;
};

/// Per-trial random streams, keyed by (master seed, trial index, purpose).
/// The channel stream is shared by every scheme and sweep value.
ChannelRealization trial_channel(const ScenarioConfig& scenario, std::uint64_t seed,
                                 std::size_t trial);

/// One realization -> one design -> analytical P_d at the optimal threshold.
TrialResult run_trial(const ScenarioConfig& scenario, const AOConfig& ao, Scheme scheme,
                      std::uint64_t seed, std::size_t trial, double sweep_value = 0.0,
                      const TrialOptions& options = {});

/// Mean and standard error of P_d per (sweep value, scheme), in input order.
std::vector<CurvePoint> aggregate(const std::vector<TrialResult>& results,
                                  const std::vector<double>& sweep_values,
                                  const std::vector<Scheme>& schemes);

struct SweepResult {
  SweepParameter parameter = SweepParameter::kNone;
  std::vector<TrialResult> trials;  // ordered by (sweep value, scheme, trial)
  std::vector<CurvePoint> curve;
};

SweepResult run_sweep(const ExperimentConfig& config, SweepParameter parameter,
                      const std::vector<double>& values);
SweepResult sweep_power(const ExperimentConfig& config);
SweepResult sweep_delta(const ExperimentConfig& config);
/// All schemes at the configured scenario (no sweep).
SweepResult run_single_point(const ExperimentConfig& config);

struct ConvergenceRun {
  std::size_t num_antennas = 0;
  std::size_t trial = 0;
  AOTrace trace;
};

/// AO traces for every N in config.convergence_antennas over
/// config.convergence_trials paired realizations, ordered by (N, trial).
std::vector<ConvergenceRun> convergence_experiment(const ExperimentConfig& config);

// CSV emission. Rows keep the order they are given in; values use a fixed
// "%.12g" format so reruns are byte-identical. Throws IoError naming the path.
void emit_trials_csv(const std::string& path, SweepParameter parameter,
                     const std::vector<TrialResult>& results, bool include_empirical = false);
void emit_curve_csv(const std::string& path, const std::vector<CurvePoint>& curve);
void emit_convergence_csv(const std::string& traces_path, const std::string& summary_path,
                          const std::vector<ConvergenceRun>& runs);

}  // namespace fas

namespace fas {

struct DetectorCheck {
  Hypothesis hypothesis = Hypothesis::kNoiseOnly;
  double snr = 0.0;
  double threshold = 0.0;
  double analytical = 0.0;  // P_f under noise only, P_d otherwise
  double empirical = 0.0;
  double mean_statistic = 0.0;
};

/// Empirical vs analytical decision rate at the optimal threshold for a
/// channel h = c * 1 / sqrt(N) scaled to the requested SNR, w = h / ||h||.
DetectorCheck check_detector(const ScenarioConfig& scenario, double snr, Hypothesis hypothesis,
                             std::size_t trials, std::uint64_t seed, unsigned threads = 0);

void emit_detector_csv(const std::string& path, const std::vector<DetectorCheck>& checks);

}  // namespace fas
