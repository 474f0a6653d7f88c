#include "fas/experiments.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <fstream>
#include <string>

#include "fas/baselines.hpp"
#include "fas/channel.hpp"
#include "fas/detector.hpp"
#include "fas/errors.hpp"
#include "fas/parallel.hpp"
#include "fas/rng.hpp"

namespace fas {

namespace {

enum StreamPurpose : std::uint64_t {
  kChannelStream = 0,
  kRpaStream = 1,
  kEmpiricalStream = 2,  // + scheme index
};

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<double> arithmetic_grid(double first, double step, std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = first + step * static_cast<double>(i);
  return out;
}

template <typename T>
void read_key(const nlohmann::json& doc, const char* key, T& out) {
  auto it = doc.find(key);
  if (it == doc.end()) return;
  try {
    out = it->get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
}

}  // namespace

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::kFas:
      return "FAS";
    case Scheme::kFpa:
      return "FPA";
    case Scheme::kRpa:
      return "RPA";
    case Scheme::kEas:
      return "EAS";
  }
  return "?";
}

Scheme parse_scheme(std::string_view name) {
  const std::string n = lower(name);
  if (n == "fas") return Scheme::kFas;
  if (n == "fpa") return Scheme::kFpa;
  if (n == "rpa") return Scheme::kRpa;
  if (n == "eas") return Scheme::kEas;
  throw ConfigError("unknown scheme '" + std::string(name) + "' (expected FAS, FPA, RPA, EAS)");
}

std::vector<Scheme> all_schemes() { return {Scheme::kFas, Scheme::kFpa, Scheme::kRpa, Scheme::kEas}; }

std::string_view to_string(SweepParameter parameter) {
  switch (parameter) {
    case SweepParameter::kNone:
      return "none";
    case SweepParameter::kPowerDbm:
      return "P_dBm";
    case SweepParameter::kDelta:
      return "delta";
  }
  return "?";
}

SweepParameter parse_sweep_parameter(std::string_view name) {
  const std::string n = lower(name);
  if (n == "p_dbm" || n == "power" || n == "p") return SweepParameter::kPowerDbm;
  if (n == "delta") return SweepParameter::kDelta;
  if (n == "none") return SweepParameter::kNone;
  throw ConfigError("unknown sweep parameter '" + std::string(name) + "'");
}

ScenarioConfig apply_sweep_value(const ScenarioConfig& base, SweepParameter parameter,
                                 double value) {
  ScenarioConfig out = base;
  switch (parameter) {
    case SweepParameter::kNone:
      break;
    case SweepParameter::kPowerDbm:
      out.tx_power = dbm_to_watts(value);
      break;
    case SweepParameter::kDelta:
      out.max_false_alarm = value;
      break;
  }
  out.validate();
  return out;
}

std::vector<double> default_power_grid_dbm() { return arithmetic_grid(0.0, 2.0, 11); }

std::vector<double> default_delta_grid() {
  std::vector<double> out(10);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = 0.02 * static_cast<double>(i + 1);
  return out;
}

void ExperimentConfig::validate() const {
  scenario.validate();
  ao.validate();
  if (trials < 1) throw ConfigError("trial count must be >= 1");
  if (schemes.empty()) throw ConfigError("at least one scheme is required");
  for (double p : power_grid_dbm) {
    if (!std::isfinite(p)) throw ConfigError("power sweep values must be finite");
  }
  for (double d : delta_grid) {
    if (!(d > 0.0 && d < 1.0)) throw ConfigError("delta sweep values must lie in (0, 1)");
  }
  for (std::size_t n : convergence_antennas) {
    if (n < 1) throw ConfigError("convergence antenna counts must be >= 1");
  }
  if (empirical && empirical_trials < 1) throw ConfigError("empirical_trials must be >= 1");
}

ExperimentConfig experiment_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("experiment config must be a JSON object");
  ExperimentConfig cfg;
  if (auto it = doc.find("scenario"); it != doc.end()) cfg.scenario = scenario_from_json(*it);

  if (auto it = doc.find("ao"); it != doc.end()) {
    read_key(*it, "outer_tolerance", cfg.ao.outer_tolerance);
    read_key(*it, "outer_max_iterations", cfg.ao.outer_max_iterations);
    read_key(*it, "inner_tolerance", cfg.ao.inner_tolerance);
    read_key(*it, "inner_max_iterations", cfg.ao.inner_max_iterations);
  }
  read_key(doc, "trials", cfg.trials);
  read_key(doc, "seed", cfg.seed);
  read_key(doc, "threads", cfg.threads);
  read_key(doc, "timing", cfg.record_timing);
  read_key(doc, "empirical", cfg.empirical);
  read_key(doc, "empirical_trials", cfg.empirical_trials);
  read_key(doc, "output_dir", cfg.output_dir);
  read_key(doc, "sweep_power_dBm", cfg.power_grid_dbm);
  read_key(doc, "sweep_delta", cfg.delta_grid);

  if (auto it = doc.find("schemes"); it != doc.end()) {
    std::vector<std::string> names;
    read_key(doc, "schemes", names);
    cfg.schemes.clear();
    for (const auto& n : names) cfg.schemes.push_back(parse_scheme(n));
  }
  if (auto it = doc.find("sweep"); it != doc.end()) {
    std::string parameter;
    std::vector<double> values;
    read_key(*it, "parameter", parameter);
    read_key(*it, "values", values);
    switch (parse_sweep_parameter(parameter)) {
      case SweepParameter::kPowerDbm:
        cfg.power_grid_dbm = values;
        break;
      case SweepParameter::kDelta:
        cfg.delta_grid = values;
        break;
      case SweepParameter::kNone:
        break;
    }
  }
  if (auto it = doc.find("convergence"); it != doc.end()) {
    read_key(*it, "N", cfg.convergence_antennas);
    read_key(*it, "trials", cfg.convergence_trials);
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
  return experiment_from_json(doc);
}

// ---------------------------------------------------------------------------

ChannelRealization trial_channel(const ScenarioConfig& scenario, std::uint64_t seed,
                                 std::size_t trial) {
  SeededRng rng(seed, stream_key(trial, kChannelStream));
  return sample_channel(scenario, rng);
}

TrialResult run_trial(const ScenarioConfig& scenario, const AOConfig& ao, Scheme scheme,
                      std::uint64_t seed, std::size_t trial, double sweep_value,
                      const TrialOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const ChannelRealization realization = trial_channel(scenario, seed, trial);

  TrialResult r;
  r.trial = trial;
  r.scheme = scheme;
  r.sweep_value = sweep_value;

  SensingDesign design;
  switch (scheme) {
    case Scheme::kFas: {
      const AOResult ao_result =
          alternating_optimize(realization, scenario, ao, fpa_design(scenario, realization));
      design = ao_result.design;
      r.iterations = ao_result.trace.outer_iterations;
      break;
    }
    case Scheme::kFpa:
      design = fpa_design(scenario, realization);
      break;
    case Scheme::kRpa: {
      SeededRng rng(seed, stream_key(trial, kRpaStream));
      design = rpa_design(scenario, realization, rng);
      break;
    }
    case Scheme::kEas:
      design = eas_design(scenario, realization);
      break;
  }

  const DetectorConfig det = DetectorConfig::from(scenario);
  const ComplexVector h = channel_vector(design.positions, realization, scenario.wavelength);
  r.snr = snr(design.beamformer, h, scenario.tx_power, scenario.noise_power);
  r.detection = detection_prob(design.threshold, r.snr, det);

  if (options.empirical) {
    const auto purpose = kEmpiricalStream + static_cast<std::uint64_t>(scheme);
    r.empirical_detection =
        simulate_detector(h, design.beamformer, design.threshold, Hypothesis::kSignalPresent,
                          scenario.tx_power, det, options.empirical_trials, seed,
                          stream_key(trial, purpose), 1)
            .decision_rate;
  }

  if (options.record_timing) {
    r.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

std::vector<CurvePoint> aggregate(const std::vector<TrialResult>& results,
                                  const std::vector<double>& sweep_values,
                                  const std::vector<Scheme>& schemes) {
  std::vector<CurvePoint> curve;
  for (double value : sweep_values) {
    for (Scheme scheme : schemes) {
      double sum = 0.0;
      double sum_sq = 0.0;
      std::size_t count = 0;
      for (const auto& r : results) {
        if (r.scheme != scheme || r.sweep_value != value) continue;
        sum += r.detection;
        sum_sq += r.detection * r.detection;
        ++count;
      }
      CurvePoint p;
      p.sweep_value = value;
      p.scheme = scheme;
      p.trials = count;
      if (count > 0) {
        const double n = static_cast<double>(count);
        p.mean_detection = sum / n;
        if (count > 1) {
          const double var = std::max(0.0, (sum_sq - n * p.mean_detection * p.mean_detection) /
                                               (n - 1.0));
          p.standard_error = std::sqrt(var / n);
        }
      }
      curve.push_back(p);
    }
  }
  return curve;
}

SweepResult run_sweep(const ExperimentConfig& config, SweepParameter parameter,
                      const std::vector<double>& values) {
  config.validate();
  SweepResult out;
  out.parameter = parameter;

  std::vector<ScenarioConfig> scenarios;
  scenarios.reserve(values.size());
  for (double v : values) scenarios.push_back(apply_sweep_value(config.scenario, parameter, v));

  const std::size_t per_value = config.schemes.size() * config.trials;
  out.trials.resize(values.size() * per_value);
  const TrialOptions options{config.record_timing, config.empirical, config.empirical_trials};

  // Slot layout = (sweep value, scheme, trial), the emission order.
  parallel_for(out.trials.size(), config.threads, [&](std::size_t slot) {
    const std::size_t v = slot / per_value;
    const std::size_t s = (slot % per_value) / config.trials;
    const std::size_t t = slot % config.trials;
    out.trials[slot] = run_trial(scenarios[v], config.ao, config.schemes[s], config.seed, t,
                                 values[v], options);
  });

  out.curve = aggregate(out.trials, values, config.schemes);
  return out;
}

SweepResult sweep_power(const ExperimentConfig& config) {
  return run_sweep(config, SweepParameter::kPowerDbm, config.power_grid_dbm);
}

SweepResult sweep_delta(const ExperimentConfig& config) {
  return run_sweep(config, SweepParameter::kDelta, config.delta_grid);
}

SweepResult run_single_point(const ExperimentConfig& config) {
  return run_sweep(config, SweepParameter::kNone, {0.0});
}

std::vector<ConvergenceRun> convergence_experiment(const ExperimentConfig& config) {
  config.validate();
  const std::size_t trials = config.convergence_trials;
  std::vector<ConvergenceRun> runs(config.convergence_antennas.size() * trials);

  parallel_for(runs.size(), config.threads, [&](std::size_t slot) {
    ScenarioConfig scenario = config.scenario;
    scenario.num_antennas = config.convergence_antennas[slot / trials];
    const std::size_t trial = slot % trials;
    const ChannelRealization realization = trial_channel(scenario, config.seed, trial);
    ConvergenceRun& run = runs[slot];
    run.num_antennas = scenario.num_antennas;
    run.trial = trial;
    run.trace =
        alternating_optimize(realization, scenario, config.ao, fpa_design(scenario, realization))
            .trace;
  });
  return runs;
}

}  // namespace fas

namespace fas {

DetectorCheck check_detector(const ScenarioConfig& scenario, double snr_linear,
                             Hypothesis hypothesis, std::size_t trials, std::uint64_t seed,
                             unsigned threads) {
  scenario.validate();
  if (snr_linear < 0.0) throw ContractError("check_detector: SNR must be >= 0");
  const std::size_t N = scenario.num_antennas;
  const double magnitude = std::sqrt(snr_linear * scenario.noise_power / scenario.tx_power);
  ComplexVector h(N, cplx(magnitude / std::sqrt(static_cast<double>(N)), 0.0));
  ComplexVector w(N, cplx(1.0 / std::sqrt(static_cast<double>(N)), 0.0));

  const DetectorConfig det = DetectorConfig::from(scenario);
  DetectorCheck c;
  c.hypothesis = hypothesis;
  c.snr = snr_linear;
  c.threshold = optimal_threshold(det);
  c.analytical = hypothesis == Hypothesis::kNoiseOnly ? false_alarm_prob(c.threshold, det)
                                                      : detection_prob(c.threshold, snr_linear, det);
  const DetectorSimulation sim = simulate_detector(h, w, c.threshold, hypothesis,
                                                   scenario.tx_power, det, trials, seed,
                                                   stream_key(0xDE7EC7, static_cast<std::uint64_t>(hypothesis)),
                                                   threads);
  c.empirical = sim.decision_rate;
  c.mean_statistic = sim.mean_statistic;
  return c;
}

}  // namespace fas
