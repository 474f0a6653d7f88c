#pragma once

#include <cstddef>
#include <cstdint>

#include "fas/numerics.hpp"
#include "fas/scenario.hpp"

namespace fas {

struct DetectorConfig {
  std::size_t num_samples = 1000;  // K
  double noise_power = 1e-11;      // sigma_n^2, W
  double max_false_alarm = 0.1;    // delta

  static DetectorConfig from(const ScenarioConfig& s) {
    return {s.num_samples, s.noise_power, s.max_false_alarm};
  }
  void validate() const;
};

struct SensingMetrics {
  double snr = 0.0;          // gamma, linear
  double threshold = 0.0;    // tau, W
  double false_alarm = 0.0;  // P_f
  double detection = 0.0;    // P_d
};

enum class Hypothesis { kNoiseOnly, kSignalPresent };

/// gamma = P |w^H h|^2 / sigma_n^2. Requires ||w|| = 1 within 1e-9.
double snr(const ComplexVector& w, const ComplexVector& h, double tx_power, double noise_power);

/// tau = sigma_n^2 Q^-1(delta) / sqrt(K) + sigma_n^2, which makes P_f = delta.
double optimal_threshold(const DetectorConfig& cfg);

double false_alarm_prob(double threshold, const DetectorConfig& cfg);
double detection_prob(double threshold, double snr, const DetectorConfig& cfg);

/// All four quantities at the optimal threshold.
SensingMetrics evaluate_metrics(double snr, const DetectorConfig& cfg);

struct DetectorSimulation {
  double decision_rate = 0.0;  // fraction of trials deciding "signal present"
  double mean_statistic = 0.0; // mean of T over trials
};

// Monte Carlo energy detector. Each trial draws K received vectors
// sqrt(P) h x(k) + n(k) (signal term only under kSignalPresent), combines
// them with w^H, forms T = (1/K) sum |y(k)|^2 and decides "present" iff
// T > tau. Trial i uses the stream SeededRng(seed, stream_key(stream, i)),
// so the result does not depend on the thread count.
DetectorSimulation simulate_detector(const ComplexVector& h, const ComplexVector& w,
                                     double threshold, Hypothesis hypothesis, double tx_power,
                                     const DetectorConfig& cfg, std::size_t trials,
                                     std::uint64_t seed, std::uint64_t stream = 0,
                                     unsigned threads = 0);

}  // namespace fas
