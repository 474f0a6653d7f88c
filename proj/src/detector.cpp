#include "fas/detector.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "fas/errors.hpp"
#include "fas/parallel.hpp"
#include "fas/rng.hpp"

namespace fas {

void DetectorConfig::validate() const {
  if (num_samples < 1) throw ConfigError("detector: K must be >= 1");
  if (!(noise_power > 0.0)) throw ConfigError("detector: noise power must be > 0");
  if (!(max_false_alarm > 0.0 && max_false_alarm < 1.0)) {
    throw ConfigError("detector: delta must lie in (0, 1)");
  }
}

double snr(const ComplexVector& w, const ComplexVector& h, double tx_power, double noise_power) {
  if (std::abs(w.norm() - 1.0) > 1e-9) {
    throw ContractError("snr: beamformer must have unit norm (got " + std::to_string(w.norm()) +
                        ")");
  }
  return tx_power * std::norm(inner(w, h)) / noise_power;
}

double optimal_threshold(const DetectorConfig& cfg) {
  cfg.validate();
  const double root_k = std::sqrt(static_cast<double>(cfg.num_samples));
  return cfg.noise_power * q_inverse(cfg.max_false_alarm) / root_k + cfg.noise_power;
}

double false_alarm_prob(double threshold, const DetectorConfig& cfg) {
  const double root_k = std::sqrt(static_cast<double>(cfg.num_samples));
  return q_function((threshold - cfg.noise_power) / cfg.noise_power * root_k);
}

double detection_prob(double threshold, double snr_linear, const DetectorConfig& cfg) {
  const double root_k = std::sqrt(static_cast<double>(cfg.num_samples));
  const double signal_level = cfg.noise_power * (1.0 + snr_linear);
  return q_function((threshold - signal_level) / signal_level * root_k);
}

SensingMetrics evaluate_metrics(double snr_linear, const DetectorConfig& cfg) {
  SensingMetrics m;
  m.snr = snr_linear;
  m.threshold = optimal_threshold(cfg);
  m.false_alarm = false_alarm_prob(m.threshold, cfg);
  m.detection = detection_prob(m.threshold, snr_linear, cfg);
  return m;
}

DetectorSimulation simulate_detector(const ComplexVector& h, const ComplexVector& w,
                                     double threshold, Hypothesis hypothesis, double tx_power,
                                     const DetectorConfig& cfg, std::size_t trials,
                                     std::uint64_t seed, std::uint64_t stream, unsigned threads) {
  if (h.size() != w.size()) throw DimensionError("simulate_detector: h and w sizes differ");
  if (std::abs(w.norm() - 1.0) > 1e-9) {
    throw ContractError("simulate_detector: beamformer must have unit norm");
  }
  if (trials < 1) throw ContractError("simulate_detector: trials must be >= 1");

  const std::size_t N = h.size();
  const std::size_t K = cfg.num_samples;
  const bool signal = hypothesis == Hypothesis::kSignalPresent;
  const double amplitude = std::sqrt(tx_power);

  std::vector<double> statistic(trials);
  parallel_for(trials, threads, [&](std::size_t i) {
    SeededRng rng(seed, stream_key(stream, i));
    std::vector<cplx> received(N);
    double energy = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
      const cplx x = signal ? rng.complex_normal(1.0) : cplx{0.0, 0.0};
      for (std::size_t n = 0; n < N; ++n) {
        received[n] = amplitude * h[n] * x + rng.complex_normal(cfg.noise_power);
      }
      cplx y{0.0, 0.0};
      for (std::size_t n = 0; n < N; ++n) y += std::conj(w[n]) * received[n];
      energy += std::norm(y);
    }
    statistic[i] = energy / static_cast<double>(K);
  });

  DetectorSimulation out;
  std::size_t present = 0;
  double total = 0.0;
  for (const double t : statistic) {
    // T == tau resolves to "absent".
    if (t > threshold) ++present;
    total += t;
  }
  out.decision_rate = static_cast<double>(present) / static_cast<double>(trials);
  out.mean_statistic = total / static_cast<double>(trials);
  return out;
}

}  // namespace fas
