#include "fas/scenario.hpp"

#include <cmath>
#include <string>

#include "fas/errors.hpp"

namespace fas {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double dbm_to_watts(double dbm) { return 1e-3 * db_to_linear(dbm); }
double watts_to_dbm(double watts) { return 10.0 * std::log10(watts / 1e-3); }

double ScenarioConfig::path_gain_variance() const {
  return ref_gain * std::pow(distance / ref_distance, -pathloss_exponent) /
         static_cast<double>(num_paths);
}

void ScenarioConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw ConfigError(std::string("invalid scenario: ") + what);
  };
  require(std::isfinite(wavelength) && wavelength > 0.0, "wavelength must be > 0");
  require(std::isfinite(distance) && distance > 0.0, "distance must be > 0");
  require(std::isfinite(ref_distance) && ref_distance > 0.0, "reference distance must be > 0");
  require(std::isfinite(ref_gain) && ref_gain > 0.0, "reference gain must be > 0");
  require(std::isfinite(pathloss_exponent), "path-loss exponent must be finite");
  require(num_paths >= 1, "path count L must be >= 1");
  require(num_antennas >= 1, "antenna count N must be >= 1");
  require(std::isfinite(region_side) && region_side > 0.0, "region side A must be > 0");
  require(std::isfinite(min_spacing) && min_spacing > 0.0, "minimum spacing D must be > 0");
  require(min_spacing <= region_side, "minimum spacing D must not exceed region side A");
  require(std::isfinite(tx_power) && tx_power > 0.0, "transmit power P must be > 0");
  require(std::isfinite(noise_power) && noise_power > 0.0, "noise power must be > 0");
  require(num_samples >= 1, "sample count K must be >= 1");
  require(max_false_alarm > 0.0 && max_false_alarm < 1.0, "delta must lie in (0, 1)");
}

namespace {

template <typename T>
bool read(const nlohmann::json& doc, const char* key, T& out) {
  auto it = doc.find(key);
  if (it == doc.end()) return false;
  try {
    out = it->get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("scenario key '") + key + "': " + e.what());
  }
  return true;
}

}  // namespace

ScenarioConfig scenario_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("scenario must be a JSON object");
  ScenarioConfig cfg;

  double v = 0.0;
  if (read(doc, "lambda_m", v)) {
    cfg.wavelength = v;
  } else if (read(doc, "fc_GHz", v)) {
    cfg.wavelength = kSpeedOfLight / (v * 1e9);
  } else if (read(doc, "fc_Hz", v)) {
    cfg.wavelength = kSpeedOfLight / v;
  }
  const double lambda = cfg.wavelength;
  cfg.region_side = 4.0 * lambda;
  cfg.min_spacing = 0.5 * lambda;

  read(doc, "distance_m", cfg.distance);
  read(doc, "d0_m", cfg.ref_distance);
  if (read(doc, "g0_dB", v)) {
    cfg.ref_gain = db_to_linear(v);
  } else {
    read(doc, "g0", cfg.ref_gain);
  }
  read(doc, "pathloss_exponent", cfg.pathloss_exponent);
  read(doc, "L", cfg.num_paths);
  read(doc, "N", cfg.num_antennas);
  read(doc, "K", cfg.num_samples);
  read(doc, "delta", cfg.max_false_alarm);

  if (read(doc, "A_m", v)) {
    cfg.region_side = v;
  } else if (read(doc, "A_lambda", v)) {
    cfg.region_side = v * lambda;
  }
  if (read(doc, "D_m", v)) {
    cfg.min_spacing = v;
  } else if (read(doc, "D_lambda", v)) {
    cfg.min_spacing = v * lambda;
  }
  if (read(doc, "P_dBm", v)) {
    cfg.tx_power = dbm_to_watts(v);
  } else {
    read(doc, "P_W", cfg.tx_power);
  }
  if (read(doc, "noise_dBm", v)) {
    cfg.noise_power = dbm_to_watts(v);
  } else {
    read(doc, "noise_W", cfg.noise_power);
  }

  cfg.validate();
  return cfg;
}

nlohmann::json scenario_to_json(const ScenarioConfig& c) {
  return {
      {"lambda_m", c.wavelength},
      {"distance_m", c.distance},
      {"d0_m", c.ref_distance},
      {"g0", c.ref_gain},
      {"pathloss_exponent", c.pathloss_exponent},
      {"L", c.num_paths},
      {"N", c.num_antennas},
      {"A_m", c.region_side},
      {"D_m", c.min_spacing},
      {"P_W", c.tx_power},
      {"noise_W", c.noise_power},
      {"K", c.num_samples},
      {"delta", c.max_false_alarm},
  };
}

}  // namespace fas
