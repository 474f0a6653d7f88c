#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "fas/errors.hpp"
#include "fas/experiments.hpp"

namespace fas {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace

void emit_trials_csv(const std::string& path, SweepParameter parameter,
                     const std::vector<TrialResult>& results, bool include_empirical) {
  auto out = open_for_write(path);
  out << "sweep_param,sweep_value,scheme,trial,gamma,pd,iterations,seconds";
  if (include_empirical) out << ",pd_empirical";
  out << '\n';
  for (const auto& r : results) {
    out << to_string(parameter) << ',' << num(r.sweep_value) << ',' << to_string(r.scheme) << ','
        << r.trial << ',' << num(r.snr) << ',' << num(r.detection) << ',' << r.iterations << ','
        << num(r.seconds);
    if (include_empirical) {
      out << ',' << (r.empirical_detection ? num(*r.empirical_detection) : std::string());
    }
    out << '\n';
  }
  finish(out, path);
}

void emit_curve_csv(const std::string& path, const std::vector<CurvePoint>& curve) {
  auto out = open_for_write(path);
  out << "sweep_value,scheme,mean_pd,stderr\n";
  for (const auto& p : curve) {
    out << num(p.sweep_value) << ',' << to_string(p.scheme) << ',' << num(p.mean_detection) << ','
        << num(p.standard_error) << '\n';
  }
  finish(out, path);
}

void emit_convergence_csv(const std::string& traces_path, const std::string& summary_path,
                          const std::vector<ConvergenceRun>& runs) {
  auto traces = open_for_write(traces_path);
  traces << "N,trial,iteration,pd,gamma\n";
  for (const auto& run : runs) {
    for (std::size_t m = 0; m < run.trace.iterates.size(); ++m) {
      const auto& it = run.trace.iterates[m];
      traces << run.num_antennas << ',' << run.trial << ',' << m << ',' << num(it.detection) << ','
             << num(it.snr) << '\n';
    }
  }
  finish(traces, traces_path);

  auto summary = open_for_write(summary_path);
  summary << "N,trial,iterations,converged,final_pd\n";
  for (const auto& run : runs) {
    summary << run.num_antennas << ',' << run.trial << ',' << run.trace.outer_iterations << ','
            << (run.trace.converged ? 1 : 0) << ','
            << num(run.trace.iterates.empty() ? 0.0 : run.trace.iterates.back().detection)
            << '\n';
  }
  finish(summary, summary_path);
}

}  // namespace fas

namespace fas {

void emit_detector_csv(const std::string& path, const std::vector<DetectorCheck>& checks) {
  auto out = open_for_write(path);
  out << "hypothesis,gamma,threshold,analytical,empirical,abs_error\n";
  for (const auto& c : checks) {
    out << (c.hypothesis == Hypothesis::kNoiseOnly ? "H0" : "H1") << ',' << num(c.snr) << ','
        << num(c.threshold) << ',' << num(c.analytical) << ',' << num(c.empirical) << ','
        << num(std::abs(c.empirical - c.analytical)) << '\n';
  }
  finish(out, path);
}

}  // namespace fas
