#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(FAS_SIM_PATH) + " " + args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli exit codes") {
  CHECK(run("--help") == 0);
  CHECK(run("") == 1);
  CHECK(run("run --bogus-flag") == 1);
  CHECK(run("run --config /no/such/config.json") == 1);
  CHECK(run("run --schemes FAS,XYZ --trials 1") == 1);
  CHECK(run("frobnicate") == 1);
}

TEST_CASE("cli writes deterministic CSVs") {
  const auto dir = std::filesystem::temp_directory_path() / "fas_cli_test";
  std::filesystem::remove_all(dir);
  const auto config = dir / "cfg.json";
  std::filesystem::create_directories(dir);
  std::ofstream(config) << R"({"scenario": {"P_dBm": 10}, "sweep_power_dBm": [0, 10]})";

  const std::string common = " --config " + config.string() + " --seed 7 --trials 3 --out ";
  REQUIRE(run("sweep-power" + common + (dir / "a").string()) == 0);
  REQUIRE(run("sweep-power" + common + (dir / "b").string() + " --threads 3") == 0);
  const std::string a = slurp(dir / "a" / "sweep_power_trials.csv");
  CHECK(!a.empty());
  CHECK(a == slurp(dir / "b" / "sweep_power_trials.csv"));
  CHECK(slurp(dir / "a" / "sweep_power_curve.csv") == slurp(dir / "b" / "sweep_power_curve.csv"));

  REQUIRE(run("run" + common + (dir / "c").string() + " --schemes FAS,FPA") == 0);
  CHECK(std::filesystem::exists(dir / "c" / "run_curve.csv"));
  REQUIRE(run("convergence" + common + (dir / "d").string()) == 0);
  CHECK(std::filesystem::exists(dir / "d" / "convergence_summary.csv"));
  REQUIRE(run("validate-detector --trials 500 --out " + (dir / "e").string()) == 0);
  CHECK(std::filesystem::exists(dir / "e" / "detector_validation.csv"));
}
