#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pauliest/cli.hpp"
#include "pauliest/estimation.hpp"
#include "pauliest/harness.hpp"
#include "pauliest/report.hpp"

using namespace pauliest;
namespace fs = std::filesystem;

namespace {

ExperimentConfig optimal_cfg(std::vector<double> ps, double counts, std::uint64_t trials) {
  ExperimentConfig cfg;
  cfg.experiment = Experiment::OptimalDc;
  cfg.p_values = std::move(ps);
  cfg.counts = counts;
  cfg.trials = trials;
  cfg.seed = 2012;
  return cfg;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "pauliest_tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("parallel kernel equals the serial reference") {
  auto trial = [](std::size_t t) { return optimal_dc_trial(0.3, 500, SamplingMode::Multinomial, t * 7919); };
  const auto serial = run_trials_serial(257, trial);
  for (int threads : {1, 2, 4, 7}) CHECK(run_trials_parallel(257, trial, threads) == serial);
}

TEST_CASE("parallel kernel rethrows the lowest-index failure") {
  auto trial = [](std::size_t t) -> double {
    if (t == 13) throw std::runtime_error("thirteen");
    if (t == 40) throw std::runtime_error("forty");
    return 0.0;
  };
  CHECK_THROWS_WITH(run_trials_parallel(64, trial, 4), "thirteen");
}

TEST_CASE("optimal-dc reaches the bound") {
  const auto report = run_montecarlo(optimal_cfg({0.5}, 1e4, 1000));
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].bound == doctest::Approx(0.005));
  CHECK(std::abs(report.rows[0].std / 0.005 - 1.0) < 0.05);
}

TEST_CASE("optimal-dc at p = 0 is exact") {
  for (SamplingMode mode : {SamplingMode::Multinomial, SamplingMode::PoissonPerOutcome}) {
    auto cfg = optimal_cfg({0.0}, 1000, 50);
    cfg.mode = mode;
    const auto row = run_montecarlo(cfg).rows.at(0);
    CHECK(row.std == 0.0);
    CHECK(row.mean == 0.0);
    for (double e : row.estimates) CHECK(e == 0.0);
  }
}

TEST_CASE("rows are sorted by p and independent of execution policy") {
  const auto cfg = optimal_cfg({0.8, 0.1, 0.5}, 2000, 200);
  const auto par = run_montecarlo(cfg, Execution::Parallel);
  const auto ser = run_montecarlo(cfg, Execution::Serial);
  CHECK(par == ser);
  REQUIRE(par.rows.size() == 3);
  CHECK(par.rows[0].p_true == 0.1);
  CHECK(par.rows[1].p_true == 0.5);
  CHECK(par.rows[2].p_true == 0.8);
  CHECK(report_to_csv(par) == report_to_csv(ser));
}

TEST_CASE("std scales as one over root N") {
  const auto r1 = run_montecarlo(optimal_cfg({0.3}, 4000, 2000)).rows.at(0);
  const auto r2 = run_montecarlo(optimal_cfg({0.3}, 8000, 2000)).rows.at(0);
  CHECK(std::abs(r1.std / r2.std / std::sqrt(2.0) - 1.0) < 0.10);
}

TEST_CASE("aaqpt std sits above the optimal bound") {
  ExperimentConfig cfg = optimal_cfg({0.5}, 1600, 100);
  cfg.experiment = Experiment::Aaqpt;
  cfg.mode = SamplingMode::PoissonPerOutcome;
  const auto row = run_montecarlo(cfg).rows.at(0);
  CHECK(row.estimator == "aaqpt");
  CHECK(row.std > dc_std_bound(0.5, 1600));
}

TEST_CASE("comparison ladder") {
  ExperimentConfig cfg = optimal_cfg({0.5}, 1600, 100);
  cfg.experiment = Experiment::Compare;
  cfg.mode = SamplingMode::PoissonPerOutcome;
  const auto report = run_comparison(cfg);
  REQUIRE(report.comparisons.size() == 1);
  const auto& cmp = report.comparisons[0];
  CHECK(cmp.ladder == std::vector<int>{1, 10, 100});
  CHECK(cmp.std_ratio > 2.0);
  REQUIRE(cmp.crossover_multiple.has_value());
  CHECK((*cmp.crossover_multiple == 10 || *cmp.crossover_multiple == 100));
  CHECK(report.rows.size() == 4);

  cfg.trials = 1;
  CHECK_THROWS_AS(run_comparison(cfg), std::invalid_argument);
  CHECK_THROWS_AS(run_comparison(optimal_cfg({0.5}, 100, 10)), std::invalid_argument);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(run_montecarlo(optimal_cfg({}, 100, 10)), std::invalid_argument);
  CHECK_THROWS_AS(run_montecarlo(optimal_cfg({1.2}, 100, 10)), std::invalid_argument);
  CHECK_THROWS_AS(run_montecarlo(optimal_cfg({0.5}, 0, 10)), std::invalid_argument);
  CHECK_THROWS_AS(run_montecarlo(optimal_cfg({0.5}, 10.5, 10)), std::invalid_argument);
  ExperimentConfig bell;
  bell.experiment = Experiment::BellProbs;
  CHECK_THROWS_AS(run_montecarlo(bell), std::invalid_argument);
}

TEST_CASE("bell-probs experiment") {
  ExperimentConfig cfg;
  cfg.experiment = Experiment::BellProbs;
  cfg.timings = {{3, 4, 1, 8}, {0, 0, 0, 8}};
  const auto report = run_montecarlo(cfg);
  REQUIRE(report.bell_rows.size() == 2);
  CHECK(report.bell_rows[0].bell == std::array<double, 4>{0, 0.375, 0.5, 0.125});
  CHECK(report.bell_rows[1].bell == std::array<double, 4>{1, 0, 0, 0});
  CHECK(report_to_csv(report) ==
        "t1,t2,t3,T,p0,p1,p2,p3,psi-,phi-,phi+,psi+\n"
        "3,4,1,8,0,0.375,0.5,0.125,0,0.375,0.5,0.125\n"
        "0,0,0,8,1,0,0,0,1,0,0,0\n");
}

}

TEST_SUITE("report") {

TEST_CASE("empty report is header only") {
  CHECK(report_to_csv(MonteCarloReport{}) == "p_true,estimator,counts,trials,mean,std,bound,seed\n");
}

TEST_CASE("csv field order") {
  MonteCarloReport report;
  report.config.seed = 42;
  EstimatorRow row;
  row.p_true = 0.5;
  row.estimator = "optimal";
  row.counts = 10000;
  row.trials = 1000;
  row.mean = 0.4987;
  row.std = 0.0049;
  row.bound = 0.005;
  report.rows.push_back(row);
  CHECK(report_to_csv(report) ==
        "p_true,estimator,counts,trials,mean,std,bound,seed\n"
        "0.5,optimal,10000,1000,0.4987,0.0049,0.005,42\n");
}

TEST_CASE("json round trip") {
  ExperimentConfig cfg = optimal_cfg({0.2, 0.5}, 1600, 20);
  cfg.experiment = Experiment::Compare;
  cfg.mode = SamplingMode::PoissonPerOutcome;
  cfg.seed = 0xFFFF'FFFF'FFFF'FFF0ULL;
  const auto report = run_montecarlo(cfg);
  const auto text = render_report(report, ReportFormat::Json);
  CHECK(report_from_json(nlohmann::json::parse(text)) == report);

  ExperimentConfig bell;
  bell.experiment = Experiment::BellProbs;
  bell.timings = {{1, 2, 3, 10}};
  const auto bell_report = run_montecarlo(bell);
  CHECK(report_from_json(report_to_json(bell_report)) == bell_report);
}

TEST_CASE("emit_report writes atomically and reports I/O failures with the path") {
  const auto report = run_montecarlo(optimal_cfg({0.5}, 100, 10));
  const fs::path out = scratch("emit.csv");
  emit_report(report, out, ReportFormat::Csv);
  CHECK(slurp(out) == report_to_csv(report));
  CHECK_FALSE(fs::exists(fs::path(out.string() + ".tmp")));

  const fs::path bad = scratch("missing_dir") / "nested" / "x.csv";
  try {
    emit_report(report, bad, ReportFormat::Csv);
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find(bad.string()) != std::string::npos);
  }
  CHECK_FALSE(fs::exists(bad));
}

}

TEST_SUITE("cli") {

TEST_CASE("number lists") {
  CHECK(cli::parse_number_list("0.1,0.5,1") == std::vector<double>{0.1, 0.5, 1.0});
  CHECK_THROWS_AS(cli::parse_number_list("0.1,,0.2"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_number_list("abc"), std::invalid_argument);
}

TEST_CASE("exit codes") {
  CHECK(cli::run({"optimal-dc", "--p", "1.5"}) == cli::kInvalidConfig);
  CHECK(cli::run({"optimal-dc"}) == cli::kInvalidConfig);
  CHECK(cli::run({"compare", "--p", "0.5", "--trials", "1"}) == cli::kInvalidConfig);
  CHECK(cli::run({"bell-probs", "--timing", "5,4,0,8"}) == cli::kInvalidConfig);
  CHECK(cli::run({"frobnicate"}) == cli::kInvalidConfig);
  const auto bad = (scratch("nope") / "a" / "b.csv").string();
  CHECK(cli::run({"optimal-dc", "--p", "0.5", "--trials", "10", "--out", bad}) == cli::kIoFailure);
  CHECK_FALSE(fs::exists(bad));
}

TEST_CASE("subcommands write their reports") {
  const auto bell = scratch("bell.json");
  REQUIRE(cli::run({"bell-probs", "--timing", "3,4,1,8", "--out", bell.string()}) == cli::kOk);
  const auto j = nlohmann::json::parse(slurp(bell));
  CHECK(j.at("bell_rows").at(0).at("bell").at("phi+").get<double>() == 0.5);

  const auto dc = scratch("dc.csv");
  REQUIRE(cli::run({"optimal-dc", "--p", "0.5,0.2", "--counts", "1000", "--trials", "50", "--seed", "9",
                    "--out", dc.string()}) == cli::kOk);
  const auto text = slurp(dc);
  CHECK(text.rfind("p_true,estimator,counts,trials,mean,std,bound,seed\n0.2,optimal,1000,50,", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);
}

}
