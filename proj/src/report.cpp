#include "pauliest/report.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <system_error>

namespace pauliest {

using nlohmann::json;

std::string format_number(double value) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw std::runtime_error("format_number: conversion failed");
  return std::string(buf.data(), end);
}

std::string report_to_csv(const MonteCarloReport& report) {
  std::string out;
  if (report.config.experiment == Experiment::BellProbs) {
    out += kBellCsvHeader;
    out += '\n';
    for (const auto& row : report.bell_rows) {
      const auto& t = row.timing;
      for (double v : {t.t1, t.t2, t.t3, t.period}) out += format_number(v) + ',';
      for (double v : row.pauli) out += format_number(v) + ',';
      for (std::size_t k = 0; k < 4; ++k) {
        out += format_number(row.bell[k]);
        out += k + 1 < 4 ? ',' : '\n';
      }
    }
    return out;
  }

  out += kCsvHeader;
  out += '\n';
  const std::string seed = std::to_string(report.config.seed);
  for (const auto& row : report.rows) {
    out += format_number(row.p_true) + ',' + row.estimator + ',' + format_number(row.counts) +
           ',' + std::to_string(row.trials) + ',' + format_number(row.mean) + ',' +
           format_number(row.std) + ',' + format_number(row.bound) + ',' + seed + '\n';
  }
  return out;
}

namespace {

json timing_to_json(const TimingConfig& t) {
  return {{"t1", t.t1}, {"t2", t.t2}, {"t3", t.t3}, {"T", t.period}};
}

TimingConfig timing_from_json(const json& j) {
  return {j.at("t1").get<double>(), j.at("t2").get<double>(), j.at("t3").get<double>(),
          j.at("T").get<double>()};
}

json config_to_json(const ExperimentConfig& c) {
  json timings = json::array();
  for (const auto& t : c.timings) timings.push_back(timing_to_json(t));
  return {{"experiment", to_string(c.experiment)},
          {"p_values", c.p_values},
          {"timings", timings},
          {"trials", c.trials},
          {"counts", c.counts},
          {"mode", to_string(c.mode)},
          {"seed", c.seed},
          {"output_path", c.output_path}};
}

ExperimentConfig config_from_json(const json& j) {
  ExperimentConfig c;
  c.experiment = parse_experiment(j.at("experiment").get<std::string>());
  c.p_values = j.at("p_values").get<std::vector<double>>();
  for (const auto& t : j.at("timings")) c.timings.push_back(timing_from_json(t));
  c.trials = j.at("trials").get<std::uint64_t>();
  c.counts = j.at("counts").get<double>();
  c.mode = parse_sampling_mode(j.at("mode").get<std::string>());
  c.seed = j.at("seed").get<std::uint64_t>();
  c.output_path = j.at("output_path").get<std::string>();
  return c;
}

}  // namespace

json report_to_json(const MonteCarloReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"p_true", r.p_true},
                    {"estimator", r.estimator},
                    {"counts", r.counts},
                    {"trials", r.trials},
                    {"mean", r.mean},
                    {"std", r.std},
                    {"bound", r.bound},
                    {"estimates", r.estimates}});
  }
  json comparisons = json::array();
  for (const auto& c : report.comparisons) {
    comparisons.push_back({{"p_true", c.p_true},
                           {"counts", c.counts},
                           {"optimal_std", c.optimal_std},
                           {"ladder", c.ladder},
                           {"aaqpt_std", c.aaqpt_std},
                           {"std_ratio", c.std_ratio},
                           {"crossover_multiple", c.crossover_multiple
                                                      ? json(*c.crossover_multiple)
                                                      : json(nullptr)}});
  }
  json bell_rows = json::array();
  for (const auto& b : report.bell_rows) {
    json bell = json::object();
    for (BellLabel label : kBellLabels) {
      bell[std::string(to_string(label))] = b.bell[static_cast<std::size_t>(label)];
    }
    bell_rows.push_back({{"timing", timing_to_json(b.timing)}, {"pauli", b.pauli}, {"bell", bell}});
  }
  return {{"version", report.version},
          {"config", config_to_json(report.config)},
          {"rows", rows},
          {"comparisons", comparisons},
          {"bell_rows", bell_rows}};
}

MonteCarloReport report_from_json(const json& j) {
  MonteCarloReport report;
  report.version = j.at("version").get<std::string>();
  report.config = config_from_json(j.at("config"));
  for (const auto& r : j.at("rows")) {
    EstimatorRow row;
    row.p_true = r.at("p_true").get<double>();
    row.estimator = r.at("estimator").get<std::string>();
    row.counts = r.at("counts").get<double>();
    row.trials = r.at("trials").get<std::uint64_t>();
    row.mean = r.at("mean").get<double>();
    row.std = r.at("std").get<double>();
    row.bound = r.at("bound").get<double>();
    row.estimates = r.at("estimates").get<std::vector<double>>();
    report.rows.push_back(std::move(row));
  }
  for (const auto& c : j.at("comparisons")) {
    ComparisonRow row;
    row.p_true = c.at("p_true").get<double>();
    row.counts = c.at("counts").get<double>();
    row.optimal_std = c.at("optimal_std").get<double>();
    row.ladder = c.at("ladder").get<std::vector<int>>();
    row.aaqpt_std = c.at("aaqpt_std").get<std::vector<double>>();
    row.std_ratio = c.at("std_ratio").get<double>();
    if (!c.at("crossover_multiple").is_null()) {
      row.crossover_multiple = c.at("crossover_multiple").get<int>();
    }
    report.comparisons.push_back(std::move(row));
  }
  for (const auto& b : j.at("bell_rows")) {
    BellProbsRow row;
    row.timing = timing_from_json(b.at("timing"));
    row.pauli = b.at("pauli").get<std::array<double, 4>>();
    for (BellLabel label : kBellLabels) {
      row.bell[static_cast<std::size_t>(label)] =
          b.at("bell").at(std::string(to_string(label))).get<double>();
    }
    report.bell_rows.push_back(row);
  }
  return report;
}

std::string render_report(const MonteCarloReport& report, ReportFormat format) {
  if (format == ReportFormat::Csv) return report_to_csv(report);
  return report_to_json(report).dump(2) + '\n';
}

void emit_report(const MonteCarloReport& report, const std::filesystem::path& path,
                 ReportFormat format) {
  const std::string body = render_report(report, format);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(path, "cannot open for writing");
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoError(path, "write failed");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw IoError(path, "cannot move report into place: " + ec.message());
  }
}

ReportFormat parse_report_format(const std::string& s) {
  if (s == "csv") return ReportFormat::Csv;
  if (s == "json") return ReportFormat::Json;
  throw std::invalid_argument("unknown report format '" + s + "'");
}

}  // namespace pauliest
