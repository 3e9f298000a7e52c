#include "pauliest/cli.hpp"

#include <charconv>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "pauliest/harness.hpp"
#include "pauliest/report.hpp"

namespace pauliest::cli {

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view item(text.data() + start, comma - start);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || end != item.data() + item.size()) {
      throw std::invalid_argument("not a decimal number: '" + std::string(item) + "'");
    }
    out.push_back(value);
    start = comma + 1;
  }
  return out;
}

namespace {

struct Options {
  std::string p_list;
  std::string timing;
  double counts = 1600.0;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  std::string out;
  std::string format;
  std::string mode;
};

void add_output_flags(CLI::App* sub, Options& o) {
  sub->add_option("--out", o.out, "Output file (stdout when omitted)");
  sub->add_option("--format", o.format, "csv or json (default: from --out extension)")
      ->check(CLI::IsMember({"csv", "json"}));
}

void add_montecarlo_flags(CLI::App* sub, Options& o) {
  sub->add_option("--p", o.p_list, "Comma-separated depolarizing parameters")->required();
  sub->add_option("--counts", o.counts, "Total counts per trial");
  sub->add_option("--trials", o.trials, "Monte Carlo trials per p-value");
  sub->add_option("--seed", o.seed, "Master seed");
  sub->add_option("--mode", o.mode, "poisson or multinomial")
      ->check(CLI::IsMember({"poisson", "multinomial"}));
  add_output_flags(sub, o);
}

ExperimentConfig build_config(Experiment experiment, const Options& o) {
  ExperimentConfig cfg;
  cfg.experiment = experiment;
  cfg.output_path = o.out;
  cfg.seed = o.seed;
  if (experiment == Experiment::BellProbs) {
    const auto t = parse_number_list(o.timing);
    if (t.size() != 4) throw std::invalid_argument("--timing expects t1,t2,t3,T");
    cfg.timings.push_back({t[0], t[1], t[2], t[3]});
  } else {
    cfg.p_values = parse_number_list(o.p_list);
    cfg.counts = o.counts;
    cfg.trials = o.trials;
    const SamplingMode fallback = experiment == Experiment::OptimalDc
                                      ? SamplingMode::Multinomial
                                      : SamplingMode::PoissonPerOutcome;
    cfg.mode = o.mode.empty() ? fallback : parse_sampling_mode(o.mode);
  }
  cfg.validate();
  return cfg;
}

ReportFormat pick_format(const Options& o) {
  if (!o.format.empty()) return parse_report_format(o.format);
  return std::filesystem::path(o.out).extension() == ".json" ? ReportFormat::Json
                                                             : ReportFormat::Csv;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"Pauli channel estimation: optimal Bell-measurement protocol vs AAQPT"};
  app.require_subcommand(1);
  Options o;

  auto* bell = app.add_subcommand("bell-probs", "Bell outcome distribution for a timing cycle");
  bell->add_option("--timing", o.timing, "t1,t2,t3,T")->required();
  add_output_flags(bell, o);

  auto* optimal = app.add_subcommand("optimal-dc", "Optimal-protocol Monte Carlo");
  add_montecarlo_flags(optimal, o);
  auto* aaqpt = app.add_subcommand("aaqpt", "AAQPT Monte Carlo");
  add_montecarlo_flags(aaqpt, o);
  auto* compare = app.add_subcommand("compare", "Equal-budget efficiency comparison");
  add_montecarlo_flags(compare, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidConfig;
  }

  Experiment experiment = Experiment::BellProbs;
  if (optimal->parsed()) experiment = Experiment::OptimalDc;
  if (aaqpt->parsed()) experiment = Experiment::Aaqpt;
  if (compare->parsed()) experiment = Experiment::Compare;

  ExperimentConfig cfg;
  ReportFormat format{};
  try {
    cfg = build_config(experiment, o);
    format = pick_format(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidConfig;
  }

  MonteCarloReport report;
  try {
    report = run_montecarlo(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeFailure;
  }

  try {
    if (o.out.empty()) {
      std::cout << render_report(report, format);
      std::cout.flush();
      if (!std::cout) throw IoError("<stdout>", "write failed");
    } else {
      emit_report(report, o.out, format);
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoFailure;
  }
  return kOk;
}

}  // namespace pauliest::cli
