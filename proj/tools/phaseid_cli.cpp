// Command line front end: simulate datasets, infer phase connectivity,
// cross-check against the exhaustive verifier, and run the benchmark grid.
// Exit codes: 0 success, 1 inference or verification failure, 2 usage error.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "phaseid/dataset_io.hpp"
#include "phaseid/errors.hpp"
#include "phaseid/experiment.hpp"
#include "phaseid/inference.hpp"
#include "phaseid/oracle.hpp"
#include "phaseid/rng.hpp"
#include "phaseid/simulator.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

phaseid::RealRange parse_real_range(const std::string& text) {
  const auto pos = text.find(':');
  if (pos == std::string::npos || pos == 0 || pos + 1 == text.size())
    throw UsageError("expected LO:HI, got '" + text + "'");
  try {
    std::size_t used = 0;
    const double lo = std::stod(text.substr(0, pos), &used);
    if (used != pos) throw UsageError("bad number in range '" + text + "'");
    const std::string hi_text = text.substr(pos + 1);
    const double hi = std::stod(hi_text, &used);
    if (used != hi_text.size()) throw UsageError("bad number in range '" + text + "'");
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw UsageError("bad number in range '" + text + "'");
  } catch (const std::out_of_range&) {
    throw UsageError("number out of range in '" + text + "'");
  }
}

phaseid::IntRange parse_int_range(const std::string& text) {
  const phaseid::RealRange r = parse_real_range(text);
  const long lo = static_cast<long>(r.lo);
  const long hi = static_cast<long>(r.hi);
  if (static_cast<double>(lo) != r.lo || static_cast<double>(hi) != r.hi)
    throw UsageError("expected integers in '" + text + "'");
  return {lo, hi};
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    if (comma == std::string::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return parts;
}

phaseid::Mode parse_mode(const std::string& text) {
  if (text == "noiseless") return phaseid::Mode::noiseless;
  if (text == "noisy") return phaseid::Mode::noisy;
  throw UsageError("mode must be noiseless or noisy, got '" + text + "'");
}

phaseid::ScalingVariant parse_scaling(const std::string& text) {
  if (text == "proportional") return phaseid::ScalingVariant::proportional;
  if (text == "sqrt_mean") return phaseid::ScalingVariant::sqrt_mean;
  throw UsageError("scaling must be proportional or sqrt_mean, got '" + text + "'");
}

// --seed wins; PHASEID_SEED fills in when the flag was not given.
std::uint64_t effective_seed(const CLI::Option* seed_opt, std::uint64_t seed) {
  if (seed_opt->count() > 0) return seed;
  const char* env = std::getenv("PHASEID_SEED");
  if (env == nullptr) return seed;
  errno = 0;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (errno != 0 || end == env || *end != '\0')
    throw UsageError(std::string("PHASEID_SEED is not an unsigned integer: '") + env + "'");
  return static_cast<std::uint64_t>(value);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open " + path + " for writing");
  out << text;
}

struct SimulateArgs {
  std::uint64_t seed = 1;
  std::string loss = "0.02:0.05";
  std::string noise = "0.005:0.01";
  double multiplier = 3.0;
  std::string consumers = "5:100";
  std::string tiers = "100:500,500:2000,2000:5000";
  std::string loss_draw = "per_interval";
  std::string noise_draw = "per_meter";
  int interval_minutes = 15;
  double clock_jitter_std_seconds = 0.0;
  std::string output;
};

int run_simulate(const SimulateArgs& args, const CLI::Option* seed_opt) {
  phaseid::SimulationConfig cfg;
  cfg.seed = effective_seed(seed_opt, args.seed);
  cfg.loss_range = parse_real_range(args.loss);
  cfg.noise_std_range = parse_real_range(args.noise);
  cfg.n_multiplier = args.multiplier;
  cfg.consumers_per_phase = parse_int_range(args.consumers);
  const std::vector<std::string> tier_texts = split_commas(args.tiers);
  if (tier_texts.size() != cfg.load_tiers.size())
    throw UsageError("expected exactly 3 load tiers");
  for (std::size_t i = 0; i < tier_texts.size(); ++i)
    cfg.load_tiers[i] = parse_real_range(tier_texts[i]);
  if (args.loss_draw == "per_interval") cfg.loss_draw = phaseid::LossDraw::per_interval;
  else if (args.loss_draw == "per_run") cfg.loss_draw = phaseid::LossDraw::per_run;
  else throw UsageError("loss_draw must be per_interval or per_run");
  if (args.noise_draw == "per_meter") cfg.noise_draw = phaseid::NoiseDraw::per_meter;
  else if (args.noise_draw == "per_reading") cfg.noise_draw = phaseid::NoiseDraw::per_reading;
  else throw UsageError("noise_draw must be per_meter or per_reading");
  cfg.interval_minutes = args.interval_minutes;
  cfg.clock_jitter_std_seconds = args.clock_jitter_std_seconds;

  const phaseid::SimulatedDataset data = phaseid::simulate(cfg);
  phaseid::export_dataset(data, args.output);
  std::cout << "wrote " << args.output << ": n=" << data.noisy.meter_count()
            << " n_i=" << data.noisy.consumer_count()
            << " N=" << data.noisy.sample_count() << " generator="
            << phaseid::kGeneratorId << " seed=" << cfg.seed << "\n";
  return 0;
}

struct InferArgs {
  std::string input;
  std::string mode = "noisy";
  std::string output;
  double relative_std = 0.01;
  int interval_minutes = 15;
  double clock_jitter_std_seconds = 0.0;
  std::string scaling = "proportional";
};

int run_infer(const InferArgs& args) {
  phaseid::NoiseModelConfig cfg;
  cfg.relative_std = args.relative_std;
  cfg.interval_minutes = args.interval_minutes;
  cfg.clock_jitter_std_seconds = args.clock_jitter_std_seconds;
  cfg.scaling = parse_scaling(args.scaling);
  const phaseid::Mode mode = parse_mode(args.mode);

  const phaseid::DatasetFile ds = phaseid::read_dataset_csv(args.input);
  const phaseid::InferenceReport report = phaseid::infer_phases(ds.readings, mode, cfg);
  const std::string json = phaseid::inference_report_json(
      report, ds.meter_ids, ds.readings.sample_count());
  if (args.output.empty())
    std::cout << json << "\n";
  else
    write_text(args.output, json + "\n");
  return 0;
}

struct VerifyArgs {
  std::string input;
  std::string mode = "noisy";
  std::string output;
  double relative_std = 0.01;
};

int run_verify(const VerifyArgs& args) {
  const phaseid::Mode mode = parse_mode(args.mode);
  phaseid::NoiseModelConfig cfg;
  cfg.relative_std = args.relative_std;

  const phaseid::DatasetFile ds = phaseid::read_dataset_csv(args.input);
  const bool loss_correction = mode == phaseid::Mode::noisy;
  const phaseid::OracleResult oracle =
      phaseid::brute_force_assign(ds.readings, loss_correction);
  const phaseid::InferenceReport report =
      phaseid::infer_phases(ds.readings, mode, cfg);
  const bool agree = oracle.best == report.assignment;
  const bool decisive =
      oracle.best_residual < 0.5 * oracle.runner_up_residual;

  nlohmann::ordered_json j;
  j["oracle_assignment"] = phaseid::to_string(oracle.best);
  j["best_residual"] = oracle.best_residual;
  j["runner_up_residual"] = oracle.runner_up_residual;
  j["pipeline_assignment"] = phaseid::to_string(report.assignment);
  j["agree"] = agree;
  j["decisive"] = decisive;
  if (ds.hints) j["hint_assignment"] = phaseid::to_string(*ds.hints);
  const std::string json = j.dump(2);
  if (!args.output.empty()) write_text(args.output, json + "\n");

  std::cout << "oracle:   " << phaseid::to_string(oracle.best)
            << "  residual " << oracle.best_residual << " (runner-up "
            << oracle.runner_up_residual << ")\n"
            << "pipeline: " << phaseid::to_string(report.assignment) << "\n"
            << (agree ? "agreement" : "disagreement")
            << (decisive ? "" : " (residual gap below the decisive threshold)")
            << "\n";
  return agree ? 0 : 1;
}

struct BenchmarkArgs {
  int trials = 100;
  std::uint64_t seed = 1;
  std::string mode = "noisy";
  std::string multipliers = "1,2,3,4";
  std::string regimes = "0.02:0.05,0.05:0.10";
  std::string consumers = "5:100";
  std::string noise = "0.005:0.01";
  double relative_std = 0.01;
  std::string output;
  std::string timings;
};

int run_benchmark(const BenchmarkArgs& args, const CLI::Option* seed_opt) {
  phaseid::ExperimentConfig cfg;
  cfg.trials = args.trials;
  cfg.base_seed = effective_seed(seed_opt, args.seed);
  cfg.mode = parse_mode(args.mode);
  cfg.n_multipliers.clear();
  for (const std::string& part : split_commas(args.multipliers)) {
    try {
      cfg.n_multipliers.push_back(std::stod(part));
    } catch (const std::exception&) {
      throw UsageError("bad multiplier '" + part + "'");
    }
  }
  cfg.loss_regimes.clear();
  for (const std::string& part : split_commas(args.regimes))
    cfg.loss_regimes.push_back(parse_real_range(part));
  cfg.base_sim.consumers_per_phase = parse_int_range(args.consumers);
  cfg.base_sim.noise_std_range = parse_real_range(args.noise);
  cfg.noise_model.relative_std = args.relative_std;

  const phaseid::ExperimentResult result = phaseid::run_experiment(cfg);
  phaseid::write_experiment_csv(result, args.output);
  if (!args.timings.empty()) phaseid::write_timing_csv(result, args.timings);
  std::cout << phaseid::experiment_table(result);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phase connectivity identification from interval energy data"};
  app.require_subcommand(1);

  SimulateArgs sim;
  CLI::App* sim_cmd = app.add_subcommand("simulate", "Generate a synthetic dataset");
  CLI::Option* sim_seed = sim_cmd->add_option("--seed", sim.seed, "RNG seed");
  sim_cmd->add_option("--loss", sim.loss, "Loss fraction range LO:HI");
  sim_cmd->add_option("--noise", sim.noise, "Relative noise std range LO:HI");
  sim_cmd->add_option("--multiplier", sim.multiplier, "Samples per consumer (N = multiplier * n_i)");
  sim_cmd->add_option("--consumers", sim.consumers, "Consumers per phase LO:HI");
  sim_cmd->add_option("--tiers", sim.tiers, "Three load tiers in Wh, LO:HI each");
  sim_cmd->add_option("--loss_draw", sim.loss_draw, "per_interval or per_run");
  sim_cmd->add_option("--noise_draw", sim.noise_draw, "per_meter or per_reading");
  sim_cmd->add_option("--interval_minutes", sim.interval_minutes, "Metering interval");
  sim_cmd->add_option("--clock_jitter_std_seconds", sim.clock_jitter_std_seconds,
                      "Meter clock jitter, folded into the noise budget");
  sim_cmd->add_option("-o,--output", sim.output, "Dataset CSV path")->required();
  sim_cmd->set_config("--config");

  InferArgs inf;
  CLI::App* inf_cmd = app.add_subcommand("infer", "Infer phase connectivity from a dataset");
  inf_cmd->add_option("-i,--input", inf.input, "Dataset CSV path")->required();
  inf_cmd->add_option("--mode", inf.mode, "noiseless or noisy");
  inf_cmd->add_option("-o,--output", inf.output, "Result JSON path (default stdout)");
  inf_cmd->add_option("--relative_std", inf.relative_std, "Meter error std as a fraction of the row mean");
  inf_cmd->add_option("--interval_minutes", inf.interval_minutes, "Metering interval");
  inf_cmd->add_option("--clock_jitter_std_seconds", inf.clock_jitter_std_seconds,
                      "Meter clock jitter, folded into the noise budget");
  inf_cmd->add_option("--scaling", inf.scaling, "proportional or sqrt_mean");
  inf_cmd->set_config("--config");

  VerifyArgs ver;
  CLI::App* ver_cmd = app.add_subcommand(
      "verify", "Cross-check the pipeline against exhaustive search (n_i <= 12)");
  ver_cmd->add_option("-i,--input", ver.input, "Dataset CSV path")->required();
  ver_cmd->add_option("--mode", ver.mode, "noiseless or noisy");
  ver_cmd->add_option("-o,--output", ver.output, "Comparison JSON path");
  ver_cmd->add_option("--relative_std", ver.relative_std, "Meter error std as a fraction of the row mean");

  BenchmarkArgs bench;
  CLI::App* bench_cmd = app.add_subcommand("benchmark", "Run the success-rate and timing grid");
  bench_cmd->add_option("--trials", bench.trials, "Trials per cell");
  CLI::Option* bench_seed = bench_cmd->add_option("--seed", bench.seed, "Base RNG seed");
  bench_cmd->add_option("--mode", bench.mode, "noiseless or noisy");
  bench_cmd->add_option("--multipliers", bench.multipliers, "Comma-separated sample multipliers");
  bench_cmd->add_option("--loss_regimes", bench.regimes, "Comma-separated loss ranges LO:HI");
  bench_cmd->add_option("--consumers", bench.consumers, "Consumers per phase LO:HI");
  bench_cmd->add_option("--noise", bench.noise, "Relative noise std range LO:HI");
  bench_cmd->add_option("--relative_std", bench.relative_std, "Inference-side error model std fraction");
  bench_cmd->add_option("-o,--output", bench.output, "Per-cell success CSV path")->required();
  bench_cmd->add_option("--timings", bench.timings, "Per-trial timing CSV path");
  bench_cmd->set_config("--config");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (sim_cmd->parsed()) return run_simulate(sim, sim_seed);
    if (inf_cmd->parsed()) return run_infer(inf);
    if (ver_cmd->parsed()) return run_verify(ver);
    if (bench_cmd->parsed()) return run_benchmark(bench, bench_seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const phaseid::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
