// causet ck|thm2|thm3|thm4|volume-law|reconstruct|gh --config <path> [--seed N] [--out DIR] [--workers N]

#include <iostream>

#include "CLI11.hpp"
#include "causet/errors.hpp"
#include "causet/experiments.hpp"
#include "causet/parallel.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Causal set sprinkling and Lorentzian distance experiments"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  int workers = causet::default_worker_count();

  for (const char* name : {"ck", "thm2", "thm3", "thm4", "volume-law", "reconstruct", "gh"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "experiment config (INI)")->required()->check(CLI::ExistingFile);
    sub->add_option("--seed", seed, "override the master seed");
    sub->add_option("--out", out_dir, "output directory (default: out/<command>)");
    sub->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  }
  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    auto config = causet::ExperimentConfig::from_file(config_path);
    if (seed) config.set_seed(*seed);
    const causet::RunOptions options{workers};
    const auto result = causet::run_experiment(command, config, options);
    const std::string dir = out_dir.empty() ? "out/" + command : out_dir;
    causet::write_outputs(result, dir, options);
    std::cout << command << ": " << (result.passed ? "PASS" : "FAIL") << "  (" << dir << "/result.json)\n";
    for (const auto& c : result.json["checks"])
      std::cout << "  " << c["name"].get<std::string>() << ": " << (c["passed"].get<bool>() ? "pass" : "fail")
                << "  value=" << c["value"].dump() << " " << c["relation"].get<std::string>() << " "
                << c["threshold"].dump() << "\n";
    return result.passed ? 0 : 1;
  } catch (const causet::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
