#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "causet/config.hpp"
#include "json.hpp"

namespace causet {

using Json = nlohmann::ordered_json;

struct RunOptions {
  int workers = 1;
};

struct ExperimentResult {
  Json json;                                  // contents of result.json
  bool passed = false;
  std::map<std::string, std::string> tables;  // file name -> contents
  double wall_seconds = 0.0;                  // kept out of result.json
};

ExperimentResult cmd_ck(const ExperimentConfig& config, const RunOptions& options);
ExperimentResult cmd_thm2(const ExperimentConfig& config, const RunOptions& options);
ExperimentResult cmd_thm3(const ExperimentConfig& config, const RunOptions& options);
ExperimentResult cmd_thm4(const ExperimentConfig& config, const RunOptions& options);
ExperimentResult cmd_volume_law(const ExperimentConfig& config, const RunOptions& options);
ExperimentResult cmd_reconstruct(const ExperimentConfig& config, const RunOptions& options);
ExperimentResult cmd_gh(const ExperimentConfig& config, const RunOptions& options);

// Dispatches on the command name ("volume-law" and "volume_law" both work).
// ConfigError if the config names a different experiment.
ExperimentResult run_experiment(const std::string& command, const ExperimentConfig& config,
                                const RunOptions& options);

// Byte-stable serialization of result.json.
std::string result_text(const ExperimentResult& result);

// Writes result.json, timing.json and the tables into dir (created if needed).
void write_outputs(const ExperimentResult& result, const std::filesystem::path& dir, const RunOptions& options);

// The config echo embedded in every result.
Json config_echo(const ExperimentConfig& config);

}  // namespace causet
