#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "causet/model_spec.hpp"
#include "causet/spacetime.hpp"

namespace causet {

// Experiment configuration, read from an INI file:
//
//   [experiment]
//   name = thm3
//   seed = 7
//   K = 3
//   T = 10, 100, 1000
//
//   [model]            ; or [model.x] / [model.y]
//   kind = flat_cylinder
//   n = 1
//
// Field errors name the section and key; syntax errors carry the line.
class ExperimentConfig {
 public:
  static ExperimentConfig from_file(const std::string& path);
  static ExperimentConfig from_text(const std::string& text, const std::string& origin = "<config>");

  std::string name() const { return name_; }
  std::uint64_t seed() const { return seed_; }
  void set_seed(std::uint64_t s) { seed_ = s; }

  bool has(const std::string& key) const { return fields_.count(key) > 0; }
  std::string text(const std::string& key, const std::string& fallback) const;
  double number(const std::string& key, double fallback) const;
  double number(const std::string& key) const;
  std::uint64_t count(const std::string& key, std::uint64_t fallback) const;
  std::vector<double> numbers(const std::string& key, const std::vector<double>& fallback) const;
  void set(const std::string& key, const std::string& value) { fields_[key] = value; }

  // "model", "model.x", "model.y".
  bool has_model(const std::string& section) const { return models_.count(section) > 0; }
  const ModelSpec& model_spec(const std::string& section) const;
  std::unique_ptr<SpacetimeModel> model(const std::string& section) const;
  void set_model(const std::string& section, ModelSpec spec) { models_[section] = std::move(spec); }

  // ConfigError naming the first [experiment] key outside `known`.
  void require_known(const std::set<std::string>& known) const;

  const std::map<std::string, std::string>& fields() const { return fields_; }
  const std::map<std::string, ModelSpec>& models() const { return models_; }
  const std::string& origin() const { return origin_; }

 private:
  std::string origin_;
  std::string name_;
  std::uint64_t seed_ = 0;
  std::map<std::string, std::string> fields_;
  std::map<std::string, ModelSpec> models_;
};

}  // namespace causet
