#include "causet/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "causet/errors.hpp"

namespace causet {

namespace pt = boost::property_tree;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Strips trailing "; comment" / "# comment" from values.
std::string strip_comment(const std::string& s) {
  const auto c = s.find_first_of(";#");
  return trim(c == std::string::npos ? s : s.substr(0, c));
}

double parse_double(const std::string& where, const std::string& value) {
  const std::string v = trim(value);
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty())
    throw ConfigError(where + ": expected a number, got '" + value + "'");
  return x;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str(), path);
}

ExperimentConfig ExperimentConfig::from_text(const std::string& text, const std::string& origin) {
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(origin + ":" + std::to_string(e.line()) + ": " + e.message());
  }

  ExperimentConfig c;
  c.origin_ = origin;
  bool saw_experiment = false;
  for (const auto& [section, body] : tree) {
    if (!body.data().empty()) throw ConfigError(origin + ": key '" + section + "' outside any section");
    std::map<std::string, std::string> kv;
    for (const auto& [key, leaf] : body) {
      if (!leaf.empty()) throw ConfigError(origin + ": [" + section + "] " + key + ": nested keys are not allowed");
      kv[key] = strip_comment(leaf.data());
    }
    if (section == "experiment") {
      saw_experiment = true;
      c.fields_ = std::move(kv);
    } else if (section == "model" || section == "model.x" || section == "model.y") {
      ModelSpec spec;
      auto it = kv.find("kind");
      if (it == kv.end() || it->second.empty()) throw ConfigError(origin + ": [" + section + "] kind: missing");
      spec.kind = it->second;
      kv.erase(it);
      for (auto& [k, v] : kv) {
        parse_double(origin + ": [" + section + "] " + k, v);
        spec.params[k] = v;
      }
      c.models_[section] = std::move(spec);
    } else {
      throw ConfigError(origin + ": unknown section [" + section + "]");
    }
  }
  if (!saw_experiment) throw ConfigError(origin + ": missing [experiment] section");
  auto name = c.fields_.find("name");
  if (name == c.fields_.end() || name->second.empty()) throw ConfigError(origin + ": [experiment] name: missing");
  c.name_ = name->second;
  c.fields_.erase(name);
  c.seed_ = c.count("seed", 0);
  c.fields_.erase("seed");
  // Build every model once so bad parameters surface with their section.
  for (const auto& [section, spec] : c.models_) c.model(section);
  return c;
}

std::string ExperimentConfig::text(const std::string& key, const std::string& fallback) const {
  auto it = fields_.find(key);
  return it == fields_.end() ? fallback : it->second;
}

double ExperimentConfig::number(const std::string& key) const {
  auto it = fields_.find(key);
  if (it == fields_.end()) throw ConfigError(origin_ + ": [experiment] " + key + ": missing");
  return parse_double(origin_ + ": [experiment] " + key, it->second);
}

double ExperimentConfig::number(const std::string& key, double fallback) const {
  return has(key) ? number(key) : fallback;
}

std::uint64_t ExperimentConfig::count(const std::string& key, std::uint64_t fallback) const {
  auto it = fields_.find(key);
  if (it == fields_.end()) return fallback;
  const std::string v = trim(it->second);
  // Accept 1e5-style values when they are exact integers.
  const double x = parse_double(origin_ + ": [experiment] " + key, v);
  if (!(x >= 0.0) || x != std::floor(x) || x > 1.8e19)
    throw ConfigError(origin_ + ": [experiment] " + key + ": expected a nonnegative integer, got '" + v + "'");
  std::uint64_t n = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
  if (ec == std::errc() && ptr == v.data() + v.size()) return n;
  return static_cast<std::uint64_t>(x);
}

std::vector<double> ExperimentConfig::numbers(const std::string& key, const std::vector<double>& fallback) const {
  auto it = fields_.find(key);
  if (it == fields_.end()) return fallback;
  std::vector<double> out;
  std::stringstream ss(it->second);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(origin_ + ": [experiment] " + key, item));
  if (out.empty()) throw ConfigError(origin_ + ": [experiment] " + key + ": empty list");
  return out;
}

const ModelSpec& ExperimentConfig::model_spec(const std::string& section) const {
  auto it = models_.find(section);
  if (it == models_.end()) throw ConfigError(origin_ + ": missing [" + section + "] section");
  return it->second;
}

std::unique_ptr<SpacetimeModel> ExperimentConfig::model(const std::string& section) const {
  const ModelSpec& spec = model_spec(section);
  try {
    return make_model(spec);
  } catch (const Error& e) {
    throw ConfigError(origin_ + ": [" + section + "] " + e.what());
  }
}

void ExperimentConfig::require_known(const std::set<std::string>& known) const {
  for (const auto& [k, v] : fields_)
    if (!known.count(k)) throw ConfigError(origin_ + ": [experiment] " + k + ": unknown key for '" + name_ + "'");
}

}  // namespace causet
