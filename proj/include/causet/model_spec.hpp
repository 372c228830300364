#pragma once

#include <map>
#include <string>

namespace causet {

// Plain-text description of a model: a kind plus named numeric parameters.
//
//   kind = flat_cylinder
//   T = 10
//   n = 1
struct ModelSpec {
  std::string kind;
  std::map<std::string, std::string> params;

  double number(const std::string& key) const;
  double number_or(const std::string& key, double fallback) const;
  long integer_or(const std::string& key, long fallback) const;

  std::string to_text() const;
  static ModelSpec from_text(const std::string& text);

  friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

// Shortest round-trip decimal representation.
std::string format_number(double x);

}  // namespace causet
