#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace quasitri {

/// 17-significant-digit rendering used for every floating-point value in reports.
std::string format_double(double v);

std::uint64_t fnv1a64(std::string_view data);
std::string to_hex(std::uint64_t v);

/// Deterministic machine-readable result of one named check. The verdict is
/// pass exactly when every residual is at most the tolerance; entries in info
/// are reported but do not gate the verdict.
struct CheckReport {
  std::string check_name;
  std::string inputs_digest;
  std::vector<std::pair<std::string, double>> residuals;
  std::vector<std::pair<std::string, double>> info;
  std::uint64_t seed = 0;
  double tolerance = 0.0;

  void add_residual(std::string name, double value);
  void add_info(std::string name, double value);
  bool pass() const;

  /// One "name: value" line per residual and info entry, final line PASS/FAIL.
  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
};

}  // namespace quasitri
