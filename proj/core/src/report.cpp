#include "quasitri/report.hpp"

#include <cstdio>
#include <sstream>

namespace quasitri {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (const char c : data) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ull;
  }
  return h;
}

std::string to_hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

void CheckReport::add_residual(std::string name, double value) {
  residuals.emplace_back(std::move(name), value);
}

void CheckReport::add_info(std::string name, double value) {
  info.emplace_back(std::move(name), value);
}

bool CheckReport::pass() const {
  for (const auto& [name, value] : residuals)
    if (!(value <= tolerance)) return false;
  return true;
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  os << "check: " << check_name << "\n";
  os << "inputs: " << inputs_digest << "\n";
  os << "seed: " << seed << "\n";
  os << "tolerance: " << format_double(tolerance) << "\n";
  for (const auto& [name, value] : residuals) os << name << ": " << format_double(value) << "\n";
  for (const auto& [name, value] : info) os << name << ": " << format_double(value) << "\n";
  os << (pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check_name;
  j["inputs_digest"] = inputs_digest;
  j["seed"] = seed;
  j["tolerance"] = tolerance;
  nlohmann::ordered_json res;
  for (const auto& [name, value] : residuals) res[name] = value;
  j["residuals"] = std::move(res);
  if (!info.empty()) {
    nlohmann::ordered_json inf;
    for (const auto& [name, value] : info) inf[name] = value;
    j["info"] = std::move(inf);
  }
  j["verdict"] = pass() ? "pass" : "fail";
  return j;
}

}  // namespace quasitri
