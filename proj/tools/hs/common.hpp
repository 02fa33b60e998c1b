#pragma once

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace hstool {

// exit codes shared by every subcommand
inline constexpr int kOk = 0;
inline constexpr int kCheckFailure = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kNonconvergence = 3;

struct OutputOptions {
  std::string path;    // empty: stdout
  std::string format;  // json, csv, text
  bool no_timestamp = false;
};

inline std::string timestamp_utc() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

// header every JSON artifact carries: operation + full config echo
inline nlohmann::json report_header(const std::string& operation,
                                    const nlohmann::json& config,
                                    const OutputOptions& out) {
  nlohmann::json j;
  j["operation"] = operation;
  j["config"] = config;
  if (!out.no_timestamp) j["timestamp"] = timestamp_utc();
  return j;
}

inline int write_text(const OutputOptions& out, const std::string& text) {
  if (out.path.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream f(out.path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open output file: " << out.path << "\n";
    return kUsageError;
  }
  f << text;
  return kOk;
}

inline int write_json(const OutputOptions& out, const nlohmann::json& j) {
  return write_text(out, j.dump(2) + "\n");
}

// "1,2,5", "1..5" (step 1) or "2..32:x2" (doubling)
inline std::vector<double> parse_value_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(std::stod(item));
      continue;
    }
    double lo = std::stod(item.substr(0, dots));
    std::string rest = item.substr(dots + 2);
    bool doubling = false;
    auto colon = rest.find(':');
    if (colon != std::string::npos) {
      doubling = rest.substr(colon + 1) == "x2";
      rest = rest.substr(0, colon);
    }
    double hi = std::stod(rest);
    for (double v = lo; v <= hi + 1e-9; v = doubling ? 2.0 * v : v + 1.0)
      out.push_back(v);
  }
  return out;
}

}  // namespace hstool
