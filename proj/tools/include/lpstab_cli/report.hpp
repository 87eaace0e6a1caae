// Copyright 2026 The lpstab Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LPSTAB_CLI_REPORT_HPP_
#define LPSTAB_CLI_REPORT_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "lpstab/bound_report.hpp"

namespace lpstab::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum class OutputFormat { kJson, kTable };

/// Parses "json" or "table". Throws InputError otherwise.
OutputFormat parse_output_format(const std::string& name);

struct Violation {
  std::string check;
  std::string detail;
};

struct ReportDocument {
  std::string operation;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json payload = nlohmann::json::object();
  std::vector<Violation> violations;
  std::string tool_version = kToolVersion;
  std::string input_digest;

  [[nodiscard]] nlohmann::json to_json() const;
  static ReportDocument from_json(const nlohmann::json& j);
};

/// JSON number, or the strings "inf", "-inf", "nan" for non-finite values.
nlohmann::json number(double x);
/// Inverse of number().
double to_double(const nlohmann::json& j);

nlohmann::json to_json(const BoundReport& b);

/// JSON: keys sorted, shortest round-trip floats, trailing newline.
/// Table: one `key  value` line per leaf.
std::string emit_report(const ReportDocument& report, OutputFormat format);

}  // namespace lpstab::cli

#endif  // LPSTAB_CLI_REPORT_HPP_
