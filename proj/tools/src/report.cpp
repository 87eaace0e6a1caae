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

#include "lpstab_cli/report.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "lpstab/errors.hpp"

namespace lpstab::cli {

using nlohmann::json;

OutputFormat parse_output_format(const std::string& name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "table") return OutputFormat::kTable;
  throw InputError("unknown output format '" + name + "'");
}

json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double to_double(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw InputError("expected a number, got " + j.dump());
}

json to_json(const BoundReport& b) {
  return {
      {"lower", number(b.lower)},
      {"actual", number(b.actual)},
      {"upper", number(b.upper)},
      {"theta_sq", number(b.theta_sq)},
      {"angle_rad", number(b.angle_rad)},
      {"lower_coeff", number(b.lower_coeff)},
      {"upper_coeff", number(b.upper_coeff)},
      {"lower_bracket", number(b.lower_bracket)},
      {"upper_bracket", number(b.upper_bracket)},
      {"lower_slack", number(b.lower_slack())},
      {"upper_slack", number(b.upper_slack())},
      {"positive_part_applied", b.positive_part_applied},
  };
}

json ReportDocument::to_json() const {
  json v = json::array();
  for (const auto& x : violations) v.push_back({{"check", x.check}, {"detail", x.detail}});
  return {
      {"operation", operation}, {"parameters", parameters},     {"payload", payload},
      {"violations", v},        {"tool_version", tool_version}, {"input_digest", input_digest},
  };
}

ReportDocument ReportDocument::from_json(const json& j) {
  ReportDocument r;
  r.operation = j.at("operation").get<std::string>();
  r.parameters = j.at("parameters");
  r.payload = j.at("payload");
  for (const auto& v : j.at("violations")) {
    r.violations.push_back({v.at("check").get<std::string>(), v.at("detail").get<std::string>()});
  }
  r.tool_version = j.at("tool_version").get<std::string>();
  r.input_digest = j.at("input_digest").get<std::string>();
  return r;
}

namespace {

void flatten(const json& node, const std::string& prefix, std::ostringstream& out) {
  if (node.is_object() && !node.empty()) {
    for (const auto& [k, v] : node.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (node.is_array() && !node.empty() && (node[0].is_object() || node[0].is_array())) {
    for (std::size_t i = 0; i < node.size(); ++i) {
      flatten(node[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out << prefix << "  " << (node.is_string() ? node.get<std::string>() : node.dump()) << '\n';
  }
}

}  // namespace

std::string emit_report(const ReportDocument& report, OutputFormat format) {
  if (format == OutputFormat::kJson) return report.to_json().dump(2) + "\n";

  std::ostringstream out;
  out << "operation  " << report.operation << '\n';
  out << "tool_version  " << report.tool_version << '\n';
  out << "input_digest  " << report.input_digest << '\n';
  flatten(report.parameters, "parameters", out);
  flatten(report.payload, "payload", out);
  if (report.violations.empty()) {
    out << "violations  none\n";
  } else {
    for (const auto& v : report.violations) out << "VIOLATION  " << v.check << ": " << v.detail << '\n';
  }
  return out.str();
}

}  // namespace lpstab::cli
