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

#ifndef LPSTAB_CLI_INPUT_HPP_
#define LPSTAB_CLI_INPUT_HPP_

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "lpstab/measure.hpp"

namespace lpstab::cli {

enum class InputFormat { kJson, kCsv };

/// Parses "json" or "csv". Throws InputError otherwise.
InputFormat parse_input_format(const std::string& name);

struct NamedFunction {
  std::string name;
  std::vector<double> re;
  std::vector<double> im;  // empty for real functions

  [[nodiscard]] bool is_complex() const { return !im.empty(); }
};

/// Weights plus named functions on them.
///
/// JSON layout:
///   {"weights": [...],
///    "functions": {"f": [...], "g": {"re": [...], "im": [...]}},
///    "metadata": {"key": "value"}}
/// CSV layout: header `weight,f,g,...`, one atom per row, real values only.
struct InputDocument {
  std::vector<double> weights;
  std::vector<NamedFunction> functions;  // in document order
  std::map<std::string, std::string> metadata;

  [[nodiscard]] const NamedFunction* find(const std::string& name) const;
  [[nodiscard]] SpacePtr space() const;
  /// Throws InputError if `name` is missing.
  [[nodiscard]] SimpleFunction function(const SpacePtr& space, const std::string& name) const;
};

/// Throws InputError with the offending line (CSV) or position (JSON).
InputDocument parse_input(std::istream& in, InputFormat format);
InputDocument parse_input_text(const std::string& text, InputFormat format);

/// Canonical JSON text: keys sorted, real functions as plain arrays.
std::string serialize_input(const InputDocument& doc);

/// "fnv1a64:" followed by 16 hex digits of the canonical JSON text.
std::string input_digest(const InputDocument& doc);
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace lpstab::cli

#endif  // LPSTAB_CLI_INPUT_HPP_
