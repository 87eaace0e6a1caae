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

#include "lpstab_cli/input.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <iterator>
#include <set>
#include <sstream>
#include <string_view>

#include "json.hpp"
#include "lpstab/errors.hpp"

namespace lpstab::cli {

namespace {

using ojson = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

[[noreturn]] void fail_line(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

double parse_cell(std::string_view cell, std::size_t line, const std::string& column) {
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size()) {
    fail_line(line, "column '" + column + "': not a number: '" + std::string(cell) + "'");
  }
  if (!std::isfinite(v)) fail_line(line, "column '" + column + "': non-finite value");
  return v;
}

void validate(const InputDocument& doc) {
  if (doc.weights.empty()) throw InputError("input has no atoms");
  for (std::size_t i = 0; i < doc.weights.size(); ++i) {
    const double w = doc.weights[i];
    if (!std::isfinite(w) || w <= 0.0) {
      throw InputError("weight " + std::to_string(i) + " must be positive and finite");
    }
  }
  if (doc.functions.empty()) throw InputError("input defines no functions");
  std::set<std::string> seen;
  for (const auto& fn : doc.functions) {
    if (fn.name.empty()) throw InputError("function with empty name");
    if (!seen.insert(fn.name).second) throw InputError("duplicate function '" + fn.name + "'");
    if (fn.re.size() != doc.weights.size() || (fn.is_complex() && fn.im.size() != fn.re.size())) {
      throw InputError("function '" + fn.name + "' has " + std::to_string(fn.re.size()) +
                       " values for " + std::to_string(doc.weights.size()) + " atoms");
    }
    for (std::size_t i = 0; i < fn.re.size(); ++i) {
      if (!std::isfinite(fn.re[i]) || (fn.is_complex() && !std::isfinite(fn.im[i]))) {
        throw InputError("function '" + fn.name + "', atom " + std::to_string(i) +
                         ": non-finite value");
      }
    }
  }
}

InputDocument parse_csv(std::istream& in) {
  InputDocument doc;
  std::string raw;
  std::size_t line = 0;
  std::vector<std::string> columns;
  while (std::getline(in, raw)) {
    ++line;
    const auto text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    const auto cells = split(text);
    if (columns.empty()) {
      if (cells.front() != "weight") fail_line(line, "header must start with 'weight'");
      if (cells.size() < 2) fail_line(line, "header names no functions");
      for (std::size_t c = 1; c < cells.size(); ++c) {
        if (cells[c].empty()) fail_line(line, "empty column name");
        columns.emplace_back(cells[c]);
        doc.functions.push_back({std::string(cells[c]), {}, {}});
      }
      continue;
    }
    if (cells.size() != columns.size() + 1) {
      fail_line(line, "expected " + std::to_string(columns.size() + 1) + " fields, found " +
                          std::to_string(cells.size()));
    }
    const double w = parse_cell(cells[0], line, "weight");
    if (w <= 0.0) fail_line(line, "weight must be positive");
    doc.weights.push_back(w);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      doc.functions[c].re.push_back(parse_cell(cells[c + 1], line, columns[c]));
    }
  }
  if (columns.empty()) throw InputError("csv input is empty");
  if (doc.weights.empty()) throw InputError("csv input has a header but no rows");
  return doc;
}

std::vector<double> number_array(const ojson& node, const std::string& where) {
  if (!node.is_array()) throw InputError(where + ": expected an array of numbers");
  std::vector<double> out;
  out.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (!node[i].is_number()) {
      throw InputError(where + "[" + std::to_string(i) + "]: expected a number");
    }
    out.push_back(node[i].get<double>());
  }
  return out;
}

InputDocument parse_json(std::istream& in) {
  ojson root;
  try {
    root = ojson::parse(in);
  } catch (const ojson::parse_error& e) {
    throw InputError(std::string("json: ") + e.what());
  }
  if (!root.is_object()) throw InputError("json: top level must be an object");
  for (const auto& [key, value] : root.items()) {
    if (key != "weights" && key != "functions" && key != "metadata") {
      throw InputError("json: unknown key '" + key + "'");
    }
  }
  if (!root.contains("weights")) throw InputError("json: missing 'weights'");
  if (!root.contains("functions")) throw InputError("json: missing 'functions'");

  InputDocument doc;
  doc.weights = number_array(root["weights"], "weights");
  const auto& fns = root["functions"];
  if (!fns.is_object()) throw InputError("json: 'functions' must be an object");
  for (const auto& [name, value] : fns.items()) {
    NamedFunction fn{name, {}, {}};
    const std::string where = "functions." + name;
    if (value.is_object()) {
      if (!value.contains("re") || !value.contains("im") || value.size() != 2) {
        throw InputError(where + ": complex values need exactly 're' and 'im'");
      }
      fn.re = number_array(value["re"], where + ".re");
      fn.im = number_array(value["im"], where + ".im");
      if (fn.im.size() != fn.re.size()) throw InputError(where + ": 're' and 'im' lengths differ");
    } else {
      fn.re = number_array(value, where);
    }
    doc.functions.push_back(std::move(fn));
  }
  if (root.contains("metadata")) {
    const auto& meta = root["metadata"];
    if (!meta.is_object()) throw InputError("json: 'metadata' must be an object");
    for (const auto& [key, value] : meta.items()) {
      doc.metadata[key] = value.is_string() ? value.get<std::string>() : value.dump();
    }
  }
  return doc;
}

}  // namespace

InputFormat parse_input_format(const std::string& name) {
  if (name == "json") return InputFormat::kJson;
  if (name == "csv") return InputFormat::kCsv;
  throw InputError("unknown input format '" + name + "'");
}

const NamedFunction* InputDocument::find(const std::string& name) const {
  for (const auto& fn : functions) {
    if (fn.name == name) return &fn;
  }
  return nullptr;
}

SpacePtr InputDocument::space() const { return MeasureSpace::create(weights); }

SimpleFunction InputDocument::function(const SpacePtr& space, const std::string& name) const {
  const NamedFunction* fn = find(name);
  if (fn == nullptr) throw InputError("input has no function named '" + name + "'");
  if (!fn->is_complex()) return SimpleFunction(space, fn->re);
  std::vector<std::complex<double>> values(fn->re.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = {fn->re[i], fn->im[i]};
  return SimpleFunction(space, std::move(values));
}

InputDocument parse_input(std::istream& in, InputFormat format) {
  InputDocument doc = format == InputFormat::kCsv ? parse_csv(in) : parse_json(in);
  validate(doc);
  return doc;
}

InputDocument parse_input_text(const std::string& text, InputFormat format) {
  std::istringstream in(text);
  return parse_input(in, format);
}

std::string serialize_input(const InputDocument& doc) {
  nlohmann::json root;
  root["weights"] = doc.weights;
  root["functions"] = nlohmann::json::object();
  for (const auto& fn : doc.functions) {
    if (fn.is_complex()) {
      root["functions"][fn.name] = {{"re", fn.re}, {"im", fn.im}};
    } else {
      root["functions"][fn.name] = fn.re;
    }
  }
  root["metadata"] = doc.metadata;
  return root.dump();
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string input_digest(const InputDocument& doc) {
  return "fnv1a64:" + fnv1a64_hex(serialize_input(doc));
}

}  // namespace lpstab::cli
