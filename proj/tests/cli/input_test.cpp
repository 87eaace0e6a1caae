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

#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "lpstab/errors.hpp"
#include "lpstab_cli/input.hpp"

namespace lpstab::cli {
namespace {

std::string error_of(const std::string& text, InputFormat fmt) {
  try {
    (void)parse_input_text(text, fmt);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(CsvInputTest, ParsesColumnsAndComments) {
  const auto doc = parse_input_text("# comment\nweight,f,g\n0.25,1,-2\n\n0.75,3e-1,4\n", InputFormat::kCsv);
  ASSERT_EQ(doc.weights.size(), 2u);
  EXPECT_EQ(doc.weights[1], 0.75);
  ASSERT_EQ(doc.functions.size(), 2u);
  EXPECT_EQ(doc.functions[0].name, "f");
  EXPECT_EQ(doc.functions[0].re[1], 0.3);
  EXPECT_EQ(doc.find("g")->re[0], -2.0);
  EXPECT_EQ(doc.find("h"), nullptr);
  const auto s = doc.space();
  EXPECT_DOUBLE_EQ(s->total_mass(), 1.0);
  EXPECT_THROW((void)doc.function(s, "h"), InputError);
}

TEST(CsvInputTest, ErrorsNameTheLine) {
  EXPECT_NE(error_of("weight,f\n0.5,1\n0.5,abc\n", InputFormat::kCsv).find("line 3"), std::string::npos);
  EXPECT_NE(error_of("weight,f\n0.5,1,2\n", InputFormat::kCsv).find("line 2"), std::string::npos);
  EXPECT_NE(error_of("w,f\n0.5,1\n", InputFormat::kCsv).find("line 1"), std::string::npos);
  EXPECT_NE(error_of("weight,f\n0,1\n", InputFormat::kCsv).find("line 2"), std::string::npos);
  EXPECT_NE(error_of("weight,f\n0.5,inf\n", InputFormat::kCsv).find("line 2"), std::string::npos);
  EXPECT_FALSE(error_of("", InputFormat::kCsv).empty());
  EXPECT_FALSE(error_of("weight,f\n", InputFormat::kCsv).empty());
  EXPECT_FALSE(error_of("weight,f,f\n1,1,1\n", InputFormat::kCsv).empty());
}

TEST(JsonInputTest, RealComplexAndMetadata) {
  const auto doc = parse_input_text(
      R"({"weights":[0.5,0.5],"functions":{"z":{"re":[1,0],"im":[0,1]},"a":[2,3]},)"
      R"("metadata":{"k":"v"}})",
      InputFormat::kJson);
  ASSERT_EQ(doc.functions.size(), 2u);
  EXPECT_EQ(doc.functions[0].name, "z");
  EXPECT_TRUE(doc.functions[0].is_complex());
  EXPECT_FALSE(doc.functions[1].is_complex());
  EXPECT_EQ(doc.metadata.at("k"), "v");
  const auto f = doc.function(doc.space(), "z");
  EXPECT_TRUE(f.is_complex());
  EXPECT_EQ(f[1].imag(), 1.0);
}

TEST(JsonInputTest, Rejections) {
  EXPECT_FALSE(error_of(R"({"weights":[1],"functions":{"f":[1]},"extra":1})", InputFormat::kJson).empty());
  EXPECT_FALSE(error_of(R"({"functions":{"f":[1]}})", InputFormat::kJson).empty());
  EXPECT_FALSE(error_of(R"({"weights":[1]})", InputFormat::kJson).empty());
  EXPECT_FALSE(error_of(R"({"weights":[1,1],"functions":{"f":[1]}})", InputFormat::kJson).empty());
  EXPECT_FALSE(error_of(R"({"weights":[1],"functions":{"f":["x"]}})", InputFormat::kJson).empty());
  EXPECT_FALSE(error_of(R"({"weights":[1],"functions":{"f":{"re":[1]}}})", InputFormat::kJson).empty());
  EXPECT_FALSE(error_of(R"({"weights":[-1],"functions":{"f":[1]}})", InputFormat::kJson).empty());
  EXPECT_FALSE(error_of(R"([1,2])", InputFormat::kJson).empty());
  EXPECT_FALSE(error_of(R"({"weights":[1],)", InputFormat::kJson).empty());
  EXPECT_THROW((void)parse_input_format("xml"), InputError);
}

TEST(SerializeInputTest, RoundTripAndStableDigest) {
  const std::string text =
      R"({"weights":[0.5,0.5],"functions":{"z":{"re":[1,0],"im":[0,1]},"a":[2,3]}})";
  const auto doc = parse_input_text(text, InputFormat::kJson);
  const auto again = parse_input_text(serialize_input(doc), InputFormat::kJson);
  EXPECT_EQ(serialize_input(again), serialize_input(doc));
  EXPECT_EQ(input_digest(again), input_digest(doc));
  EXPECT_EQ(input_digest(doc).rfind("fnv1a64:", 0), 0u);
  EXPECT_EQ(input_digest(doc).size(), 8u + 16u);

  // The same data through CSV hashes the same once real.
  const auto csv = parse_input_text("weight,a\n0.5,2\n0.5,3\n", InputFormat::kCsv);
  const auto json = parse_input_text(R"({"weights":[0.5,0.5],"functions":{"a":[2,3]}})", InputFormat::kJson);
  EXPECT_EQ(input_digest(csv), input_digest(json));
}

TEST(SerializeInputTest, KnownHash) {
  EXPECT_EQ(fnv1a64_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a64_hex("a"), "af63dc4c8601ec8c");
}

}  // namespace
}  // namespace lpstab::cli
