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

#ifndef LPSTAB_ERRORS_HPP_
#define LPSTAB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace lpstab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: non-finite values, length mismatches,
/// functions living on different measure spaces.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Arguments outside the mathematical domain of an operation: exponents out
/// of range, zero functions where a nonzero norm is required, non-probability
/// spaces where a probability space is required.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A case for which no result is proven, e.g. sign cancellation for complex
/// functions with 1 < p < 2.
class UnsupportedCase : public Error {
 public:
  using Error::Error;
};

}  // namespace lpstab

#endif  // LPSTAB_ERRORS_HPP_
