// Copyright 2026 The ramsey-aqc Authors
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
/**
 * @file
 * Exception types shared by every module.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace ramsey_aqc {

/// Malformed input: bad vertex pair, non-triangular length, mismatched sizes.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Instance exceeds a configured qubit cap.
class ResourceLimitError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Numerical integration left the unit sphere or failed to converge.
class IntegrationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Iterative eigensolver did not reach its residual tolerance.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string &what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    [[nodiscard]] double residual() const noexcept { return residual_; }

  private:
    double residual_;
};

} // namespace ramsey_aqc
