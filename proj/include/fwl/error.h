// Copyright 2026 The fwl Authors.
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

#ifndef FWL_ERROR_H_
#define FWL_ERROR_H_

#include <stdexcept>
#include <string>

namespace fwl {

enum class Errc {
  kInvalidArgument,
  kNotPrime,
  kNotPrimitive,
  kSmallT,
  kDivisionByZero,
  kZeroInput,
  kInternal,
  kOverflow,
  kNonIntegerCoefficient,
  kInconsistentS,
  kDimensionTooLarge,
  kDimensionMismatch,
  kIntersectionNotTrivial,
  kBoundViolated,
  kTooLarge,
  kNonIntegralFrequency,
  kZeroPair,
  kIo,
};

const char* ErrcName(Errc code);

// All library failures are reported through this exception. The code lets
// callers (the CLI in particular) map failures onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(ErrcName(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace fwl

#endif  // FWL_ERROR_H_
