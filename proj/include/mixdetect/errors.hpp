// Copyright 2026 The mixdetect Authors
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

#ifndef MIXDETECT_ERRORS_HPP_
#define MIXDETECT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mixdetect {

// Raised when a Monte Carlo budget is too small to give usable quantile
// estimates (the enforced floor is 1000 replicates).
class CalibrationBudgetError : public std::runtime_error {
 public:
  explicit CalibrationBudgetError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace mixdetect

#endif  // MIXDETECT_ERRORS_HPP_
