// Copyright 2026 The kscheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end verification pipeline: eleven numbered checks over the
// dimension formulas, bases, vector sets, frames, colourability, bounds and
// quantum values.

#ifndef KSCHECK_TOOLS_REPRODUCE_H_
#define KSCHECK_TOOLS_REPRODUCE_H_

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "kscheck/kssets.h"

namespace kscheck::cli {

struct ReproduceOptions {
  std::uint64_t seed = 1;
  // Replaces a built-in set ("A3", "S4", "S6") for every check that uses it.
  std::map<std::string, VectorSet> overrides;
  // Marks the checks after the first failure as skipped.
  bool stop_on_failure = false;
};

struct CheckResult {
  int id = 0;
  std::string title;
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

inline constexpr int kCheckCount = 11;

std::vector<CheckResult> run_checks(const ReproduceOptions& options);

// Integer amplitudes uniform on [-9, 9], redrawn until nonzero.
std::vector<std::int64_t> random_amplitudes(std::mt19937_64& rng,
                                            std::size_t dim);

}  // namespace kscheck::cli

#endif  // KSCHECK_TOOLS_REPRODUCE_H_
