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

// Brute-force cross-checks. Nothing here shares code with the searches it
// checks: they enumerate every assignment and evaluate constraints directly.

#ifndef KSCHECK_TOOLS_ORACLES_H_
#define KSCHECK_TOOLS_ORACLES_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "kscheck/frames.h"
#include "kscheck/kssets.h"

namespace kscheck::oracle {

// Maximum of the triad frame sum over all 2^k sign assignments of the k rays
// that occur in `triads`, visited in Gray-code order. Throws Error when k > 32.
int exhaustive_max_beta(std::span<const Frame> triads);

// Decides colourability by trying all 2^|s| 0/1 assignments. Throws Error for
// sets above 24 members.
bool exhaustive_colorable(const VectorSet& s, std::span<const Frame> frames,
                          ColoringRule rule);

struct SubcollectionAgreement {
  std::size_t subcollections_checked = 0;
  std::size_t disagreements = 0;
  std::uint64_t assignments_enumerated = 0;
};

// For every nonempty subset of `triads` touching at most `max_rays` distinct
// rays, compares noncontextual_bound with exhaustive_max_beta.
SubcollectionAgreement compare_bound_on_subcollections(
    std::span<const Frame> triads, std::size_t max_rays);

}  // namespace kscheck::oracle

#endif  // KSCHECK_TOOLS_ORACLES_H_
