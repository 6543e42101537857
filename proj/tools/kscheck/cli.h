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

// Command implementations behind the kscheck executable.

#ifndef KSCHECK_TOOLS_CLI_H_
#define KSCHECK_TOOLS_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kscheck/frames.h"
#include "kscheck/report.h"
#include "kscheck/reproduce.h"
#include "kscheck/symmetrizer.h"

namespace kscheck::cli {

RunReport cmd_classify(int n, int d, Statistics statistics);

RunReport cmd_basis(int n, int d, Statistics statistics, bool paper);

enum class KssetAction { kShow, kFrames, kColor, kBound, kQuantum };

struct KssetRequest {
  // Exactly one of name and file is set.
  std::string name;
  std::string file;
  KssetAction action = KssetAction::kShow;
  std::optional<std::vector<std::int64_t>> state;
  ColoringRule rule = ColoringRule::kFramesAndOrthogonality;
  std::uint64_t seed = 1;
};

RunReport cmd_ksset(const KssetRequest& request);

RunReport cmd_reproduce(const ReproduceOptions& options);

// Parses argv, dispatches and prints the report. Returns the exit status.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace kscheck::cli

#endif  // KSCHECK_TOOLS_CLI_H_
