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

#include "kscheck/report.h"

#include <sstream>

namespace kscheck::cli {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::kHolds:
      return "Holds";
    case Outcome::kFails:
      return "Fails";
    case Outcome::kError:
      return "Error";
  }
  return "Error";
}

int exit_code(Outcome o) {
  switch (o) {
    case Outcome::kHolds:
      return 0;
    case Outcome::kFails:
      return 1;
    case Outcome::kError:
      return 2;
  }
  return 2;
}

std::string format_report(const RunReport& r, Format f, bool timing) {
  std::ostringstream out;
  const double ms =
      std::chrono::duration<double, std::milli>(r.elapsed).count();
  if (f == Format::kRecords) {
    out << "command=" << r.command << "\n";
    for (const auto& [k, v] : r.details) out << k << "=" << v << "\n";
    out << "outcome=" << to_string(r.outcome) << "\n";
    if (timing) out << "elapsed_ms=" << ms << "\n";
    return out.str();
  }
  for (const auto& line : r.lines) out << line << "\n";
  out << "outcome: " << to_string(r.outcome) << "\n";
  if (timing) out << "elapsed: " << ms << " ms\n";
  return out.str();
}

}  // namespace kscheck::cli
