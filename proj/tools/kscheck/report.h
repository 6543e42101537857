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

// Result of one command: an outcome, an ordered key=value summary, and the
// human-readable body.

#ifndef KSCHECK_TOOLS_REPORT_H_
#define KSCHECK_TOOLS_REPORT_H_

#include <chrono>
#include <string>
#include <utility>
#include <vector>

namespace kscheck::cli {

enum class Outcome { kHolds, kFails, kError };
enum class Format { kHuman, kRecords };

std::string to_string(Outcome o);

// Exit status: 0 holds, 1 fails, 2 usage or input error.
int exit_code(Outcome o);

struct RunReport {
  std::string command;
  Outcome outcome = Outcome::kHolds;
  std::vector<std::pair<std::string, std::string>> details;
  std::vector<std::string> lines;
  std::chrono::nanoseconds elapsed{0};

  void add(std::string key, std::string value) {
    details.emplace_back(std::move(key), std::move(value));
  }
  void say(std::string line) { lines.push_back(std::move(line)); }
};

// Human format prints the body followed by the outcome; records format prints
// one key=value fact per line. Elapsed time appears only when `timing` is set,
// so default output is byte-identical across runs.
std::string format_report(const RunReport& r, Format f, bool timing);

}  // namespace kscheck::cli

#endif  // KSCHECK_TOOLS_REPORT_H_
