// Copyright 2026 The bellconf Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bellconf::cli {

enum class Format { kJson, kCsv, kAll };

struct RunConfig {
  std::string experiment;
  uint64_t shots = 10000;
  /// Unset means the per-experiment default (100 for hierarchy, 30 for validate,
  /// 10 for intervene).
  std::optional<int> trials;
  /// Unset means the per-experiment default (7 for sweep, 42 otherwise).
  std::optional<uint64_t> seed;
  int theta_steps = 25;
  double lhv_flip = 0;
  std::string out_dir = "results";
  Format format = Format::kAll;
  int jobs = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;

/// Runs one experiment, or every one for "all". Throws on failure.
void execute(const RunConfig& config, std::ostream& out);

/// Full entry point: parses `args` (without the program name), runs, and maps
/// errors to exit codes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int main(int argc, char** argv);

}  // namespace bellconf::cli
