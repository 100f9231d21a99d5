// Copyright 2026 The Fagnano Authors
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

#ifndef FAGNANO_CLI_HPP_
#define FAGNANO_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "fagnano/outer_billiard.hpp"
#include "fagnano/polygon.hpp"

namespace fagnano {

struct RunConfig {
  enum class Command {
    kDedal,
    kDevelop,
    kIterate,
    kClassify,
    kSpectrum,
    kOrbit,
    kFagnano,
    kBgs,
    kRender,
  };
  enum class Format { kJson, kCsv, kSvg };

  Command command = Command::kDedal;
  std::string input_path;
  /// Empty writes to the `out` stream passed to Run.
  std::string output_path;
  double tol = kDefaultTol;
  int steps = 16;
  int max_m = 200;
  std::uint64_t seed = 42;
  int n = 5;
  int samples = 1000;
  /// Dedal family member Q_0 + s·X_{n/2} for even n.
  Complex s{0.0, 0.0};
  /// Orbit start point.
  std::optional<Complex> z;
  Format format = Format::kJson;
  Convention convention = Convention::kCounterClockwise;
  /// dedal: also check develop(result) == input.
  bool self_check = false;
  /// render: draw the regular n-gons X_j side by side instead of an input.
  bool regular_family = false;
};

std::optional<RunConfig::Command> ParseCommand(const std::string& name);
std::optional<RunConfig::Format> ParseFormat(const std::string& name);

/// Exit status of Run.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitIoError = 2;

/// Executes one command. Artifacts go to config.output_path (or `out`);
/// failures are reported as a JSON object on `err`.
int Run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace fagnano

#endif  // FAGNANO_CLI_HPP_
