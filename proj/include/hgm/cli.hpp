// Copyright 2026 The hgmoments Authors
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

// Command-line front end. Each request produces newline-delimited JSON
// records on the output stream; diagnostics go to the error stream.
//
// Exit status: 0 success, 1 usage or validation error, 2 verification
// mismatch.

#ifndef HGM_CLI_HPP
#define HGM_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgm/exact.hpp"
#include "hgm/moment_kind.hpp"
#include "hgm/multi_index.hpp"

namespace hgm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitMismatch = 2;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by parse_request for --help; what() is the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Mode { Single, Table, Verify };

struct OutputFormat {
  /// Fractional digits of the extra "decimal" field; none for rational-only.
  std::optional<unsigned> decimal_digits;
};

struct CliRequest {
  std::int64_t population = 0;
  std::int64_t sample_size = 0;
  // Exactly one of these is set.
  std::optional<std::vector<std::int64_t>> counts;
  std::optional<std::vector<ExactRational>> probs;

  std::optional<MultiIndex> alpha;
  std::optional<std::uint64_t> max_order;
  /// Unset means noncentral for single/table and all three kinds for verify.
  std::optional<MomentKind> kind;
  Mode mode = Mode::Single;
  OutputFormat format;
  /// Adds a Monte Carlo estimate to single-mode records.
  std::optional<std::uint64_t> seed;
  std::uint64_t samples = 10000;
};

/// Parses argv (argv[0] is the program name). Throws UsageError.
CliRequest parse_request(const std::vector<std::string>& args);

/// "rational" or "decimal:<digits>".
OutputFormat parse_format(const std::string& text);

/// Executes a parsed request. Returns the exit status.
int run(const CliRequest& request, std::ostream& out, std::ostream& err);

/// parse_request + run, with usage errors reported on err.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hgm::cli

#endif  // HGM_CLI_HPP
