// Copyright 2026 The Veldkamp Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "veldkamp/serialize.h"

namespace veldkamp {

enum class OutputFormat { kText, kJson, kCsv, kDot };

const char *to_string(OutputFormat format);
OutputFormat parse_output_format(std::string_view text);

inline constexpr std::uint64_t kDefaultSampleLimit = 10000;

struct CommandOptions {
    std::string verb;
    /// 0 means not given.
    int qubits = 0;
    OutputFormat format = OutputFormat::kText;
    std::uint64_t seed = 0;
    bool exhaustive = false;
    /// Cap on sampled checks.
    std::uint64_t limit = kDefaultSampleLimit;
    bool all = false;
    std::optional<int> index;
    /// Verb-specific operands: hyperplane keys for veldkamp/orbits/gq,
    /// Pauli labels for swap.
    std::string a;
    std::string b;
    std::string f;
    std::string hyperplane;
    /// export: graph, lines or hyperplanes.
    std::string what;
};

inline const std::vector<std::string> &command_verbs() {
    static const std::vector<std::string> verbs = {"census", "hyperplanes", "veldkamp", "orbits", "swap",
                                                   "mermin", "gq",          "wootters", "verify", "export"};
    return verbs;
}

/// Outcome of one command. `body` carries everything that is rendered; the
/// text form is produced from the same object.
struct Report {
    std::string verb;
    int qubits = 0;
    Json body;
    bool passed = true;
    /// Wall-clock seconds; kept out of the rendered output so that repeated
    /// runs are byte-identical.
    double seconds = 0;

    /// 0 when passed, 1 when a checked claim failed.
    int exit_code() const {
        return passed ? 0 : 1;
    }
};

/// Usage problems (unknown verb, bad operands, n outside the verb's limits)
/// throw Error with kInvalidArgument, kOutOfRange, kParse or kPrecondition.
Report run_command(const CommandOptions &options);

/// Throws kInvalidArgument when the verb has no rendering in that format.
std::string render(const Report &report, OutputFormat format);

/// Exit code for an error escaping run_command: 1 for internal failures, 2
/// for everything attributable to the invocation.
int exit_code_for(ErrorCode code);

}  // namespace veldkamp
