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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "veldkamp/veldkamp_c.h"

namespace {

constexpr int kUsageExit = 2;

vk_format parse_format(const std::string &s) {
    if (s == "json") {
        return VK_FORMAT_JSON;
    }
    if (s == "csv") {
        return VK_FORMAT_CSV;
    }
    if (s == "dot") {
        return VK_FORMAT_DOT;
    }
    return VK_FORMAT_TEXT;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Point-line geometry of the n-qubit Pauli group: hyperplanes, Veldkamp lines, symplectic action"};
    app.set_help_flag("-h,--help", "Print this help message and exit");

    std::vector<std::string> verbs;
    for (const char *const *v = vk_command_verbs(); *v; ++v) {
        verbs.emplace_back(*v);
    }

    std::string verb, format = "text", out_path, a, b, f, hyperplane, what;
    int qubits = 0;
    std::uint64_t seed = 0, limit = 10000;
    bool exhaustive = false, all = false;
    std::optional<int> index;

    app.add_option("verb", verb, "One of: census, hyperplanes, veldkamp, orbits, swap, mermin, gq, wootters, verify, export")
        ->required()
        ->check(CLI::IsMember(verbs));
    app.add_option("-n,--qubits", qubits, "Number of qubits n")->check(CLI::PositiveNumber);
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv", "dot"}));
    app.add_option("--out", out_path, "Write the report to this file instead of stdout");
    app.add_option("--seed", seed, "Seed for sampled checks");
    app.add_flag("--exhaustive", exhaustive, "Allow searches over all 2^|P| subsets (n <= 2)");
    app.add_option("--limit", limit, "Cap on sampled checks")->check(CLI::PositiveNumber);
    app.add_flag("--all", all, "Emit every item (mermin squares, gq sections)");
    app.add_option("--index", index, "Select one item by index");
    app.add_option("--a", a, "First operand: hyperplane key (veldkamp) or Pauli label (swap)");
    app.add_option("--b", b, "Second operand");
    app.add_option("--f", f, "Fixed quadric label (swap)");
    app.add_option("--hyperplane", hyperplane, "Hyperplane key (orbits, gq)");
    app.add_option("--what", what, "export target")->check(CLI::IsMember({"graph", "lines", "hyperplanes"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsageExit;
    }

    vk_command_options options;
    vk_command_options_init(&options);
    options.verb = verb.c_str();
    options.qubits = qubits;
    options.format = parse_format(format);
    options.seed = seed;
    options.exhaustive = exhaustive;
    options.limit = limit;
    options.all = all;
    options.has_index = index.has_value();
    options.index = index.value_or(0);
    options.a = a.c_str();
    options.b = b.c_str();
    options.f = f.c_str();
    options.hyperplane = hyperplane.c_str();
    options.what = what.c_str();

    vk_report *report = nullptr;
    vk_status status = vk_command_run(&options, &report);
    if (status != VK_OK) {
        std::cerr << "veldkamp " << verb << ": " << vk_status_string(status) << ": " << vk_last_error_message()
                  << '\n';
        return vk_status_exit_code(status);
    }

    char *text = nullptr;
    status = vk_report_render(report, options.format, &text);
    if (status != VK_OK) {
        std::cerr << "veldkamp " << verb << ": " << vk_last_error_message() << '\n';
        vk_report_destroy(report);
        return vk_status_exit_code(status);
    }

    int code = vk_report_exit_code(report);
    if (out_path.empty()) {
        std::fwrite(text, 1, std::char_traits<char>::length(text), stdout);
    } else {
        std::ofstream file(out_path, std::ios::binary);
        file << text;
        if (!file) {
            std::cerr << "veldkamp: cannot write " << out_path << '\n';
            code = kUsageExit;
        }
    }
    std::fprintf(stderr, "veldkamp %s: %s in %.3f s\n", verb.c_str(), vk_report_passed(report) ? "pass" : "FAIL",
                 vk_report_seconds(report));
    vk_string_free(text);
    vk_report_destroy(report);
    return code;
}
