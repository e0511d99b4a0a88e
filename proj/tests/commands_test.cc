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

#include "doctest.h"
#include "veldkamp/commands.h"

using namespace veldkamp;

namespace {

CommandOptions opts(const std::string &verb, int n) {
    CommandOptions o;
    o.verb = verb;
    o.qubits = n;
    return o;
}

ErrorCode error_of(const CommandOptions &o) {
    try {
        run_command(o);
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::kInternal;
}

}  // namespace

TEST_SUITE("commands") {
    TEST_CASE("census report") {
        Report r = run_command(opts("census", 2));
        CHECK(r.passed);
        CHECK(r.exit_code() == 0);
        const Json &rows = r.body["results"]["veldkamp"]["rows"];
        REQUIRE(rows.size() == 5);
        for (const auto &row : rows) {
            for (const char *key : {"type", "composition", "core_size", "count", "formula_value", "match"}) {
                CHECK(row.contains(key));
            }
        }
        CHECK(rows[2]["type"] == "CH0H0");
        CHECK(rows[2]["count"] == 45);
        CHECK(rows[2]["core_size"] == 5);
        CHECK(r.body["command"]["verb"] == "census");
        CHECK(r.body["n"] == 2);
        CHECK(r.body["seed"].is_null());

        std::string csv = render(r, OutputFormat::kCsv);
        CHECK(csv.rfind("n,type,composition,core_size,count\n", 0) == 0);
        CHECK(csv.find("2,CH1H1,1/0/2,1,15\n") != std::string::npos);
        CHECK(csv.find('\r') == std::string::npos);

        std::string text = render(r, OutputFormat::kText);
        CHECK(text.find("CH0H1") != std::string::npos);
        CHECK(text.find("result: pass") != std::string::npos);
        CHECK_THROWS_AS(render(r, OutputFormat::kDot), Error);

        Report one = run_command(opts("census", 1));
        CHECK(one.passed);
        CHECK(one.body["results"]["veldkamp"].is_null());
    }

    TEST_CASE("text and json carry the same values") {
        Report r = run_command(opts("hyperplanes", 2));
        std::string text = render(r, OutputFormat::kText);
        for (const auto &h : r.body["results"]["hyperplanes"]) {
            CHECK(text.find(h["key"].get<std::string>()) != std::string::npos);
        }
        Json parsed = Json::parse(render(r, OutputFormat::kJson));
        CHECK(parsed == r.body);
        const Json &first = parsed["results"]["hyperplanes"][0];
        for (const char *key : {"kind", "p", "arf", "size", "points"}) {
            CHECK(first.contains(key));
        }
        CHECK(first["arf"].is_null());
    }

    TEST_CASE("hyperplanes with exhaustive search") {
        CommandOptions o = opts("hyperplanes", 2);
        o.exhaustive = true;
        Report r = run_command(o);
        CHECK(r.passed);
        CHECK(r.body["results"]["exhaustive"]["h1_sets"] == 32);
        o.qubits = 3;
        CHECK(error_of(o) == ErrorCode::kPrecondition);
    }

    TEST_CASE("veldkamp line report") {
        CommandOptions o;
        o.verb = "veldkamp";
        o.a = "C_XII";
        o.b = "H_III";
        Report r = run_command(o);
        CHECK(r.qubits == 3);
        const Json &line = r.body["results"]["line"];
        CHECK(line["type"] == "CH0H0");
        CHECK(line["members"].size() == 3);
        CHECK(line["core_size"] == 19);
        CHECK(line["core"].size() == 19);
        o.qubits = 2;
        CHECK(error_of(o) == ErrorCode::kDimensionMismatch);
        o.qubits = 0;
        o.b = "C_XII";
        CHECK(error_of(o) == ErrorCode::kInvalidArgument);
    }

    TEST_CASE("orbits, swap, gq, wootters, export") {
        Report orbits = run_command(opts("orbits", 3));
        CHECK(orbits.passed);
        CHECK(orbits.body["results"]["orbits"].size() == 3);

        CommandOptions s = opts("swap", 3);
        s.a = "IIX";
        s.b = "IIZ";
        s.f = "XII";
        Report swap = run_command(s);
        CHECK(swap.passed);
        CHECK(swap.body["results"]["map"]["word"].size() >= 1);

        Report gq2 = run_command(opts("gq", 2));
        CHECK(gq2.passed);
        CHECK(gq2.body["results"]["grids"].size() == 10);
        CHECK(gq2.body["results"]["ovoids"].size() == 6);
        Report gq3 = run_command(opts("gq", 3));
        CHECK(gq3.passed);
        CHECK(gq3.body["results"]["quadrics"].size() == 28);
        CHECK(gq3.body["results"]["sections"]["base"] == "H_YYY");

        Report w = run_command(opts("wootters", 3));
        CHECK(w.passed);
        CHECK(w.body["results"]["hyperplane"]["size"] == 27);

        CommandOptions e = opts("export", 2);
        e.what = "graph";
        e.format = OutputFormat::kDot;
        std::string dot = render(run_command(e), OutputFormat::kDot);
        CHECK(dot.rfind("graph G2 {\n", 0) == 0);
        CHECK(dot.find("  XI -- ") != std::string::npos);
        e.what = "lines";
        e.format = OutputFormat::kJson;
        CHECK(run_command(e).body["results"]["lines"].size() == 15);
        e.what = "nothing";
        CHECK(error_of(e) == ErrorCode::kInvalidArgument);
    }

    TEST_CASE("mermin squares") {
        CommandOptions o = opts("mermin", 2);
        o.all = true;
        Report r = run_command(o);
        CHECK(r.passed);
        CHECK(r.body["results"]["squares"].size() == 10);
        for (const auto &sq : r.body["results"]["squares"]) {
            CHECK(sq["negative_lines"].get<int>() % 2 == 1);
        }
        o.index = 3;
        CHECK(run_command(o).body["results"]["squares"].size() == 1);
        o.index = 10;
        CHECK(error_of(o) == ErrorCode::kOutOfRange);
        CHECK(error_of(opts("mermin", 3)) == ErrorCode::kOutOfRange);
    }

    TEST_CASE("verify scoreboard") {
        CommandOptions o = opts("verify", 2);
        o.exhaustive = true;
        Report r = run_command(o);
        CHECK(r.passed);
        bool saw_v2 = false;
        for (const auto &c : r.body["results"]["claims"]) {
            CHECK(c["status"] != "fail");
            CHECK(c.contains("id"));
            CHECK(c.contains("statement"));
            saw_v2 = saw_v2 || c["id"] == "v2-fails-for-two-qubits";
        }
        CHECK(saw_v2);
        CHECK(r.body["results"]["summary"]["skip"] == 0);

        CommandOptions sampled = opts("verify", 4);
        sampled.seed = 5;
        sampled.limit = 200;
        Report a = run_command(sampled);
        Report b = run_command(sampled);
        CHECK(a.passed);
        CHECK(a.body["seed"] == 5);
        CHECK(render(a, OutputFormat::kJson) == render(b, OutputFormat::kJson));
        CHECK(render(a, OutputFormat::kText) == render(b, OutputFormat::kText));
    }

    TEST_CASE("usage errors") {
        CHECK(error_of(opts("frobnicate", 2)) == ErrorCode::kInvalidArgument);
        CHECK(error_of(opts("census", 0)) == ErrorCode::kInvalidArgument);
        CHECK(error_of(opts("census", 6)) == ErrorCode::kOutOfRange);
        CHECK(error_of(opts("swap", 2)) == ErrorCode::kOutOfRange);
        CommandOptions o = opts("census", 2);
        o.format = OutputFormat::kDot;
        CHECK(error_of(o) == ErrorCode::kInvalidArgument);
        o.format = OutputFormat::kText;
        o.limit = 0;
        CHECK(error_of(o) == ErrorCode::kInvalidArgument);
        CHECK(exit_code_for(ErrorCode::kOutOfRange) == 2);
        CHECK(exit_code_for(ErrorCode::kParse) == 2);
        CHECK(exit_code_for(ErrorCode::kInternal) == 1);
        CHECK(parse_output_format("csv") == OutputFormat::kCsv);
        CHECK_THROWS_AS(parse_output_format("xml"), Error);
    }
}
