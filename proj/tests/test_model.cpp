// Copyright 2026 The spinmap Authors
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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <string>

#include "spinmap/commands.hpp"
#include "spinmap/model.hpp"

using namespace spinmap;

namespace {

const char *kXzx = R"({
  "statistics": {"kind": "fermion"},
  "num_modes": 3,
  "hamiltonian": [{"coeff": 0.5, "pauli": "X0 Z1 X2"}],
  "run": {"time": 1.0, "trotter_steps": 1}
})";

const char *kRing = R"({
  "statistics": {"kind": "fermion"},
  "num_modes": 3,
  "hamiltonian": [
    {"coeff": -1.0, "factors": [{"kind": "create", "mode": 0}, {"kind": "annihilate", "mode": 1}]},
    {"coeff": -1.0, "factors": [{"kind": "create", "mode": 1}, {"kind": "annihilate", "mode": 0}]},
    {"coeff": [0.0, 0.5], "factors": [{"kind": "create", "mode": 1}, {"kind": "annihilate", "mode": 2}]},
    {"coeff": [0.0, -0.5], "factors": [{"kind": "create", "mode": 2}, {"kind": "annihilate", "mode": 1}]},
    {"coeff": 0.25, "factors": [{"kind": "number", "mode": 2}]}
  ],
  "initial_state": {"kind": "slater", "occupied": [0]},
  "correlation": {"A": [{"pauli": "X1"}], "B": [{"coeff": [0, 1], "pauli": "Y0"}]},
  "run": {"time": 0.5, "times": [0.0, 0.5], "trotter_steps": 4, "backend": "exact", "seed": 3}
})";

} // namespace

TEST_CASE("model parsing", "[model]") {
    const Model m = parse_model(kRing);
    CHECK(m.statistics.kind == Statistics::Kind::Fermion);
    CHECK(m.num_modes == 3);
    REQUIRE(m.hamiltonian.size() == 5);
    CHECK(m.hamiltonian[2].coeff == cplx{0.0, 0.5});
    CHECK(m.hamiltonian[4].factors == std::vector<LadderFactor>{LadderFactor::number(2)});
    REQUIRE(m.initial_state);
    CHECK(m.initial_state->occupied == std::vector<std::size_t>{0});
    CHECK(m.correlation_B.front().coeff == cplx{0.0, 1.0});
    CHECK(m.run.times == std::vector<double>{0.0, 0.5});
    CHECK(m.run.seed == 3);
    CHECK(m.run.steps_per_unit_time == 64);
    CHECK(model_hamiltonian(m).is_hermitian());
}

TEST_CASE("render and parse round-trip", "[model]") {
    for (const char *text : {kXzx, kRing}) {
        const Model m = parse_model(text);
        const std::string rendered = render_model(m);
        CHECK(parse_model(rendered) == m);
        CHECK(render_model(parse_model(rendered)) == rendered);
    }
    Model b;
    b.statistics = Statistics::boson(2);
    b.num_modes = 3;
    b.hamiltonian.push_back({0.5, {LadderFactor::create(0), LadderFactor::annihilate(1)}, std::nullopt});
    InitialState s;
    s.kind = InitialState::Kind::BosonProduct;
    s.occupations = {1, 0, 2};
    s.total_bosons = 3;
    b.initial_state = s;
    b.observable = {{1.0, "Z0"}};
    b.run.shots = 100;
    b.run.oracle_limit = 12;
    CHECK(parse_model(render_model(b)) == b);
    CHECK(render_model(b).find("\"num_sites\"") != std::string::npos);
}

TEST_CASE("syntax errors carry line and column", "[model]") {
    try {
        parse_model("{\n  \"statistics\": {\"kind\": \"fermion\"},\n  \"num_modes\": 2,,\n}");
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.line() == 3);
        CHECK(e.column() > 0);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("schema errors name the offending field", "[model]") {
    CHECK_THROWS_WITH(parse_model(R"({"statistics": {"kind": "fermion"}})"),
                      Catch::Matchers::ContainsSubstring("num_modes"));
    CHECK_THROWS_WITH(parse_model(R"({"statistics": {"kind": "fermion"}, "num_modes": 2, "extra": 1})"),
                      Catch::Matchers::ContainsSubstring("/extra"));
    CHECK_THROWS_WITH(parse_model(R"({"statistics": {"kind": "fermion"}, "num_modes": 2,
                                      "hamiltonian": [{"coeff": "x", "pauli": "Z0"}]})"),
                      Catch::Matchers::ContainsSubstring("/hamiltonian/0/coeff"));
    CHECK_THROWS_AS(parse_model(R"({"statistics": {"kind": "plasma"}, "num_modes": 2})"), ParseError);
    CHECK_THROWS_AS(parse_model(R"([1, 2])"), ParseError);
}

TEST_CASE("compile reproduces the seven-gate XZX network", "[commands]") {
    const CommandResult r = run_command("compile", kXzx);
    REQUIRE(r.exit_code == kExitSuccess);
    CHECK(r.output.find("ZZ q0 q1 0.5") != std::string::npos);
    CHECK(r.output.find("# TOTAL 7") != std::string::npos);
    CommandOptions o;
    o.steps = 3;
    CHECK(run_command("compile", kXzx, o).output.find("# TOTAL 21") != std::string::npos);
}

TEST_CASE("commands are byte-for-byte deterministic", "[commands]") {
    for (const char *cmd : {"compile", "prep", "correlate", "validate"}) {
        const CommandResult a = run_command(cmd, kRing);
        const CommandResult b = run_command(cmd, kRing);
        INFO(cmd << ": " << a.report);
        CHECK(a.exit_code == kExitSuccess);
        CHECK(a.output == b.output);
        CHECK(!a.output.empty());
    }
}

TEST_CASE("correlate output is a CSV with one row per time", "[commands]") {
    const CommandResult r = run_command("correlate", kRing);
    REQUIRE(r.exit_code == kExitSuccess);
    CHECK(r.output.rfind("t,re,im\n0,", 0) == 0);
    CHECK(std::count(r.output.begin(), r.output.end(), '\n') == 3);
}

TEST_CASE("validate reports every relation", "[commands]") {
    const CommandResult r = run_command("validate", kRing);
    CHECK(r.exit_code == kExitSuccess);
    CHECK(r.output.find("FAIL") == std::string::npos);
    CHECK(r.output.find("PASS H = H^dag") != std::string::npos);
    const std::string anyon = R"({"statistics": {"kind": "anyon", "theta": 0.7}, "num_modes": 3})";
    const CommandResult a = run_command("validate", anyon);
    CHECK(a.exit_code == kExitSuccess);
    CHECK(a.output.find("PASS anyon_map(theta=pi) == jordan_wigner") != std::string::npos);
}

TEST_CASE("exit codes", "[commands]") {
    CHECK(run_command("compile", "{ not json").exit_code == kExitParse);
    CHECK(run_command("compile", R"({"statistics": {"kind": "fermion"}, "num_modes": 1,
                                     "hamiltonian": [{"coeff": [0, 1], "pauli": "Z0"}]})")
              .exit_code == kExitSemantics);
    CHECK(run_command("frobnicate", kXzx).exit_code == kExitSemantics);
    CommandOptions o;
    o.oracle_limit = 2;
    CHECK(run_command("correlate", kRing, o).exit_code == kExitResource);
    CHECK(run_command("correlate", kXzx).exit_code == kExitSemantics);
}

TEST_CASE("empty Hamiltonians compile to an empty circuit", "[commands]") {
    const CommandResult r = run_command("compile", R"({"statistics": {"kind": "fermion"}, "num_modes": 2})");
    REQUIRE(r.exit_code == kExitSuccess);
    CHECK(r.output.find("# TOTAL 0") != std::string::npos);
}

TEST_CASE("linear-combination prep reports the success probability", "[commands]") {
    const std::string text = R"({
      "statistics": {"kind": "fermion"}, "num_modes": 2,
      "initial_state": {"kind": "linear_combination",
                        "branches": [{"amplitude": 1, "occupied": [0]}, {"amplitude": [0, 1], "occupied": [1]}]}
    })";
    const CommandResult r = run_command("prep", text);
    REQUIRE(r.exit_code == kExitSuccess);
    CHECK(r.report.find("predicted_success_probability 0.5\n") != std::string::npos);
    CHECK(r.output.rfind("index,re,im\n", 0) == 0);
    CHECK(run_command("correlate", text).exit_code == kExitSemantics);
}
