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

// spinmap command-line driver.
//
//   spinmap compile   --model m.json [--steps N]
//   spinmap prep      --model m.json
//   spinmap correlate --model m.json [--backend exact|trotter] [--steps N] [--seed S]
//   spinmap spectrum  --model m.json [--backend exact|trotter] [--steps N]
//   spinmap validate  --model m.json
//
// Results go to --out (default stdout); reports go to stderr.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>

#include "spinmap.hpp"

int main(int argc, char **argv) {
    CLI::App app{"Spin-1/2 simulation of fermions, anyons and bosons"};
    app.require_subcommand(1, 1);

    std::string model_path;
    std::string out_path;
    std::string backend;
    std::size_t steps = 0;
    std::uint64_t seed = 0;
    std::size_t oracle_limit = 0;

    const std::pair<const char *, const char *> commands[] = {
        {"compile", "Trotterized e^{iHt} as circuit text plus a gate census"},
        {"prep", "prepared initial state as index,re,im CSV"},
        {"correlate", "two-time correlation function G(t) as t,re,im CSV"},
        {"spectrum", "eigenvalue peaks of the observable as lambda,weight CSV"},
        {"validate", "algebra relations of the mapped operators"},
    };
    for (const auto &[name, description] : commands) {
        CLI::App *sub = app.add_subcommand(name, description);
        sub->add_option("--model", model_path, "model file (JSON)")->required();
        sub->add_option("--out", out_path, "output file; stdout when omitted");
        sub->add_option("--backend", backend, "evolution backend")->check(CLI::IsMember({"exact", "trotter"}));
        sub->add_option("--steps", steps, "Trotter steps")->check(CLI::PositiveNumber);
        sub->add_option("--seed", seed, "sampling seed");
        sub->add_option("--oracle-limit", oracle_limit, "dense oracle qubit limit")->check(CLI::PositiveNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : spinmap::kExitParse;
    }

    const CLI::App *sub = app.get_subcommands().front();
    spinmap::CommandOptions options;
    if (!backend.empty()) {
        options.backend = spinmap::backend_from_name(backend);
    }
    if (sub->count("--steps") > 0) {
        options.steps = steps;
    }
    if (sub->count("--seed") > 0) {
        options.seed = seed;
    }
    if (sub->count("--oracle-limit") > 0) {
        options.oracle_limit = oracle_limit;
    }

    std::ifstream in(model_path);
    if (!in) {
        std::cerr << "cannot read model file " << model_path << "\n";
        return spinmap::kExitParse;
    }
    std::stringstream text;
    text << in.rdbuf();

    const spinmap::CommandResult result = spinmap::run_command(sub->get_name(), text.str(), options);
    std::cerr << result.report;
    if (!result.output.empty()) {
        if (out_path.empty()) {
            std::cout << result.output;
        } else {
            std::ofstream out(out_path, std::ios::binary);
            out << result.output;
            if (!out) {
                std::cerr << "cannot write " << out_path << "\n";
                return spinmap::kExitSemantics;
            }
        }
    }
    return result.exit_code;
}
