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
#pragma once

// Command implementations behind the spinmap executable. Each command maps a
// model text to an exit code, a primary output (CSV or circuit text) and a
// human-readable report.

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>

#include "circuit.hpp"
#include "errors.hpp"
#include "mappings.hpp"
#include "measurement.hpp"
#include "model.hpp"
#include "simulator.hpp"
#include "stateprep.hpp"
#include "synthesis.hpp"

namespace spinmap {

enum ExitCode : int {
    kExitSuccess = 0,
    kExitParse = 2,
    kExitSemantics = 3,
    kExitValidation = 4,
    kExitResource = 5,
};

struct CommandOptions {
    std::optional<Backend> backend;
    std::optional<std::size_t> steps;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> oracle_limit;
};

struct CommandResult {
    int exit_code = kExitSuccess;
    std::string output;
    std::string report;
};

namespace detail {

inline std::string csv_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string commented(const std::string &text) {
    std::istringstream in(text);
    std::string out, line;
    while (std::getline(in, line)) {
        out += "# " + line + "\n";
    }
    return out;
}

inline std::size_t resolved_oracle_limit(const Model &m, const CommandOptions &o) {
    if (o.oracle_limit) {
        return *o.oracle_limit;
    }
    if (m.run.oracle_limit) {
        return *m.run.oracle_limit;
    }
    return default_oracle_limit();
}

inline PauliSum hermitian_hamiltonian(const Model &m) {
    const PauliSum h = model_hamiltonian(m);
    if (!h.is_hermitian()) {
        throw NotHermitianError("the mapped Hamiltonian is not Hermitian");
    }
    return h;
}

} // namespace detail

/// Trotterized e^{iHt} for run.time with run.trotter_steps (or --steps)
/// steps, followed by the gate census as comment lines.
inline std::string cmd_compile(const Model &m, const CommandOptions &o) {
    const PauliSum h = detail::hermitian_hamiltonian(m);
    const std::size_t steps = o.steps.value_or(m.run.trotter_steps);
    Circuit c(m.num_qubits());
    if (!h.empty()) {
        c = trotterize(TrotterPlan(h, m.run.time, steps));
    }
    return to_text(c) + detail::commented("census\n" + gate_census(c).to_string());
}

/// Prepared system state as CSV; the report carries the circuit census and,
/// for linear combinations, the post-selection probability.
inline CommandResult cmd_prep(const Model &m, const CommandOptions &) {
    CommandResult r;
    const std::size_t n = m.num_qubits();
    if (m.initial_state && m.initial_state->kind == InitialState::Kind::LinearCombination) {
        const PostSelectedPrep prep = linear_combination_prep(m);
        const StateVector full = run(prep.circuit, StateVector::all_down(prep.circuit.num_qubits()));
        const PostSelection sel = post_select(full, prep.accept_pattern);
        std::ostringstream rep;
        rep << "circuit qubits " << prep.circuit.num_qubits() << " (ancillas " << prep.ancilla_indices.size()
            << ")\n"
            << gate_census(prep.circuit).to_string() << "success_probability "
            << detail::csv_number(sel.probability) << "\npredicted_success_probability "
            << detail::csv_number(prep.predicted_success_probability) << "\n";
        r.report = rep.str();
        if (sel.empty_branch()) {
            r.report += "post-selection branch is empty\n";
            r.exit_code = kExitSemantics;
            return r;
        }
        r.output = state_to_csv(reduce_register(*sel.state, prep.accept_pattern));
        return r;
    }
    const Circuit c = deterministic_prep(m);
    r.output = state_to_csv(run(c, StateVector::all_down(n)));
    r.report = "circuit qubits " + std::to_string(n) + "\n" + gate_census(c).to_string();
    return r;
}

/// G(t) = sum_ab conj(alpha_a) beta_b G_ab(t) for A = sum alpha_a P_a and
/// B = sum beta_b Q_b; CSV columns t,re,im.
inline std::string cmd_correlate(const Model &m, const CommandOptions &o) {
    if (m.correlation_A.empty() || m.correlation_B.empty()) {
        throw InvalidArgument("correlate needs correlation.A and correlation.B");
    }
    if (m.run.times.empty()) {
        throw InvalidArgument("correlate needs run.times");
    }
    const std::size_t n = m.num_qubits();
    CorrelationSpec spec;
    spec.H = detail::hermitian_hamiltonian(m);
    spec.prep = deterministic_prep(m);
    spec.times = m.run.times;
    spec.trotter_steps = o.steps.value_or(m.run.steps_per_unit_time);
    spec.backend = o.backend.value_or(m.run.backend);
    spec.oracle_limit = detail::resolved_oracle_limit(m, o);
    spec.shots = m.run.shots;
    spec.seed = o.seed.value_or(m.run.seed);

    std::vector<cplx> total(spec.times.size(), 0.0);
    for (const auto &a : m.correlation_A) {
        for (const auto &b : m.correlation_B) {
            spec.A = PauliString::parse(a.pauli, n);
            spec.B = PauliString::parse(b.pauli, n);
            const auto points = measure_correlation(spec);
            for (std::size_t k = 0; k < points.size(); ++k) {
                total[k] += std::conj(a.coeff) * b.coeff * points[k].value;
            }
            spec.seed += 2 * spec.times.size();
        }
    }
    std::string out = "t,re,im\n";
    for (std::size_t k = 0; k < total.size(); ++k) {
        out += detail::csv_number(spec.times[k]) + "," + detail::csv_number(total[k].real()) + "," +
               detail::csv_number(total[k].imag()) + "\n";
    }
    return out;
}

/// Peaks of the spectrum of the observable (default: the Hamiltonian);
/// CSV columns lambda,weight.
inline std::string cmd_spectrum(const Model &m, const CommandOptions &o) {
    SpectrumSpec spec;
    spec.Q = m.observable.empty() ? detail::hermitian_hamiltonian(m) : pauli_terms_sum(m.observable, m.num_qubits());
    spec.prep = deterministic_prep(m);
    spec.dt = m.run.dt;
    spec.num_samples = m.run.num_samples;
    spec.backend = o.backend.value_or(m.run.backend);
    spec.trotter_steps = o.steps.value_or(m.run.steps_per_sample);
    spec.oracle_limit = detail::resolved_oracle_limit(m, o);
    const auto peaks = spectral_peaks(spectrum_time_series(spec), spec.dt);
    std::string out = "lambda,weight\n";
    for (const auto &p : peaks) {
        out += detail::csv_number(p.lambda) + "," + detail::csv_number(p.weight) + "\n";
    }
    return out;
}

/// Runs the algebra suite for the model's statistics. Exit 4 on failure.
inline CommandResult cmd_validate(const Model &m, const CommandOptions &o) {
    const std::size_t limit = detail::resolved_oracle_limit(m, o);
    std::vector<ValidationReport> reports;
    switch (m.statistics.kind) {
    case Statistics::Kind::Fermion:
        reports.push_back(validate_fermion_algebra(m.num_modes, limit));
        break;
    case Statistics::Kind::Anyon: {
        reports.push_back(validate_anyon_algebra(m.num_modes, m.statistics.theta, limit));
        // theta = pi must reproduce the Jordan-Wigner images exactly
        ValidationReport limit_report{"anyon fermion limit", {}};
        SecondQuantizedOperator as_anyon(Statistics::anyon(std::numbers::pi), m.num_modes);
        SecondQuantizedOperator as_fermion(Statistics::fermion(), m.num_modes);
        for (std::size_t j = 0; j < m.num_modes; ++j) {
            for (const auto &f : {LadderFactor::create(j), LadderFactor::annihilate(j)}) {
                as_anyon.add_term(1.0, {f});
                as_fermion.add_term(1.0, {f});
            }
        }
        for (const auto &t : m.hamiltonian) {
            if (!t.pauli) {
                as_anyon.add_term(t.coeff, t.factors);
                as_fermion.add_term(t.coeff, t.factors);
            }
        }
        const bool same = anyon_map(as_anyon) == jordan_wigner(as_fermion);
        limit_report.record("anyon_map(theta=pi) == jordan_wigner", same ? 0.0 : 1.0, 0.0);
        reports.push_back(limit_report);
        break;
    }
    case Statistics::Kind::Boson:
        reports.push_back(validate_modified_commutators(m.statistics.n_max, limit));
        break;
    }
    if (!m.hamiltonian.empty()) {
        const PauliSum h = model_hamiltonian(m);
        ValidationReport herm{"hamiltonian", {}};
        herm.record("H = H^dag", (h - h.adjoint()).chopped(0.0).norm_bound());
        reports.push_back(herm);
    }

    CommandResult r;
    std::ostringstream out;
    bool ok = true;
    for (const auto &rep : reports) {
        out << "# " << rep.suite << "\n";
        for (const auto &c : rep.checks) {
            out << (c.passed() ? "PASS " : "FAIL ") << c.relation << "  max_deviation="
                << detail::csv_number(c.max_deviation) << " tolerance=" << detail::csv_number(c.tolerance)
                << "\n";
            ok = ok && c.passed();
        }
    }
    r.output = out.str();
    if (!ok) {
        r.exit_code = kExitValidation;
        r.report = "algebra validation failed\n";
    }
    return r;
}

/// Parses the model and dispatches, mapping exceptions to exit codes.
inline CommandResult run_command(const std::string &command, const std::string &model_text,
                                 const CommandOptions &options = {}) {
    CommandResult r;
    try {
        const Model m = parse_model(model_text);
        if (command == "compile") {
            r.output = cmd_compile(m, options);
        } else if (command == "prep") {
            r = cmd_prep(m, options);
        } else if (command == "correlate") {
            r.output = cmd_correlate(m, options);
        } else if (command == "spectrum") {
            r.output = cmd_spectrum(m, options);
        } else if (command == "validate") {
            r = cmd_validate(m, options);
        } else {
            r.exit_code = kExitSemantics;
            r.report = "unknown command '" + command + "'\n";
        }
    } catch (const ParseError &e) {
        r = {kExitParse, "", std::string("parse error: ") + e.what() + "\n"};
    } catch (const OracleLimitError &e) {
        r = {kExitResource, "", std::string("resource limit: ") + e.what() + "\n"};
    } catch (const Error &e) {
        r = {kExitSemantics, "", std::string("invalid model: ") + e.what() + "\n"};
    } catch (const std::exception &e) {
        r = {kExitSemantics, "", std::string("invalid model: ") + e.what() + "\n"};
    }
    return r;
}

} // namespace spinmap
