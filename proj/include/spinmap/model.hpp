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

// JSON model files. See README.md for the schema.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "circuit.hpp"
#include "errors.hpp"
#include "mappings.hpp"
#include "measurement.hpp"
#include "pauli.hpp"
#include "stateprep.hpp"

namespace spinmap {

/// One Hamiltonian entry: either a ladder-operator product or a Pauli string
/// on the mapped register.
struct ModelTerm {
    cplx coeff{1.0};
    std::vector<LadderFactor> factors;
    std::optional<std::string> pauli;

    friend bool operator==(const ModelTerm &, const ModelTerm &) = default;
};

/// coeff * Pauli string, used for correlation operators and observables.
struct PauliTerm {
    cplx coeff{1.0};
    std::string pauli;

    friend bool operator==(const PauliTerm &, const PauliTerm &) = default;
};

struct LcuBranch {
    cplx amplitude{1.0};
    std::vector<std::size_t> occupied;

    friend bool operator==(const LcuBranch &, const LcuBranch &) = default;
};

struct InitialState {
    enum class Kind { Slater, Thouless, LinearCombination, BosonProduct, Circuit };
    Kind kind = Kind::Slater;
    std::vector<std::size_t> occupied;          // slater, thouless
    std::vector<std::vector<cplx>> M;           // thouless
    std::size_t steps = 64;                     // thouless
    std::vector<LcuBranch> branches;            // linear_combination
    std::vector<std::size_t> occupations;       // boson_product
    std::optional<std::size_t> total_bosons;    // boson_product
    std::string gates;                          // circuit, in the circuit text format

    friend bool operator==(const InitialState &, const InitialState &) = default;
};

struct RunParameters {
    double time = 1.0;                          // compile
    std::vector<double> times;                  // correlate
    double dt = 0.1;                            // spectrum
    std::size_t num_samples = 512;              // spectrum
    std::size_t trotter_steps = 1;              // compile: total steps
    std::size_t steps_per_unit_time = 64;       // correlate, Trotter backend
    std::size_t steps_per_sample = 1;           // spectrum, Trotter backend
    Backend backend = Backend::Exact;
    std::uint64_t seed = 0;
    std::optional<std::size_t> shots;           // correlate: sample the ancilla instead of exact readout
    std::optional<std::size_t> oracle_limit;

    friend bool operator==(const RunParameters &, const RunParameters &) = default;
};

struct Model {
    Statistics statistics;
    std::size_t num_modes = 1; // sites for bosons
    std::vector<ModelTerm> hamiltonian;
    std::optional<InitialState> initial_state;
    std::vector<PauliTerm> correlation_A;
    std::vector<PauliTerm> correlation_B;
    std::vector<PauliTerm> observable; // spectrum; empty means the Hamiltonian
    RunParameters run;

    std::size_t num_qubits() const { return mapped_qubits(statistics, num_modes); }

    friend bool operator==(const Model &, const Model &) = default;
};

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

using json = nlohmann::ordered_json;

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

[[noreturn]] inline void schema_error(const std::string &path, const std::string &what) {
    throw ParseError(path + ": " + what);
}

inline const json &field(const json &obj, const char *key, const std::string &path) {
    if (!obj.is_object()) {
        schema_error(path, "expected an object");
    }
    const auto it = obj.find(key);
    if (it == obj.end()) {
        schema_error(path, std::string("missing field '") + key + "'");
    }
    return *it;
}

inline double get_number(const json &v, const std::string &path) {
    if (!v.is_number()) {
        schema_error(path, "expected a number");
    }
    return v.get<double>();
}

inline std::size_t get_count(const json &v, const std::string &path) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        schema_error(path, "expected a non-negative integer");
    }
    return v.get<std::size_t>();
}

inline std::string get_string(const json &v, const std::string &path) {
    if (!v.is_string()) {
        schema_error(path, "expected a string");
    }
    return v.get<std::string>();
}

/// A number, or [re, im].
inline cplx get_complex(const json &v, const std::string &path) {
    if (v.is_number()) {
        return {v.get<double>(), 0.0};
    }
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return {v[0].get<double>(), v[1].get<double>()};
    }
    schema_error(path, "expected a number or [re, im]");
}

inline const json &get_array(const json &v, const std::string &path) {
    if (!v.is_array()) {
        schema_error(path, "expected an array");
    }
    return v;
}

inline std::vector<std::size_t> get_counts(const json &v, const std::string &path) {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (const auto &x : get_array(v, path)) {
        out.push_back(get_count(x, path + "/" + std::to_string(k++)));
    }
    return out;
}

inline LadderFactor parse_factor(const json &v, const std::string &path) {
    const std::string kind = get_string(field(v, "kind", path), path + "/kind");
    const std::size_t mode = get_count(field(v, "mode", path), path + "/mode");
    if (kind == "create") {
        return LadderFactor::create(mode);
    }
    if (kind == "annihilate") {
        return LadderFactor::annihilate(mode);
    }
    if (kind == "number") {
        return LadderFactor::number(mode);
    }
    schema_error(path + "/kind", "expected create, annihilate or number");
}

inline std::vector<PauliTerm> parse_pauli_terms(const json &v, const std::string &path) {
    std::vector<PauliTerm> out;
    std::size_t k = 0;
    for (const auto &t : get_array(v, path)) {
        const std::string p = path + "/" + std::to_string(k++);
        PauliTerm term;
        if (const auto it = t.find("coeff"); t.is_object() && it != t.end()) {
            term.coeff = get_complex(*it, p + "/coeff");
        }
        term.pauli = get_string(field(t, "pauli", p), p + "/pauli");
        out.push_back(std::move(term));
    }
    return out;
}

inline Statistics parse_statistics(const json &v, const std::string &path) {
    const std::string kind = get_string(field(v, "kind", path), path + "/kind");
    if (kind == "fermion") {
        return Statistics::fermion();
    }
    if (kind == "anyon") {
        return Statistics::anyon(get_number(field(v, "theta", path), path + "/theta"));
    }
    if (kind == "boson") {
        return Statistics::boson(get_count(field(v, "n_max", path), path + "/n_max"));
    }
    schema_error(path + "/kind", "expected fermion, anyon or boson");
}

inline InitialState parse_initial_state(const json &v, const std::string &path) {
    InitialState s;
    const std::string kind = get_string(field(v, "kind", path), path + "/kind");
    if (kind == "slater") {
        s.kind = InitialState::Kind::Slater;
        s.occupied = get_counts(field(v, "occupied", path), path + "/occupied");
    } else if (kind == "thouless") {
        s.kind = InitialState::Kind::Thouless;
        s.occupied = get_counts(field(v, "occupied", path), path + "/occupied");
        std::size_t r = 0;
        for (const auto &row : get_array(field(v, "M", path), path + "/M")) {
            std::vector<cplx> out_row;
            std::size_t c = 0;
            const std::string rp = path + "/M/" + std::to_string(r++);
            for (const auto &x : get_array(row, rp)) {
                out_row.push_back(get_complex(x, rp + "/" + std::to_string(c++)));
            }
            s.M.push_back(std::move(out_row));
        }
        if (const auto it = v.find("steps"); it != v.end()) {
            s.steps = get_count(*it, path + "/steps");
        }
    } else if (kind == "linear_combination") {
        s.kind = InitialState::Kind::LinearCombination;
        std::size_t k = 0;
        for (const auto &b : get_array(field(v, "branches", path), path + "/branches")) {
            const std::string bp = path + "/branches/" + std::to_string(k++);
            s.branches.push_back({get_complex(field(b, "amplitude", bp), bp + "/amplitude"),
                                  get_counts(field(b, "occupied", bp), bp + "/occupied")});
        }
    } else if (kind == "boson_product") {
        s.kind = InitialState::Kind::BosonProduct;
        s.occupations = get_counts(field(v, "occupations", path), path + "/occupations");
        if (const auto it = v.find("total"); it != v.end()) {
            s.total_bosons = get_count(*it, path + "/total");
        }
    } else if (kind == "circuit") {
        s.kind = InitialState::Kind::Circuit;
        s.gates = get_string(field(v, "gates", path), path + "/gates");
    } else {
        schema_error(path + "/kind", "expected slater, thouless, linear_combination, boson_product or circuit");
    }
    return s;
}

inline RunParameters parse_run(const json &v, const std::string &path) {
    RunParameters r;
    if (!v.is_object()) {
        schema_error(path, "expected an object");
    }
    for (const auto &[key, val] : v.items()) {
        const std::string p = path + "/" + key;
        if (key == "time") {
            r.time = get_number(val, p);
        } else if (key == "times") {
            std::size_t k = 0;
            for (const auto &t : get_array(val, p)) {
                r.times.push_back(get_number(t, p + "/" + std::to_string(k++)));
            }
        } else if (key == "dt") {
            r.dt = get_number(val, p);
        } else if (key == "num_samples") {
            r.num_samples = get_count(val, p);
        } else if (key == "trotter_steps") {
            r.trotter_steps = get_count(val, p);
        } else if (key == "steps_per_unit_time") {
            r.steps_per_unit_time = get_count(val, p);
        } else if (key == "steps_per_sample") {
            r.steps_per_sample = get_count(val, p);
        } else if (key == "backend") {
            const std::string b = get_string(val, p);
            if (b != "exact" && b != "trotter") {
                schema_error(p, "expected exact or trotter");
            }
            r.backend = backend_from_name(b);
        } else if (key == "seed") {
            r.seed = get_count(val, p);
        } else if (key == "shots") {
            r.shots = get_count(val, p);
        } else if (key == "oracle_limit") {
            r.oracle_limit = get_count(val, p);
        } else {
            schema_error(p, "unknown run parameter");
        }
    }
    return r;
}

} // namespace detail

/// Parses a model file. Malformed JSON and schema violations raise
/// ParseError; out-of-range values raise InvalidArgument.
inline Model parse_model(std::string_view text) {
    using detail::json;
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        const auto [line, column] = detail::line_column(text, e.byte);
        std::string what = e.what();
        if (const auto pos = what.find("parse error"); pos != std::string::npos) {
            what = what.substr(pos);
        }
        throw ParseError(what, line, column);
    }
    if (!root.is_object()) {
        detail::schema_error("", "the model must be a JSON object");
    }
    Model m;
    m.statistics = detail::parse_statistics(detail::field(root, "statistics", ""), "/statistics");
    const bool boson = m.statistics.kind == Statistics::Kind::Boson;
    const char *size_key = boson ? "num_sites" : "num_modes";
    m.num_modes = detail::get_count(detail::field(root, size_key, ""), std::string("/") + size_key);
    if (m.num_modes == 0) {
        throw InvalidArgument(std::string(size_key) + " must be positive");
    }
    if (const auto it = root.find("hamiltonian"); it != root.end()) {
        std::size_t k = 0;
        for (const auto &t : detail::get_array(*it, "/hamiltonian")) {
            const std::string p = "/hamiltonian/" + std::to_string(k++);
            ModelTerm term;
            if (const auto c = t.find("coeff"); t.is_object() && c != t.end()) {
                term.coeff = detail::get_complex(*c, p + "/coeff");
            }
            const bool has_pauli = t.is_object() && t.contains("pauli");
            const bool has_factors = t.is_object() && t.contains("factors");
            if (has_pauli == has_factors) {
                detail::schema_error(p, "a term needs exactly one of 'factors' or 'pauli'");
            }
            if (has_pauli) {
                term.pauli = detail::get_string(t.at("pauli"), p + "/pauli");
            } else {
                std::size_t f = 0;
                for (const auto &x : detail::get_array(t.at("factors"), p + "/factors")) {
                    term.factors.push_back(detail::parse_factor(x, p + "/factors/" + std::to_string(f++)));
                }
            }
            m.hamiltonian.push_back(std::move(term));
        }
    }
    if (const auto it = root.find("initial_state"); it != root.end()) {
        m.initial_state = detail::parse_initial_state(*it, "/initial_state");
    }
    if (const auto it = root.find("correlation"); it != root.end()) {
        m.correlation_A = detail::parse_pauli_terms(detail::field(*it, "A", "/correlation"), "/correlation/A");
        m.correlation_B = detail::parse_pauli_terms(detail::field(*it, "B", "/correlation"), "/correlation/B");
    }
    if (const auto it = root.find("observable"); it != root.end()) {
        m.observable = detail::parse_pauli_terms(*it, "/observable");
    }
    if (const auto it = root.find("run"); it != root.end()) {
        m.run = detail::parse_run(*it, "/run");
    }
    for (const auto &[key, val] : root.items()) {
        static const char *known[] = {"statistics", "num_modes", "num_sites", "hamiltonian",
                                      "initial_state", "correlation", "observable", "run"};
        if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
            detail::schema_error("/" + key, "unknown field");
        }
        (void)val;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Rendering

namespace detail {

inline json complex_json(cplx c) {
    if (c.imag() == 0.0) {
        return c.real();
    }
    return json::array({c.real(), c.imag()});
}

inline json pauli_terms_json(const std::vector<PauliTerm> &terms) {
    json out = json::array();
    for (const auto &t : terms) {
        out.push_back({{"coeff", complex_json(t.coeff)}, {"pauli", t.pauli}});
    }
    return out;
}

inline const char *factor_kind_name(LadderKind k) {
    switch (k) {
    case LadderKind::Create:
        return "create";
    case LadderKind::Annihilate:
        return "annihilate";
    case LadderKind::Number:
        return "number";
    }
    return "?";
}

} // namespace detail

inline std::string render_model(const Model &m) {
    using detail::json;
    json root;
    json stats;
    switch (m.statistics.kind) {
    case Statistics::Kind::Fermion:
        stats["kind"] = "fermion";
        break;
    case Statistics::Kind::Anyon:
        stats["kind"] = "anyon";
        stats["theta"] = m.statistics.theta;
        break;
    case Statistics::Kind::Boson:
        stats["kind"] = "boson";
        stats["n_max"] = m.statistics.n_max;
        break;
    }
    root["statistics"] = stats;
    root[m.statistics.kind == Statistics::Kind::Boson ? "num_sites" : "num_modes"] = m.num_modes;
    json ham = json::array();
    for (const auto &t : m.hamiltonian) {
        json term;
        term["coeff"] = detail::complex_json(t.coeff);
        if (t.pauli) {
            term["pauli"] = *t.pauli;
        } else {
            json fs = json::array();
            for (const auto &f : t.factors) {
                fs.push_back({{"kind", detail::factor_kind_name(f.kind)}, {"mode", f.mode}});
            }
            term["factors"] = fs;
        }
        ham.push_back(term);
    }
    root["hamiltonian"] = ham;
    if (m.initial_state) {
        const InitialState &s = *m.initial_state;
        json js;
        switch (s.kind) {
        case InitialState::Kind::Slater:
            js["kind"] = "slater";
            js["occupied"] = s.occupied;
            break;
        case InitialState::Kind::Thouless: {
            js["kind"] = "thouless";
            js["occupied"] = s.occupied;
            json M = json::array();
            for (const auto &row : s.M) {
                json r = json::array();
                for (const auto &x : row) {
                    r.push_back(detail::complex_json(x));
                }
                M.push_back(r);
            }
            js["M"] = M;
            js["steps"] = s.steps;
            break;
        }
        case InitialState::Kind::LinearCombination: {
            js["kind"] = "linear_combination";
            json bs = json::array();
            for (const auto &b : s.branches) {
                bs.push_back({{"amplitude", detail::complex_json(b.amplitude)}, {"occupied", b.occupied}});
            }
            js["branches"] = bs;
            break;
        }
        case InitialState::Kind::BosonProduct:
            js["kind"] = "boson_product";
            js["occupations"] = s.occupations;
            if (s.total_bosons) {
                js["total"] = *s.total_bosons;
            }
            break;
        case InitialState::Kind::Circuit:
            js["kind"] = "circuit";
            js["gates"] = s.gates;
            break;
        }
        root["initial_state"] = js;
    }
    if (!m.correlation_A.empty() || !m.correlation_B.empty()) {
        root["correlation"] = {{"A", detail::pauli_terms_json(m.correlation_A)},
                               {"B", detail::pauli_terms_json(m.correlation_B)}};
    }
    if (!m.observable.empty()) {
        root["observable"] = detail::pauli_terms_json(m.observable);
    }
    const RunParameters &r = m.run;
    json run;
    run["time"] = r.time;
    run["times"] = r.times;
    run["dt"] = r.dt;
    run["num_samples"] = r.num_samples;
    run["trotter_steps"] = r.trotter_steps;
    run["steps_per_unit_time"] = r.steps_per_unit_time;
    run["steps_per_sample"] = r.steps_per_sample;
    run["backend"] = backend_name(r.backend);
    run["seed"] = r.seed;
    if (r.shots) {
        run["shots"] = *r.shots;
    }
    if (r.oracle_limit) {
        run["oracle_limit"] = *r.oracle_limit;
    }
    root["run"] = run;
    return root.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Interpretation

/// Second-quantized part of the Hamiltonian.
inline SecondQuantizedOperator ladder_hamiltonian(const Model &m) {
    SecondQuantizedOperator op(m.statistics, m.num_modes);
    for (const auto &t : m.hamiltonian) {
        if (!t.pauli) {
            op.add_term(t.coeff, t.factors);
        }
    }
    return op;
}

/// The full Hamiltonian on the mapped register, Hermiticity not checked.
inline PauliSum model_hamiltonian(const Model &m) {
    const std::size_t n = m.num_qubits();
    PauliSum h = map_to_spins(ladder_hamiltonian(m));
    for (const auto &t : m.hamiltonian) {
        if (t.pauli) {
            h.add(PauliString::parse(*t.pauli, n), t.coeff);
        }
    }
    return h.chopped();
}

inline PauliSum pauli_terms_sum(const std::vector<PauliTerm> &terms, std::size_t n) {
    PauliSum out(n);
    for (const auto &t : terms) {
        out.add(PauliString::parse(t.pauli, n), t.coeff);
    }
    return out.chopped();
}

inline Matrix thouless_matrix(const InitialState &s, std::size_t n) {
    if (s.M.size() != n) {
        throw InvalidArgument("Thouless matrix must be " + std::to_string(n) + " x " + std::to_string(n));
    }
    Matrix M(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (s.M[i].size() != n) {
            throw InvalidArgument("Thouless matrix must be " + std::to_string(n) + " x " + std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
            M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = s.M[i][j];
        }
    }
    return M;
}

/// Deterministic prep circuit for the model's initial state. Linear
/// combinations are post-selected and so have no deterministic circuit.
inline Circuit deterministic_prep(const Model &m) {
    const std::size_t n = m.num_qubits();
    if (!m.initial_state) {
        return Circuit(n);
    }
    const InitialState &s = *m.initial_state;
    const bool fermionic = m.statistics.kind != Statistics::Kind::Boson;
    switch (s.kind) {
    case InitialState::Kind::Slater:
        if (!fermionic) {
            throw InvalidArgument("slater states need fermion or anyon statistics");
        }
        return prepare_slater({n, s.occupied});
    case InitialState::Kind::Thouless:
        if (!fermionic) {
            throw InvalidArgument("thouless states need fermion or anyon statistics");
        }
        return thouless_rotate({{n, s.occupied}, thouless_matrix(s, n)}, s.steps);
    case InitialState::Kind::BosonProduct:
        if (fermionic) {
            throw InvalidArgument("boson_product states need boson statistics");
        }
        return prepare_boson_product({BosonLayout{m.num_modes, m.statistics.n_max}, s.occupations, s.total_bosons});
    case InitialState::Kind::Circuit: {
        try {
            return parse_circuit(s.gates, n);
        } catch (const InvalidArgument &e) {
            throw ParseError(std::string("/initial_state/gates: ") + e.what());
        }
    }
    case InitialState::Kind::LinearCombination:
        throw InvalidArgument("linear_combination states are post-selected; only the prep command supports them");
    }
    throw InvalidArgument("unknown initial state");
}

inline PostSelectedPrep linear_combination_prep(const Model &m) {
    if (!m.initial_state || m.initial_state->kind != InitialState::Kind::LinearCombination) {
        throw InvalidArgument("the model has no linear_combination initial state");
    }
    if (m.statistics.kind == Statistics::Kind::Boson) {
        throw InvalidArgument("linear_combination states need fermion or anyon statistics");
    }
    LinearCombinationSpec spec;
    for (const auto &b : m.initial_state->branches) {
        spec.amplitudes.push_back(b.amplitude);
        spec.branch_preps.push_back(prepare_slater({m.num_qubits(), b.occupied}));
    }
    return prepare_linear_combination(spec);
}

} // namespace spinmap
