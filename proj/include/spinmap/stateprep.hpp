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

// State-preparation circuits. Every circuit here acts on the all-down
// reference state |down ... down>, which is the fermion vacuum.

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <vector>

#include "circuit.hpp"
#include "errors.hpp"
#include "mappings.hpp"
#include "pauli.hpp"
#include "simulator.hpp"
#include "synthesis.hpp"

namespace spinmap {

struct SlaterSpec {
    std::size_t num_modes = 0;
    std::vector<std::size_t> occupied;

    void validate() const {
        for (std::size_t k = 0; k < occupied.size(); ++k) {
            if (occupied[k] >= num_modes) {
                throw InvalidArgument("occupied mode " + std::to_string(occupied[k]) + " out of range");
            }
            for (std::size_t l = 0; l < k; ++l) {
                if (occupied[l] == occupied[k]) {
                    throw InvalidArgument("occupied modes must be distinct");
                }
            }
        }
    }

    friend bool operator==(const SlaterSpec &, const SlaterSpec &) = default;
};

/// c_m + c+_m = X_m prod_{j<m} (-Z_j), as a Pauli string with phase (-1)^m.
inline PauliString majorana_string(std::size_t num_modes, std::size_t m) {
    PauliString p(num_modes, m % 2 == 0 ? 1.0 : -1.0);
    for (std::size_t j = 0; j < m; ++j) {
        p.set(j, PauliLetter::Z);
    }
    p.set(m, PauliLetter::X);
    return p;
}

/// Circuit taking the vacuum to i^{N_e} c+_{o_1} ... c+_{o_k} |vac>.
/// Each factor e^{i pi/2 (c_m + c+_m)} acts as i c+_m on a state with m empty.
inline Circuit prepare_slater(const SlaterSpec &spec) {
    spec.validate();
    Circuit out(spec.num_modes);
    for (auto it = spec.occupied.rbegin(); it != spec.occupied.rend(); ++it) {
        out.append(synthesize_pauli_exponential(majorana_string(spec.num_modes, *it),
                                                std::numbers::pi / 2.0));
    }
    return out;
}

struct ThoulessSpec {
    SlaterSpec base;
    Matrix M; // Hermitian, num_modes x num_modes

    friend bool operator==(const ThoulessSpec &a, const ThoulessSpec &b) {
        return a.base == b.base && a.M.rows() == b.M.rows() && a.M.cols() == b.M.cols() &&
               (a.M.size() == 0 || a.M == b.M);
    }
};

/// Jordan-Wigner image of c+ M c = sum_ij M_ij c+_i c_j.
inline PauliSum quadratic_form(const Matrix &M) {
    if (M.rows() != M.cols() || M.rows() == 0) {
        throw DimensionError("quadratic form matrix must be square and non-empty");
    }
    if (!is_hermitian(M, 1e-12)) {
        throw NotHermitianError("quadratic form matrix is not Hermitian");
    }
    const auto n = static_cast<std::size_t>(M.rows());
    SecondQuantizedOperator op(Statistics::fermion(), n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const cplx m = M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            if (m != cplx{0.0}) {
                op.add_term(m, {LadderFactor::create(i), LadderFactor::annihilate(j)});
            }
        }
    }
    return jordan_wigner(op);
}

/// prepare_slater(base) followed by a Trotterized e^{-i c+ M c}.
inline Circuit thouless_rotate(const ThoulessSpec &spec, std::size_t steps = 64) {
    if (static_cast<std::size_t>(spec.M.rows()) != spec.base.num_modes) {
        throw DimensionError("Thouless matrix size differs from the number of modes");
    }
    const PauliSum h = quadratic_form(spec.M);
    Circuit out = prepare_slater(spec.base);
    if (!h.empty()) {
        out.append(trotterize(TrotterPlan(h * cplx{-1.0}, 1.0, steps)));
    }
    return out;
}

struct ConvergedRotation {
    Circuit circuit;
    std::size_t steps = 0;
    double last_gain = 0.0;
};

/// Doubles the step count from `initial_steps` until the fidelity with the
/// previous circuit's output changes by less than `tol`.
inline ConvergedRotation thouless_rotate_converged(const ThoulessSpec &spec,
                                                   std::size_t initial_steps = 64,
                                                   double tol = 1e-8,
                                                   std::size_t max_steps = 1 << 14) {
    const std::size_t n = spec.base.num_modes;
    std::size_t steps = initial_steps;
    Circuit c = thouless_rotate(spec, steps);
    StateVector prev = run(c, StateVector::all_down(n));
    double last_fid = 0.0;
    while (steps < max_steps) {
        const std::size_t next_steps = steps * 2;
        Circuit next = thouless_rotate(spec, next_steps);
        StateVector cur = run(next, StateVector::all_down(n));
        const double fid = fidelity(prev, cur);
        const double gain = std::abs(fid - last_fid);
        c = std::move(next);
        steps = next_steps;
        prev = std::move(cur);
        if (gain < tol || 1.0 - fid < tol) {
            return {std::move(c), steps, gain};
        }
        last_fid = fid;
    }
    return {std::move(c), steps, std::abs(1.0 - last_fid)};
}

struct LinearCombinationSpec {
    std::vector<cplx> amplitudes;
    std::vector<Circuit> branch_preps; // each on the system register
};

struct PostSelectedPrep {
    Circuit circuit;
    std::vector<std::size_t> ancilla_indices;
    std::map<std::size_t, int> accept_pattern;
    /// Exact for mutually orthogonal branch states; otherwise the simulator's
    /// post-selection gives the actual value.
    double predicted_success_probability = 0.0;
};

namespace detail {

/// e^{i phi (X_a Y_b - Y_a X_b)/2}: moves amplitude cos/sin from the one-hot
/// state with a up to the one with b up.
inline Circuit one_hot_rotation(std::size_t n, std::size_t a, std::size_t b, double phi) {
    Circuit c(n);
    c.append(synthesize_pauli_exponential(PauliString(n, {{a, PauliLetter::X}, {b, PauliLetter::Y}}), phi / 2.0));
    c.append(synthesize_pauli_exponential(PauliString(n, {{a, PauliLetter::Y}, {b, PauliLetter::X}}), -phi / 2.0));
    return c;
}

/// Takes the ancilla block (all down) to sum_alpha g_alpha |alpha up>.
inline Circuit amplitude_loader(std::size_t n, const std::vector<std::size_t> &anc,
                                const std::vector<cplx> &g) {
    Circuit c(n);
    c.append(RxGate{anc[0], std::numbers::pi});
    c.add_global_phase(std::numbers::pi / 2.0);
    std::vector<double> tail(g.size() + 1, 0.0);
    for (std::size_t k = g.size(); k-- > 0;) {
        tail[k] = std::hypot(tail[k + 1], std::abs(g[k]));
    }
    for (std::size_t k = 0; k + 1 < g.size(); ++k) {
        if (tail[k + 1] == 0.0) {
            break;
        }
        c.append(one_hot_rotation(n, anc[k], anc[k + 1], std::atan2(tail[k + 1], std::abs(g[k]))));
    }
    double phase_sum = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) {
        const double beta = std::abs(g[k]) > 0.0 ? std::arg(g[k]) : 0.0;
        if (beta != 0.0) {
            c.append(RzGate{anc[k], -beta});
            phase_sum += beta;
        }
    }
    c.add_global_phase(phase_sum / 2.0);
    return c;
}

} // namespace detail

/// One-hot ancilla scheme on qubits n .. n+L-1: load g onto the ancillas,
/// run branch alpha controlled on ancilla alpha being up, then undo a
/// uniform load. Accepting all ancillas down leaves sum g_alpha |phi_alpha>.
inline PostSelectedPrep prepare_linear_combination(const LinearCombinationSpec &spec) {
    const std::size_t L = spec.amplitudes.size();
    if (L == 0 || spec.branch_preps.size() != L) {
        throw InvalidArgument("linear combination needs one prep circuit per amplitude, L >= 1");
    }
    double norm2 = 0.0;
    for (const auto &g : spec.amplitudes) {
        norm2 += std::norm(g);
    }
    if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
        throw InvalidArgument("linear combination amplitudes are not normalizable");
    }
    const std::size_t n = spec.branch_preps.front().num_qubits();
    for (const auto &b : spec.branch_preps) {
        if (b.num_qubits() != n) {
            throw DimensionError("branch prep circuits must share one system register");
        }
    }
    std::vector<cplx> g;
    for (const auto &a : spec.amplitudes) {
        g.push_back(a / std::sqrt(norm2));
    }
    const std::size_t total = n + L;
    PostSelectedPrep out;
    for (std::size_t k = 0; k < L; ++k) {
        out.ancilla_indices.push_back(n + k);
        out.accept_pattern[n + k] = 1;
    }
    Circuit c(total);
    c.append(detail::amplitude_loader(total, out.ancilla_indices, g));
    for (std::size_t k = 0; k < L; ++k) {
        c.append(controlled(spec.branch_preps[k].widened(total), n + k, 0));
    }
    const std::vector<cplx> uniform(L, cplx{1.0 / std::sqrt(static_cast<double>(L))});
    c.append(detail::amplitude_loader(total, out.ancilla_indices, uniform).inverse());
    out.circuit = std::move(c);
    out.predicted_success_probability = 1.0 / static_cast<double>(L);
    return out;
}

struct BosonProductSpec {
    BosonLayout layout;
    std::vector<std::size_t> occupations;
    std::optional<std::size_t> total_bosons;
};

/// Flips qubit (n_i, i) of every site up from the all-down state.
inline Circuit prepare_boson_product(const BosonProductSpec &spec) {
    if (spec.occupations.size() != spec.layout.num_sites) {
        throw InvalidArgument("occupation list length differs from the number of sites");
    }
    std::size_t sum = 0;
    Circuit c(spec.layout.num_qubits());
    for (std::size_t i = 0; i < spec.occupations.size(); ++i) {
        if (spec.occupations[i] > spec.layout.n_max) {
            throw InvalidArgument("occupation " + std::to_string(spec.occupations[i]) + " at site " +
                                  std::to_string(i) + " exceeds n_max");
        }
        sum += spec.occupations[i];
        c.append(RxGate{spec.layout.qubit_index(i, spec.occupations[i]), std::numbers::pi});
        c.add_global_phase(std::numbers::pi / 2.0);
    }
    if (spec.total_bosons && *spec.total_bosons != sum) {
        throw InvalidArgument("occupations do not add up to the declared boson number");
    }
    return c;
}

} // namespace spinmap
