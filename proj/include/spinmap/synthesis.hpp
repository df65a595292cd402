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

// Compilation of Pauli-string exponentials into single-qubit rotations and
// ZZ Ising gates.
//
// e^{i theta P} is written as C^dag e^{i theta Q} C, where C is a sequence of
// quarter-turn Clifford gates e^{+-i pi/4 R} that rotates P into a core Q of
// weight one (an Rz) or two (a ZZ). Each quarter turn either commutes with the
// current string or maps it to -+i P R. The reduction proceeds in three
// stages:
//   1. basis changes take every non-pivot X/Y letter to Z;
//   2. ZZ quarter turns between the pivot (an X/Y letter) and each extra Z
//      letter strip that letter from the string;
//   3. a final rotation takes the pivot letter to Z, leaving Z_p Z_r.
// The construction is exact: no global phase is dropped.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "circuit.hpp"
#include "errors.hpp"
#include "pauli.hpp"

namespace spinmap {

namespace detail {

inline constexpr double kQuarter = std::numbers::pi / 4.0;

/// Real +-1 sign of a Pauli-string phase, or throws.
inline double real_sign(const PauliString &p, const char *who) {
    const cplx ph = p.phase();
    if (ph == cplx{1.0}) {
        return 1.0;
    }
    if (ph == cplx{-1.0}) {
        return -1.0;
    }
    if (std::abs(ph.imag()) < 1e-14 && std::abs(std::abs(ph.real()) - 1.0) < 1e-14) {
        return ph.real() > 0 ? 1.0 : -1.0;
    }
    throw InvalidArgument(std::string(who) + ": the string phase must be +1 or -1");
}

/// Quarter-turn Clifford e^{i phi R} with phi = +-pi/4.
struct QuarterTurn {
    PauliString generator;
    double phi;
};

inline Gate quarter_turn_gate(const QuarterTurn &g) {
    const auto supp = g.generator.support();
    if (supp.size() == 2) {
        return ZZGate{supp[0], supp[1], g.phi};
    }
    const std::size_t q = supp.front();
    switch (g.generator.letter(q)) {
    case PauliLetter::X:
        return RxGate{q, -2.0 * g.phi};
    case PauliLetter::Y:
        return RyGate{q, -2.0 * g.phi};
    default:
        return RzGate{q, -2.0 * g.phi};
    }
}

/// e^{i phi R} P e^{-i phi R} for phi = +-pi/4.
inline PauliString conjugate(const PauliString &p, const QuarterTurn &g) {
    if (commutes(p, g.generator)) {
        return p;
    }
    const cplx k = g.phi > 0 ? cplx{0.0, -1.0} : cplx{0.0, 1.0};
    PauliString out = multiply(p, g.generator);
    out.set_phase(out.phase() * k);
    return out;
}

inline PauliString single(std::size_t n, std::size_t q, PauliLetter l) {
    return PauliString(n, {{q, l}});
}

inline PauliString pair_zz(std::size_t n, std::size_t a, std::size_t b) {
    return PauliString(n, {{a, PauliLetter::Z}, {b, PauliLetter::Z}});
}

/// Quarter turn that takes letter X or Y on qubit q to +Z.
inline QuarterTurn to_z(std::size_t n, std::size_t q, PauliLetter l) {
    // e^{i pi/4 Y} X e^{-i pi/4 Y} = Z ; e^{-i pi/4 X} Y e^{i pi/4 X} = Z
    return l == PauliLetter::X ? QuarterTurn{single(n, q, PauliLetter::Y), kQuarter}
                               : QuarterTurn{single(n, q, PauliLetter::X), -kQuarter};
}

} // namespace detail

/// Circuit for e^{i angle P}. P must carry a real +-1 phase.
inline Circuit synthesize_pauli_exponential(const PauliString &string, double angle) {
    using detail::QuarterTurn;
    const std::size_t n = string.num_qubits();
    const double sign = detail::real_sign(string, "synthesize_pauli_exponential");
    Circuit out(n);
    const auto supp = string.support();

    if (supp.empty()) {
        out.add_global_phase(sign * angle);
        return out;
    }
    if (supp.size() == 1) {
        const std::size_t q = supp.front();
        const double a = -2.0 * sign * angle;
        switch (string.letter(q)) {
        case PauliLetter::X:
            out.append(RxGate{q, a});
            break;
        case PauliLetter::Y:
            out.append(RyGate{q, a});
            break;
        default:
            out.append(RzGate{q, a});
            break;
        }
        return out;
    }

    const auto is_xy = [&](std::size_t q) {
        return string.letter(q) == PauliLetter::X || string.letter(q) == PauliLetter::Y;
    };
    const auto pivot_it = std::find_if(supp.begin(), supp.end(), is_xy);
    const std::size_t pivot = pivot_it != supp.end() ? *pivot_it : supp.front();
    const std::size_t partner = supp.front() == pivot ? supp[1] : supp.front();

    std::vector<QuarterTurn> turns;
    PauliString current = string;
    auto push = [&](QuarterTurn t) {
        current = detail::conjugate(current, t);
        turns.push_back(std::move(t));
    };

    for (std::size_t q : supp) {
        if (q != pivot && is_xy(q)) {
            push(detail::to_z(n, q, string.letter(q)));
        }
    }
    if (supp.size() > 2) {
        if (current.letter(pivot) == PauliLetter::Z) {
            // e^{-i pi/4 Y} Z e^{i pi/4 Y} = X
            push({detail::single(n, pivot, PauliLetter::Y), -detail::kQuarter});
        }
        for (std::size_t q : supp) {
            if (q != pivot && q != partner) {
                push({detail::pair_zz(n, pivot, q), -detail::kQuarter});
            }
        }
    }
    if (current.letter(pivot) != PauliLetter::Z) {
        push(detail::to_z(n, pivot, current.letter(pivot)));
    }

    const double core_sign = detail::real_sign(current, "synthesize_pauli_exponential");
    for (const auto &t : turns) {
        out.append(detail::quarter_turn_gate(t));
    }
    out.append(ZZGate{std::min(pivot, partner), std::max(pivot, partner), core_sign * angle});
    for (auto it = turns.rbegin(); it != turns.rend(); ++it) {
        out.append(detail::quarter_turn_gate({it->generator, -it->phi}));
    }
    return out;
}

/// First-order product-formula plan for e^{i H t}.
struct TrotterPlan {
    PauliSum hamiltonian;
    double total_time = 0.0;
    std::size_t steps = 1;
    std::vector<PauliString> term_order;
    int order = 1; // only first order is implemented

    TrotterPlan(PauliSum h, double t, std::size_t num_steps)
        : hamiltonian(std::move(h)), total_time(t), steps(num_steps) {
        for (const auto &kv : hamiltonian.terms()) {
            term_order.push_back(kv.first);
        }
    }

    TrotterPlan(PauliSum h, double t, std::size_t num_steps, std::vector<PauliString> order_)
        : hamiltonian(std::move(h)), total_time(t), steps(num_steps), term_order(std::move(order_)) {}

    double time_step() const { return total_time / static_cast<double>(steps); }
};

/// Circuit for one step of the plan, repeated `steps` times by trotterize.
inline Circuit trotter_step(const TrotterPlan &plan) {
    const PauliSum &h = plan.hamiltonian;
    if (!h.is_hermitian()) {
        throw NotHermitianError("trotterize: the Hamiltonian is not Hermitian");
    }
    if (plan.steps == 0) {
        throw InvalidArgument("trotterize: steps must be >= 1");
    }
    if (plan.order != 1) {
        throw InvalidArgument("trotterize: only first-order product formulas are supported");
    }
    if (plan.term_order.size() != h.size()) {
        throw InvalidArgument("trotterize: term order is not a permutation of the Hamiltonian terms");
    }
    std::vector<PauliString> seen;
    for (const auto &p : plan.term_order) {
        const PauliString key = p.canonical();
        if (h.terms().count(key) == 0 || std::find(seen.begin(), seen.end(), key) != seen.end()) {
            throw InvalidArgument("trotterize: term order is not a permutation of the Hamiltonian terms");
        }
        seen.push_back(key);
    }
    const double dt = plan.time_step();
    Circuit step(h.num_qubits());
    for (const auto &p : plan.term_order) {
        const double coeff = h.terms().at(p.canonical()).real();
        step.append(synthesize_pauli_exponential(p.canonical(), coeff * dt));
    }
    return step;
}

inline Circuit trotterize(const TrotterPlan &plan) {
    const Circuit step = trotter_step(plan);
    Circuit out(plan.hamiltonian.num_qubits());
    for (std::size_t s = 0; s < plan.steps; ++s) {
        out.append(step);
    }
    return out;
}

/// diag-phase e^{i phase} on the control = value branch as Rz plus a global
/// phase: diag(1, e^{i a}) = e^{i a/2} Rz(a).
inline Circuit lower_phase_on_control(const PhaseOnControlGate &g, std::size_t num_qubits) {
    Circuit out(num_qubits);
    if (g.phase == 0.0) {
        return out;
    }
    out.append(RzGate{g.control, g.control_value == 1 ? g.phase : -g.phase});
    out.add_global_phase(g.phase / 2.0);
    return out;
}

/// Elementary circuit for a controlled Pauli exponential:
/// C_v[e^{i t P}] = e^{i (t/2) P} e^{-+i (t/2) Z_c P}, minus sign for v = 1.
inline Circuit expand_controlled(const CPauliExpGate &g) {
    const std::size_t n = g.string.num_qubits();
    if (g.control >= n) {
        throw InvalidArgument("expand_controlled: control qubit out of range");
    }
    if (g.string.letter(g.control) != PauliLetter::I) {
        throw OverlapError("expand_controlled: control qubit lies in the Pauli string support");
    }
    if (g.control_value != 0 && g.control_value != 1) {
        throw InvalidArgument("expand_controlled: control value must be 0 or 1");
    }
    const double theta = detail::real_sign(g.string, "expand_controlled") * g.angle;
    Circuit out(n);
    if (theta == 0.0) {
        return out;
    }
    const PauliString p = g.string.canonical();
    if (p.is_identity()) {
        return lower_phase_on_control({g.control, g.control_value, theta}, n);
    }
    PauliString zp = p;
    zp.set(g.control, PauliLetter::Z);
    out.append(synthesize_pauli_exponential(p, theta / 2.0));
    out.append(synthesize_pauli_exponential(zp, (g.control_value == 1 ? -1.0 : 1.0) * theta / 2.0));
    return out;
}

/// Lowers every controlled gate to the elementary set.
inline Circuit to_elementary(const Circuit &c) {
    Circuit out(c.num_qubits());
    out.add_global_phase(c.global_phase());
    for (const auto &g : c.gates()) {
        if (const auto *cp = std::get_if<CPauliExpGate>(&g)) {
            out.append(expand_controlled(*cp));
        } else if (const auto *ph = std::get_if<PhaseOnControlGate>(&g)) {
            out.append(lower_phase_on_control(*ph, c.num_qubits()));
        } else {
            out.append(g);
        }
    }
    return out;
}

/// The circuit applied only on the control = value branch. Gates of `c` must
/// not touch the control qubit.
inline Circuit controlled(const Circuit &c, std::size_t control, int value) {
    const Circuit elem = to_elementary(c);
    const std::size_t n = c.num_qubits();
    Circuit out(n);
    auto add = [&](PauliString p, double angle) {
        out.append(expand_controlled(CPauliExpGate{control, value, std::move(p), angle}));
    };
    for (const auto &g : elem.gates()) {
        if (const auto *x = std::get_if<RxGate>(&g)) {
            add(detail::single(n, x->qubit, PauliLetter::X), -x->angle / 2.0);
        } else if (const auto *y = std::get_if<RyGate>(&g)) {
            add(detail::single(n, y->qubit, PauliLetter::Y), -y->angle / 2.0);
        } else if (const auto *z = std::get_if<RzGate>(&g)) {
            add(detail::single(n, z->qubit, PauliLetter::Z), -z->angle / 2.0);
        } else if (const auto *zz = std::get_if<ZZGate>(&g)) {
            add(detail::pair_zz(n, zz->qubit_a, zz->qubit_b), zz->angle);
        }
    }
    if (elem.global_phase() != 0.0) {
        out.append(lower_phase_on_control({control, value, elem.global_phase()}, n));
    }
    return out;
}

/// Elementary circuit applying the unitary Pauli string P (any unit phase)
/// on the control = value branch. Uses P = -i e^{i pi/2 P}.
inline Circuit controlled_pauli(const PauliString &p, std::size_t control, int value) {
    const std::size_t n = p.num_qubits();
    Circuit out(n);
    double phase = std::arg(p.phase());
    if (!p.is_identity()) {
        out.append(expand_controlled(CPauliExpGate{control, value, p.canonical(), std::numbers::pi / 2.0}));
        phase -= std::numbers::pi / 2.0;
    }
    out.append(lower_phase_on_control({control, value, phase}, n));
    return out;
}

} // namespace spinmap
