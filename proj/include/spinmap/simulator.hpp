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

// Statevector execution. Basis index b holds qubit q in bit (n-1-q); bit 0
// is |0> = up.

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <variant>

#include "circuit.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "pauli.hpp"

namespace spinmap {

inline constexpr std::size_t kMaxStateQubits = 30;

class StateVector {
  public:
    StateVector() = default;

    /// Computational basis state |index>.
    static StateVector basis(std::size_t num_qubits, std::uint64_t index = 0) {
        StateVector s(num_qubits);
        if (index >= s.dimension()) {
            throw DimensionError("StateVector::basis: index out of range");
        }
        s.amps_(static_cast<Eigen::Index>(index)) = 1.0;
        return s;
    }

    /// |down ... down>, the fermion vacuum and the reference for prep circuits.
    static StateVector all_down(std::size_t num_qubits) {
        return basis(num_qubits, (std::uint64_t{1} << num_qubits) - 1);
    }

    static StateVector from_amplitudes(std::size_t num_qubits, Vector amps) {
        StateVector s(num_qubits);
        if (static_cast<std::uint64_t>(amps.size()) != s.dimension()) {
            throw DimensionError("StateVector: amplitude count does not match 2^n");
        }
        s.amps_ = std::move(amps);
        return s;
    }

    std::size_t num_qubits() const { return num_qubits_; }
    std::uint64_t dimension() const { return std::uint64_t{1} << num_qubits_; }
    const Vector &amplitudes() const { return amps_; }
    Vector &amplitudes() { return amps_; }
    cplx amplitude(std::uint64_t index) const { return amps_(static_cast<Eigen::Index>(index)); }
    double norm() const { return amps_.norm(); }

    std::uint64_t bit(std::size_t q) const {
        if (q >= num_qubits_) {
            throw DimensionError("qubit index out of range");
        }
        return std::uint64_t{1} << (num_qubits_ - 1 - q);
    }

  private:
    explicit StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
        if (num_qubits > kMaxStateQubits) {
            throw OracleLimitError("StateVector: " + std::to_string(num_qubits) +
                                   " qubits exceeds the simulator limit of " +
                                   std::to_string(kMaxStateQubits));
        }
        amps_ = Vector::Zero(static_cast<Eigen::Index>(dimension()));
    }

    std::size_t num_qubits_ = 0;
    Vector amps_;
};

inline cplx inner(const StateVector &a, const StateVector &b) {
    check_same_size(a.num_qubits(), b.num_qubits(), "inner");
    return a.amplitudes().dot(b.amplitudes());
}

inline double fidelity(const StateVector &a, const StateVector &b) {
    return std::norm(inner(a, b));
}

namespace detail {

inline void apply_single(Vector &v, std::uint64_t m, cplx u00, cplx u01, cplx u10, cplx u11) {
    const auto dim = static_cast<std::uint64_t>(v.size());
    for (std::uint64_t b = 0; b < dim; ++b) {
        if (b & m) {
            continue;
        }
        const auto i0 = static_cast<Eigen::Index>(b);
        const auto i1 = static_cast<Eigen::Index>(b | m);
        const cplx a0 = v(i0);
        const cplx a1 = v(i1);
        v(i0) = u00 * a0 + u01 * a1;
        v(i1) = u10 * a0 + u11 * a1;
    }
}

/// v <- v + k * P_branch v, restricted to indices whose control bit matches.
inline Vector pauli_action(const Vector &v, const PauliString &p) {
    const std::uint64_t x = p.x_mask();
    const std::uint64_t z = p.z_mask();
    const cplx base = p.phase() * i_power(p.y_count());
    Vector out(v.size());
    for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(v.size()); ++b) {
        const double sign = (std::popcount(b & z) % 2 == 0) ? 1.0 : -1.0;
        out(static_cast<Eigen::Index>(b ^ x)) = sign * base * v(static_cast<Eigen::Index>(b));
    }
    return out;
}

} // namespace detail

/// Applies one gate in place.
inline void apply_gate(StateVector &s, const Gate &g) {
    Vector &v = s.amplitudes();
    std::visit(
        [&](const auto &x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, RxGate>) {
                const double c = std::cos(x.angle / 2.0), sn = std::sin(x.angle / 2.0);
                detail::apply_single(v, s.bit(x.qubit), c, cplx{0, -sn}, cplx{0, -sn}, c);
            } else if constexpr (std::is_same_v<T, RyGate>) {
                const double c = std::cos(x.angle / 2.0), sn = std::sin(x.angle / 2.0);
                detail::apply_single(v, s.bit(x.qubit), c, -sn, sn, c);
            } else if constexpr (std::is_same_v<T, RzGate>) {
                const cplx e0 = std::exp(cplx{0, -x.angle / 2.0});
                detail::apply_single(v, s.bit(x.qubit), e0, 0.0, 0.0, std::conj(e0));
            } else if constexpr (std::is_same_v<T, ZZGate>) {
                const std::uint64_t m = s.bit(x.qubit_a) | s.bit(x.qubit_b);
                const cplx same = std::exp(cplx{0, x.angle});
                const cplx diff = std::conj(same);
                for (std::uint64_t b = 0; b < s.dimension(); ++b) {
                    v(static_cast<Eigen::Index>(b)) *= (std::popcount(b & m) % 2 == 0) ? same : diff;
                }
            } else if constexpr (std::is_same_v<T, CPauliExpGate>) {
                check_same_size(s.num_qubits(), x.string.num_qubits(), "apply_gate");
                const std::uint64_t cm = s.bit(x.control);
                const std::uint64_t want = x.control_value == 1 ? cm : 0;
                const Vector pv = detail::pauli_action(v, x.string);
                const double c = std::cos(x.angle), sn = std::sin(x.angle);
                for (std::uint64_t b = 0; b < s.dimension(); ++b) {
                    if ((b & cm) == want) {
                        const auto i = static_cast<Eigen::Index>(b);
                        v(i) = c * v(i) + cplx{0, sn} * pv(i);
                    }
                }
            } else if constexpr (std::is_same_v<T, PhaseOnControlGate>) {
                const std::uint64_t cm = s.bit(x.control);
                const std::uint64_t want = x.control_value == 1 ? cm : 0;
                const cplx ph = std::exp(cplx{0, x.phase});
                for (std::uint64_t b = 0; b < s.dimension(); ++b) {
                    if ((b & cm) == want) {
                        v(static_cast<Eigen::Index>(b)) *= ph;
                    }
                }
            }
        },
        g);
}

/// Applies the circuit, including its global phase.
inline StateVector run(const Circuit &c, StateVector s) {
    if (c.num_qubits() != s.num_qubits()) {
        throw DimensionError("run: circuit has " + std::to_string(c.num_qubits()) +
                             " qubits, state has " + std::to_string(s.num_qubits()));
    }
    for (const auto &g : c.gates()) {
        apply_gate(s, g);
    }
    if (c.global_phase() != 0.0) {
        s.amplitudes() *= std::exp(cplx{0, c.global_phase()});
    }
    return s;
}

/// Dense unitary of a circuit, column by column.
inline Matrix circuit_unitary(const Circuit &c, std::size_t oracle_limit = default_oracle_limit()) {
    check_oracle_limit(c.num_qubits(), oracle_limit, "circuit_unitary");
    const std::uint64_t dim = std::uint64_t{1} << c.num_qubits();
    Matrix u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::uint64_t k = 0; k < dim; ++k) {
        u.col(static_cast<Eigen::Index>(k)) = run(c, StateVector::basis(c.num_qubits(), k)).amplitudes();
    }
    return u;
}

/// e^{i h t} applied by dense diagonalization.
inline StateVector exact_evolution(const PauliSum &h, double t, const StateVector &initial,
                                   std::size_t oracle_limit = default_oracle_limit()) {
    if (h.num_qubits() != initial.num_qubits()) {
        throw DimensionError("exact_evolution: size mismatch");
    }
    check_oracle_limit(h.num_qubits(), oracle_limit, "exact_evolution");
    if (h.empty()) {
        return initial;
    }
    const HermitianPropagator prop(to_matrix(h, oracle_limit));
    return StateVector::from_amplitudes(initial.num_qubits(), prop.apply(t, initial.amplitudes()));
}

/// <s|obs|s>
inline cplx expectation(const PauliSum &obs, const StateVector &s) {
    if (obs.num_qubits() != s.num_qubits()) {
        throw DimensionError("expectation: size mismatch");
    }
    cplx total = 0.0;
    for (const auto &[p, c] : obs.terms()) {
        total += c * s.amplitudes().dot(detail::pauli_action(s.amplitudes(), p));
    }
    return total;
}

inline cplx expectation(const PauliString &obs, const StateVector &s) {
    return expectation(PauliSum(obs), s);
}

struct PostSelection {
    double probability = 0.0;
    std::optional<StateVector> state; // empty when the branch has zero probability
    bool empty_branch() const { return !state.has_value(); }
};

/// Projects onto the given qubit outcomes and renormalizes.
inline PostSelection post_select(const StateVector &s, const std::map<std::size_t, int> &outcomes,
                                 double zero_tol = 1e-24) {
    std::uint64_t mask = 0, want = 0;
    for (const auto &[q, v] : outcomes) {
        if (v != 0 && v != 1) {
            throw InvalidArgument("post_select: outcomes must be 0 or 1");
        }
        mask |= s.bit(q);
        if (v == 1) {
            want |= s.bit(q);
        }
    }
    Vector out = s.amplitudes();
    for (std::uint64_t b = 0; b < s.dimension(); ++b) {
        if ((b & mask) != want) {
            out(static_cast<Eigen::Index>(b)) = 0.0;
        }
    }
    PostSelection r;
    r.probability = out.squaredNorm();
    if (r.probability > zero_tol) {
        out /= std::sqrt(r.probability);
        r.state = StateVector::from_amplitudes(s.num_qubits(), std::move(out));
    }
    return r;
}

/// Amplitudes of the qubits outside `outcomes`, with the selected qubits
/// removed from the register. Requires a non-empty branch.
inline StateVector reduce_register(const StateVector &s, const std::map<std::size_t, int> &outcomes) {
    std::vector<std::size_t> keep;
    for (std::size_t q = 0; q < s.num_qubits(); ++q) {
        if (outcomes.count(q) == 0) {
            keep.push_back(q);
        }
    }
    std::uint64_t want = 0;
    for (const auto &[q, v] : outcomes) {
        if (v == 1) {
            want |= s.bit(q);
        }
    }
    const std::size_t m = keep.size();
    Vector out = Vector::Zero(static_cast<Eigen::Index>(std::uint64_t{1} << m));
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << m); ++r) {
        std::uint64_t b = want;
        for (std::size_t k = 0; k < m; ++k) {
            if (r & (std::uint64_t{1} << (m - 1 - k))) {
                b |= s.bit(keep[k]);
            }
        }
        out(static_cast<Eigen::Index>(r)) = s.amplitude(b);
    }
    return StateVector::from_amplitudes(m, std::move(out));
}

struct MeasurementRecord {
    std::string observable;
    cplx value;
    std::optional<std::size_t> shots; // empty for exact evaluation
};

inline MeasurementRecord measure_exact(const PauliString &obs, const StateVector &s) {
    return {obs.to_string(), expectation(obs, s), std::nullopt};
}

/// Empirical mean of +-1 outcomes of a single-qubit Pauli.
inline MeasurementRecord sample(const PauliString &obs, const StateVector &s, std::size_t shots,
                                std::uint64_t seed) {
    if (shots == 0) {
        throw InvalidArgument("sample: shots must be >= 1");
    }
    if (obs.weight() != 1) {
        throw InvalidArgument("sample: observable must be a single-qubit Pauli");
    }
    if (obs.phase() != cplx{1.0} && obs.phase() != cplx{-1.0}) {
        throw InvalidArgument("sample: observable must be Hermitian");
    }
    const double p_plus = std::clamp((1.0 + expectation(obs, s).real()) / 2.0, 0.0, 1.0);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p_plus);
    long long sum = 0;
    for (std::size_t k = 0; k < shots; ++k) {
        sum += coin(rng) ? 1 : -1;
    }
    return {obs.to_string(), cplx{static_cast<double>(sum) / static_cast<double>(shots), 0.0}, shots};
}

/// CSV dump "index,re,im", amplitudes with modulus below 1e-12 omitted.
inline std::string state_to_csv(const StateVector &s) {
    std::ostringstream out;
    out << "index,re,im\n";
    char buf[64];
    for (std::uint64_t b = 0; b < s.dimension(); ++b) {
        const cplx a = s.amplitude(b);
        if (std::abs(a) < 1e-12) {
            continue;
        }
        std::snprintf(buf, sizeof buf, "%.17g,%.17g", a.real(), a.imag());
        out << b << ',' << buf << '\n';
    }
    return out.str();
}

} // namespace spinmap
