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

// Ancilla interferometry: dynamical correlation functions and spectra.
//
// The ancilla is the last qubit. It starts down (|1>) like every other
// qubit and is rotated to |+>; the quantity read out is
// <X_a + i Y_a> = 2 <a0|a1>, the overlap of the ancilla-0 and ancilla-1
// branches of the system state.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <unsupported/Eigen/FFT>
#include <utility>
#include <vector>

#include "circuit.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "pauli.hpp"
#include "simulator.hpp"
#include "synthesis.hpp"

namespace spinmap {

enum class Backend { Exact, Trotter };

inline const char *backend_name(Backend b) { return b == Backend::Exact ? "exact" : "trotter"; }

inline Backend backend_from_name(const std::string &s) {
    if (s == "exact") {
        return Backend::Exact;
    }
    if (s == "trotter") {
        return Backend::Trotter;
    }
    throw InvalidArgument("unknown backend '" + s + "' (expected exact or trotter)");
}

/// G(t) = <psi| T^dag A^dag T B |psi> with T = e^{-iHt}.
struct CorrelationSpec {
    PauliString A;
    PauliString B;
    PauliSum H;
    Circuit prep;                  // prepares |psi> from all-down
    std::vector<double> times;
    std::size_t trotter_steps = 64; // per unit time, Trotter backend only
    Backend backend = Backend::Exact;
    std::size_t oracle_limit = default_oracle_limit();
    std::optional<std::size_t> shots; // sample the ancilla instead of exact readout
    std::uint64_t seed = 0;

    std::size_t num_system_qubits() const { return prep.num_qubits(); }

    void validate() const {
        const std::size_t n = num_system_qubits();
        if (A.num_qubits() != n || B.num_qubits() != n || H.num_qubits() != n) {
            throw DimensionError("correlation spec: A, B, H and prep must share the system register");
        }
        if (!H.is_hermitian()) {
            throw NotHermitianError("correlation spec: H is not Hermitian");
        }
        if (std::abs(std::abs(A.phase()) - 1.0) > 1e-12 || std::abs(std::abs(B.phase()) - 1.0) > 1e-12) {
            throw InvalidArgument("correlation spec: A and B must have unit-modulus coefficients");
        }
    }
};

inline std::size_t trotter_steps_for(double t, std::size_t per_unit_time) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(per_unit_time * std::abs(t) - 1e-9)));
}

namespace detail {

/// Ry(-pi/2) takes the down ancilla to |+>.
inline Circuit ancilla_plus(std::size_t total, std::size_t ancilla) {
    Circuit c(total);
    c.append(RyGate{ancilla, -std::numbers::pi / 2.0});
    return c;
}

/// Front half of the correlation network: |+> on the ancilla, prep, C-B.
inline Circuit correlation_front(const CorrelationSpec &spec) {
    const std::size_t n = spec.num_system_qubits();
    Circuit c = ancilla_plus(n + 1, n);
    c.append(spec.prep.widened(n + 1));
    c.append(controlled_pauli(spec.B.embedded(n + 1), n, 1));
    return c;
}

inline Circuit correlation_back(const CorrelationSpec &spec) {
    const std::size_t n = spec.num_system_qubits();
    return controlled_pauli(spec.A.embedded(n + 1), n, 0);
}

/// <X_a + i Y_a> on the last qubit.
inline cplx ancilla_readout(const StateVector &s) {
    const std::size_t n = s.num_qubits();
    PauliSum obs(n);
    obs.add(PauliString(n, {{n - 1, PauliLetter::X}}), 1.0);
    obs.add(PauliString(n, {{n - 1, PauliLetter::Y}}), cplx{0.0, 1.0});
    return expectation(obs, s);
}

/// Exact readout, or <X_a> + i <Y_a> estimated from `shots` samples each.
inline cplx ancilla_readout(const StateVector &s, const CorrelationSpec &spec, std::size_t point) {
    if (!spec.shots) {
        return ancilla_readout(s);
    }
    const std::size_t n = s.num_qubits();
    const std::uint64_t base = spec.seed + 2 * static_cast<std::uint64_t>(point);
    const double x = sample(PauliString(n, {{n - 1, PauliLetter::X}}), s, *spec.shots, base).value.real();
    const double y = sample(PauliString(n, {{n - 1, PauliLetter::Y}}), s, *spec.shots, base + 1).value.real();
    return {x, y};
}

} // namespace detail

/// The full network with a Trotterized T:
/// |+>_a, prep, B on ancilla 1, e^{-iHt}, A on ancilla 0.
inline Circuit build_correlation_network(const CorrelationSpec &spec, double t) {
    spec.validate();
    const std::size_t n = spec.num_system_qubits();
    Circuit c = detail::correlation_front(spec);
    if (!spec.H.empty()) {
        const TrotterPlan plan(spec.H * cplx{-1.0}, t, trotter_steps_for(t, spec.trotter_steps));
        c.append(trotterize(plan).widened(n + 1));
    }
    c.append(detail::correlation_back(spec));
    return c;
}

struct CorrelationPoint {
    double t = 0.0;
    cplx value;
};

inline std::vector<CorrelationPoint> measure_correlation(const CorrelationSpec &spec) {
    spec.validate();
    const std::size_t n = spec.num_system_qubits();
    std::vector<CorrelationPoint> out;
    if (spec.backend == Backend::Trotter) {
        for (std::size_t k = 0; k < spec.times.size(); ++k) {
            const double t = spec.times[k];
            const StateVector s = run(build_correlation_network(spec, t), StateVector::all_down(n + 1));
            out.push_back({t, detail::ancilla_readout(s, spec, k)});
        }
        return out;
    }
    check_oracle_limit(n + 1, spec.oracle_limit, "measure_correlation");
    const StateVector front = run(detail::correlation_front(spec), StateVector::all_down(n + 1));
    const Circuit back = detail::correlation_back(spec);
    const PauliSum h = spec.H.embedded(n + 1);
    std::optional<HermitianPropagator> prop;
    if (!h.empty()) {
        prop.emplace(to_matrix(h, spec.oracle_limit));
    }
    for (std::size_t k = 0; k < spec.times.size(); ++k) {
        const double t = spec.times[k];
        StateVector s = front;
        if (prop) {
            s = StateVector::from_amplitudes(n + 1, prop->apply(-t, front.amplitudes()));
        }
        out.push_back({t, detail::ancilla_readout(run(back, s), spec, k)});
    }
    return out;
}

/// Direct dense evaluation of <psi| T^dag A^dag T B |psi>.
inline cplx direct_correlation(const CorrelationSpec &spec, double t) {
    spec.validate();
    const std::size_t n = spec.num_system_qubits();
    check_oracle_limit(n, spec.oracle_limit, "direct_correlation");
    const Vector psi = run(spec.prep, StateVector::all_down(n)).amplitudes();
    const Matrix a = to_matrix(spec.A, spec.oracle_limit);
    const Matrix b = to_matrix(spec.B, spec.oracle_limit);
    Matrix T = Matrix::Identity(a.rows(), a.cols());
    if (!spec.H.empty()) {
        T = expm_hermitian(to_matrix(spec.H, spec.oracle_limit), -t);
    }
    return psi.dot(T.adjoint() * a.adjoint() * T * b * psi);
}

/// Samples s_k = <phi| e^{-iQ t_k} |phi> at t_k = k dt.
struct SpectrumSpec {
    PauliSum Q;
    Circuit prep; // prepares |phi> from all-down
    double dt = 0.1;
    std::size_t num_samples = 512;
    Backend backend = Backend::Exact;
    std::size_t trotter_steps = 1; // per sample interval, Trotter backend only
    std::size_t oracle_limit = default_oracle_limit();

    void validate() const {
        if (Q.num_qubits() != prep.num_qubits()) {
            throw DimensionError("spectrum spec: Q and prep must share the system register");
        }
        if (!Q.is_hermitian()) {
            throw NotHermitianError("spectrum spec: Q is not Hermitian");
        }
        if (!(dt > 0.0)) {
            throw InvalidArgument("spectrum spec: dt must be positive");
        }
        if (num_samples == 0) {
            throw InvalidArgument("spectrum spec: need at least one sample");
        }
        const double bound = Q.norm_bound();
        if (dt * bound >= std::numbers::pi) {
            throw InvalidArgument("spectrum spec: dt * sum|coefficients| = " + std::to_string(dt) + " * " +
                                  std::to_string(bound) + " must be below pi to avoid aliasing");
        }
    }
};

namespace detail {

/// (Q tensor Z_a)/2 on the system plus ancilla register.
inline PauliSum ancilla_coupled(const PauliSum &q) {
    const std::size_t n = q.num_qubits();
    PauliSum out(n + 1);
    for (const auto &[p, c] : q.terms()) {
        PauliString e = p.embedded(n + 1);
        e.set(n, PauliLetter::Z);
        out.add(e, c / 2.0);
    }
    return out;
}

} // namespace detail

inline std::vector<cplx> spectrum_time_series(const SpectrumSpec &spec) {
    spec.validate();
    const std::size_t n = spec.prep.num_qubits();
    Circuit front = detail::ancilla_plus(n + 1, n);
    front.append(spec.prep.widened(n + 1));
    const StateVector start = run(front, StateVector::all_down(n + 1));
    const PauliSum coupled = detail::ancilla_coupled(spec.Q);
    std::vector<cplx> out;
    out.reserve(spec.num_samples);
    if (spec.backend == Backend::Trotter) {
        const Circuit step = coupled.empty()
                                 ? Circuit(n + 1)
                                 : trotterize(TrotterPlan(coupled, spec.dt, std::max<std::size_t>(1, spec.trotter_steps)));
        StateVector s = start;
        for (std::size_t k = 0; k < spec.num_samples; ++k) {
            out.push_back(detail::ancilla_readout(s));
            s = run(step, std::move(s));
        }
        return out;
    }
    check_oracle_limit(n + 1, spec.oracle_limit, "spectrum_time_series");
    if (coupled.empty()) {
        out.assign(spec.num_samples, detail::ancilla_readout(start));
        return out;
    }
    const HermitianPropagator prop(to_matrix(coupled, spec.oracle_limit));
    for (std::size_t k = 0; k < spec.num_samples; ++k) {
        const double t = static_cast<double>(k) * spec.dt;
        out.push_back(detail::ancilla_readout(
            StateVector::from_amplitudes(n + 1, prop.apply(t, start.amplitudes()))));
    }
    return out;
}

struct SpectralPeak {
    double lambda = 0.0;
    double weight = 0.0;
};

namespace detail {

inline double wrap_frequency(double lambda, double dt) {
    const double period = 2.0 * std::numbers::pi / dt;
    const double half = std::numbers::pi / dt;
    lambda = std::fmod(lambda, period);
    if (lambda > half) {
        lambda -= period;
    } else if (lambda <= -half) {
        lambda += period;
    }
    return lambda;
}

/// (1/M) sum_k r_k e^{+i lambda k dt}
inline cplx dtft(const std::vector<cplx> &r, double lambda, double dt) {
    cplx acc = 0.0;
    for (std::size_t k = 0; k < r.size(); ++k) {
        acc += r[k] * std::exp(cplx{0.0, lambda * dt * static_cast<double>(k)});
    }
    return acc / static_cast<double>(r.size());
}

} // namespace detail

/// Peaks of the spectrum of s_k = sum_n w_n e^{-i lambda_n k dt}.
///
/// Frequencies come from repeated extraction of the strongest DFT bin with
/// three-bin complex interpolation, each found component subtracted from the
/// residual. Components closer than one bin are merged, then the weights are
/// fitted by least squares at the found frequencies. Peaks below
/// `floor * |s_0|` are dropped. Results are sorted by lambda.
inline std::vector<SpectralPeak> spectral_peaks(const std::vector<cplx> &series, double dt,
                                                double floor = 1e-3) {
    const std::size_t M = series.size();
    if (M < 8) {
        throw InvalidArgument("spectral_peaks: need at least 8 samples");
    }
    if (!(dt > 0.0)) {
        throw InvalidArgument("spectral_peaks: dt must be positive");
    }
    const double scale = std::abs(series.front());
    if (!(scale > 0.0)) {
        throw InvalidArgument("spectral_peaks: the series starts at zero, so it has no weight");
    }
    const double bin = 2.0 * std::numbers::pi / (static_cast<double>(M) * dt);
    const double threshold = floor * scale;

    Eigen::FFT<double> fft;
    std::vector<cplx> residual = series;
    std::vector<std::pair<double, double>> found; // (lambda, |amplitude|)
    const std::size_t max_components = std::min<std::size_t>(M, 256);
    for (std::size_t iter = 0; iter < max_components; ++iter) {
        std::vector<cplx> F;
        fft.inv(F, residual);
        std::size_t j = 0;
        for (std::size_t k = 1; k < M; ++k) {
            if (std::abs(F[k]) > std::abs(F[j])) {
                j = k;
            }
        }
        if (std::abs(F[j]) < threshold) {
            break;
        }
        const cplx fm = F[(j + M - 1) % M];
        const cplx fp = F[(j + 1) % M];
        const cplx denom = 2.0 * F[j] - fm - fp;
        double delta = std::abs(denom) > 0.0 ? ((fm - fp) / denom).real() : 0.0;
        delta = std::clamp(delta, -0.5, 0.5);
        const double lambda = detail::wrap_frequency((static_cast<double>(j) + delta) * bin, dt);
        const cplx amp = detail::dtft(residual, lambda, dt);
        for (std::size_t k = 0; k < M; ++k) {
            residual[k] -= amp * std::exp(cplx{0.0, -lambda * dt * static_cast<double>(k)});
        }
        found.emplace_back(lambda, std::abs(amp));
    }
    if (found.empty()) {
        return {};
    }

    std::sort(found.begin(), found.end());
    std::vector<double> lambdas;
    double wsum = found.front().second, lsum = found.front().first * found.front().second;
    double last = found.front().first;
    for (std::size_t k = 1; k <= found.size(); ++k) {
        if (k < found.size() && found[k].first - last < bin) {
            wsum += found[k].second;
            lsum += found[k].first * found[k].second;
            last = found[k].first;
            continue;
        }
        lambdas.push_back(lsum / wsum);
        if (k < found.size()) {
            wsum = found[k].second;
            lsum = found[k].first * found[k].second;
            last = found[k].first;
        }
    }

    Matrix E(static_cast<Eigen::Index>(M), static_cast<Eigen::Index>(lambdas.size()));
    Vector s(static_cast<Eigen::Index>(M));
    for (std::size_t k = 0; k < M; ++k) {
        s(static_cast<Eigen::Index>(k)) = series[k];
        for (std::size_t n = 0; n < lambdas.size(); ++n) {
            E(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(n)) =
                std::exp(cplx{0.0, -lambdas[n] * dt * static_cast<double>(k)});
        }
    }
    const Vector coeffs = E.colPivHouseholderQr().solve(s);

    std::vector<SpectralPeak> peaks;
    for (std::size_t n = 0; n < lambdas.size(); ++n) {
        const double w = std::abs(coeffs(static_cast<Eigen::Index>(n)));
        if (w >= threshold) {
            peaks.push_back({lambdas[n], std::min(w, 1.0)});
        }
    }
    return peaks;
}

} // namespace spinmap
