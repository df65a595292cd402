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

// Dense linear-algebra helpers shared by the brute-force oracle paths.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <string>

#include "errors.hpp"

namespace spinmap {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr std::size_t kBuiltinOracleLimit = 14;

/// Oracle qubit limit: $SPINMAP_ORACLE_LIMIT when set to a positive integer,
/// otherwise 14.
inline std::size_t default_oracle_limit() {
    if (const char *env = std::getenv("SPINMAP_ORACLE_LIMIT")) {
        char *end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) {
            return static_cast<std::size_t>(value);
        }
    }
    return kBuiltinOracleLimit;
}

inline void check_oracle_limit(std::size_t num_qubits, std::size_t limit,
                               const std::string &what) {
    if (num_qubits > limit) {
        throw OracleLimitError(what + ": " + std::to_string(num_qubits) +
                               " qubits exceeds the dense oracle limit of " +
                               std::to_string(limit));
    }
}

inline bool is_hermitian(const Matrix &m, double tol = 1e-12) {
    return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

inline Matrix commutator(const Matrix &a, const Matrix &b) { return a * b - b * a; }
inline Matrix anticommutator(const Matrix &a, const Matrix &b) { return a * b + b * a; }

/// Largest singular value.
inline double operator_norm(const Matrix &m) {
    if (m.size() == 0) {
        return 0.0;
    }
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

/// ||U - e^{i phi} V|| with phi chosen to maximise |tr(V^dag U)|.
inline double unitary_distance(const Matrix &u, const Matrix &v) {
    if (u.rows() != v.rows() || u.cols() != v.cols()) {
        throw DimensionError("unitary_distance: shape mismatch");
    }
    const cplx overlap = (v.adjoint() * u).trace();
    const cplx align = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : cplx{1.0};
    return operator_norm(u - align * v);
}

/// Eigendecomposition of a Hermitian matrix, reused for e^{i h t} at many t.
class HermitianPropagator {
  public:
    explicit HermitianPropagator(const Matrix &h) {
        if (!is_hermitian(h, 1e-10)) {
            throw NotHermitianError("HermitianPropagator: matrix is not Hermitian");
        }
        Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
        values_ = solver.eigenvalues();
        vectors_ = solver.eigenvectors();
    }

    /// e^{i h t}
    Matrix unitary(double t) const {
        Vector phases(values_.size());
        for (Eigen::Index k = 0; k < values_.size(); ++k) {
            phases(k) = std::exp(cplx{0.0, values_(k) * t});
        }
        return vectors_ * phases.asDiagonal() * vectors_.adjoint();
    }

    Vector apply(double t, const Vector &psi) const {
        Vector coeffs = vectors_.adjoint() * psi;
        for (Eigen::Index k = 0; k < values_.size(); ++k) {
            coeffs(k) *= std::exp(cplx{0.0, values_(k) * t});
        }
        return vectors_ * coeffs;
    }

    const Eigen::VectorXd &eigenvalues() const { return values_; }
    const Matrix &eigenvectors() const { return vectors_; }

  private:
    Eigen::VectorXd values_;
    Matrix vectors_;
};

/// e^{i h t} for Hermitian h.
inline Matrix expm_hermitian(const Matrix &h, double t) {
    return HermitianPropagator(h).unitary(t);
}

} // namespace spinmap
