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

// Second-quantized operators and their images in the spin-1/2 language.
//
// Fermions and hard-core anyons use one qubit per mode with the vacuum
// |down ... down> (all bits 1); an occupied mode is spin up. Bosons with at
// most n_max particles per site use a one-hot block of n_max + 1 qubits per
// site, level n of site i living on qubit i * (n_max + 1) + n.

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "pauli.hpp"

namespace spinmap {

struct Statistics {
    enum class Kind { Fermion, Anyon, Boson };

    Kind kind = Kind::Fermion;
    double theta = 0.0;      // Anyon only, radians in [0, 2 pi)
    std::size_t n_max = 1;   // Boson only, maximum occupation per site

    static Statistics fermion() { return {}; }

    static Statistics anyon(double theta) {
        if (!(theta >= 0.0 && theta < 2.0 * std::numbers::pi)) {
            throw InvalidArgument("anyon statistical angle must lie in [0, 2 pi)");
        }
        return {Kind::Anyon, theta, 1};
    }

    static Statistics boson(std::size_t n_max) {
        if (n_max == 0) {
            throw InvalidArgument("boson n_max must be positive");
        }
        return {Kind::Boson, 0.0, n_max};
    }

    std::string name() const {
        switch (kind) {
        case Kind::Fermion:
            return "fermion";
        case Kind::Anyon:
            return "anyon(theta=" + std::to_string(theta) + ")";
        case Kind::Boson:
            return "boson(n_max=" + std::to_string(n_max) + ")";
        }
        return "?";
    }

    friend bool operator==(const Statistics &, const Statistics &) = default;
};

enum class LadderKind { Create, Annihilate, Number };

struct LadderFactor {
    std::size_t mode = 0;
    LadderKind kind = LadderKind::Create;

    static LadderFactor create(std::size_t m) { return {m, LadderKind::Create}; }
    static LadderFactor annihilate(std::size_t m) { return {m, LadderKind::Annihilate}; }
    static LadderFactor number(std::size_t m) { return {m, LadderKind::Number}; }

    LadderFactor adjoint() const {
        switch (kind) {
        case LadderKind::Create:
            return annihilate(mode);
        case LadderKind::Annihilate:
            return create(mode);
        case LadderKind::Number:
            return *this;
        }
        return *this;
    }

    friend bool operator==(const LadderFactor &, const LadderFactor &) = default;
};

/// A term is coeff * f_0 f_1 ... f_k with f_0 the leftmost (last applied).
struct LadderTerm {
    cplx coeff{1.0};
    std::vector<LadderFactor> factors;

    friend bool operator==(const LadderTerm &, const LadderTerm &) = default;
};

class SecondQuantizedOperator {
  public:
    SecondQuantizedOperator(Statistics statistics, std::size_t num_modes)
        : statistics_(statistics), num_modes_(num_modes) {
        if (num_modes == 0) {
            throw InvalidArgument("an operator needs at least one mode");
        }
    }

    const Statistics &statistics() const { return statistics_; }
    std::size_t num_modes() const { return num_modes_; }
    const std::vector<LadderTerm> &terms() const { return terms_; }

    SecondQuantizedOperator &add_term(cplx coeff, std::vector<LadderFactor> factors) {
        for (const auto &f : factors) {
            if (f.mode >= num_modes_) {
                throw InvalidArgument("mode " + std::to_string(f.mode) + " out of range for " +
                                      std::to_string(num_modes_) + " modes");
            }
        }
        terms_.push_back({coeff, std::move(factors)});
        return *this;
    }

    /// coeff * (a+_i a_j + a+_j a_i) for real coeff; the conjugate term gets
    /// conj(coeff) so the result is Hermitian for complex coeff too.
    SecondQuantizedOperator &add_hopping(std::size_t i, std::size_t j, cplx coeff = 1.0) {
        add_term(coeff, {LadderFactor::create(i), LadderFactor::annihilate(j)});
        add_term(std::conj(coeff), {LadderFactor::create(j), LadderFactor::annihilate(i)});
        return *this;
    }

    SecondQuantizedOperator &add_density_density(std::size_t i, std::size_t j, double coeff) {
        return add_term(coeff, {LadderFactor::number(i), LadderFactor::number(j)});
    }

    SecondQuantizedOperator &add_number(std::size_t i, double coeff) {
        return add_term(coeff, {LadderFactor::number(i)});
    }

    SecondQuantizedOperator adjoint() const {
        SecondQuantizedOperator out(statistics_, num_modes_);
        for (const auto &t : terms_) {
            std::vector<LadderFactor> rev;
            for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it) {
                rev.push_back(it->adjoint());
            }
            out.terms_.push_back({std::conj(t.coeff), std::move(rev)});
        }
        return out;
    }

    friend bool operator==(const SecondQuantizedOperator &, const SecondQuantizedOperator &) = default;

  private:
    Statistics statistics_;
    std::size_t num_modes_;
    std::vector<LadderTerm> terms_;
};

/// One-hot placement of truncated bosonic sites on qubits.
struct BosonLayout {
    std::size_t num_sites = 1;
    std::size_t n_max = 1;

    std::size_t levels() const { return n_max + 1; }
    std::size_t num_qubits() const { return num_sites * levels(); }

    std::size_t qubit_index(std::size_t site, std::size_t level) const {
        if (site >= num_sites || level > n_max) {
            throw InvalidArgument("boson (site, level) = (" + std::to_string(site) + ", " +
                                  std::to_string(level) + ") out of range");
        }
        return site * levels() + level;
    }

    /// Basis index of the one-hot image of |n_0, ..., n_{N-1}>.
    std::uint64_t basis_index(const std::vector<std::size_t> &occupations) const {
        if (occupations.size() != num_sites) {
            throw InvalidArgument("occupation list length differs from the number of sites");
        }
        const std::size_t n = num_qubits();
        std::uint64_t index = (std::uint64_t{1} << n) - 1;
        for (std::size_t i = 0; i < num_sites; ++i) {
            index &= ~(std::uint64_t{1} << (n - 1 - qubit_index(i, occupations[i])));
        }
        return index;
    }

    /// Basis indices of all one-hot states, ordered like the Kronecker basis
    /// of the truncated representation (site 0 most significant digit).
    std::vector<std::uint64_t> one_hot_indices() const {
        std::vector<std::uint64_t> out;
        std::vector<std::size_t> occ(num_sites, 0);
        while (true) {
            out.push_back(basis_index(occ));
            std::size_t i = num_sites;
            while (i > 0) {
                --i;
                if (++occ[i] <= n_max) {
                    break;
                }
                occ[i] = 0;
                if (i == 0) {
                    return out;
                }
            }
        }
    }

    friend bool operator==(const BosonLayout &, const BosonLayout &) = default;
};

namespace detail {

/// e^{i phi} with components snapped to exact 0/+-1 at multiples of pi/2.
inline cplx snapped_phase(double phi) {
    double c = std::cos(phi);
    double s = std::sin(phi);
    if (std::abs(c) < 1e-15) {
        c = 0.0;
    }
    if (std::abs(s) < 1e-15) {
        s = 0.0;
    }
    if (std::abs(c) > 1.0 - 1e-15) {
        c = c > 0 ? 1.0 : -1.0;
    }
    if (std::abs(s) > 1.0 - 1e-15) {
        s = s > 0 ? 1.0 : -1.0;
    }
    return {c, s};
}

inline void require(const SecondQuantizedOperator &op, Statistics::Kind kind, const char *who) {
    if (op.statistics().kind != kind) {
        throw WrongStatisticsError(std::string(who) + ": operator has " +
                                   op.statistics().name() + " statistics");
    }
}

template <class FactorImage>
PauliSum map_terms(const SecondQuantizedOperator &op, std::size_t num_qubits, FactorImage image) {
    PauliSum out(num_qubits);
    for (const auto &term : op.terms()) {
        PauliSum product = PauliSum::identity(num_qubits, term.coeff);
        for (const auto &f : term.factors) {
            product = product * image(f);
        }
        out += product;
    }
    return out.chopped();
}

} // namespace detail

/// Image of a single fermionic ladder factor.
inline PauliSum jordan_wigner_factor(std::size_t num_modes, const LadderFactor &f) {
    if (f.kind == LadderKind::Number) {
        return up_projector(num_modes, f.mode);
    }
    // prod_{l<j} (-Z_l) as one string with phase (-1)^j
    PauliString tail(num_modes, f.mode % 2 == 0 ? 1.0 : -1.0);
    for (std::size_t l = 0; l < f.mode; ++l) {
        tail.set(l, PauliLetter::Z);
    }
    const PauliSum ladder = f.kind == LadderKind::Create ? sigma_plus(num_modes, f.mode)
                                                         : sigma_minus(num_modes, f.mode);
    return PauliSum(tail) * ladder;
}

inline PauliSum jordan_wigner(const SecondQuantizedOperator &op) {
    detail::require(op, Statistics::Kind::Fermion, "jordan_wigner");
    const std::size_t n = op.num_modes();
    return detail::map_terms(op, n, [n](const LadderFactor &f) { return jordan_wigner_factor(n, f); });
}

/// Image of a single anyonic ladder factor at statistical angle theta.
inline PauliSum anyon_factor(std::size_t num_modes, double theta, const LadderFactor &f) {
    if (f.kind == LadderKind::Number) {
        return up_projector(num_modes, f.mode);
    }
    const bool create = f.kind == LadderKind::Create;
    const cplx e = detail::snapped_phase(create ? -theta : theta);
    const cplx a = (e + 1.0) * 0.5;
    const cplx b = (e - 1.0) * 0.5;
    PauliSum out = create ? sigma_plus(num_modes, f.mode) : sigma_minus(num_modes, f.mode);
    for (std::size_t i = 0; i < f.mode; ++i) {
        PauliSum string_factor(num_modes);
        string_factor.add(PauliString(num_modes), a);
        string_factor.add(PauliString(num_modes, {{i, PauliLetter::Z}}), b);
        out = string_factor * out;
    }
    return out;
}

inline PauliSum anyon_map(const SecondQuantizedOperator &op) {
    detail::require(op, Statistics::Kind::Anyon, "anyon_map");
    const std::size_t n = op.num_modes();
    const double theta = op.statistics().theta;
    return detail::map_terms(op, n,
                             [n, theta](const LadderFactor &f) { return anyon_factor(n, theta, f); });
}

/// Image of a single truncated-boson factor under the one-hot state map.
inline PauliSum boson_factor(const BosonLayout &layout, const LadderFactor &f) {
    const std::size_t nq = layout.num_qubits();
    PauliSum out(nq);
    if (f.kind == LadderKind::Number) {
        for (std::size_t n = 1; n <= layout.n_max; ++n) {
            out += up_projector(nq, layout.qubit_index(f.mode, n)) * cplx(static_cast<double>(n));
        }
        return out;
    }
    for (std::size_t n = 0; n < layout.n_max; ++n) {
        const std::size_t lo = layout.qubit_index(f.mode, n);
        const std::size_t hi = layout.qubit_index(f.mode, n + 1);
        const double amp = std::sqrt(static_cast<double>(n + 1));
        // b+ moves the up spin from level n to n+1; b does the reverse.
        const PauliSum hop = f.kind == LadderKind::Create
                                 ? sigma_minus(nq, lo) * sigma_plus(nq, hi)
                                 : sigma_plus(nq, lo) * sigma_minus(nq, hi);
        out += hop * cplx(amp);
    }
    return out;
}

inline PauliSum boson_map(const SecondQuantizedOperator &op, const BosonLayout &layout) {
    detail::require(op, Statistics::Kind::Boson, "boson_map");
    if (op.statistics().n_max != layout.n_max) {
        throw InvalidArgument("boson_map: layout n_max differs from the operator statistics");
    }
    if (op.num_modes() > layout.num_sites) {
        throw InvalidArgument("boson_map: operator has more modes than the layout has sites");
    }
    return detail::map_terms(op, layout.num_qubits(),
                             [&layout](const LadderFactor &f) { return boson_factor(layout, f); });
}

/// Dispatches on the operator statistics. Bosons use one site per mode.
inline PauliSum map_to_spins(const SecondQuantizedOperator &op) {
    switch (op.statistics().kind) {
    case Statistics::Kind::Fermion:
        return jordan_wigner(op);
    case Statistics::Kind::Anyon:
        return anyon_map(op);
    case Statistics::Kind::Boson:
        return boson_map(op, BosonLayout{op.num_modes(), op.statistics().n_max});
    }
    throw InvalidArgument("unknown statistics");
}

inline std::size_t mapped_qubits(const Statistics &stats, std::size_t num_modes) {
    return stats.kind == Statistics::Kind::Boson ? num_modes * (stats.n_max + 1) : num_modes;
}

// ---------------------------------------------------------------------------
// Algebra validation on dense matrices.

struct RelationCheck {
    std::string relation;
    double max_deviation = 0.0;
    double tolerance = 1e-12;
    bool passed() const { return max_deviation <= tolerance; }
};

struct ValidationReport {
    std::string suite;
    std::vector<RelationCheck> checks;

    bool passed() const {
        for (const auto &c : checks) {
            if (!c.passed()) {
                return false;
            }
        }
        return true;
    }

    void record(std::string relation, double deviation, double tolerance = 1e-12) {
        // fold repeated relations into their worst case
        for (auto &c : checks) {
            if (c.relation == relation) {
                c.max_deviation = std::max(c.max_deviation, deviation);
                return;
            }
        }
        checks.push_back({std::move(relation), deviation, tolerance});
    }
};

namespace detail {
inline double max_abs(const Matrix &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
} // namespace detail

/// {c_i, c_j} = 0 and {c+_i, c_j} = delta_ij for the Jordan-Wigner images.
inline ValidationReport validate_fermion_algebra(std::size_t num_modes,
                                                 std::size_t oracle_limit = default_oracle_limit()) {
    check_oracle_limit(num_modes, oracle_limit, "validate_fermion_algebra");
    ValidationReport report{"fermion anticommutators, N=" + std::to_string(num_modes), {}};
    std::vector<Matrix> c;
    for (std::size_t j = 0; j < num_modes; ++j) {
        c.push_back(to_matrix(jordan_wigner_factor(num_modes, LadderFactor::annihilate(j)), oracle_limit));
    }
    const auto dim = c.front().rows();
    const Matrix id = Matrix::Identity(dim, dim);
    for (std::size_t i = 0; i < num_modes; ++i) {
        for (std::size_t j = 0; j < num_modes; ++j) {
            report.record("{c_i, c_j} = 0", detail::max_abs(anticommutator(c[i], c[j])));
            report.record("{c+_i, c+_j} = 0",
                          detail::max_abs(anticommutator(c[i].adjoint(), c[j].adjoint())));
            const Matrix expected = i == j ? id : Matrix::Zero(dim, dim);
            report.record("{c+_i, c_j} = delta_ij",
                          detail::max_abs(anticommutator(c[i].adjoint(), c[j]) - expected));
        }
    }
    return report;
}

/// Theta-deformed relations of the anyon images, checked for i <= j.
inline ValidationReport validate_anyon_algebra(std::size_t num_modes, double theta,
                                               std::size_t oracle_limit = default_oracle_limit()) {
    check_oracle_limit(num_modes, oracle_limit, "validate_anyon_algebra");
    ValidationReport report{"anyon relations, N=" + std::to_string(num_modes) +
                                ", theta=" + std::to_string(theta),
                            {}};
    std::vector<Matrix> a;
    std::vector<Matrix> ad;
    std::vector<Matrix> n;
    for (std::size_t j = 0; j < num_modes; ++j) {
        a.push_back(to_matrix(anyon_factor(num_modes, theta, LadderFactor::annihilate(j)), oracle_limit));
        ad.push_back(to_matrix(anyon_factor(num_modes, theta, LadderFactor::create(j)), oracle_limit));
        n.push_back(to_matrix(anyon_factor(num_modes, theta, LadderFactor::number(j)), oracle_limit));
    }
    const cplx e_plus = std::exp(cplx{0.0, theta});
    const cplx e_minus = std::exp(cplx{0.0, -theta});
    const auto dim = a.front().rows();
    const Matrix id = Matrix::Identity(dim, dim);
    for (std::size_t i = 0; i < num_modes; ++i) {
        for (std::size_t j = i; j < num_modes; ++j) {
            report.record("[a_i, a_j]_theta = 0", detail::max_abs(a[i] * a[j] - e_plus * a[j] * a[i]));
            report.record("[a+_i, a+_j]_theta = 0",
                          detail::max_abs(ad[i] * ad[j] - e_plus * ad[j] * ad[i]));
            const Matrix rhs = i == j ? Matrix(id - (e_minus + 1.0) * n[j]) : Matrix::Zero(dim, dim);
            report.record("[a_i, a+_j]_-theta = delta_ij (1 - (e^-i theta + 1) n_j)",
                          detail::max_abs(a[i] * ad[j] - e_minus * ad[j] * a[i] - rhs));
            const Matrix rhs_n = i == j ? ad[j] : Matrix::Zero(dim, dim);
            report.record("[n_i, a+_j] = delta_ij a+_j", detail::max_abs(commutator(n[i], ad[j]) - rhs_n));
            report.record("n_j = a+_j a_j", detail::max_abs(n[j] - ad[j] * a[j]));
        }
    }
    return report;
}

/// (n_max+1) x (n_max+1) truncated creation matrix with subdiagonal
/// 1, sqrt 2, ..., sqrt n_max.
inline Matrix truncated_creation(std::size_t n_max) {
    const auto d = static_cast<Eigen::Index>(n_max + 1);
    Matrix b = Matrix::Zero(d, d);
    for (Eigen::Index n = 0; n + 1 < d; ++n) {
        b(n + 1, n) = std::sqrt(static_cast<double>(n + 1));
    }
    return b;
}

/// Embeds a single-site operator at `site` of a chain via Kronecker products.
inline Matrix site_operator(const Matrix &local, std::size_t site, std::size_t num_sites) {
    const auto d = local.rows();
    Matrix out = Matrix::Identity(1, 1);
    for (std::size_t s = 0; s < num_sites; ++s) {
        const Matrix factor = s == site ? local : Matrix(Matrix::Identity(d, d));
        Matrix next(out.rows() * d, out.cols() * d);
        for (Eigen::Index r = 0; r < out.rows(); ++r) {
            for (Eigen::Index c = 0; c < out.cols(); ++c) {
                next.block(r * d, c * d, d, d) = out(r, c) * factor;
            }
        }
        out = std::move(next);
    }
    return out;
}

/// Restriction of a qubit operator to the one-hot subspace of `layout`.
inline Matrix restrict_to_one_hot(const Matrix &m, const BosonLayout &layout) {
    const auto idx = layout.one_hot_indices();
    const auto d = static_cast<Eigen::Index>(idx.size());
    Matrix out(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            out(r, c) = m(static_cast<Eigen::Index>(idx[r]), static_cast<Eigen::Index>(idx[c]));
        }
    }
    return out;
}

/// Modified commutators, nilpotency and one-hot conservation for truncated
/// bosons on two sites.
inline ValidationReport validate_modified_commutators(std::size_t n_max,
                                                      std::size_t oracle_limit = default_oracle_limit()) {
    if (n_max == 0 || n_max > 4) {
        throw InvalidArgument("validate_modified_commutators supports 1 <= n_max <= 4");
    }
    constexpr std::size_t sites = 2;
    const BosonLayout layout{sites, n_max};
    check_oracle_limit(layout.num_qubits(), oracle_limit, "validate_modified_commutators");
    ValidationReport report{"truncated boson relations, n_max=" + std::to_string(n_max), {}};

    const Matrix bd_local = truncated_creation(n_max);
    const auto dim = static_cast<Eigen::Index>(std::pow(n_max + 1, sites));
    const Matrix id = Matrix::Identity(dim, dim);
    double factorial = 1.0;
    for (std::size_t k = 2; k <= n_max; ++k) {
        factorial *= static_cast<double>(k);
    }

    std::vector<Matrix> bd;
    std::vector<Matrix> b;
    for (std::size_t i = 0; i < sites; ++i) {
        bd.push_back(site_operator(bd_local, i, sites));
        b.push_back(bd.back().adjoint());
    }
    for (std::size_t i = 0; i < sites; ++i) {
        Matrix bd_pow = Matrix::Identity(dim, dim);
        Matrix b_pow = Matrix::Identity(dim, dim);
        for (std::size_t k = 0; k < n_max; ++k) {
            bd_pow = bd_pow * bd[i];
            b_pow = b_pow * b[i];
        }
        for (std::size_t j = 0; j < sites; ++j) {
            report.record("[b_i, b_j] = 0", detail::max_abs(commutator(b[i], b[j])));
            const Matrix rhs = i == j ? Matrix(id - (static_cast<double>(n_max + 1) / factorial) * bd_pow * b_pow)
                                      : Matrix::Zero(dim, dim);
            report.record("[b_i, b+_j] = delta_ij [1 - (N_P+1)/N_P! (b+_i)^N_P (b_i)^N_P]",
                          detail::max_abs(commutator(b[i], bd[j]) - rhs));
        }
        report.record("(b+_i)^(N_P+1) = 0", detail::max_abs(bd_pow * bd[i]));
    }

    // Spin images: agreement with the truncated matrices on the one-hot
    // subspace, and conservation of each site's total z spin.
    const std::size_t nq = layout.num_qubits();
    for (std::size_t i = 0; i < sites; ++i) {
        const Matrix image = to_matrix(boson_factor(layout, LadderFactor::create(i)), oracle_limit);
        report.record("one-hot image of b+_i matches truncated matrix",
                      detail::max_abs(restrict_to_one_hot(image, layout) - bd[i]));
        PauliSum total_z(nq);
        for (std::size_t n = 0; n <= n_max; ++n) {
            total_z.add(PauliString(nq, {{layout.qubit_index(i, n), PauliLetter::Z}}));
        }
        report.record("[b+_i, sum_n Z_(n,i)] = 0",
                      detail::max_abs(commutator(image, to_matrix(total_z, oracle_limit))));
        Matrix image_pow = Matrix::Identity(image.rows(), image.cols());
        for (std::size_t k = 0; k <= n_max; ++k) {
            image_pow = image_pow * image;
        }
        report.record("one-hot image of (b+_i)^(N_P+1) vanishes on the one-hot subspace",
                      detail::max_abs(restrict_to_one_hot(image_pow, layout)));
    }
    return report;
}

} // namespace spinmap
