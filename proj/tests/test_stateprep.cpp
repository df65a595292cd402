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

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "spinmap/simulator.hpp"
#include "spinmap/stateprep.hpp"

using namespace spinmap;

namespace {

cplx i_pow(std::size_t k) {
    static const cplx table[4] = {1.0, cplx{0, 1}, -1.0, cplx{0, -1}};
    return table[k % 4];
}

Vector prepared(const Circuit &c) { return run(c, StateVector::all_down(c.num_qubits())).amplitudes(); }

/// c+ M c with the reference fermion operators.
Matrix quadratic_oracle(const Matrix &M) {
    const auto n = static_cast<std::size_t>(M.rows());
    Matrix out = Matrix::Zero(1 << n, 1 << n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out += M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * oracle::fermion_create(n, i) *
                   oracle::fermion_annihilate(n, j);
        }
    }
    return out;
}

} // namespace

TEST_CASE("Majorana strings", "[stateprep]") {
    CHECK(majorana_string(3, 0) == PauliString::parse("X0", 3));
    CHECK(majorana_string(3, 2) == PauliString::parse("Z0 Z1 X2", 3));
    CHECK(majorana_string(3, 1) == PauliString::parse("- Z0 X1", 3));
    const Matrix c = oracle::fermion_annihilate(3, 1);
    CHECK(oracle::max_abs(to_matrix(majorana_string(3, 1)) - (c + c.adjoint())) < 1e-15);
}

TEST_CASE("Slater determinants", "[stateprep]") {
    SECTION("the empty determinant is the vacuum") {
        CHECK(prepare_slater({4, {}}).empty());
    }
    SECTION("one particle") {
        const Vector v = prepared(prepare_slater({3, {1}}));
        CHECK(oracle::max_abs(v - cplx{0, 1} * oracle::determinant(3, {1})) < 1e-14);
    }
    SECTION("creation order sets the sign") {
        const Vector a = prepared(prepare_slater({3, {0, 2}}));
        const Vector b = prepared(prepare_slater({3, {2, 0}}));
        CHECK(oracle::max_abs(a + b) < 1e-14);
        CHECK(oracle::max_abs(a - i_pow(2) * oracle::determinant(3, {0, 2})) < 1e-14);
    }
    SECTION("all determinants on four modes") {
        for (std::uint64_t mask = 0; mask < 16; ++mask) {
            std::vector<std::size_t> occ;
            for (std::size_t j = 0; j < 4; ++j) {
                if (mask >> j & 1u) {
                    occ.push_back(j);
                }
            }
            const Vector v = prepared(prepare_slater({4, occ}));
            CHECK(oracle::max_abs(v - i_pow(occ.size()) * oracle::determinant(4, occ)) < 1e-13);
        }
    }
    SECTION("invalid occupations") {
        CHECK_THROWS_AS(prepare_slater({3, {3}}), InvalidArgument);
        CHECK_THROWS_AS(prepare_slater({3, {1, 1}}), InvalidArgument);
    }
}

TEST_CASE("quadratic forms map to c+ M c", "[stateprep]") {
    Matrix M(3, 3);
    M << 0.3, cplx(0.1, 0.2), 0.0, cplx(0.1, -0.2), -0.5, 0.4, 0.0, 0.4, 0.2;
    CHECK(oracle::max_abs(to_matrix(quadratic_form(M)) - quadratic_oracle(M)) < 1e-13);
    Matrix bad = M;
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(quadratic_form(bad), NotHermitianError);
    CHECK_THROWS_AS(quadratic_form(Matrix(2, 3)), DimensionError);
}

TEST_CASE("Thouless rotations", "[stateprep]") {
    SECTION("M = 0 leaves the determinant") {
        const ThoulessSpec spec{{3, {0}}, Matrix::Zero(3, 3)};
        CHECK(thouless_rotate(spec) == prepare_slater(spec.base));
    }
    SECTION("diagonal M is exact in one step") {
        Matrix M = Matrix::Zero(3, 3);
        M(0, 0) = 0.7;
        M(1, 1) = -0.2;
        M(2, 2) = 1.1;
        const ThoulessSpec spec{{3, {0, 2}}, M};
        const Vector want = oracle::expi(quadratic_oracle(M), -1.0) * (i_pow(2) * oracle::determinant(3, {0, 2}));
        CHECK(oracle::max_abs(prepared(thouless_rotate(spec, 1)) - want) < 1e-13);
    }
    SECTION("hopping rotation converges to e^{-i c+ M c}") {
        Matrix M = Matrix::Zero(3, 3);
        M(0, 1) = M(1, 0) = 0.6;
        M(1, 2) = M(2, 1) = cplx{0.0, 0.3};
        M(2, 1) = cplx{0.0, -0.3};
        const ThoulessSpec spec{{3, {0}}, M};
        const Vector want = oracle::expi(quadratic_oracle(M), -1.0) * (cplx{0, 1} * oracle::determinant(3, {0}));
        const double err64 = (prepared(thouless_rotate(spec, 64)) - want).norm();
        const double err128 = (prepared(thouless_rotate(spec, 128)) - want).norm();
        CHECK(err64 < 1e-2);
        CHECK(err64 / err128 == Catch::Approx(2.0).margin(0.3));
        const ConvergedRotation conv = thouless_rotate_converged(spec, 16, 1e-8);
        CHECK(conv.steps > 16);
        const StateVector out = run(conv.circuit, StateVector::all_down(3));
        CHECK(std::norm(out.amplitudes().dot(want)) > 1.0 - 1e-6);
    }
    SECTION("size mismatch") {
        CHECK_THROWS_AS(thouless_rotate({{3, {0}}, Matrix::Zero(2, 2)}), DimensionError);
    }
}

TEST_CASE("linear combinations by post-selection", "[stateprep]") {
    const std::size_t n = 4;
    auto slater = [n](std::vector<std::size_t> occ) { return prepare_slater({n, std::move(occ)}); };
    auto target = [n](const std::vector<cplx> &g, const std::vector<std::vector<std::size_t>> &dets) {
        Vector v = Vector::Zero(1 << n);
        for (std::size_t k = 0; k < g.size(); ++k) {
            v += g[k] * i_pow(dets[k].size()) * oracle::determinant(n, dets[k]);
        }
        return Vector(v / v.norm());
    };
    auto check = [&](const std::vector<cplx> &g, const std::vector<std::vector<std::size_t>> &dets) {
        LinearCombinationSpec spec;
        spec.amplitudes = g;
        for (const auto &d : dets) {
            spec.branch_preps.push_back(slater(d));
        }
        const PostSelectedPrep prep = prepare_linear_combination(spec);
        CHECK(prep.ancilla_indices.size() == g.size());
        CHECK(prep.circuit.num_qubits() == n + g.size());
        for (const auto &gate : prep.circuit.gates()) {
            CHECK(is_elementary(gate));
        }
        const PostSelection sel = post_select(run(prep.circuit, StateVector::all_down(n + g.size())), prep.accept_pattern);
        REQUIRE_FALSE(sel.empty_branch());
        CHECK(sel.probability == Catch::Approx(prep.predicted_success_probability).margin(1e-12));
        const StateVector sys = reduce_register(*sel.state, prep.accept_pattern);
        CHECK(std::norm(sys.amplitudes().dot(target(g, dets))) == Catch::Approx(1.0).margin(1e-12));
    };
    SECTION("one branch") {
        check({1.0}, {{0, 1}});
    }
    SECTION("two branches with a relative phase") {
        check({1.0, cplx{0, 1}}, {{0, 1}, {2, 3}});
        check({0.6, cplx{0, -0.8}}, {{0, 1}, {2, 3}});
    }
    SECTION("four branches, complex amplitudes") {
        check({0.5, cplx{0.1, 0.4}, -0.3, cplx{0.0, -0.7}}, {{0, 1}, {2, 3}, {0, 2}, {1, 3}});
    }
    SECTION("a zero amplitude branch") {
        check({1.0, 0.0, 0.5}, {{0}, {1}, {2}});
    }
    SECTION("unnormalized input is rescaled") {
        check({3.0, 4.0}, {{0}, {3}});
    }
    SECTION("invalid specs") {
        LinearCombinationSpec empty;
        CHECK_THROWS_AS(prepare_linear_combination(empty), InvalidArgument);
        LinearCombinationSpec zeros{{0.0, 0.0}, {slater({0}), slater({1})}};
        CHECK_THROWS_AS(prepare_linear_combination(zeros), InvalidArgument);
        LinearCombinationSpec mismatch{{1.0}, {slater({0}), slater({1})}};
        CHECK_THROWS_AS(prepare_linear_combination(mismatch), InvalidArgument);
    }
}

TEST_CASE("relative phase between branches is observable", "[stateprep]") {
    auto run_lcu = [](cplx g1) {
        LinearCombinationSpec spec{{1.0, g1}, {prepare_slater({2, {0}}), prepare_slater({2, {1}})}};
        const PostSelectedPrep prep = prepare_linear_combination(spec);
        const PostSelection sel = post_select(run(prep.circuit, StateVector::all_down(4)), prep.accept_pattern);
        return reduce_register(*sel.state, prep.accept_pattern);
    };
    const StateVector a = run_lcu(cplx{0, 1});
    const StateVector b = run_lcu(cplx{0, -1});
    CHECK(fidelity(a, b) < 1e-12);
}

TEST_CASE("boson product states", "[stateprep]") {
    SECTION("small chain lands on the one-hot basis state") {
        const BosonProductSpec spec{{3, 2}, {2, 0, 1}, 3};
        const Vector v = prepared(prepare_boson_product(spec));
        const std::uint64_t idx = oracle::one_hot_index({2, 0, 1}, 2);
        CHECK(std::abs(v(static_cast<Eigen::Index>(idx)) - 1.0) < 1e-14);
        CHECK(v.norm() == Catch::Approx(1.0));
    }
    SECTION("large registers are described without simulation") {
        const BosonLayout layout{10, 3};
        std::vector<std::size_t> occ = {0, 1, 2, 3, 0, 1, 2, 3, 0, 1};
        const Circuit c = prepare_boson_product({layout, occ, std::nullopt});
        CHECK(c.num_qubits() == 40);
        REQUIRE(c.size() == 10);
        for (std::size_t i = 0; i < 10; ++i) {
            CHECK(std::get<RxGate>(c.gates()[i]) == RxGate{layout.qubit_index(i, occ[i]), std::numbers::pi});
        }
    }
    SECTION("invalid specs") {
        CHECK_THROWS_AS(prepare_boson_product({{2, 1}, {2, 0}, std::nullopt}), InvalidArgument);
        CHECK_THROWS_AS(prepare_boson_product({{2, 1}, {1}, std::nullopt}), InvalidArgument);
        CHECK_THROWS_AS(prepare_boson_product({{2, 1}, {1, 1}, 1}), InvalidArgument);
    }
}
