// Copyright 2026 The qfnn developers
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

#include "qfnn/unitaries.hpp"

#include "qfnn/pauli.hpp"
#include "qfnn/states.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace qfnn;

namespace {

const double kPi = std::numbers::pi;

ComplexMatrix cnot_matrix() {
    ComplexMatrix c = ComplexMatrix::Zero(4, 4);
    c(0, 0) = c(1, 1) = c(2, 3) = c(3, 2) = 1;
    return c;
}

}  // namespace

TEST_CASE("build_general_n: zero parameters give the identity") {
    const std::vector<double> alpha(16, 0.0);
    CHECK(max_abs_diff(build_general_n(alpha, 2), ComplexMatrix::Identity(4, 4)) <= 1e-15);
}

TEST_CASE("build_general_n: pure sigma3 generator is diagonal") {
    const std::vector<double> alpha = {0, 0, 0, kPi / 2};
    ComplexMatrix expected(2, 2);
    expected << std::exp(Complex{0, kPi / 2}), 0, 0, std::exp(Complex{0, -kPi / 2});
    CHECK(max_abs_diff(build_general_n(alpha, 1), expected) <= 1e-14);
}

TEST_CASE("build_general_n: matches assembling the generator by hand") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const auto alpha = oracles::random_params(rng, 16);
        ComplexMatrix h = ComplexMatrix::Zero(4, 4);
        for (int j1 = 0; j1 < 4; ++j1) {
            for (int j2 = 0; j2 < 4; ++j2) {
                h += alpha[4 * j1 + j2] * oracles::kron_reference(pauli(j1), pauli(j2));
            }
        }
        CHECK(max_abs_diff(build_general_n(alpha, 2), exp_ih(h)) <= 1e-10);
    }
}

TEST_CASE("build_general_n: rejects wrong parameter counts") {
    CHECK_THROWS_AS((void)build_general_n(std::vector<double>(15, 0.0), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)build_general_n(std::vector<double>(256, 0.0), 4),
                    std::invalid_argument);
}

TEST_CASE("build_single_qubit: zero parameters give the identity") {
    CHECK(max_abs_diff(build_single_qubit(0, 0, 0, 0), ComplexMatrix::Identity(2, 2)) == 0.0);
}

TEST_CASE("build_single_qubit: (0, pi/2, 0, 0) gives i sigma1") {
    CHECK(max_abs_diff(build_single_qubit(0, kPi / 2, 0, 0),
                       ComplexMatrix(Complex{0, 1} * pauli(1))) <= 1e-15);
}

TEST_CASE("build_single_qubit agrees with build_general_n at N = 1") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto a = oracles::random_params(rng, 4, -3.0, 3.0);
        const ComplexMatrix closed = build_single_qubit(a[0], a[1], a[2], a[3]);
        const ComplexMatrix general = build_general_n(a, 1);
        CHECK(max_abs_diff(closed, general) <= 1e-10);
    }
}

TEST_CASE("build_single_qubit: smooth through the omega -> 0 singularity") {
    for (double scale : {1e-5, 1e-7, 1e-9, 1e-12}) {
        const ComplexMatrix u = build_single_qubit(0.3, scale, scale, scale);
        CHECK(is_unitary(u, 1e-12));
        const std::vector<double> alpha = {0.3, scale, scale, scale};
        CHECK(max_abs_diff(u, build_general_n(alpha, 1)) <= 1e-12);
    }
}

TEST_CASE("build_neuron: identity blocks give the identity") {
    const std::vector<double> v(16, 0.0);
    const std::vector<double> t(16, 0.0);
    CHECK(max_abs_diff(build_neuron(2, v, t), ComplexMatrix::Identity(8, 8)) <= 1e-15);
}

TEST_CASE("build_neuron: computational V with an X block on |11> is the Toffoli") {
    const std::vector<double> v(16, 0.0);
    std::vector<double> t(16, 0.0);
    // T_11 = X: e^{-i pi/2} * exp(i pi/2 sigma1).
    t[12] = -kPi / 2;
    t[13] = kPi / 2;
    const ComplexMatrix u = build_neuron(2, v, t);
    ComplexMatrix toffoli = ComplexMatrix::Identity(8, 8);
    toffoli(6, 6) = toffoli(7, 7) = 0;
    toffoli(6, 7) = toffoli(7, 6) = 1;
    CHECK(max_abs_diff(u, toffoli) <= 1e-12);
}

TEST_CASE("build_neuron: block structure <tau_j, a| U |tau_k, b> = delta_jk T_j[a][b]") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const auto v_params = oracles::random_params(rng, 16);
        const auto t_params = oracles::random_params(rng, 16);
        const ComplexMatrix u = build_neuron(2, v_params, t_params);
        CHECK(is_unitary(u, 1e-10));

        const ComplexMatrix v = build_general_n(v_params, 2);
        for (int j = 0; j < 4; ++j) {
            const ComplexMatrix t_j = build_single_qubit(t_params[4 * j], t_params[4 * j + 1],
                                                         t_params[4 * j + 2], t_params[4 * j + 3]);
            for (int k = 0; k < 4; ++k) {
                for (int a = 0; a < 2; ++a) {
                    for (int b = 0; b < 2; ++b) {
                        const ComplexVector bra = tensor(v.col(j), basis_ket(1, a));
                        const ComplexVector ket = tensor(v.col(k), basis_ket(1, b));
                        const Complex elem = bra.dot(u * ket);
                        const Complex expected = j == k ? t_j(a, b) : Complex{0, 0};
                        CHECK(std::abs(elem - expected) <= 1e-11);
                    }
                }
            }
        }
    }
}

TEST_CASE("build_neuron: rejects wrong block counts") {
    CHECK_THROWS_AS((void)build_neuron(2, std::vector<double>(16, 0.0),
                                       std::vector<double>(12, 0.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)build_neuron(1, std::vector<double>(16, 0.0),
                                       std::vector<double>(8, 0.0)),
                    std::invalid_argument);
}

TEST_CASE("build_neuron: computational-basis V keeps the matrix block diagonal") {
    std::mt19937_64 rng(44);
    const std::vector<double> v(16, 0.0);
    const auto t = oracles::random_params(rng, 16);
    const ComplexMatrix u = build_neuron(2, v, t);
    for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) {
            if ((r >> 1) != (c >> 1)) {
                CHECK(std::abs(u(r, c)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("build_two_param: theta = 0 is the CNOT") {
    CHECK(max_abs_diff(build_two_param(0, 0), cnot_matrix()) <= 1e-15);
}

TEST_CASE("build_two_param: theta = pi flips the target on control |0>") {
    ComplexMatrix anti = ComplexMatrix::Zero(4, 4);
    anti(0, 1) = anti(1, 0) = anti(2, 2) = anti(3, 3) = 1;
    CHECK(max_abs_diff(build_two_param(kPi, 0), anti) <= 1e-15);
}

TEST_CASE("build_two_param: (pi/2, 0) flips the target exactly on |-> control") {
    const ComplexMatrix u = build_two_param(kPi / 2, 0);
    ComplexVector plus(2), minus(2);
    const double s = 1.0 / std::numbers::sqrt2;
    plus << s, s;
    minus << s, -s;
    const ComplexVector in_plus = tensor(plus, basis_ket(1, 0));
    const ComplexVector in_minus = tensor(minus, basis_ket(1, 0));
    CHECK((u * in_plus - in_plus).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((u * in_minus - tensor(minus, basis_ket(1, 1))).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("build_two_param: 2 pi periodic in phi") {
    CHECK(max_abs_diff(build_two_param(1.1, 0.4), build_two_param(1.1, 0.4 + 2 * kPi)) <= 1e-14);
}

TEST_CASE("classical permutation: OR truth table for w=(1,1), t=0.5") {
    const std::vector<double> w = {1, 1};
    const ComplexMatrix p = build_classical_neuron_permutation(w, 0.5);
    // |in1 in2 0> -> |in1 in2 out>: inputs 000,010,100,110 map to out 0,1,1,1.
    CHECK(p(0, 0) == Complex{1, 0});
    CHECK(p(3, 2) == Complex{1, 0});
    CHECK(p(5, 4) == Complex{1, 0});
    CHECK(p(7, 6) == Complex{1, 0});
}

TEST_CASE("classical permutation: w=(1,-1), t=0.5 fires only on (1,0)") {
    const std::vector<double> w = {1, -1};
    const ComplexMatrix p = build_classical_neuron_permutation(w, 0.5);
    CHECK(p(1, 0) == Complex{0, 0});
    CHECK(p(0, 0) == Complex{1, 0});  // (0,0) -> 0
    CHECK(p(2, 2) == Complex{1, 0});  // (0,1) -> 0
    CHECK(p(5, 4) == Complex{1, 0});  // (1,0) -> 1
    CHECK(p(6, 6) == Complex{1, 0});  // (1,1) -> 0
}

TEST_CASE("classical permutation: always a 0/1 matrix with one 1 per row and column") {
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 4)(rng);
        const auto w = oracles::random_params(rng, n, -2.0, 2.0);
        const ComplexMatrix p = build_classical_neuron_permutation(w, 0.5);
        CHECK(oracles::is_permutation_matrix(p));
        CHECK(is_unitary(p, 0.0));
    }
}

TEST_CASE("fan_out_cnot_params reproduce the CNOT exactly") {
    const ComplexMatrix u = build_general_n(fan_out_cnot_params(), 2);
    CHECK(phase_aligned_diff(u, cnot_matrix()) <= 1e-10);
    for (Eigen::Index r = 0; r < 4; ++r) {
        for (Eigen::Index c = 0; c < 4; ++c) {
            CHECK(std::abs(std::abs(u(r, c)) - std::abs(cnot_matrix()(r, c))) <= 1e-10);
        }
    }
}

TEST_CASE("fan-out CNOT copies basis states and entangles |+>") {
    const ComplexMatrix u = build_general_n(fan_out_cnot_params(), 2);
    ComplexVector in00 = basis_ket(2, 0);
    ComplexVector in10 = basis_ket(2, 2);
    CHECK(phase_aligned_diff(ComplexMatrix(u * in00), ComplexMatrix(basis_ket(2, 0))) <= 1e-12);
    CHECK(phase_aligned_diff(ComplexMatrix(u * in10), ComplexMatrix(basis_ket(2, 3))) <= 1e-12);

    ComplexVector plus0(4);
    const double s = 1.0 / std::numbers::sqrt2;
    plus0 << s, 0, s, 0;  // (|0> + |1>)/sqrt2 x |0>
    ComplexVector bell(4);
    bell << s, 0, 0, s;
    CHECK(phase_aligned_diff(ComplexMatrix(u * plus0), ComplexMatrix(bell)) <= 1e-12);
}

TEST_CASE("every family builds a unitary across random parameter draws") {
    std::mt19937_64 rng(46);
    const int draws = 200;  // the acceptance suite runs the full 10^4 sweep
    for (int trial = 0; trial < draws; ++trial) {
        CHECK(is_unitary(build_general_n(oracles::random_params(rng, 16), 2), 1e-10));
        CHECK(is_unitary(build_general_n(oracles::random_params(rng, 64), 3), 1e-10));
        const auto sq = oracles::random_params(rng, 4);
        CHECK(is_unitary(build_single_qubit(sq[0], sq[1], sq[2], sq[3]), 1e-10));
        CHECK(is_unitary(build_neuron(2, oracles::random_params(rng, 16),
                                      oracles::random_params(rng, 16)),
                         1e-10));
        CHECK(is_unitary(build_neuron(1, oracles::random_params(rng, 4),
                                      oracles::random_params(rng, 8)),
                         1e-10));
        const auto tp = oracles::random_params(rng, 2, -6.0, 6.0);
        CHECK(is_unitary(build_two_param(tp[0], tp[1]), 1e-12));
    }
}

TEST_CASE("ParamUnitary validates parameter counts per family") {
    CHECK_THROWS_AS((void)ParamUnitary::general_n(2, std::vector<double>(4, 0.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)ParamUnitary::neuron(2, std::vector<double>(12, 0.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)ParamUnitary::neuron(3, std::vector<double>(32, 0.0)),
                    std::invalid_argument);
    CHECK(ParamUnitary::neuron(2, std::vector<double>(32, 0.0)).family == UnitaryFamily::Neuron3);
    CHECK(ParamUnitary::neuron(1, std::vector<double>(12, 0.0)).family == UnitaryFamily::Neuron2);
    CHECK(param_count(UnitaryFamily::ClassicalPermutation, 3) == 0);
}

TEST_CASE("family names round-trip") {
    for (auto family : {UnitaryFamily::GeneralN, UnitaryFamily::Neuron3, UnitaryFamily::Neuron2,
                        UnitaryFamily::SingleQubit, UnitaryFamily::TwoParam,
                        UnitaryFamily::FanOut2, UnitaryFamily::ClassicalPermutation}) {
        CHECK(family_from_name(family_name(family)) == family);
    }
    CHECK_THROWS_AS((void)family_from_name("bogus"), std::invalid_argument);
}
