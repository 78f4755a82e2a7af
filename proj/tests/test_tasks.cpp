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

#include "qfnn/tasks.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace qfnn;

namespace {
const double kPi = std::numbers::pi;
}

TEST_CASE("teleport oracle: cost vanishes on all six axis states") {
    TrainingTask task = build_teleport_task();
    const Network net = task.network.with_params(teleport_oracle_params());
    for (const auto& psi : axis_states()) {
        CHECK(task_cost(task, net, psi) <= 1e-10);
    }
}

TEST_CASE("teleport oracle: cost stays below 1e-9 on Haar-random states") {
    TrainingTask task = build_teleport_task();
    const Network net = task.network.with_params(teleport_oracle_params());
    const CostStats stats = evaluate_haar(task, net, 100, 7);
    CHECK(stats.max <= 1e-9);
}

TEST_CASE("teleport oracle: the output literally is the input state") {
    TrainingTask task = build_teleport_task();
    const Network net = task.network.with_params(teleport_oracle_params());
    std::mt19937_64 rng(81);
    for (int trial = 0; trial < 20; ++trial) {
        const DensityMatrix psi = sample_haar_state(1, rng);
        const DensityMatrix out = net.output_state(psi);
        CHECK(max_abs_diff(out.matrix(), psi.matrix()) <= 1e-10);
    }
}

TEST_CASE("teleport oracle: the sender's wire is left dephased, not the input") {
    TrainingTask task = build_teleport_task();
    const Network net = task.network.with_params(teleport_oracle_params());
    const DensityMatrix psi = plus_state();
    const int sender_wire[] = {0};
    const DensityMatrix left_behind = net.reduced_state(psi, net.elements().size(), sender_wire);
    // |+> has maximal coherence; what remains on the sender side has none.
    CHECK(std::abs(left_behind.matrix()(0, 1)) <= 1e-12);
    CHECK(max_abs_diff(left_behind.matrix(), psi.matrix()) > 0.4);
}

TEST_CASE("teleport oracle: removing the dephasing channels leaves cost zero") {
    // The correction neuron is controlled in the computational basis, so the
    // two Z-dephasings commute through it and do not affect the output.
    Network bare(3, {0}, {1, 2}, {2});
    bare.add_gate(ParamUnitary::general_n(2, std::vector<double>(16, 0.0)), {1, 2}, 1);
    bare.add_gate(ParamUnitary::general_n(2, std::vector<double>(16, 0.0)), {0, 1}, 2);
    bare.add_gate(ParamUnitary::neuron(2, std::vector<double>(32, 0.0)), {0, 1, 2}, 3);
    const Network net = bare.with_params(teleport_oracle_params());

    std::mt19937_64 rng(82);
    for (int trial = 0; trial < 20; ++trial) {
        const DensityMatrix psi = sample_haar_state(1, rng);
        const DensityMatrix out = net.output_state(psi);
        CHECK(max_abs_diff(out.matrix(), psi.matrix()) <= 1e-10);
    }
}

TEST_CASE("teleport task: identity parameters on |1> leave |0> at the output, cost 4") {
    TrainingTask task = build_teleport_task();
    CHECK(task.network.param_count() == 64);
    const DensityMatrix one = DensityMatrix::basis_state(1, 1);
    const DensityMatrix out = task.network.output_state(one);
    CHECK(max_abs_diff(out.matrix(), DensityMatrix::basis_state(1, 0).matrix()) <= 1e-12);
    CHECK(task_cost(task, task.network, one) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("teleport task: sampler draws valid single-qubit axis states") {
    TrainingTask task = build_teleport_task();
    std::mt19937_64 rng(83);
    for (int i = 0; i < 50; ++i) {
        const DensityMatrix psi = task.sample_input(rng);
        CHECK(psi.num_qubits() == 1);
        CHECK(std::abs(psi.purity() - 1.0) <= 1e-10);
    }
}

TEST_CASE("autoencoder task: parameter counts per outer family") {
    const auto inputs = autoencoder_input_preset("bell");
    const TrainingTask general = build_autoencoder_task(inputs);
    CHECK(general.network.param_count() == 80);

    AutoencoderOptions neuron_outer;
    neuron_outer.outer_family = UnitaryFamily::Neuron2;
    const TrainingTask restricted = build_autoencoder_task(inputs, neuron_outer);
    CHECK(restricted.network.param_count() == 72);
}

TEST_CASE("autoencoder task: rejects empty or non-two-qubit input sets") {
    CHECK_THROWS_AS((void)build_autoencoder_task({DensityMatrix::basis_state(1, 0)}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)build_autoencoder_task({}), std::invalid_argument);
}

TEST_CASE("autoencoder task: identity network scores 0 on |00> and 8 on |01>") {
    const TrainingTask task = build_autoencoder_task(autoencoder_input_preset("product"));
    // Outputs q4,q5 stay |00> through the identity template.
    CHECK(task_cost(task, task.network, DensityMatrix::basis_state(2, 0)) <= 1e-12);
    // Against |01>, the <Z> gap on the second output costs 4 via the 1xZ
    // term and 4 more via the ZxZ term.
    CHECK(task_cost(task, task.network, DensityMatrix::basis_state(2, 1)) ==
          doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("autoencoder task: diagonality penalty measures bottleneck coherence") {
    const auto inputs = autoencoder_input_preset("product");
    AutoencoderOptions with_penalty;
    with_penalty.diagonality_penalty = true;
    TrainingTask penalized = build_autoencoder_task(inputs, with_penalty);
    TrainingTask plain = build_autoencoder_task(inputs);
    REQUIRE(penalized.penalty != nullptr);

    // Zero parameters: bottleneck stays |0>, no coherence, no penalty.
    const DensityMatrix in00 = DensityMatrix::basis_state(2, 0);
    CHECK(penalized.penalty(penalized.network, in00) <= 1e-12);

    // Drive every T block of the bottleneck neuron to the |0> -> |+> map
    // (i(X+Z)/sqrt2, a Hadamard up to phase): penalty = <X>^2 = 1.
    auto params = penalized.network.flatten_params();
    const double a = kPi / (2 * std::numbers::sqrt2);
    for (int block = 0; block < 4; ++block) {
        params[16 + 4 * block + 1] = a;  // sigma1 coefficient
        params[16 + 4 * block + 3] = a;  // sigma3 coefficient
    }
    const Network bumped = penalized.network.with_params(params);
    CHECK(penalized.penalty(bumped, in00) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(task_cost(penalized, bumped, in00) ==
          doctest::Approx(task_cost(plain, bumped, in00) + 1.0).epsilon(1e-9));
}

TEST_CASE("autoencoder presets: shapes and overlaps") {
    const auto bell = autoencoder_input_preset("bell");
    const auto product = autoencoder_input_preset("product");
    const auto nonorth = autoencoder_input_preset("nonorthogonal");
    CHECK(bell.size() == 2);
    CHECK(product.size() == 2);
    CHECK(nonorth.size() == 2);
    // Orthogonal pairs: Tr(rho1 rho2) = 0; the non-orthogonal pair overlaps.
    CHECK(std::abs((bell[0].matrix() * bell[1].matrix()).trace().real()) <= 1e-12);
    CHECK(std::abs((product[0].matrix() * product[1].matrix()).trace().real()) <= 1e-12);
    CHECK((nonorth[0].matrix() * nonorth[1].matrix()).trace().real() ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS((void)autoencoder_input_preset("unknown"), std::invalid_argument);
}

TEST_CASE("landscape cost: exact solution at (pi/2, 0)") {
    CHECK(landscape_cost(kPi / 2, 0.0) <= 1e-12);
}

TEST_CASE("landscape cost: the CNOT point matches the expectation-table oracle") {
    // Independent route: dense 4x4 arithmetic from scratch.
    ComplexMatrix cnot = ComplexMatrix::Zero(4, 4);
    cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1;
    const double s = 1.0 / std::numbers::sqrt2;
    ComplexVector plus(2), minus(2), zero(2), one(2);
    plus << s, s;
    minus << s, -s;
    zero << 1, 0;
    one << 0, 1;

    double expected_cost = 0.0;
    const std::pair<ComplexVector, ComplexVector> cases[2] = {
        {tensor(plus, zero), tensor(plus, zero)},
        {tensor(minus, zero), tensor(minus, one)},
    };
    for (const auto& [in, target] : cases) {
        const ComplexVector out = cnot * in;
        const ComplexMatrix rho_out = out * out.adjoint();
        const ComplexMatrix rho_tgt = target * target.adjoint();
        for (int j = 1; j <= 3; ++j) {
            for (const PauliString& p : {PauliString{j, 0}, PauliString{0, j}}) {
                const double gap = oracles::expectation_reference(rho_out, p) -
                                   oracles::expectation_reference(rho_tgt, p);
                expected_cost += gap * gap;
            }
        }
    }
    CHECK(expected_cost == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(landscape_cost(0.0, 0.0) == doctest::Approx(expected_cost).epsilon(1e-10));
}

TEST_CASE("landscape scan: grid minimum sits in the zero-cost basin") {
    TrainConfig cfg;
    cfg.max_iterations = 0;
    const LandscapeResult result = landscape_scan(51, 51, 2.5, 2.5, cfg);
    CHECK(result.grid.size() == 51 * 51);

    const auto min_it = std::min_element(
        result.grid.begin(), result.grid.end(),
        [](const LandscapeGridPoint& a, const LandscapeGridPoint& b) { return a.cost < b.cost; });
    const double dtheta = kPi / 50;
    const double dphi = 2 * kPi / 50;
    const bool at_zero = std::abs(min_it->theta - kPi / 2) <= dtheta + 1e-12 &&
                         (std::abs(min_it->phi - 0.0) <= dphi + 1e-12 ||
                          std::abs(min_it->phi - 2 * kPi) <= dphi + 1e-12);
    CHECK(at_zero);
}

TEST_CASE("landscape scan: rows at phi = 0 and phi = 2 pi agree") {
    TrainConfig cfg;
    cfg.max_iterations = 0;
    const LandscapeResult result = landscape_scan(21, 21, 2.5, 2.5, cfg);
    for (int i = 0; i < 21; ++i) {
        const auto& first = result.grid[static_cast<std::size_t>(i) * 21];
        const auto& last = result.grid[static_cast<std::size_t>(i) * 21 + 20];
        CHECK(std::abs(first.cost - last.cost) <= 1e-12);
    }
}

TEST_CASE("landscape scan: descent path from (2.5, 2.5) reaches cost < 1e-4") {
    TrainConfig cfg;
    cfg.eta = 0.1;
    cfg.momentum = 0.9;
    cfg.cost_threshold = 1e-4;
    cfg.max_iterations = 2000;
    const LandscapeResult result = landscape_scan(2, 2, 2.5, 2.5, cfg);
    REQUIRE(!result.path.empty());
    CHECK(result.path.front().theta == 2.5);
    CHECK(result.path.front().phi == 2.5);
    CHECK(result.path.back().cost < 1e-4);
}

TEST_CASE("classical equivalence: OR, AND and random weight sets all match") {
    std::vector<WeightSet> sets;
    sets.push_back({"or", {1.0, 1.0}, 0.5});
    sets.push_back({"and", {1.0, 1.0}, 1.5});
    std::mt19937_64 rng(84);
    for (int i = 0; i < 100; ++i) {
        sets.push_back({"random", oracles::random_params(rng, 2, -2.0, 2.0), 0.5});
    }
    const ClassicalCheckReport report = classical_equivalence_check(sets);
    CHECK(report.all_match);
    CHECK(report.cases.size() == sets.size());
    for (const auto& c : report.cases) {
        CHECK(c.match);
        CHECK(c.first_mismatch == -1);
    }
}

TEST_CASE("classical equivalence: OR truth table spelled out") {
    // Independent classical evaluation of the four rows.
    CHECK(classical_neuron_output(std::vector<double>{1.0, 1.0}, 0.5, 0b00) == 0);
    CHECK(classical_neuron_output(std::vector<double>{1.0, 1.0}, 0.5, 0b01) == 1);
    CHECK(classical_neuron_output(std::vector<double>{1.0, 1.0}, 0.5, 0b10) == 1);
    CHECK(classical_neuron_output(std::vector<double>{1.0, 1.0}, 0.5, 0b11) == 1);
    // AND with threshold 1.5.
    CHECK(classical_neuron_output(std::vector<double>{1.0, 1.0}, 1.5, 0b01) == 0);
    CHECK(classical_neuron_output(std::vector<double>{1.0, 1.0}, 1.5, 0b11) == 1);
}

TEST_CASE("evaluate_costs: statistics over an explicit input list") {
    TrainingTask task = build_teleport_task();
    const Network net = task.network.with_params(teleport_oracle_params());
    const auto axis = axis_states();
    const std::vector<DensityMatrix> inputs(axis.begin(), axis.end());
    const CostStats stats = evaluate_costs(task, net, inputs);
    CHECK(stats.mean <= 1e-10);
    CHECK(stats.max <= 1e-10);
    CHECK(stats.stddev <= 1e-10);
}

TEST_CASE("wire labels document the network roles") {
    CHECK(!build_teleport_task().wire_labels.empty());
    CHECK(!build_autoencoder_task(autoencoder_input_preset("bell")).wire_labels.empty());
    CHECK(!build_landscape_task().wire_labels.empty());
}
