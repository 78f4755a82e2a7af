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

#include "qfnn/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qfnn {

namespace {

// Project a Hermitian generator onto the N-qubit Pauli basis:
// alpha_j = Tr(P_j H) / 2^N.
std::vector<double> pauli_coefficients(const ComplexMatrix& h, int num_qubits) {
    const int count = 1 << (2 * num_qubits);
    const double scale = 1.0 / static_cast<double>(Eigen::Index{1} << num_qubits);
    std::vector<double> alpha(count);
    std::vector<int> digits(num_qubits);
    for (int idx = 0; idx < count; ++idx) {
        for (int w = 0; w < num_qubits; ++w) {
            digits[w] = (idx >> (2 * (num_qubits - 1 - w))) & 3;
        }
        const ComplexMatrix p = pauli_string_matrix(PauliString(digits));
        alpha[idx] = ((p * h).trace() * scale).real();
    }
    return alpha;
}

// GeneralN(2) parameters reproducing `target` up to global phase, via the
// principal logarithm. Throws if the reconstruction misses 1e-9.
std::vector<double> general2_params_for(const ComplexMatrix& target) {
    const ComplexMatrix h = principal_generator(target);
    std::vector<double> alpha = pauli_coefficients(h, 2);
    const ComplexMatrix rebuilt = build_general_n(alpha, 2);
    if (phase_aligned_diff(rebuilt, target) > 1e-9) {
        throw std::logic_error("general2_params_for: generator does not reproduce the target");
    }
    return alpha;
}

ComplexMatrix hadamard() {
    ComplexMatrix h(2, 2);
    const double s = 1.0 / std::numbers::sqrt2;
    h << s, s, s, -s;
    return h;
}

ComplexMatrix cnot() {
    ComplexMatrix c = ComplexMatrix::Zero(4, 4);
    c(0, 0) = 1;
    c(1, 1) = 1;
    c(2, 3) = 1;
    c(3, 2) = 1;
    return c;
}

CostSpec match_all_pauli_pairs() {
    CostSpec spec;
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
            spec.terms.push_back({PauliString{j, k}, 0.0, 1.0, /*match_source=*/true});
        }
    }
    return spec;
}

CostSpec match_single_qubit_paulis() {
    CostSpec spec;
    for (int j = 0; j < 4; ++j) {
        spec.terms.push_back({PauliString{j}, 0.0, 1.0, /*match_source=*/true});
    }
    return spec;
}

// Local-Pauli targets of a 2-qubit product state, as literal terms.
CostSpec local_pauli_targets(const DensityMatrix& target) {
    CostSpec spec;
    for (int j = 1; j <= 3; ++j) {
        spec.terms.push_back({PauliString{j, 0}, target.expectation(PauliString{j, 0}), 1.0});
        spec.terms.push_back({PauliString{0, j}, target.expectation(PauliString{0, j}), 1.0});
    }
    return spec;
}

}  // namespace

TrainingTask build_autoencoder_task(std::vector<DensityMatrix> input_set,
                                    const AutoencoderOptions& options) {
    if (input_set.empty()) {
        throw std::invalid_argument("build_autoencoder_task: input set must be non-empty");
    }
    for (const auto& state : input_set) {
        if (state.num_qubits() != 2) {
            throw std::invalid_argument("build_autoencoder_task: inputs must be 2-qubit states");
        }
    }
    if (options.outer_family != UnitaryFamily::GeneralN &&
        options.outer_family != UnitaryFamily::Neuron2) {
        throw std::invalid_argument(
            "build_autoencoder_task: outer family must be GeneralN or Neuron2");
    }

    Network net(6, {0, 1}, {2, 3, 4, 5}, {4, 5});
    net.add_gate(ParamUnitary::neuron(2, std::vector<double>(32, 0.0)), {0, 1, 2}, 1);
    net.add_gate(ParamUnitary::fan_out(std::vector<double>(16, 0.0)), {2, 3}, 2);
    if (options.outer_family == UnitaryFamily::GeneralN) {
        net.add_gate(ParamUnitary::general_n(2, std::vector<double>(16, 0.0)), {2, 4}, 3);
        net.add_gate(ParamUnitary::general_n(2, std::vector<double>(16, 0.0)), {3, 5}, 3);
    } else {
        net.add_gate(ParamUnitary::neuron(1, std::vector<double>(12, 0.0)), {2, 4}, 3);
        net.add_gate(ParamUnitary::neuron(1, std::vector<double>(12, 0.0)), {3, 5}, 3);
    }

    TrainingTask task(std::move(net));
    task.name = "autoencoder";
    task.sample_input = [inputs = input_set](std::mt19937_64& rng) {
        std::uniform_int_distribution<std::size_t> pick(0, inputs.size() - 1);
        return inputs[pick(rng)];
    };
    task.build_cost = [spec = match_all_pauli_pairs()](const DensityMatrix&) { return spec; };
    if (options.diagonality_penalty) {
        task.penalty = [](const Network& n, const DensityMatrix& input) {
            const int bottleneck[] = {2};
            const DensityMatrix mid = n.reduced_state(input, 1, bottleneck);
            const double x = mid.expectation(PauliString{1});
            const double y = mid.expectation(PauliString{2});
            return x * x + y * y;
        };
    }
    task.wire_labels = {
        {"q0", "in1"},          {"q1", "in2"},          {"q2", "bottleneck"},
        {"q3", "fan-out copy"}, {"q4", "out1 (port 6)"}, {"q5", "out2 (port 8)"},
    };
    return task;
}

std::vector<DensityMatrix> autoencoder_input_preset(std::string_view name) {
    if (name == "bell") {
        return {bell_phi_plus(), bell_phi_minus()};
    }
    if (name == "product") {
        return {DensityMatrix::basis_state(2, 0), DensityMatrix::basis_state(2, 1)};
    }
    if (name == "nonorthogonal") {
        ComplexVector psi(4);
        const double s = 1.0 / std::numbers::sqrt2;
        psi << s, s, 0, 0;
        return {DensityMatrix::basis_state(2, 0), DensityMatrix::from_ket(psi)};
    }
    throw std::invalid_argument("autoencoder_input_preset: unknown preset name");
}

TrainingTask build_teleport_task() {
    Network net(3, {0}, {1, 2}, {2});
    net.add_gate(ParamUnitary::general_n(2, std::vector<double>(16, 0.0)), {1, 2}, 1);
    net.add_gate(ParamUnitary::general_n(2, std::vector<double>(16, 0.0)), {0, 1}, 2);
    net.add_dephase(0, 2);
    net.add_dephase(1, 2);
    net.add_gate(ParamUnitary::neuron(2, std::vector<double>(32, 0.0)), {0, 1, 2}, 3);

    TrainingTask task(std::move(net));
    task.name = "teleport";
    task.sample_input = [states = axis_states()](std::mt19937_64& rng) {
        std::uniform_int_distribution<int> pick(0, 5);
        return states[pick(rng)];
    };
    task.build_cost = [spec = match_single_qubit_paulis()](const DensityMatrix&) { return spec; };
    task.wire_labels = {
        {"q0", "sender state in"},
        {"q1", "sender ancilla"},
        {"q2", "receiver out (port 6)"},
    };
    return task;
}

std::vector<double> teleport_oracle_params() {
    const ComplexMatrix h_first = tensor(hadamard(), pauli(0));
    // Resource preparation: |00> -> Bell pair on the receiver side.
    const std::vector<double> alpha_resource = general2_params_for(cnot() * h_first);
    // Sender rotation into the correction basis.
    const std::vector<double> alpha_sender = general2_params_for(h_first * cnot());

    std::vector<double> params;
    params.reserve(64);
    params.insert(params.end(), alpha_resource.begin(), alpha_resource.end());
    params.insert(params.end(), alpha_sender.begin(), alpha_sender.end());

    // Correction neuron: V = identity, T_ab = Z^a X^b in closed form.
    const double half_pi = std::numbers::pi / 2;
    std::vector<double> correction(16, 0.0);                       // V = 1
    params.insert(params.end(), correction.begin(), correction.end());
    const double t_blocks[4][4] = {
        {0, 0, 0, 0},                // T_00 = 1
        {-half_pi, half_pi, 0, 0},   // T_01 = X
        {-half_pi, 0, 0, half_pi},   // T_10 = Z
        {0, 0, half_pi, 0},          // T_11 = Z X (= i sigma_2)
    };
    for (const auto& block : t_blocks) {
        params.insert(params.end(), block, block + 4);
    }
    return params;
}

TrainingTask build_landscape_task(double start_theta, double start_phi) {
    Network net(2, {0}, {1}, {0, 1});
    net.add_gate(ParamUnitary::two_param(start_theta, start_phi), {0, 1}, 1);

    const DensityMatrix in_plus = plus_state();
    const DensityMatrix in_minus = minus_state();
    const DensityMatrix target_plus = in_plus.tensor_with(DensityMatrix::basis_state(1, 0));
    const DensityMatrix target_minus = in_minus.tensor_with(DensityMatrix::basis_state(1, 1));

    TrainingTask task(std::move(net));
    task.name = "landscape";
    task.initial_params = std::vector<double>{start_theta, start_phi};
    task.sample_input = [in_plus, in_minus](std::mt19937_64& rng) {
        std::uniform_int_distribution<int> pick(0, 1);
        return pick(rng) == 0 ? in_plus : in_minus;
    };
    task.build_cost = [spec_plus = local_pauli_targets(target_plus),
                       spec_minus = local_pauli_targets(target_minus)](const DensityMatrix& in) {
        return in.expectation(PauliString{1}) > 0 ? spec_plus : spec_minus;
    };
    task.wire_labels = {{"q0", "control in/out"}, {"q1", "dummy -> output"}};
    return task;
}

double landscape_cost(double theta, double phi) {
    static const TrainingTask task = build_landscape_task();
    static const DensityMatrix in_plus = plus_state();
    static const DensityMatrix in_minus = minus_state();
    const double p[] = {theta, phi};
    const Network net = task.network.with_params(p);
    return task_cost(task, net, in_plus) + task_cost(task, net, in_minus);
}

LandscapeResult landscape_scan(int grid_theta, int grid_phi, double start_theta,
                               double start_phi, const TrainConfig& cfg) {
    if (grid_theta < 2 || grid_phi < 2) {
        throw std::invalid_argument("landscape_scan: grid must be at least 2x2");
    }
    cfg.validate();

    LandscapeResult result;
    result.grid.reserve(static_cast<std::size_t>(grid_theta) * grid_phi);
    const double pi = std::numbers::pi;
    for (int i = 0; i < grid_theta; ++i) {
        const double theta = pi * i / (grid_theta - 1);
        for (int j = 0; j < grid_phi; ++j) {
            const double phi = 2 * pi * j / (grid_phi - 1);
            result.grid.push_back({theta, phi, landscape_cost(theta, phi)});
        }
    }

    const CostFn cost = [](std::span<const double> p) { return landscape_cost(p[0], p[1]); };
    std::vector<double> point = {start_theta, start_phi};
    std::vector<double> velocity(2, 0.0);
    double current = cost(point);
    result.path.push_back({0, point[0], point[1], current});
    for (int step = 1; step <= cfg.max_iterations; ++step) {
        if (current < cfg.cost_threshold) {
            break;
        }
        const auto grad = gradient_fd(cost, point, cfg.epsilon, cfg.gradient_mode, 1);
        descent_step(point, grad, cfg.eta, cfg.momentum, velocity);
        current = cost(point);
        result.path.push_back({step, point[0], point[1], current});
    }
    return result;
}

int classical_neuron_output(std::span<const double> weights, double threshold,
                            std::uint64_t input_bits) {
    const int n = static_cast<int>(weights.size());
    double z = 0;
    for (int w = 0; w < n; ++w) {
        z += weights[w] * wire_bit(input_bits, w, n);
    }
    return z > threshold ? 1 : 0;
}

ClassicalCheckReport classical_equivalence_check(std::span<const WeightSet> sets) {
    ClassicalCheckReport report;
    report.all_match = true;
    for (const auto& set : sets) {
        const int n = static_cast<int>(set.weights.size());
        if (n < 1 || n + 1 > kMaxQubits) {
            throw std::invalid_argument("classical_equivalence_check: bad weight count");
        }
        std::vector<int> inputs(n);
        for (int w = 0; w < n; ++w) {
            inputs[w] = w;
        }
        Network net(n + 1, inputs, {n}, {n});
        net.add_gate(ParamUnitary::classical_permutation(set.weights, set.threshold),
                     [&] {
                         std::vector<int> wires(n + 1);
                         for (int w = 0; w <= n; ++w) {
                             wires[w] = w;
                         }
                         return wires;
                     }(),
                     1);

        ClassicalCheckCase result{set, true, -1};
        for (std::uint64_t in = 0; in < (std::uint64_t{1} << n); ++in) {
            const int expected = classical_neuron_output(set.weights, set.threshold, in);
            const DensityMatrix out = net.output_state(DensityMatrix::basis_state(n, in));
            const double z = out.expectation(PauliString{3});
            const int actual = z < 0 ? 1 : 0;
            if (actual != expected || std::abs(z - (1 - 2 * expected)) != 0.0) {
                result.match = false;
                result.first_mismatch = static_cast<std::int64_t>(in);
                break;
            }
        }
        report.all_match = report.all_match && result.match;
        report.cases.push_back(std::move(result));
    }
    return report;
}

CostStats evaluate_costs(const TrainingTask& task, const Network& net,
                         std::span<const DensityMatrix> inputs) {
    if (inputs.empty()) {
        throw std::invalid_argument("evaluate_costs: input list must be non-empty");
    }
    std::vector<double> costs;
    costs.reserve(inputs.size());
    for (const auto& input : inputs) {
        costs.push_back(task_cost(task, net, input));
    }
    CostStats stats;
    for (double c : costs) {
        stats.mean += c;
        stats.max = std::max(stats.max, c);
    }
    stats.mean /= static_cast<double>(costs.size());
    double var = 0;
    for (double c : costs) {
        var += (c - stats.mean) * (c - stats.mean);
    }
    stats.stddev = std::sqrt(var / static_cast<double>(costs.size()));
    return stats;
}

CostStats evaluate_haar(const TrainingTask& task, const Network& net, int num_samples,
                        std::uint64_t seed) {
    if (num_samples < 1) {
        throw std::invalid_argument("evaluate_haar: need at least one sample");
    }
    std::mt19937_64 rng(seed);
    const int arity = static_cast<int>(task.network.input_wires().size());
    std::vector<DensityMatrix> inputs;
    inputs.reserve(num_samples);
    for (int i = 0; i < num_samples; ++i) {
        inputs.push_back(sample_haar_state(arity, rng));
    }
    return evaluate_costs(task, net, inputs);
}

}  // namespace qfnn
