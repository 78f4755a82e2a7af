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

#pragma once

#include "qfnn/states.hpp"
#include "qfnn/training.hpp"

#include <span>
#include <string_view>

namespace qfnn {

struct AutoencoderOptions {
    /// Adds <sigma_1> and <sigma_2> terms (target 0) on the bottleneck wire,
    /// evaluated right after the bottleneck neuron, pushing the compressed
    /// qubit towards the computational basis.
    bool diagonality_penalty = false;

    /// Family of the two reconstruction gates. General 2-qubit unitaries by
    /// default: the controlled neuron form cannot re-entangle the two output
    /// wires (its output across them is always separable), so entangled
    /// input pairs are only reachable with the general form.
    UnitaryFamily outer_family = UnitaryFamily::GeneralN;
};

/// Two-qubit compression network: inputs q0,q1 feed a 2-control neuron with
/// bottleneck target q2; a fan-out distributes q2 to q3; two reconstruction
/// gates drive the outputs (q4, q5). The cost compares all 16 two-qubit
/// Pauli expectations of the output against the sampled input.
TrainingTask build_autoencoder_task(std::vector<DensityMatrix> input_set,
                                    const AutoencoderOptions& options = {});

/// Named input pairs: "bell" = (|00>+|11>)/sqrt2 and (|00>-|11>)/sqrt2,
/// "product" = |00> and |01>, "nonorthogonal" = |00> and (|00>+|01>)/sqrt2.
std::vector<DensityMatrix> autoencoder_input_preset(std::string_view name);

/// Three-wire state-transfer network: q0 carries the state to send, a
/// general 2-qubit gate prepares a shared resource on (q1, q2), another
/// rotates (q0, q1), both of the sender's wires are Z-dephased (classical
/// communication only), and a 2-control neuron corrects q2. Inputs are
/// sampled from the six Bloch-axis states; the cost matches the four Pauli
/// expectations of q2 against the input.
TrainingTask build_teleport_task();

/// Hand-constructed parameters that make the teleport network execute the
/// standard protocol exactly: resource gate = Bell-pair preparation, sender
/// gate = Bell-basis rotation, correction blocks T_ab = Z^a X^b. The two
/// general-gate generators are recovered from the target unitaries by a
/// principal matrix logarithm and verified to 1e-9.
std::vector<double> teleport_oracle_params();

/// One-neuron task behind the cost-landscape scan: a two-angle unitary must
/// send |+>|0> to |+>|0> and |->|0> to |->|1>. Cost sums the local Pauli
/// gaps on both wires over both inputs; (theta, phi) = (pi/2, 0) solves it
/// exactly.
TrainingTask build_landscape_task(double start_theta = 2.5, double start_phi = 2.5);

/// Summed two-input landscape cost at one point.
double landscape_cost(double theta, double phi);

struct LandscapeGridPoint {
    double theta = 0, phi = 0, cost = 0;
};
struct LandscapePathPoint {
    int step = 0;
    double theta = 0, phi = 0, cost = 0;
};
struct LandscapeResult {
    std::vector<LandscapeGridPoint> grid;  // theta-major, phi minor
    std::vector<LandscapePathPoint> path;  // descent from the start point
};

/// Samples the cost surface on an inclusive [0,pi] x [0,2pi] grid and runs
/// a finite-difference descent path from the given start. The path stops
/// when the cost drops below cfg.cost_threshold or the iteration budget
/// runs out.
LandscapeResult landscape_scan(int grid_theta, int grid_phi, double start_theta,
                               double start_phi, const TrainConfig& cfg);

/// Heaviside neuron output for one basis input (strict threshold).
int classical_neuron_output(std::span<const double> weights, double threshold,
                            std::uint64_t input_bits);

struct WeightSet {
    std::string name;
    std::vector<double> weights;
    double threshold = 0.5;
};

struct ClassicalCheckCase {
    WeightSet set;
    bool match = false;
    std::int64_t first_mismatch = -1;  // basis input index, -1 when all rows agree
};

struct ClassicalCheckReport {
    std::vector<ClassicalCheckCase> cases;
    bool all_match = false;
};

/// For each weight set, compares the truth table of the Heaviside neuron
/// against the quantum network running the matching permutation gate on
/// computational-basis inputs. Matches must be exact.
ClassicalCheckReport classical_equivalence_check(std::span<const WeightSet> sets);

struct CostStats {
    double mean = 0, stddev = 0, max = 0;
};

/// Task cost statistics of a trained network over a fixed input list.
CostStats evaluate_costs(const TrainingTask& task, const Network& net,
                         std::span<const DensityMatrix> inputs);

/// Task cost statistics over Haar-random pure inputs of the task's arity.
CostStats evaluate_haar(const TrainingTask& task, const Network& net, int num_samples,
                        std::uint64_t seed);

}  // namespace qfnn
