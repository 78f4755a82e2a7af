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

#include "qfnn/network.hpp"

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace qfnn {

/// One term of a cost function: a Pauli observable on the output register,
/// a target expectation and a non-negative weight. When match_source is set
/// the target is read off a reference state instead of the literal.
struct CostTerm {
    PauliString pauli;
    double desired = 0.0;
    double weight = 1.0;
    bool match_source = false;
};

/// Weighted sum of squared expectation gaps,
/// C = sum_t w_t (<P_t>_actual - <P_t>_desired)^2.
struct CostSpec {
    std::vector<CostTerm> terms;
    void validate() const;
};

double eval_cost(const CostSpec& spec, const DensityMatrix& actual);
double eval_cost(const CostSpec& spec, const DensityMatrix& actual, const DensityMatrix& source);

enum class GradientMode { Forward, Central };

struct TrainConfig {
    double eta = 0.02;             // learning rate
    double epsilon = 1e-4;         // finite-difference step
    double momentum = 0.9;         // velocity coefficient, in [0, 1)
    int max_iterations = 20000;
    double cost_threshold = 1e-4;  // stop when the running average drops below
    int avg_window = 50;           // window of the running average
    std::uint64_t seed = 1;
    GradientMode gradient_mode = GradientMode::Forward;
    int threads = 1;               // gradient components evaluated in parallel;
                                   // never changes numeric results
    double divergence_limit = 1e6;

    void validate() const;
};

using CostFn = std::function<double(std::span<const double>)>;

/// Component-wise finite differences. Forward mode evaluates the cost 1 + P
/// times, central mode 2P times, P = parameter count. Throws on non-finite
/// cost values.
std::vector<double> gradient_fd(const CostFn& cost, std::span<const double> params,
                                double epsilon, GradientMode mode, int threads = 1);

/// Forward-difference gradient reusing an already computed base cost, so a
/// training step stays at 1 + P evaluations total.
std::vector<double> gradient_fd_forward_with_base(const CostFn& cost,
                                                  std::span<const double> params,
                                                  double base_cost, double epsilon,
                                                  int threads = 1);

/// velocity' = momentum * velocity - eta * grad; params' = params + velocity'.
void descent_step(std::vector<double>& params, std::span<const double> grad, double eta,
                  double momentum, std::vector<double>& velocity);

/// A trainable experiment: a network template, a per-step input sampler, and
/// a builder that turns the sampled input into the cost spec for that step.
/// `penalty` may add cost pieces that are not a function of the output state
/// alone (e.g. constraints on an intermediate wire); it may be empty.
struct TrainingTask {
    explicit TrainingTask(Network net) : network(std::move(net)) {}

    std::string name;
    Network network;
    std::function<DensityMatrix(std::mt19937_64&)> sample_input;
    std::function<CostSpec(const DensityMatrix&)> build_cost;
    std::function<double(const Network&, const DensityMatrix&)> penalty;
    std::optional<std::vector<double>> initial_params;  // uniform [-1,1] when absent
    std::vector<std::pair<std::string, std::string>> wire_labels;
};

/// Cost of the task at one sampled input.
double task_cost(const TrainingTask& task, const Network& net, const DensityMatrix& input);

struct TrainResult {
    Network network;
    std::vector<double> cost_trace;  // cost at each step's sample, before the update
    bool converged = false;
    bool diverged = false;
};

/// Gradient descent on the flattened parameters: per step, sample an input,
/// evaluate the cost, take a finite-difference gradient at that sample, and
/// apply a momentum step. Deterministic given cfg.seed; the RNG is consumed
/// only in the sequential loop, never inside gradient evaluation.
TrainResult train(const TrainingTask& task, const TrainConfig& cfg);

}  // namespace qfnn
