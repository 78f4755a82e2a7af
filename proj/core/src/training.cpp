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

#include "qfnn/training.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace qfnn {

void CostSpec::validate() const {
    if (terms.empty()) {
        throw std::invalid_argument("CostSpec: at least one term required");
    }
    for (const auto& t : terms) {
        t.pauli.validate();
        if (t.weight < 0) {
            throw std::invalid_argument("CostSpec: weights must be non-negative");
        }
        // Targets derived from expectations can overshoot by rounding;
        // allow the same slack pauli expectations carry.
        if (!t.match_source && (t.desired < -1.0 - 1e-9 || t.desired > 1.0 + 1e-9)) {
            throw std::invalid_argument("CostSpec: literal targets must lie in [-1, 1]");
        }
    }
}

namespace {

double eval_cost_impl(const CostSpec& spec, const DensityMatrix& actual,
                      const DensityMatrix* source) {
    spec.validate();
    double cost = 0.0;
    for (const auto& t : spec.terms) {
        double desired = t.desired;
        if (t.match_source) {
            if (source == nullptr) {
                throw std::invalid_argument("eval_cost: term needs a source state");
            }
            desired = source->expectation(t.pauli);
        }
        const double gap = actual.expectation(t.pauli) - desired;
        cost += t.weight * gap * gap;
    }
    return cost;
}

void run_indexed(int count, int threads, const std::function<void(int)>& body) {
    if (threads <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    const int workers = std::min(threads, count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            for (int i = t; i < count; i += workers) {
                body(i);
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
}

void check_finite(double value) {
    if (!std::isfinite(value)) {
        throw std::runtime_error("gradient_fd: cost function returned a non-finite value");
    }
}

}  // namespace

double eval_cost(const CostSpec& spec, const DensityMatrix& actual) {
    return eval_cost_impl(spec, actual, nullptr);
}

double eval_cost(const CostSpec& spec, const DensityMatrix& actual, const DensityMatrix& source) {
    return eval_cost_impl(spec, actual, &source);
}

void TrainConfig::validate() const {
    if (eta < 0) {
        throw std::invalid_argument("TrainConfig: eta must be non-negative");
    }
    if (epsilon <= 0) {
        throw std::invalid_argument("TrainConfig: epsilon must be positive");
    }
    if (momentum < 0 || momentum >= 1) {
        throw std::invalid_argument("TrainConfig: momentum must lie in [0, 1)");
    }
    if (max_iterations < 0) {
        throw std::invalid_argument("TrainConfig: max_iterations must be non-negative");
    }
    if (avg_window < 1) {
        throw std::invalid_argument("TrainConfig: avg_window must be positive");
    }
    if (threads < 1) {
        throw std::invalid_argument("TrainConfig: threads must be positive");
    }
}

std::vector<double> gradient_fd_forward_with_base(const CostFn& cost,
                                                  std::span<const double> params,
                                                  double base_cost, double epsilon,
                                                  int threads) {
    if (epsilon <= 0) {
        throw std::invalid_argument("gradient_fd: epsilon must be positive");
    }
    check_finite(base_cost);
    const int count = static_cast<int>(params.size());
    std::vector<double> grad(count, 0.0);
    run_indexed(count, threads, [&](int i) {
        std::vector<double> shifted(params.begin(), params.end());
        shifted[i] += epsilon;
        const double up = cost(shifted);
        check_finite(up);
        grad[i] = (up - base_cost) / epsilon;
    });
    return grad;
}

std::vector<double> gradient_fd(const CostFn& cost, std::span<const double> params,
                                double epsilon, GradientMode mode, int threads) {
    if (epsilon <= 0) {
        throw std::invalid_argument("gradient_fd: epsilon must be positive");
    }
    if (mode == GradientMode::Forward) {
        const double base = cost(params);
        return gradient_fd_forward_with_base(cost, params, base, epsilon, threads);
    }
    const int count = static_cast<int>(params.size());
    std::vector<double> grad(count, 0.0);
    run_indexed(count, threads, [&](int i) {
        std::vector<double> shifted(params.begin(), params.end());
        shifted[i] += epsilon;
        const double up = cost(shifted);
        shifted[i] = params[i] - epsilon;
        const double down = cost(shifted);
        check_finite(up);
        check_finite(down);
        grad[i] = (up - down) / (2 * epsilon);
    });
    return grad;
}

void descent_step(std::vector<double>& params, std::span<const double> grad, double eta,
                  double momentum, std::vector<double>& velocity) {
    if (params.size() != grad.size() || params.size() != velocity.size()) {
        throw std::invalid_argument("descent_step: vector length mismatch");
    }
    for (std::size_t i = 0; i < params.size(); ++i) {
        velocity[i] = momentum * velocity[i] - eta * grad[i];
        params[i] += velocity[i];
    }
}

double task_cost(const TrainingTask& task, const Network& net, const DensityMatrix& input) {
    double cost = eval_cost(task.build_cost(input), net.output_state(input), input);
    if (task.penalty) {
        cost += task.penalty(net, input);
    }
    return cost;
}

TrainResult train(const TrainingTask& task, const TrainConfig& cfg) {
    cfg.validate();
    if (!task.sample_input || !task.build_cost) {
        throw std::invalid_argument("train: task must provide a sampler and a cost builder");
    }

    std::mt19937_64 rng(cfg.seed);
    const std::size_t count = task.network.param_count();
    std::vector<double> params;
    if (task.initial_params) {
        if (task.initial_params->size() != count) {
            throw std::invalid_argument("train: initial parameter vector length mismatch");
        }
        params = *task.initial_params;
    } else {
        std::uniform_real_distribution<double> uniform(-1.0, 1.0);
        params.resize(count);
        for (auto& p : params) {
            p = uniform(rng);
        }
    }
    std::vector<double> velocity(count, 0.0);

    TrainResult result{task.network.with_params(params), {}, false, false};
    result.cost_trace.reserve(cfg.max_iterations);

    for (int iter = 0; iter < cfg.max_iterations; ++iter) {
        const DensityMatrix input = task.sample_input(rng);
        const CostFn cost_at = [&task, &input](std::span<const double> p) {
            return task_cost(task, task.network.with_params(p), input);
        };

        const double current = cost_at(params);
        result.cost_trace.push_back(current);
        if (!std::isfinite(current) || current > cfg.divergence_limit) {
            result.diverged = true;
            break;
        }
        if (static_cast<int>(result.cost_trace.size()) >= cfg.avg_window) {
            const auto tail = result.cost_trace.end() - cfg.avg_window;
            const double avg =
                std::accumulate(tail, result.cost_trace.end(), 0.0) / cfg.avg_window;
            if (avg < cfg.cost_threshold) {
                result.converged = true;
                break;
            }
        }

        std::vector<double> grad;
        if (cfg.gradient_mode == GradientMode::Forward) {
            grad = gradient_fd_forward_with_base(cost_at, params, current, cfg.epsilon,
                                                 cfg.threads);
        } else {
            grad = gradient_fd(cost_at, params, cfg.epsilon, GradientMode::Central, cfg.threads);
        }
        descent_step(params, grad, cfg.eta, cfg.momentum, velocity);
    }

    result.network = task.network.with_params(params);
    return result;
}

}  // namespace qfnn
