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

#include "run_config.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace qfnn::cli {

namespace {

void add_common_options(CLI::App& app, RunConfig& cfg) {
    app.add_option("--out", cfg.out_dir,
                   "Output directory (default: $QFNN_OUT_DIR, else ./qfnn-out)");
    app.add_option("--seed", cfg.train.seed, "RNG seed; every run is seeded")
        ->capture_default_str();
    app.add_option("--threads", cfg.train.threads,
                   "Worker threads for gradient components; 0 = all cores. "
                   "Never changes numeric results")
        ->check(CLI::Range(0, 256))
        ->capture_default_str();
}

void add_train_options(CLI::App& app, RunConfig& cfg) {
    app.add_option("--eta", cfg.train.eta, "Learning rate")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--epsilon", cfg.train.epsilon,
                   "Finite-difference step (default 1e-4 forward, 1e-5 central)")
        ->check(CLI::PositiveNumber);
    app.add_option("--momentum", cfg.train.momentum, "Momentum coefficient in [0, 1)")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    app.add_option("--max-iterations", cfg.train.max_iterations, "Iteration budget")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--cost-threshold", cfg.train.cost_threshold,
                   "Stop when the running-average cost drops below this")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--avg-window", cfg.train.avg_window, "Running-average window")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--gradient", cfg.gradient, "Gradient mode: forward | central")
        ->check(CLI::IsMember({"forward", "central"}))
        ->capture_default_str();
}

}  // namespace

void RunConfig::finalize() {
    if (command == Command::None) {
        throw std::invalid_argument("no command given");
    }
    if (gradient == "central") {
        train.gradient_mode = GradientMode::Central;
        if (!epsilon_set) {
            train.epsilon = 1e-5;
        }
    } else {
        train.gradient_mode = GradientMode::Forward;
    }
    if (train.momentum >= 1.0) {
        throw std::invalid_argument("momentum must lie in [0, 1)");
    }
    if (train.threads == 0) {
        train.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    }
    train.validate();

    if (out_dir.empty()) {
        const char* env = std::getenv("QFNN_OUT_DIR");
        out_dir = env != nullptr && *env != '\0' ? env : "qfnn-out";
    }

    if (command == Command::Landscape) {
        const auto sep = grid.find('x');
        bool ok = sep != std::string::npos;
        if (ok) {
            try {
                grid_theta = std::stoi(grid.substr(0, sep));
                grid_phi = std::stoi(grid.substr(sep + 1));
            } catch (const std::exception&) {
                ok = false;
            }
        }
        if (!ok || grid_theta < 2 || grid_phi < 2) {
            throw std::invalid_argument("--grid expects THETAxPHI with both counts >= 2");
        }
    }
    if (eval_samples < 1) {
        throw std::invalid_argument("--samples must be positive");
    }
    if (random_sets < 0) {
        throw std::invalid_argument("--random-sets must be non-negative");
    }
    if (weight_range <= 0) {
        throw std::invalid_argument("--weight-range must be positive");
    }
}

int parse_args(int argc, const char* const* argv, RunConfig& cfg) {
    CLI::App app{"qfnn: exact density-matrix simulator and trainer for quantum\n"
                 "generalisations of feedforward neural networks"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Flat key=value config file; command-line flags win");
    app.allow_config_extras(false);

    add_common_options(app, cfg);

    auto* autoencoder = app.add_subcommand(
        "train-autoencoder", "Train the 6-wire compression network on a 2-state input set");
    add_train_options(*autoencoder, cfg);
    autoencoder->add_option("--inputs", cfg.inputs_preset,
                            "Input pair: bell | product | nonorthogonal")
        ->check(CLI::IsMember({"bell", "product", "nonorthogonal"}))
        ->capture_default_str();
    autoencoder->add_flag("--diagonality-penalty", cfg.diagonality_penalty,
                          "Penalize bottleneck coherence (push it to the Z basis)");
    autoencoder->add_option("--outer", cfg.outer_family,
                            "Reconstruction gate family: general | neuron")
        ->check(CLI::IsMember({"general", "neuron"}))
        ->capture_default_str();
    autoencoder->callback([&cfg] { cfg.command = Command::TrainAutoencoder; });

    auto* teleport = app.add_subcommand("train-teleport",
                                        "Train the 3-wire state-transfer network");
    add_train_options(*teleport, cfg);
    teleport->add_option("--eval-samples", cfg.eval_samples,
                         "Haar-random states for the post-training evaluation")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    teleport->callback([&cfg] { cfg.command = Command::TrainTeleport; });

    auto* landscape = app.add_subcommand(
        "landscape", "Sample the two-angle cost surface and run a descent path");
    add_train_options(*landscape, cfg);
    landscape->add_option("--grid", cfg.grid, "Grid resolution THETAxPHI")
        ->capture_default_str();
    landscape->add_option("--start-theta", cfg.start_theta, "Descent start theta")
        ->capture_default_str();
    landscape->add_option("--start-phi", cfg.start_phi, "Descent start phi")
        ->capture_default_str();
    landscape->callback([&cfg] { cfg.command = Command::Landscape; });

    auto* classical = app.add_subcommand(
        "classical-check",
        "Verify the quantum network reproduces Heaviside neuron truth tables exactly");
    classical->add_option("--random-sets", cfg.random_sets, "Number of random weight sets")
        ->capture_default_str();
    classical->add_option("--threshold", cfg.check_threshold, "Firing threshold")
        ->capture_default_str();
    classical->add_option("--weight-range", cfg.weight_range,
                          "Random weights drawn uniformly from [-range, range]")
        ->capture_default_str();
    classical->callback([&cfg] { cfg.command = Command::ClassicalCheck; });

    auto* oracle = app.add_subcommand(
        "verify-oracle",
        "Run the hand-constructed teleport solution over Haar-random states");
    oracle->add_option("--samples", cfg.eval_samples, "Number of Haar-random states")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    oracle->callback([&cfg] { cfg.command = Command::VerifyOracle; });

    try {
        app.parse(argc, argv);
        cfg.epsilon_set = false;
        for (CLI::App* sub : app.get_subcommands()) {
            const CLI::Option* eps = sub->get_option_no_throw("--epsilon");
            if (eps != nullptr && eps->count() > 0) {
                cfg.epsilon_set = true;
            }
        }
        cfg.finalize();
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return -1;
}

}  // namespace qfnn::cli
