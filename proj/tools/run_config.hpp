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

#include "qfnn/training.hpp"

#include <string>

namespace qfnn::cli {

enum class Command {
    None,
    TrainAutoencoder,
    TrainTeleport,
    Landscape,
    ClassicalCheck,
    VerifyOracle,
};

/// Fully resolved run description: command-line flags override config-file
/// keys override the defaults below. Every run carries a seed.
struct RunConfig {
    Command command = Command::None;
    std::string out_dir;  // resolved against QFNN_OUT_DIR when empty

    TrainConfig train;
    std::string gradient = "forward";  // forward | central
    bool epsilon_set = false;          // central mode defaults to 1e-5 unless set

    // train-autoencoder
    std::string inputs_preset = "bell";  // bell | product | nonorthogonal
    bool diagonality_penalty = false;
    std::string outer_family = "general";  // general | neuron

    // train-teleport / verify-oracle
    int eval_samples = 1000;

    // landscape
    std::string grid = "101x101";
    int grid_theta = 101;
    int grid_phi = 101;
    double start_theta = 2.5;
    double start_phi = 2.5;

    // classical-check
    int random_sets = 100;
    double check_threshold = 0.5;
    double weight_range = 2.0;

    /// Applies derived defaults (epsilon per gradient mode, output directory
    /// from the environment) and validates everything. Throws
    /// std::invalid_argument on bad values.
    void finalize();
};

/// Parses argv (plus an optional --config file) into cfg. Returns -1 when
/// parsing succeeded and the command should run; otherwise the process exit
/// code (0 for --help, 1 for usage or validation errors, already reported
/// on stderr/stdout).
int parse_args(int argc, const char* const* argv, RunConfig& cfg);

/// Executes the command and writes its artifacts. Returns the process exit
/// code: 0 on success, 2 on divergence.
int run_command(const RunConfig& cfg);

}  // namespace qfnn::cli
