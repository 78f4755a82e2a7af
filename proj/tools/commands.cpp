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

#include "qfnn/tasks.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace qfnn::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Haar evaluation uses its own stream so retraining and evaluation never
// share draws; derived from the run seed to stay reproducible.
std::uint64_t eval_seed(std::uint64_t seed) {
    return seed ^ 0x9e3779b97f4a7c15ULL;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path.string());
    }
    out << content;
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

std::string cost_trace_csv(const std::vector<double>& trace) {
    std::string csv = "iteration,cost\n";
    for (std::size_t i = 0; i < trace.size(); ++i) {
        csv += std::to_string(i);
        csv += ',';
        csv += format_double(trace[i]);
        csv += '\n';
    }
    return csv;
}

double running_average_tail(const std::vector<double>& trace, int window) {
    if (trace.empty()) {
        return 0.0;
    }
    const int w = std::min<int>(window, static_cast<int>(trace.size()));
    return std::accumulate(trace.end() - w, trace.end(), 0.0) / w;
}

json train_config_json(const RunConfig& cfg) {
    return json{
        {"eta", cfg.train.eta},
        {"epsilon", cfg.train.epsilon},
        {"momentum", cfg.train.momentum},
        {"max_iterations", cfg.train.max_iterations},
        {"cost_threshold", cfg.train.cost_threshold},
        {"avg_window", cfg.train.avg_window},
        {"gradient", cfg.gradient},
        {"threads", cfg.train.threads},
    };
}

json labels_json(const TrainingTask& task) {
    json labels = json::object();
    for (const auto& [wire, label] : task.wire_labels) {
        labels[wire] = label;
    }
    return labels;
}

void write_summary(const fs::path& dir, const json& summary) {
    write_file(dir / "summary.json", summary.dump(2) + "\n");
}

int finish_training_run(const fs::path& dir, const RunConfig& cfg, const TrainingTask& task,
                        const TrainResult& result, json summary, json results,
                        std::vector<std::string> artifacts) {
    write_file(dir / "cost_trace.csv", cost_trace_csv(result.cost_trace));
    write_file(dir / "network.json", result.network.to_json() + "\n");
    artifacts.insert(artifacts.begin(), {"summary.json", "cost_trace.csv", "network.json"});

    results["iterations"] = result.cost_trace.size();
    results["converged"] = result.converged;
    results["diverged"] = result.diverged;
    results["final_running_avg"] = running_average_tail(result.cost_trace, cfg.train.avg_window);

    summary["seed"] = cfg.train.seed;
    summary["config"] = train_config_json(cfg);
    summary["wire_labels"] = labels_json(task);
    summary["results"] = std::move(results);
    summary["artifacts"] = artifacts;
    write_summary(dir, summary);

    if (result.diverged) {
        std::fprintf(stderr, "training diverged after %zu iterations; partial trace written\n",
                     result.cost_trace.size());
        return 2;
    }
    return 0;
}

int run_train_autoencoder(const fs::path& dir, const RunConfig& cfg) {
    AutoencoderOptions options;
    options.diagonality_penalty = cfg.diagonality_penalty;
    options.outer_family = cfg.outer_family == "neuron" ? UnitaryFamily::Neuron2
                                                        : UnitaryFamily::GeneralN;
    const auto inputs = autoencoder_input_preset(cfg.inputs_preset);
    TrainingTask task = build_autoencoder_task(inputs, options);
    const TrainResult result = train(task, cfg.train);

    json results;
    json per_input = json::array();
    double mean_cost = 0;
    for (const auto& input : inputs) {
        const double c = task_cost(task, result.network, input);
        per_input.push_back(c);
        mean_cost += c;
    }
    results["input_costs"] = per_input;
    results["mean_input_cost"] = mean_cost / static_cast<double>(inputs.size());

    // Bottleneck coherence right after the compression neuron.
    json bottleneck = json::array();
    const int wire[] = {2};
    for (const auto& input : inputs) {
        const DensityMatrix mid = result.network.reduced_state(input, 1, wire);
        bottleneck.push_back({{"abs_x", std::abs(mid.expectation(PauliString{1}))},
                              {"abs_y", std::abs(mid.expectation(PauliString{2}))}});
    }
    results["bottleneck"] = bottleneck;

    json summary;
    summary["command"] = "train-autoencoder";
    summary["task"] = {{"inputs", cfg.inputs_preset},
                       {"diagonality_penalty", cfg.diagonality_penalty},
                       {"outer", cfg.outer_family}};
    return finish_training_run(dir, cfg, task, result, std::move(summary), std::move(results),
                               {});
}

int run_train_teleport(const fs::path& dir, const RunConfig& cfg) {
    TrainingTask task = build_teleport_task();
    const TrainResult result = train(task, cfg.train);

    json results;
    if (!result.diverged) {
        const CostStats haar =
            evaluate_haar(task, result.network, cfg.eval_samples, eval_seed(cfg.train.seed));
        results["haar_eval"] = {{"samples", cfg.eval_samples},
                                {"eval_seed", eval_seed(cfg.train.seed)},
                                {"mean", haar.mean},
                                {"stddev", haar.stddev},
                                {"max", haar.max}};
        const auto axis = axis_states();
        const CostStats on_axis =
            evaluate_costs(task, result.network, std::vector<DensityMatrix>(axis.begin(),
                                                                            axis.end()));
        results["axis_eval"] = {{"mean", on_axis.mean}, {"max", on_axis.max}};
    }

    json summary;
    summary["command"] = "train-teleport";
    summary["task"] = {{"eval_samples", cfg.eval_samples}};
    return finish_training_run(dir, cfg, task, result, std::move(summary), std::move(results),
                               {});
}

int run_landscape(const fs::path& dir, const RunConfig& cfg) {
    const LandscapeResult result = landscape_scan(cfg.grid_theta, cfg.grid_phi, cfg.start_theta,
                                                  cfg.start_phi, cfg.train);

    std::string grid_csv = "theta,phi,cost\n";
    const LandscapeGridPoint* min_point = &result.grid.front();
    for (const auto& p : result.grid) {
        grid_csv += format_double(p.theta) + "," + format_double(p.phi) + "," +
                    format_double(p.cost) + "\n";
        if (p.cost < min_point->cost) {
            min_point = &p;
        }
    }
    write_file(dir / "landscape_grid.csv", grid_csv);

    std::string path_csv = "step,theta,phi,cost\n";
    for (const auto& p : result.path) {
        path_csv += std::to_string(p.step) + "," + format_double(p.theta) + "," +
                    format_double(p.phi) + "," + format_double(p.cost) + "\n";
    }
    write_file(dir / "landscape_path.csv", path_csv);

    json summary;
    summary["command"] = "landscape";
    summary["seed"] = cfg.train.seed;
    summary["config"] = train_config_json(cfg);
    summary["task"] = {{"grid", cfg.grid},
                       {"start_theta", cfg.start_theta},
                       {"start_phi", cfg.start_phi}};
    summary["wire_labels"] = labels_json(build_landscape_task());
    summary["results"] = {
        {"grid_points", result.grid.size()},
        {"grid_min", {{"theta", min_point->theta}, {"phi", min_point->phi},
                      {"cost", min_point->cost}}},
        {"path_steps", result.path.size() - 1},
        {"path_final_cost", result.path.back().cost},
    };
    summary["artifacts"] = {"summary.json", "landscape_grid.csv", "landscape_path.csv"};
    write_summary(dir, summary);
    return 0;
}

int run_classical_check(const fs::path& dir, const RunConfig& cfg) {
    std::vector<WeightSet> sets;
    sets.push_back({"or", {1.0, 1.0}, 0.5});
    sets.push_back({"and", {1.0, 1.0}, 1.5});
    std::mt19937_64 rng(cfg.train.seed);
    std::uniform_real_distribution<double> uniform(-cfg.weight_range, cfg.weight_range);
    for (int i = 0; i < cfg.random_sets; ++i) {
        sets.push_back({"random-" + std::to_string(i),
                        {uniform(rng), uniform(rng)},
                        cfg.check_threshold});
    }
    const ClassicalCheckReport report = classical_equivalence_check(sets);

    std::string csv = "name,weights,threshold,match,first_mismatch\n";
    for (const auto& c : report.cases) {
        std::string weights;
        for (std::size_t i = 0; i < c.set.weights.size(); ++i) {
            weights += (i > 0 ? ";" : "") + format_double(c.set.weights[i]);
        }
        csv += c.set.name + "," + weights + "," + format_double(c.set.threshold) + "," +
               (c.match ? "true" : "false") + "," + std::to_string(c.first_mismatch) + "\n";
    }
    write_file(dir / "classical_check.csv", csv);

    json summary;
    summary["command"] = "classical-check";
    summary["seed"] = cfg.train.seed;
    summary["config"] = {{"random_sets", cfg.random_sets},
                         {"threshold", cfg.check_threshold},
                         {"weight_range", cfg.weight_range}};
    summary["results"] = {{"cases", report.cases.size()}, {"all_match", report.all_match}};
    summary["artifacts"] = {"summary.json", "classical_check.csv"};
    write_summary(dir, summary);

    if (!report.all_match) {
        for (const auto& c : report.cases) {
            if (!c.match) {
                std::fprintf(stderr, "mismatch in '%s' at basis input %lld\n", c.set.name.c_str(),
                             static_cast<long long>(c.first_mismatch));
            }
        }
        return 1;
    }
    return 0;
}

int run_verify_oracle(const fs::path& dir, const RunConfig& cfg) {
    TrainingTask task = build_teleport_task();
    const Network net = task.network.with_params(teleport_oracle_params());

    const auto axis = axis_states();
    const CostStats on_axis =
        evaluate_costs(task, net, std::vector<DensityMatrix>(axis.begin(), axis.end()));
    const CostStats haar = evaluate_haar(task, net, cfg.eval_samples, eval_seed(cfg.train.seed));

    write_file(dir / "network.json", net.to_json() + "\n");

    const bool pass = on_axis.max <= 1e-9 && haar.max <= 1e-9;
    json summary;
    summary["command"] = "verify-oracle";
    summary["seed"] = cfg.train.seed;
    summary["config"] = {{"samples", cfg.eval_samples}};
    summary["wire_labels"] = labels_json(task);
    summary["results"] = {
        {"axis_max_cost", on_axis.max},
        {"haar_samples", cfg.eval_samples},
        {"haar_mean_cost", haar.mean},
        {"haar_max_cost", haar.max},
        {"tolerance", 1e-9},
        {"pass", pass},
    };
    summary["artifacts"] = {"summary.json", "network.json"};
    write_summary(dir, summary);
    return pass ? 0 : 1;
}

}  // namespace

int run_command(const RunConfig& cfg) {
    const fs::path dir(cfg.out_dir);
    fs::create_directories(dir);

    switch (cfg.command) {
        case Command::TrainAutoencoder:
            return run_train_autoencoder(dir, cfg);
        case Command::TrainTeleport:
            return run_train_teleport(dir, cfg);
        case Command::Landscape:
            return run_landscape(dir, cfg);
        case Command::ClassicalCheck:
            return run_classical_check(dir, cfg);
        case Command::VerifyOracle:
            return run_verify_oracle(dir, cfg);
        case Command::None:
            break;
    }
    throw std::invalid_argument("no command given");
}

}  // namespace qfnn::cli
