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

#include "qfnn/density_matrix.hpp"
#include "qfnn/unitaries.hpp"

#include <span>
#include <string>
#include <variant>
#include <vector>

namespace qfnn {

struct GatePlacement {
    ParamUnitary gate;
    std::vector<int> wires;  // distinct register wires, one per gate qubit
    int layer = 0;           // bookkeeping only
};

struct DephasePlacement {
    int wire = 0;
    int layer = 0;
};

using NetworkElement = std::variant<GatePlacement, DephasePlacement>;

/// A feedforward network on an n-wire register: an ordered list of gate and
/// dephasing placements, applied strictly in list order. Input wires receive
/// the task state, dummy wires start as |0>, and the network output is the
/// reduced state on the designated output wires.
///
/// Wiring and parameter counts are validated eagerly when elements are
/// added, so evaluation is total on constructed networks. Evaluation is
/// const and pure; with_params returns a new value, which lets
/// finite-difference gradients evaluate parameter-shifted copies
/// concurrently.
class Network {
  public:
    Network(int num_wires, std::vector<int> input_wires, std::vector<int> dummy_wires,
            std::vector<int> output_wires);

    void add_gate(ParamUnitary gate, std::vector<int> wires, int layer = 0);
    void add_dephase(int wire, int layer = 0);

    int num_wires() const { return num_wires_; }
    const std::vector<int>& input_wires() const { return input_wires_; }
    const std::vector<int>& dummy_wires() const { return dummy_wires_; }
    const std::vector<int>& output_wires() const { return output_wires_; }
    const std::vector<NetworkElement>& elements() const { return elements_; }

    /// Full-register state after tensoring dummies as |0><0| and applying
    /// every element in order (gates via embed + apply).
    DensityMatrix forward(const DensityMatrix& input) const;

    /// Same, stopping after the first `num_elements` elements.
    DensityMatrix forward(const DensityMatrix& input, std::size_t num_elements) const;

    /// Reduced state on the output wires. Agrees with
    /// forward(input).partial_trace(output_wires) but tensors dummies in
    /// lazily and traces out wires as soon as no later element needs them,
    /// so the working register stays small.
    DensityMatrix output_state(const DensityMatrix& input) const;

    /// Reduced state on `keep` after the first `num_elements` elements,
    /// using the same frontier evaluation as output_state.
    DensityMatrix reduced_state(const DensityMatrix& input, std::size_t num_elements,
                                std::span<const int> keep) const;

    /// Total trainable parameter count over all gate placements.
    std::size_t param_count() const;

    /// Concatenation of each gate's parameters, elements in list order.
    /// assign/flatten round-trip exactly.
    std::vector<double> flatten_params() const;
    Network with_params(std::span<const double> params) const;

    /// Checkpoint format: a JSON document with the wire lists and one record
    /// per element ("kind", "family", "wires", "params", ...). Stable under
    /// round-trips, including exact parameter values.
    std::string to_json(int indent = 2) const;
    static Network from_json(const std::string& text);

  private:
    void check_wires(std::span<const int> wires, int arity) const;

    int num_wires_;
    std::vector<int> input_wires_;
    std::vector<int> dummy_wires_;
    std::vector<int> output_wires_;
    std::vector<NetworkElement> elements_;
};

}  // namespace qfnn
