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

#include "qfnn/network.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>

namespace qfnn {

namespace {

using nlohmann::json;

std::vector<int> element_wires(const NetworkElement& e) {
    if (const auto* gate = std::get_if<GatePlacement>(&e)) {
        return gate->wires;
    }
    return {std::get<DephasePlacement>(e).wire};
}

}  // namespace

Network::Network(int num_wires, std::vector<int> input_wires, std::vector<int> dummy_wires,
                 std::vector<int> output_wires)
    : num_wires_(num_wires),
      input_wires_(std::move(input_wires)),
      dummy_wires_(std::move(dummy_wires)),
      output_wires_(std::move(output_wires)) {
    if (num_wires_ < 1 || num_wires_ > kMaxQubits) {
        throw std::invalid_argument("Network: wire count must be in [1, 12]");
    }
    // Inputs and dummies must partition the register.
    std::vector<int> role(num_wires_, 0);
    for (int w : input_wires_) {
        if (w < 0 || w >= num_wires_ || role[w] != 0) {
            throw std::invalid_argument("Network: bad input wire list");
        }
        role[w] = 1;
    }
    for (int w : dummy_wires_) {
        if (w < 0 || w >= num_wires_ || role[w] != 0) {
            throw std::invalid_argument("Network: bad dummy wire list");
        }
        role[w] = 2;
    }
    if (std::any_of(role.begin(), role.end(), [](int r) { return r == 0; })) {
        throw std::invalid_argument("Network: every wire must be an input or a dummy");
    }
    std::vector<bool> seen(num_wires_, false);
    if (output_wires_.empty()) {
        throw std::invalid_argument("Network: output wire list must be non-empty");
    }
    for (int w : output_wires_) {
        if (w < 0 || w >= num_wires_ || seen[w]) {
            throw std::invalid_argument("Network: bad output wire list");
        }
        seen[w] = true;
    }
}

void Network::check_wires(std::span<const int> wires, int arity) const {
    if (static_cast<int>(wires.size()) != arity) {
        throw std::invalid_argument("Network: wire count does not match gate arity");
    }
    std::vector<bool> seen(num_wires_, false);
    for (int w : wires) {
        if (w < 0 || w >= num_wires_) {
            throw std::invalid_argument("Network: wire index out of range");
        }
        if (seen[w]) {
            throw std::invalid_argument("Network: duplicate wire in placement");
        }
        seen[w] = true;
    }
}

void Network::add_gate(ParamUnitary gate, std::vector<int> wires, int layer) {
    gate.validate();
    check_wires(wires, gate.arity);
    elements_.push_back(GatePlacement{std::move(gate), std::move(wires), layer});
}

void Network::add_dephase(int wire, int layer) {
    if (wire < 0 || wire >= num_wires_) {
        throw std::invalid_argument("Network: dephase wire out of range");
    }
    elements_.push_back(DephasePlacement{wire, layer});
}

DensityMatrix Network::forward(const DensityMatrix& input) const {
    return forward(input, elements_.size());
}

DensityMatrix Network::forward(const DensityMatrix& input, std::size_t num_elements) const {
    if (input.num_qubits() != static_cast<int>(input_wires_.size())) {
        throw std::invalid_argument("forward: input state does not match input wire count");
    }
    if (num_elements > elements_.size()) {
        throw std::invalid_argument("forward: element count out of range");
    }
    // Input wires in listed order, then dummies as |0>, permuted into
    // register order (partial_trace over all wires is a pure reordering).
    DensityMatrix state = input;
    if (!dummy_wires_.empty()) {
        state = state.tensor_with(DensityMatrix::zero_state(static_cast<int>(dummy_wires_.size())));
    }
    std::vector<int> layout = input_wires_;
    layout.insert(layout.end(), dummy_wires_.begin(), dummy_wires_.end());
    std::vector<int> order(num_wires_);
    for (int w = 0; w < num_wires_; ++w) {
        order[w] = static_cast<int>(std::find(layout.begin(), layout.end(), w) - layout.begin());
    }
    state = state.partial_trace(order);

    for (std::size_t i = 0; i < num_elements; ++i) {
        if (const auto* gate = std::get_if<GatePlacement>(&elements_[i])) {
            state = state.apply(embed(materialize(gate->gate), gate->wires, num_wires_));
        } else {
            state = state.dephase_z(std::get<DephasePlacement>(elements_[i]).wire);
        }
    }
    return state;
}

DensityMatrix Network::output_state(const DensityMatrix& input) const {
    return reduced_state(input, elements_.size(), output_wires_);
}

DensityMatrix Network::reduced_state(const DensityMatrix& input, std::size_t num_elements,
                                     std::span<const int> keep) const {
    if (input.num_qubits() != static_cast<int>(input_wires_.size())) {
        throw std::invalid_argument("reduced_state: input state does not match input wire count");
    }
    if (num_elements > elements_.size()) {
        throw std::invalid_argument("reduced_state: element count out of range");
    }
    if (keep.empty()) {
        throw std::invalid_argument("reduced_state: keep list must be non-empty");
    }
    std::vector<bool> want(num_wires_, false);
    for (int w : keep) {
        if (w < 0 || w >= num_wires_ || want[w]) {
            throw std::invalid_argument("reduced_state: bad keep list");
        }
        want[w] = true;
    }

    // Last element index that touches each wire, among the evaluated prefix.
    std::vector<std::ptrdiff_t> last_use(num_wires_, -1);
    for (std::size_t i = 0; i < num_elements; ++i) {
        for (int w : element_wires(elements_[i])) {
            last_use[w] = static_cast<std::ptrdiff_t>(i);
        }
    }

    // The frontier: wires currently in the working state, in register order
    // of that state. Dummies join when first needed; a wire leaves as soon
    // as nothing later touches it (unless it must be kept).
    std::vector<int> active = input_wires_;
    DensityMatrix state = input;

    auto position_of = [&active](int wire) {
        const auto it = std::find(active.begin(), active.end(), wire);
        return static_cast<int>(it - active.begin());
    };
    auto drop_wire = [&](int wire) {
        if (active.size() == 1) {
            return;  // nothing else to hold; final trace handles it
        }
        std::vector<int> positions;
        positions.reserve(active.size() - 1);
        std::vector<int> remaining;
        remaining.reserve(active.size() - 1);
        for (std::size_t p = 0; p < active.size(); ++p) {
            if (active[p] != wire) {
                positions.push_back(static_cast<int>(p));
                remaining.push_back(active[p]);
            }
        }
        state = state.partial_trace(positions);
        active = std::move(remaining);
    };

    // Input wires nothing ever uses can be traced out immediately.
    for (int w : input_wires_) {
        if (last_use[w] < 0 && !want[w]) {
            drop_wire(w);
        }
    }

    for (std::size_t i = 0; i < num_elements; ++i) {
        const std::vector<int> wires = element_wires(elements_[i]);
        for (int w : wires) {
            if (std::find(active.begin(), active.end(), w) == active.end()) {
                state = state.tensor_with(DensityMatrix::zero_state(1));
                active.push_back(w);
            }
        }
        if (const auto* gate = std::get_if<GatePlacement>(&elements_[i])) {
            std::vector<int> positions(wires.size());
            for (std::size_t p = 0; p < wires.size(); ++p) {
                positions[p] = position_of(wires[p]);
            }
            state = state.apply_on(materialize(gate->gate), positions);
        } else {
            state = state.dephase_z(position_of(wires[0]));
        }
        for (int w : wires) {
            if (!want[w] && last_use[w] == static_cast<std::ptrdiff_t>(i)) {
                drop_wire(w);
            }
        }
    }

    // Kept dummies no element ever touched still need their |0> slot.
    for (int w : keep) {
        if (std::find(active.begin(), active.end(), w) == active.end()) {
            state = state.tensor_with(DensityMatrix::zero_state(1));
            active.push_back(w);
        }
    }
    std::vector<int> positions(keep.size());
    for (std::size_t p = 0; p < keep.size(); ++p) {
        positions[p] = position_of(keep[p]);
    }
    return state.partial_trace(positions);
}

std::size_t Network::param_count() const {
    std::size_t total = 0;
    for (const auto& e : elements_) {
        if (const auto* gate = std::get_if<GatePlacement>(&e)) {
            total += gate->gate.params.size();
        }
    }
    return total;
}

std::vector<double> Network::flatten_params() const {
    std::vector<double> flat;
    flat.reserve(param_count());
    for (const auto& e : elements_) {
        if (const auto* gate = std::get_if<GatePlacement>(&e)) {
            flat.insert(flat.end(), gate->gate.params.begin(), gate->gate.params.end());
        }
    }
    return flat;
}

Network Network::with_params(std::span<const double> params) const {
    if (params.size() != param_count()) {
        throw std::invalid_argument("with_params: parameter vector length mismatch");
    }
    Network copy = *this;
    std::size_t offset = 0;
    for (auto& e : copy.elements_) {
        if (auto* gate = std::get_if<GatePlacement>(&e)) {
            const std::size_t count = gate->gate.params.size();
            std::copy_n(params.begin() + offset, count, gate->gate.params.begin());
            offset += count;
        }
    }
    return copy;
}

std::string Network::to_json(int indent) const {
    json doc;
    doc["format"] = "qfnn-network-v1";
    doc["num_wires"] = num_wires_;
    doc["input_wires"] = input_wires_;
    doc["dummy_wires"] = dummy_wires_;
    doc["output_wires"] = output_wires_;
    json elems = json::array();
    for (const auto& e : elements_) {
        json rec;
        if (const auto* gate = std::get_if<GatePlacement>(&e)) {
            rec["kind"] = "gate";
            rec["family"] = family_name(gate->gate.family);
            rec["arity"] = gate->gate.arity;
            rec["wires"] = gate->wires;
            rec["layer"] = gate->layer;
            rec["params"] = gate->gate.params;
            if (gate->gate.family == UnitaryFamily::ClassicalPermutation) {
                rec["weights"] = gate->gate.weights;
                rec["threshold"] = gate->gate.threshold;
            }
        } else {
            const auto& d = std::get<DephasePlacement>(e);
            rec["kind"] = "dephase";
            rec["wire"] = d.wire;
            rec["layer"] = d.layer;
        }
        elems.push_back(std::move(rec));
    }
    doc["elements"] = std::move(elems);
    return doc.dump(indent);
}

Network Network::from_json(const std::string& text) {
    const json doc = json::parse(text);
    if (doc.value("format", "") != "qfnn-network-v1") {
        throw std::invalid_argument("Network::from_json: unknown format tag");
    }
    Network net(doc.at("num_wires").get<int>(), doc.at("input_wires").get<std::vector<int>>(),
                doc.at("dummy_wires").get<std::vector<int>>(),
                doc.at("output_wires").get<std::vector<int>>());
    for (const auto& rec : doc.at("elements")) {
        const std::string kind = rec.at("kind").get<std::string>();
        if (kind == "gate") {
            ParamUnitary u;
            u.family = family_from_name(rec.at("family").get<std::string>());
            u.arity = rec.at("arity").get<int>();
            u.params = rec.at("params").get<std::vector<double>>();
            if (u.family == UnitaryFamily::ClassicalPermutation) {
                u.weights = rec.at("weights").get<std::vector<double>>();
                u.threshold = rec.at("threshold").get<double>();
            }
            net.add_gate(std::move(u), rec.at("wires").get<std::vector<int>>(),
                         rec.value("layer", 0));
        } else if (kind == "dephase") {
            net.add_dephase(rec.at("wire").get<int>(), rec.value("layer", 0));
        } else {
            throw std::invalid_argument("Network::from_json: unknown element kind");
        }
    }
    return net;
}

}  // namespace qfnn
