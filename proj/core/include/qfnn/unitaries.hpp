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

#include "qfnn/linalg.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace qfnn {

/// The parametrized unitary families a network can place on its wires.
///
///  - GeneralN: exp(i sum_j alpha_j P_j) over all 4^N Pauli strings P_j on
///    N <= 3 qubits. Parameter layout: flat base-4 index, first wire's Pauli
///    digit most significant.
///  - Neuron3 / Neuron2: controlled form sum_j |tau_j><tau_j| x T_j with
///    {|tau_j>} = V|j> over 2 (resp. 1) control wires and a single-qubit
///    block T_j on the last (target) wire. Layout: V parameters (4^m), then
///    2^m blocks of 4 single-qubit parameters in basis order of |j>.
///  - SingleQubit: closed form e^{i a0}(cos(Om) 1 + i sin(Om)/Om sum a_j s_j)
///    with Om = sqrt(a1^2 + a2^2 + a3^2).
///  - TwoParam: |tau><tau| x 1 + |tau_perp><tau_perp| x sigma_1 with
///    |tau> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>. Layout: (theta, phi).
///  - FanOut2: a general 2-qubit unitary (GeneralN layout) used to distribute
///    a neuron output to several downstream neurons.
///  - ClassicalPermutation: the reversible Heaviside neuron
///    |in, d> -> |in, d xor step(sum_k w_k in_k > threshold)>. Carries weights
///    and a threshold instead of trainable parameters.
enum class UnitaryFamily {
    GeneralN,
    Neuron3,
    Neuron2,
    SingleQubit,
    TwoParam,
    FanOut2,
    ClassicalPermutation,
};

/// Number of trainable parameters for a family at the given arity.
int param_count(UnitaryFamily family, int arity);

std::string_view family_name(UnitaryFamily family);
UnitaryFamily family_from_name(std::string_view name);

/// A unitary family tag plus the real numbers that select a member of it.
struct ParamUnitary {
    UnitaryFamily family = UnitaryFamily::GeneralN;
    int arity = 1;
    std::vector<double> params;

    // ClassicalPermutation only: Heaviside weights (one per input wire) and
    // the firing threshold. Not trainable.
    std::vector<double> weights;
    double threshold = 0.5;

    static ParamUnitary general_n(int num_qubits, std::vector<double> alpha);
    static ParamUnitary neuron(int control_arity, std::vector<double> params);
    static ParamUnitary single_qubit(std::vector<double> alpha);
    static ParamUnitary two_param(double theta, double phi);
    static ParamUnitary fan_out(std::vector<double> alpha);
    static ParamUnitary classical_permutation(std::vector<double> weights, double threshold = 0.5);

    /// Throws unless the parameter vector length matches the family.
    void validate() const;
};

/// exp(i sum alpha_j P_j); alpha must have length 4^N, N <= 3.
ComplexMatrix build_general_n(std::span<const double> alpha, int num_qubits);

/// Closed-form single-qubit unitary of (a0, a1, a2, a3); agrees with
/// build_general_n at N = 1. The removable singularity at Om = 0 is
/// evaluated by the series limit.
ComplexMatrix build_single_qubit(double a0, double a1, double a2, double a3);

/// Controlled-form neuron on control_arity + 1 qubits, target last.
/// v_params selects the control basis V (4^m numbers), t_params holds 2^m
/// single-qubit blocks of 4.
ComplexMatrix build_neuron(int control_arity, std::span<const double> v_params,
                           std::span<const double> t_params);

/// The two-angle landscape unitary on 2 qubits (control first, target last).
ComplexMatrix build_two_param(double theta, double phi);

/// Permutation matrix of the reversible Heaviside neuron on n+1 wires
/// (inputs first, dummy/output last). Fires on strict inequality.
ComplexMatrix build_classical_neuron_permutation(std::span<const double> weights, double threshold);

/// GeneralN(2) parameters whose exponential is exactly the CNOT
/// (control = first wire), from the generator (pi/4)(1 - s3) x (1 - s1).
std::vector<double> fan_out_cnot_params();

/// Dense matrix of any ParamUnitary.
ComplexMatrix materialize(const ParamUnitary& u);

}  // namespace qfnn
