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

#include <array>
#include <random>

namespace qfnn {

/// Haar-uniform pure state on n qubits: a normalized complex-Gaussian
/// amplitude vector. Consumes 2^(n+1) normal draws from the generator.
DensityMatrix sample_haar_state(int num_qubits, std::mt19937_64& rng);

/// The six single-qubit states where the Bloch axes meet the sphere:
/// |0>, |1>, |+>, |->, |+i>, |-i> in that order.
std::array<DensityMatrix, 6> axis_states();

// Frequently used pure states.
DensityMatrix plus_state();
DensityMatrix minus_state();
DensityMatrix bell_phi_plus();   // (|00> + |11>)/sqrt(2)
DensityMatrix bell_phi_minus();  // (|00> - |11>)/sqrt(2)

/// Basis ket |index> on n qubits.
ComplexVector basis_ket(int num_qubits, std::uint64_t index);

}  // namespace qfnn
