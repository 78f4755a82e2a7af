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
#include "qfnn/pauli.hpp"

#include <span>

namespace qfnn {

/// Exact mixed state of an n-qubit register: a Hermitian, positive
/// semidefinite, trace-one 2^n x 2^n matrix. Pure states are a constructor,
/// not a separate type. Values are immutable; every operation returns a new
/// state, so independent evaluations are safe to run concurrently.
class DensityMatrix {
  public:
    /// Validates Hermiticity (1e-10), unit trace (1e-10) and numerical
    /// positivity (eigenvalues >= -1e-9). Prefer the named constructors
    /// where possible; this one costs an eigendecomposition.
    DensityMatrix(int num_qubits, ComplexMatrix matrix);

    static DensityMatrix from_ket(const ComplexVector& psi);
    static DensityMatrix basis_state(int num_qubits, std::uint64_t index);
    static DensityMatrix zero_state(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    Eigen::Index dim() const { return matrix_.rows(); }
    const ComplexMatrix& matrix() const { return matrix_; }

    double trace_real() const { return matrix_.trace().real(); }
    /// Tr(rho^2); 1 for pure states.
    double purity() const { return (matrix_ * matrix_).trace().real(); }

    /// U rho U^dag on the full register. U must be unitary within 1e-8.
    DensityMatrix apply(const ComplexMatrix& u) const;

    /// Applies a 2^k x 2^k gate to the listed wires without materializing the
    /// embedded operator. Equivalent to apply(embed(gate, wires, n)).
    DensityMatrix apply_on(const ComplexMatrix& gate, std::span<const int> wires) const;

    /// Reduced state on `keep` wires, in listed order (so it doubles as a
    /// wire-reordering when all wires are kept). `keep` must be non-empty.
    DensityMatrix partial_trace(std::span<const int> keep) const;

    /// Full Z-dephasing of one wire: rho -> (rho + Z rho Z)/2, which zeroes
    /// every coherence between the |0> and |1> blocks of that wire.
    DensityMatrix dephase_z(int wire) const;

    /// Kronecker product state; this state's wires come first.
    DensityMatrix tensor_with(const DensityMatrix& other) const;

    /// Tr(rho * sigma_p). The string must cover every wire.
    double expectation(const PauliString& p) const;

    /// True when Hermiticity, trace and positivity hold within `tol`
    /// (positivity floor scales as -10*tol). Used by property tests.
    bool is_valid_state(double tol) const;

  private:
    struct Unchecked {};
    DensityMatrix(Unchecked, int num_qubits, ComplexMatrix matrix);

    int num_qubits_;
    ComplexMatrix matrix_;
};

}  // namespace qfnn
