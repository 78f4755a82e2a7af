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

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <span>

namespace qfnn {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Largest register size the dense simulator accepts.
inline constexpr int kMaxQubits = 12;

// Register convention used throughout: wire 0 is the most significant
// tensor factor, so a basis index decomposes as b = sum_w bit_w * 2^(n-1-w).
inline int wire_bit(std::uint64_t index, int wire, int num_wires) {
    return static_cast<int>((index >> (num_wires - 1 - wire)) & 1u);
}
inline std::uint64_t set_wire_bit(std::uint64_t index, int wire, int num_wires, int bit) {
    const std::uint64_t mask = std::uint64_t{1} << (num_wires - 1 - wire);
    return bit ? (index | mask) : (index & ~mask);
}

/// Kronecker product; a's indices are more significant than b's.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Lifts a 2^k x 2^k gate to a 2^n x 2^n operator acting as `gate` on the
/// listed wires (in listed order, wires[0] most significant within the gate)
/// and as identity elsewhere. Throws on duplicate or out-of-range wires.
ComplexMatrix embed(const ComplexMatrix& gate, std::span<const int> wires, int num_wires);

/// exp(iH) for Hermitian H via eigendecomposition H = Q diag(l) Q^dag,
/// so the result is unitary up to rounding. Throws if H is not Hermitian
/// within 1e-10 (max-entry norm).
ComplexMatrix exp_ih(const ComplexMatrix& h);

/// Inverse of exp_ih on the principal branch: a Hermitian H with
/// exp(iH) = U and eigenvalues of H in (-pi, pi]. U must be unitary.
ComplexMatrix principal_generator(const ComplexMatrix& u);

double max_abs(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool is_hermitian(const ComplexMatrix& m, double tol);
bool is_unitary(const ComplexMatrix& m, double tol);

/// Max-entry distance between a and e^{i theta} b, minimized over the global
/// phase theta. Zero iff the matrices agree up to global phase.
double phase_aligned_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qfnn
