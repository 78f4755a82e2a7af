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

#include "qfnn/states.hpp"

#include <cmath>
#include <stdexcept>

namespace qfnn {

DensityMatrix sample_haar_state(int num_qubits, std::mt19937_64& rng) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("sample_haar_state: register size out of range");
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    const Eigen::Index dim = Eigen::Index{1} << num_qubits;
    ComplexVector psi(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        psi(i) = Complex{re, im};
    }
    psi /= psi.norm();
    return DensityMatrix::from_ket(psi);
}

std::array<DensityMatrix, 6> axis_states() {
    const double s = 1.0 / std::sqrt(2.0);
    ComplexVector plus(2), minus(2), plus_i(2), minus_i(2);
    plus << s, s;
    minus << s, -s;
    plus_i << s, Complex{0, s};
    minus_i << s, Complex{0, -s};
    return {
        DensityMatrix::basis_state(1, 0),
        DensityMatrix::basis_state(1, 1),
        DensityMatrix::from_ket(plus),
        DensityMatrix::from_ket(minus),
        DensityMatrix::from_ket(plus_i),
        DensityMatrix::from_ket(minus_i),
    };
}

DensityMatrix plus_state() {
    const double s = 1.0 / std::sqrt(2.0);
    ComplexVector psi(2);
    psi << s, s;
    return DensityMatrix::from_ket(psi);
}

DensityMatrix minus_state() {
    const double s = 1.0 / std::sqrt(2.0);
    ComplexVector psi(2);
    psi << s, -s;
    return DensityMatrix::from_ket(psi);
}

DensityMatrix bell_phi_plus() {
    const double s = 1.0 / std::sqrt(2.0);
    ComplexVector psi(4);
    psi << s, 0, 0, s;
    return DensityMatrix::from_ket(psi);
}

DensityMatrix bell_phi_minus() {
    const double s = 1.0 / std::sqrt(2.0);
    ComplexVector psi(4);
    psi << s, 0, 0, -s;
    return DensityMatrix::from_ket(psi);
}

ComplexVector basis_ket(int num_qubits, std::uint64_t index) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("basis_ket: register size out of range");
    }
    const Eigen::Index dim = Eigen::Index{1} << num_qubits;
    if (index >= static_cast<std::uint64_t>(dim)) {
        throw std::invalid_argument("basis_ket: index out of range");
    }
    ComplexVector psi = ComplexVector::Zero(dim);
    psi(index) = 1.0;
    return psi;
}

}  // namespace qfnn
