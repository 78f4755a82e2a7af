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

#include "qfnn/pauli.hpp"

#include <array>
#include <stdexcept>

namespace qfnn {

const ComplexMatrix& pauli(int index) {
    static const std::array<ComplexMatrix, 4> matrices = [] {
        std::array<ComplexMatrix, 4> m;
        for (auto& x : m) {
            x.resize(2, 2);
        }
        m[0] << 1, 0, 0, 1;
        m[1] << 0, 1, 1, 0;
        m[2] << 0, Complex{0, -1}, Complex{0, 1}, 0;
        m[3] << 1, 0, 0, -1;
        return m;
    }();
    if (index < 0 || index > 3) {
        throw std::invalid_argument("pauli: index must be in {0,1,2,3}");
    }
    return matrices[index];
}

void PauliString::validate() const {
    for (int i : indices) {
        if (i < 0 || i > 3) {
            throw std::invalid_argument("PauliString: index must be in {0,1,2,3}");
        }
    }
}

ComplexMatrix pauli_string_matrix(const PauliString& p) {
    p.validate();
    if (p.indices.empty()) {
        throw std::invalid_argument("pauli_string_matrix: empty string");
    }
    ComplexMatrix m = pauli(p.indices.front());
    for (std::size_t k = 1; k < p.indices.size(); ++k) {
        m = tensor(m, pauli(p.indices[k]));
    }
    return m;
}

}  // namespace qfnn
