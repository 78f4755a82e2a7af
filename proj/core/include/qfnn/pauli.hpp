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

#include <vector>

namespace qfnn {

/// sigma_0 = identity, sigma_1..sigma_3 = Pauli X, Y, Z.
const ComplexMatrix& pauli(int index);

/// A tensor product of single-qubit Paulis, one index in {0,1,2,3} per wire.
struct PauliString {
    std::vector<int> indices;

    PauliString() = default;
    PauliString(std::initializer_list<int> init) : indices(init) { validate(); }
    explicit PauliString(std::vector<int> idx) : indices(std::move(idx)) { validate(); }

    int size() const { return static_cast<int>(indices.size()); }
    void validate() const;
};

/// Dense 2^n x 2^n matrix of the Pauli string.
ComplexMatrix pauli_string_matrix(const PauliString& p);

}  // namespace qfnn
