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

#include "qfnn/density_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qfnn {

namespace {

constexpr double kHermTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kEigenvalueFloor = -1e-9;

void check_register_size(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("DensityMatrix: register size must be in [1, 12]");
    }
}

}  // namespace

DensityMatrix::DensityMatrix(Unchecked, int num_qubits, ComplexMatrix matrix)
    : num_qubits_(num_qubits), matrix_(std::move(matrix)) {}

DensityMatrix::DensityMatrix(int num_qubits, ComplexMatrix matrix)
    : num_qubits_(num_qubits), matrix_(std::move(matrix)) {
    check_register_size(num_qubits);
    const Eigen::Index dim = Eigen::Index{1} << num_qubits;
    if (matrix_.rows() != dim || matrix_.cols() != dim) {
        throw std::invalid_argument("DensityMatrix: matrix shape does not match qubit count");
    }
    if (!is_hermitian(matrix_, kHermTol)) {
        throw std::invalid_argument("DensityMatrix: matrix is not Hermitian within 1e-10");
    }
    if (std::abs(matrix_.trace() - Complex{1, 0}) > kTraceTol) {
        throw std::invalid_argument("DensityMatrix: trace differs from 1 by more than 1e-10");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(matrix_, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success || solver.eigenvalues().minCoeff() < kEigenvalueFloor) {
        throw std::invalid_argument("DensityMatrix: matrix is not positive semidefinite");
    }
}

DensityMatrix DensityMatrix::from_ket(const ComplexVector& psi) {
    Eigen::Index dim = psi.size();
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("from_ket: length must be a power of two >= 2");
    }
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) {
        ++n;
    }
    check_register_size(n);
    const double norm = psi.norm();
    if (std::abs(norm - 1.0) > 1e-8) {
        throw std::invalid_argument("from_ket: amplitudes are not normalized");
    }
    ComplexVector unit = psi / norm;
    return DensityMatrix(Unchecked{}, n, unit * unit.adjoint());
}

DensityMatrix DensityMatrix::basis_state(int num_qubits, std::uint64_t index) {
    check_register_size(num_qubits);
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    if (index >= dim) {
        throw std::invalid_argument("basis_state: index out of range");
    }
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    m(index, index) = 1.0;
    return DensityMatrix(Unchecked{}, num_qubits, std::move(m));
}

DensityMatrix DensityMatrix::zero_state(int num_qubits) {
    return basis_state(num_qubits, 0);
}

DensityMatrix DensityMatrix::apply(const ComplexMatrix& u) const {
    if (u.rows() != dim() || u.cols() != dim()) {
        throw std::invalid_argument("apply: operator shape does not match register");
    }
    if (!is_unitary(u, 1e-8)) {
        throw std::invalid_argument("apply: operator is not unitary within 1e-8");
    }
    return DensityMatrix(Unchecked{}, num_qubits_, u * matrix_ * u.adjoint());
}

DensityMatrix DensityMatrix::apply_on(const ComplexMatrix& gate, std::span<const int> wires) const {
    const Eigen::Index gdim = gate.rows();
    if (gate.cols() != gdim || gdim < 2 || (gdim & (gdim - 1)) != 0) {
        throw std::invalid_argument("apply_on: gate must be square with power-of-two dimension");
    }
    int k = 0;
    while ((Eigen::Index{1} << k) < gdim) {
        ++k;
    }
    if (static_cast<int>(wires.size()) != k) {
        throw std::invalid_argument("apply_on: wire count does not match gate arity");
    }
    std::vector<bool> used(num_qubits_, false);
    for (int w : wires) {
        if (w < 0 || w >= num_qubits_) {
            throw std::invalid_argument("apply_on: wire index out of range");
        }
        if (used[w]) {
            throw std::invalid_argument("apply_on: duplicate wire index");
        }
        used[w] = true;
    }
    if (!is_unitary(gate, 1e-8)) {
        throw std::invalid_argument("apply_on: gate is not unitary within 1e-8");
    }

    const std::uint64_t dim_full = std::uint64_t{1} << num_qubits_;
    const std::uint64_t rdim = dim_full >> k;

    // Scatter tables mapping (gate bits, rest bits) to register indices.
    std::vector<int> rest_wires;
    rest_wires.reserve(num_qubits_ - k);
    for (int w = 0; w < num_qubits_; ++w) {
        if (!used[w]) {
            rest_wires.push_back(w);
        }
    }
    std::vector<std::uint64_t> sg(gdim), sr(rdim);
    for (std::uint64_t g = 0; g < static_cast<std::uint64_t>(gdim); ++g) {
        std::uint64_t idx = 0;
        for (int p = 0; p < k; ++p) {
            idx = set_wire_bit(idx, wires[p], num_qubits_, wire_bit(g, p, k));
        }
        sg[g] = idx;
    }
    for (std::uint64_t r = 0; r < rdim; ++r) {
        std::uint64_t idx = 0;
        for (int p = 0; p < num_qubits_ - k; ++p) {
            idx = set_wire_bit(idx, rest_wires[p], num_qubits_, wire_bit(r, p, num_qubits_ - k));
        }
        sr[r] = idx;
    }

    // rho' = (G x I) rho (G x I)^dag, contracted index-wise on the gate wires.
    ComplexMatrix left(dim_full, dim_full);
    for (std::uint64_t g = 0; g < static_cast<std::uint64_t>(gdim); ++g) {
        for (std::uint64_t r = 0; r < rdim; ++r) {
            const std::uint64_t row = sg[g] | sr[r];
            for (std::uint64_t col = 0; col < dim_full; ++col) {
                Complex acc{0, 0};
                for (std::uint64_t gp = 0; gp < static_cast<std::uint64_t>(gdim); ++gp) {
                    acc += gate(g, gp) * matrix_(sg[gp] | sr[r], col);
                }
                left(row, col) = acc;
            }
        }
    }
    ComplexMatrix out(dim_full, dim_full);
    for (std::uint64_t g = 0; g < static_cast<std::uint64_t>(gdim); ++g) {
        for (std::uint64_t r = 0; r < rdim; ++r) {
            const std::uint64_t col = sg[g] | sr[r];
            for (std::uint64_t row = 0; row < dim_full; ++row) {
                Complex acc{0, 0};
                for (std::uint64_t gp = 0; gp < static_cast<std::uint64_t>(gdim); ++gp) {
                    acc += left(row, sg[gp] | sr[r]) * std::conj(gate(g, gp));
                }
                out(row, col) = acc;
            }
        }
    }
    return DensityMatrix(Unchecked{}, num_qubits_, std::move(out));
}

DensityMatrix DensityMatrix::partial_trace(std::span<const int> keep) const {
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace: keep list must be non-empty");
    }
    std::vector<bool> kept(num_qubits_, false);
    for (int w : keep) {
        if (w < 0 || w >= num_qubits_) {
            throw std::invalid_argument("partial_trace: wire index out of range");
        }
        if (kept[w]) {
            throw std::invalid_argument("partial_trace: duplicate wire index");
        }
        kept[w] = true;
    }
    const int m = static_cast<int>(keep.size());
    const int t = num_qubits_ - m;
    std::vector<int> traced;
    traced.reserve(t);
    for (int w = 0; w < num_qubits_; ++w) {
        if (!kept[w]) {
            traced.push_back(w);
        }
    }

    const std::uint64_t kdim = std::uint64_t{1} << m;
    const std::uint64_t tdim = std::uint64_t{1} << t;
    std::vector<std::uint64_t> sk(kdim), st(tdim);
    for (std::uint64_t x = 0; x < kdim; ++x) {
        std::uint64_t idx = 0;
        for (int p = 0; p < m; ++p) {
            idx = set_wire_bit(idx, keep[p], num_qubits_, wire_bit(x, p, m));
        }
        sk[x] = idx;
    }
    for (std::uint64_t e = 0; e < tdim; ++e) {
        std::uint64_t idx = 0;
        for (int p = 0; p < t; ++p) {
            idx = set_wire_bit(idx, traced[p], num_qubits_, wire_bit(e, p, t));
        }
        st[e] = idx;
    }

    ComplexMatrix out = ComplexMatrix::Zero(kdim, kdim);
    for (std::uint64_t r = 0; r < kdim; ++r) {
        for (std::uint64_t c = 0; c < kdim; ++c) {
            Complex acc{0, 0};
            for (std::uint64_t e = 0; e < tdim; ++e) {
                acc += matrix_(sk[r] | st[e], sk[c] | st[e]);
            }
            out(r, c) = acc;
        }
    }
    return DensityMatrix(Unchecked{}, m, std::move(out));
}

DensityMatrix DensityMatrix::dephase_z(int wire) const {
    if (wire < 0 || wire >= num_qubits_) {
        throw std::invalid_argument("dephase_z: wire index out of range");
    }
    ComplexMatrix out = matrix_;
    const std::uint64_t dim_full = std::uint64_t{1} << num_qubits_;
    for (std::uint64_t r = 0; r < dim_full; ++r) {
        for (std::uint64_t c = 0; c < dim_full; ++c) {
            if (wire_bit(r, wire, num_qubits_) != wire_bit(c, wire, num_qubits_)) {
                out(r, c) = Complex{0, 0};
            }
        }
    }
    return DensityMatrix(Unchecked{}, num_qubits_, std::move(out));
}

DensityMatrix DensityMatrix::tensor_with(const DensityMatrix& other) const {
    const int n = num_qubits_ + other.num_qubits_;
    check_register_size(n);
    return DensityMatrix(Unchecked{}, n, tensor(matrix_, other.matrix_));
}

double DensityMatrix::expectation(const PauliString& p) const {
    if (p.size() != num_qubits_) {
        throw std::invalid_argument("expectation: Pauli string length does not match register");
    }
    // Each Pauli string has exactly one nonzero entry per row:
    // row J maps to column c(J) with value v(J), so
    // Tr(rho P) = sum_J rho(c(J), J) * v(J).
    const std::uint64_t dim_full = std::uint64_t{1} << num_qubits_;
    Complex acc{0, 0};
    for (std::uint64_t j = 0; j < dim_full; ++j) {
        std::uint64_t col = j;
        Complex v{1, 0};
        for (int w = 0; w < num_qubits_; ++w) {
            const int b = wire_bit(j, w, num_qubits_);
            switch (p.indices[w]) {
                case 0:
                    break;
                case 1:
                    col = set_wire_bit(col, w, num_qubits_, 1 - b);
                    break;
                case 2:
                    col = set_wire_bit(col, w, num_qubits_, 1 - b);
                    v *= b == 0 ? Complex{0, -1} : Complex{0, 1};
                    break;
                case 3:
                    if (b == 1) {
                        v = -v;
                    }
                    break;
                default:
                    throw std::invalid_argument("expectation: bad Pauli index");
            }
        }
        acc += matrix_(col, j) * v;
    }
    return acc.real();
}

bool DensityMatrix::is_valid_state(double tol) const {
    if (!is_hermitian(matrix_, tol)) {
        return false;
    }
    if (std::abs(matrix_.trace() - Complex{1, 0}) > tol) {
        return false;
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(matrix_, Eigen::EigenvaluesOnly);
    return solver.info() == Eigen::Success && solver.eigenvalues().minCoeff() >= -10 * tol;
}

}  // namespace qfnn
