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

#include "qfnn/linalg.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qfnn {

namespace {

bool is_power_of_two(Eigen::Index x) {
    return x > 0 && (x & (x - 1)) == 0;
}

int log2_exact(Eigen::Index x) {
    int k = 0;
    while ((Eigen::Index{1} << k) < x) {
        ++k;
    }
    return k;
}

}  // namespace

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    return Eigen::kroneckerProduct(a, b);
}

ComplexMatrix embed(const ComplexMatrix& gate, std::span<const int> wires, int num_wires) {
    if (gate.rows() != gate.cols() || !is_power_of_two(gate.rows())) {
        throw std::invalid_argument("embed: gate must be square with power-of-two dimension");
    }
    const int k = log2_exact(gate.rows());
    if (static_cast<int>(wires.size()) != k) {
        throw std::invalid_argument("embed: wire count does not match gate arity");
    }
    if (num_wires < 1 || num_wires > kMaxQubits) {
        throw std::invalid_argument("embed: register size out of range");
    }
    std::vector<bool> used(num_wires, false);
    for (int w : wires) {
        if (w < 0 || w >= num_wires) {
            throw std::invalid_argument("embed: wire index out of range");
        }
        if (used[w]) {
            throw std::invalid_argument("embed: duplicate wire index");
        }
        used[w] = true;
    }

    const std::uint64_t dim = std::uint64_t{1} << num_wires;
    const std::uint64_t gdim = std::uint64_t{1} << k;
    const std::uint64_t rdim = std::uint64_t{1} << (num_wires - k);

    // Scatter tables: gate-index bits land on the listed wires, the rest
    // bits fill the remaining wires in increasing order.
    std::vector<int> rest_wires;
    rest_wires.reserve(num_wires - k);
    for (int w = 0; w < num_wires; ++w) {
        if (!used[w]) {
            rest_wires.push_back(w);
        }
    }
    std::vector<std::uint64_t> scatter_gate(gdim, 0);
    for (std::uint64_t g = 0; g < gdim; ++g) {
        std::uint64_t idx = 0;
        for (int p = 0; p < k; ++p) {
            idx = set_wire_bit(idx, wires[p], num_wires, wire_bit(g, p, k));
        }
        scatter_gate[g] = idx;
    }
    std::vector<std::uint64_t> scatter_rest(rdim, 0);
    for (std::uint64_t r = 0; r < rdim; ++r) {
        std::uint64_t idx = 0;
        for (int p = 0; p < num_wires - k; ++p) {
            idx = set_wire_bit(idx, rest_wires[p], num_wires, wire_bit(r, p, num_wires - k));
        }
        scatter_rest[r] = idx;
    }

    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (std::uint64_t gr = 0; gr < gdim; ++gr) {
        for (std::uint64_t gc = 0; gc < gdim; ++gc) {
            const Complex v = gate(gr, gc);
            if (v == Complex{0, 0}) {
                continue;
            }
            for (std::uint64_t r = 0; r < rdim; ++r) {
                out(scatter_gate[gr] | scatter_rest[r], scatter_gate[gc] | scatter_rest[r]) = v;
            }
        }
    }
    return out;
}

ComplexMatrix exp_ih(const ComplexMatrix& h) {
    if (!is_hermitian(h, 1e-10)) {
        throw std::invalid_argument("exp_ih: generator is not Hermitian within 1e-10");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("exp_ih: eigendecomposition failed");
    }
    const auto& q = solver.eigenvectors();
    ComplexVector phases(h.rows());
    for (Eigen::Index j = 0; j < h.rows(); ++j) {
        phases(j) = std::exp(Complex{0, solver.eigenvalues()(j)});
    }
    return q * phases.asDiagonal() * q.adjoint();
}

ComplexMatrix principal_generator(const ComplexMatrix& u) {
    if (!is_unitary(u, 1e-8)) {
        throw std::invalid_argument("principal_generator: input is not unitary within 1e-8");
    }
    // A unitary is normal, so its Schur form is diagonal with unit-modulus
    // entries and the Schur basis is orthonormal.
    Eigen::ComplexSchur<ComplexMatrix> schur(u);
    if (schur.info() != Eigen::Success) {
        throw std::runtime_error("principal_generator: Schur decomposition failed");
    }
    const auto& q = schur.matrixU();
    Eigen::VectorXd angles(u.rows());
    for (Eigen::Index j = 0; j < u.rows(); ++j) {
        angles(j) = std::arg(schur.matrixT()(j, j));
    }
    ComplexMatrix h = q * angles.cast<Complex>().asDiagonal() * q.adjoint();
    return ComplexMatrix(0.5 * (h + h.adjoint()));
}

double max_abs(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    return max_abs(a - b);
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    return max_abs(m - m.adjoint()) <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    ComplexMatrix gram = m.adjoint() * m;
    return max_abs(gram - ComplexMatrix::Identity(m.rows(), m.cols())) <= tol;
}

double phase_aligned_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("phase_aligned_diff: shape mismatch");
    }
    const Complex overlap = (a.adjoint() * b).trace();
    const Complex phase = std::abs(overlap) < 1e-300 ? Complex{1, 0} : overlap / std::abs(overlap);
    return max_abs(a * phase - b);
}

}  // namespace qfnn
