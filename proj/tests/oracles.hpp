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

// Reference implementations used to cross-check the library. Everything here
// is written from the defining formulas, independent of the code paths under
// test: Kronecker products by the index formula, exponentials by Taylor
// series, partial traces by explicit double-index summation, expectations by
// dense matrix products.

#pragma once

#include "qfnn/density_matrix.hpp"
#include "qfnn/linalg.hpp"
#include "qfnn/pauli.hpp"

#include <random>
#include <vector>

namespace qfnn::oracles {

// (A x B)[i*rows_b + k][j*cols_b + l] = A[i][j] * B[k][l]
inline ComplexMatrix kron_reference(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            for (Eigen::Index k = 0; k < b.rows(); ++k) {
                for (Eigen::Index l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

// sum_{k<=terms} (iH)^k / k!
inline ComplexMatrix taylor_exp_ih(const ComplexMatrix& h, int terms = 40) {
    const ComplexMatrix ih = Complex{0, 1} * h;
    ComplexMatrix sum = ComplexMatrix::Identity(h.rows(), h.cols());
    ComplexMatrix power = ComplexMatrix::Identity(h.rows(), h.cols());
    for (int k = 1; k <= terms; ++k) {
        power = ComplexMatrix(power * ih / static_cast<double>(k));
        sum += power;
    }
    return sum;
}

// Embedding by basis-state enumeration: for every register column index,
// route the gate's action through the listed wires bit by bit.
inline ComplexMatrix embed_reference(const ComplexMatrix& gate, const std::vector<int>& wires,
                                     int n) {
    const int k = static_cast<int>(wires.size());
    const std::uint64_t dim = std::uint64_t{1} << n;
    ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
    for (std::uint64_t col = 0; col < dim; ++col) {
        std::uint64_t gate_col = 0;
        for (int p = 0; p < k; ++p) {
            gate_col = (gate_col << 1) | static_cast<std::uint64_t>(wire_bit(col, wires[p], n));
        }
        for (std::uint64_t gate_row = 0; gate_row < (std::uint64_t{1} << k); ++gate_row) {
            std::uint64_t row = col;
            for (int p = 0; p < k; ++p) {
                row = set_wire_bit(row, wires[p], n, wire_bit(gate_row, p, k));
            }
            out(row, col) += gate(gate_row, gate_col);
        }
    }
    return out;
}

// Reduced matrix by the summation rho_red[r][c] = sum over full-index pairs
// whose kept bits spell (r, c) and whose traced bits agree.
inline ComplexMatrix partial_trace_reference(const ComplexMatrix& rho, int n,
                                             const std::vector<int>& keep) {
    const int m = static_cast<int>(keep.size());
    const std::uint64_t dim = std::uint64_t{1} << n;
    const std::uint64_t kdim = std::uint64_t{1} << m;
    ComplexMatrix out = ComplexMatrix::Zero(kdim, kdim);
    for (std::uint64_t big_r = 0; big_r < dim; ++big_r) {
        for (std::uint64_t big_c = 0; big_c < dim; ++big_c) {
            bool traced_equal = true;
            for (int w = 0; w < n && traced_equal; ++w) {
                bool kept = false;
                for (int kw : keep) {
                    kept = kept || kw == w;
                }
                if (!kept && wire_bit(big_r, w, n) != wire_bit(big_c, w, n)) {
                    traced_equal = false;
                }
            }
            if (!traced_equal) {
                continue;
            }
            std::uint64_t r = 0, c = 0;
            for (int p = 0; p < m; ++p) {
                r = (r << 1) | static_cast<std::uint64_t>(wire_bit(big_r, keep[p], n));
                c = (c << 1) | static_cast<std::uint64_t>(wire_bit(big_c, keep[p], n));
            }
            out(r, c) += rho(big_r, big_c);
        }
    }
    return out;
}

// Dense Tr(rho * P) with the Pauli string assembled by kron_reference.
inline double expectation_reference(const ComplexMatrix& rho, const PauliString& p) {
    ComplexMatrix op = pauli(p.indices.front());
    for (std::size_t i = 1; i < p.indices.size(); ++i) {
        op = kron_reference(op, pauli(p.indices[i]));
    }
    return (rho * op).trace().real();
}

inline bool is_permutation_matrix(const ComplexMatrix& m, double tol = 0.0) {
    if (m.rows() != m.cols()) {
        return false;
    }
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        int ones = 0;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            const Complex v = m(r, c);
            if (std::abs(v - Complex{1, 0}) <= tol) {
                ++ones;
            } else if (std::abs(v) > tol) {
                return false;
            }
        }
        if (ones != 1) {
            return false;
        }
    }
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        int ones = 0;
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (std::abs(m(r, c) - Complex{1, 0}) <= tol) {
                ++ones;
            }
        }
        if (ones != 1) {
            return false;
        }
    }
    return true;
}

inline ComplexMatrix random_complex(std::mt19937_64& rng, int rows, int cols) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            m(i, j) = Complex{gauss(rng), gauss(rng)};
        }
    }
    return m;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, int dim) {
    const ComplexMatrix a = random_complex(rng, dim, dim);
    return 0.5 * (a + a.adjoint());
}

// Unitary via QR of a random complex matrix; independent of exp_ih.
inline ComplexMatrix random_unitary(std::mt19937_64& rng, int dim) {
    const ComplexMatrix a = random_complex(rng, dim, dim);
    Eigen::HouseholderQR<ComplexMatrix> qr(a);
    ComplexMatrix q = qr.householderQ();
    return q;
}

inline ComplexMatrix random_density(std::mt19937_64& rng, int dim) {
    const ComplexMatrix a = random_complex(rng, dim, dim);
    ComplexMatrix rho = a * a.adjoint();
    rho /= rho.trace();
    return rho;
}

inline PauliString random_pauli_string(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> digit(0, 3);
    std::vector<int> idx(n);
    for (auto& d : idx) {
        d = digit(rng);
    }
    return PauliString(idx);
}

inline std::vector<double> random_params(std::mt19937_64& rng, int count, double lo = -1.0,
                                         double hi = 1.0) {
    std::uniform_real_distribution<double> uniform(lo, hi);
    std::vector<double> p(count);
    for (auto& x : p) {
        x = uniform(rng);
    }
    return p;
}

}  // namespace qfnn::oracles
