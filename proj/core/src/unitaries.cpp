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

#include "qfnn/unitaries.hpp"

#include "qfnn/pauli.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qfnn {

namespace {

// Pauli-string basis for N-qubit generators, indexed by flat base-4 digits
// (first wire most significant). Built once per N.
const std::vector<ComplexMatrix>& pauli_basis(int num_qubits) {
    static const std::array<std::vector<ComplexMatrix>, 4> tables = [] {
        std::array<std::vector<ComplexMatrix>, 4> t;
        for (int n = 1; n <= 3; ++n) {
            const int count = 1 << (2 * n);
            t[n].reserve(count);
            for (int idx = 0; idx < count; ++idx) {
                ComplexMatrix m = pauli((idx >> (2 * (n - 1))) & 3);
                for (int w = 1; w < n; ++w) {
                    m = tensor(m, pauli((idx >> (2 * (n - 1 - w))) & 3));
                }
                t[n].push_back(std::move(m));
            }
        }
        return t;
    }();
    if (num_qubits < 1 || num_qubits > 3) {
        throw std::invalid_argument("pauli_basis: only 1..3 qubits supported");
    }
    return tables[num_qubits];
}

int heaviside(double z, double threshold) {
    return z > threshold ? 1 : 0;
}

}  // namespace

int param_count(UnitaryFamily family, int arity) {
    switch (family) {
        case UnitaryFamily::GeneralN:
            return 1 << (2 * arity);
        case UnitaryFamily::Neuron3:
            return 32;
        case UnitaryFamily::Neuron2:
            return 12;
        case UnitaryFamily::SingleQubit:
            return 4;
        case UnitaryFamily::TwoParam:
            return 2;
        case UnitaryFamily::FanOut2:
            return 16;
        case UnitaryFamily::ClassicalPermutation:
            return 0;
    }
    throw std::invalid_argument("param_count: unknown family");
}

std::string_view family_name(UnitaryFamily family) {
    switch (family) {
        case UnitaryFamily::GeneralN:
            return "general_n";
        case UnitaryFamily::Neuron3:
            return "neuron3";
        case UnitaryFamily::Neuron2:
            return "neuron2";
        case UnitaryFamily::SingleQubit:
            return "single_qubit";
        case UnitaryFamily::TwoParam:
            return "two_param";
        case UnitaryFamily::FanOut2:
            return "fan_out2";
        case UnitaryFamily::ClassicalPermutation:
            return "classical_permutation";
    }
    throw std::invalid_argument("family_name: unknown family");
}

UnitaryFamily family_from_name(std::string_view name) {
    if (name == "general_n") return UnitaryFamily::GeneralN;
    if (name == "neuron3") return UnitaryFamily::Neuron3;
    if (name == "neuron2") return UnitaryFamily::Neuron2;
    if (name == "single_qubit") return UnitaryFamily::SingleQubit;
    if (name == "two_param") return UnitaryFamily::TwoParam;
    if (name == "fan_out2") return UnitaryFamily::FanOut2;
    if (name == "classical_permutation") return UnitaryFamily::ClassicalPermutation;
    throw std::invalid_argument("family_from_name: unknown family name");
}

ParamUnitary ParamUnitary::general_n(int num_qubits, std::vector<double> alpha) {
    ParamUnitary u;
    u.family = UnitaryFamily::GeneralN;
    u.arity = num_qubits;
    u.params = std::move(alpha);
    u.validate();
    return u;
}

ParamUnitary ParamUnitary::neuron(int control_arity, std::vector<double> params) {
    if (control_arity != 1 && control_arity != 2) {
        throw std::invalid_argument("neuron: control arity must be 1 or 2");
    }
    ParamUnitary u;
    u.family = control_arity == 2 ? UnitaryFamily::Neuron3 : UnitaryFamily::Neuron2;
    u.arity = control_arity + 1;
    u.params = std::move(params);
    u.validate();
    return u;
}

ParamUnitary ParamUnitary::single_qubit(std::vector<double> alpha) {
    ParamUnitary u;
    u.family = UnitaryFamily::SingleQubit;
    u.arity = 1;
    u.params = std::move(alpha);
    u.validate();
    return u;
}

ParamUnitary ParamUnitary::two_param(double theta, double phi) {
    ParamUnitary u;
    u.family = UnitaryFamily::TwoParam;
    u.arity = 2;
    u.params = {theta, phi};
    return u;
}

ParamUnitary ParamUnitary::fan_out(std::vector<double> alpha) {
    ParamUnitary u;
    u.family = UnitaryFamily::FanOut2;
    u.arity = 2;
    u.params = std::move(alpha);
    u.validate();
    return u;
}

ParamUnitary ParamUnitary::classical_permutation(std::vector<double> weights, double threshold) {
    if (weights.empty()) {
        throw std::invalid_argument("classical_permutation: needs at least one weight");
    }
    ParamUnitary u;
    u.family = UnitaryFamily::ClassicalPermutation;
    u.arity = static_cast<int>(weights.size()) + 1;
    u.weights = std::move(weights);
    u.threshold = threshold;
    return u;
}

void ParamUnitary::validate() const {
    if (family == UnitaryFamily::ClassicalPermutation) {
        if (weights.empty() || arity != static_cast<int>(weights.size()) + 1) {
            throw std::invalid_argument("ParamUnitary: classical neuron arity must be inputs + 1");
        }
        if (!params.empty()) {
            throw std::invalid_argument("ParamUnitary: classical neuron carries no parameters");
        }
        return;
    }
    if (family == UnitaryFamily::GeneralN && (arity < 1 || arity > 3)) {
        throw std::invalid_argument("ParamUnitary: GeneralN supports 1..3 qubits");
    }
    const int expected_arity = [&] {
        switch (family) {
            case UnitaryFamily::GeneralN:
                return arity;
            case UnitaryFamily::Neuron3:
                return 3;
            case UnitaryFamily::Neuron2:
                return 2;
            case UnitaryFamily::SingleQubit:
                return 1;
            case UnitaryFamily::TwoParam:
            case UnitaryFamily::FanOut2:
                return 2;
            default:
                return -1;
        }
    }();
    if (arity != expected_arity) {
        throw std::invalid_argument("ParamUnitary: arity does not match family");
    }
    if (static_cast<int>(params.size()) != param_count(family, arity)) {
        throw std::invalid_argument("ParamUnitary: parameter count does not match family");
    }
}

ComplexMatrix build_general_n(std::span<const double> alpha, int num_qubits) {
    if (num_qubits < 1 || num_qubits > 3) {
        throw std::invalid_argument("build_general_n: only 1..3 qubits supported");
    }
    const auto& basis = pauli_basis(num_qubits);
    if (alpha.size() != basis.size()) {
        throw std::invalid_argument("build_general_n: parameter vector must have length 4^N");
    }
    const Eigen::Index dim = Eigen::Index{1} << num_qubits;
    ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (alpha[j] != 0.0) {
            h += alpha[j] * basis[j];
        }
    }
    return exp_ih(h);
}

ComplexMatrix build_single_qubit(double a0, double a1, double a2, double a3) {
    const double omega = std::sqrt(a1 * a1 + a2 * a2 + a3 * a3);
    // sin(Om)/Om has a removable singularity at 0; switch to the series
    // 1 - Om^2/6 below 1e-6 where the direct quotient loses accuracy.
    const double sinc = omega < 1e-6 ? 1.0 - omega * omega / 6.0 : std::sin(omega) / omega;
    const Complex phase = std::exp(Complex{0, a0});
    ComplexMatrix u = std::cos(omega) * pauli(0);
    u += Complex{0, 1} * sinc * (a1 * pauli(1) + a2 * pauli(2) + a3 * pauli(3));
    return phase * u;
}

ComplexMatrix build_neuron(int control_arity, std::span<const double> v_params,
                           std::span<const double> t_params) {
    if (control_arity != 1 && control_arity != 2) {
        throw std::invalid_argument("build_neuron: control arity must be 1 or 2");
    }
    const int m = control_arity;
    const std::size_t v_len = std::size_t{1} << (2 * m);
    const std::size_t blocks = std::size_t{1} << m;
    if (v_params.size() != v_len) {
        throw std::invalid_argument("build_neuron: control-basis parameters must have length 4^m");
    }
    if (t_params.size() != 4 * blocks) {
        throw std::invalid_argument("build_neuron: expected 2^m single-qubit blocks of 4");
    }
    const ComplexMatrix v = build_general_n(v_params, m);
    const Eigen::Index cdim = Eigen::Index{1} << m;
    ComplexMatrix u = ComplexMatrix::Zero(2 * cdim, 2 * cdim);
    for (Eigen::Index j = 0; j < cdim; ++j) {
        const ComplexVector tau = v.col(j);
        const ComplexMatrix t =
            build_single_qubit(t_params[4 * j], t_params[4 * j + 1], t_params[4 * j + 2],
                               t_params[4 * j + 3]);
        u += tensor(ComplexMatrix(tau * tau.adjoint()), t);
    }
    return u;
}

ComplexMatrix build_two_param(double theta, double phi) {
    const Complex eip = std::exp(Complex{0, phi});
    ComplexVector tau(2), tau_perp(2);
    tau << std::cos(theta / 2), eip * std::sin(theta / 2);
    tau_perp << std::sin(theta / 2), -eip * std::cos(theta / 2);
    return tensor(ComplexMatrix(tau * tau.adjoint()), pauli(0)) +
           tensor(ComplexMatrix(tau_perp * tau_perp.adjoint()), pauli(1));
}

ComplexMatrix build_classical_neuron_permutation(std::span<const double> weights,
                                                 double threshold) {
    const int n = static_cast<int>(weights.size());
    if (n < 1 || n + 1 > kMaxQubits) {
        throw std::invalid_argument("build_classical_neuron_permutation: bad input count");
    }
    const std::uint64_t inputs = std::uint64_t{1} << n;
    ComplexMatrix p = ComplexMatrix::Zero(2 * inputs, 2 * inputs);
    for (std::uint64_t in = 0; in < inputs; ++in) {
        double z = 0;
        for (int w = 0; w < n; ++w) {
            z += weights[w] * wire_bit(in, w, n);
        }
        const int out = heaviside(z, threshold);
        for (int d = 0; d < 2; ++d) {
            p((in << 1) | (d ^ out), (in << 1) | d) = 1.0;
        }
    }
    return p;
}

std::vector<double> fan_out_cnot_params() {
    // (pi/4)(1 - s3) x (1 - s1) expanded over the Pauli basis.
    const double q = std::numbers::pi / 4;
    std::vector<double> alpha(16, 0.0);
    alpha[0] = q;    // 1 x 1
    alpha[1] = -q;   // 1 x s1
    alpha[12] = -q;  // s3 x 1
    alpha[13] = q;   // s3 x s1
    return alpha;
}

ComplexMatrix materialize(const ParamUnitary& u) {
    u.validate();
    switch (u.family) {
        case UnitaryFamily::GeneralN:
        case UnitaryFamily::FanOut2:
            return build_general_n(u.params, u.arity);
        case UnitaryFamily::Neuron3:
            return build_neuron(2, std::span(u.params).first(16), std::span(u.params).subspan(16));
        case UnitaryFamily::Neuron2:
            return build_neuron(1, std::span(u.params).first(4), std::span(u.params).subspan(4));
        case UnitaryFamily::SingleQubit:
            return build_single_qubit(u.params[0], u.params[1], u.params[2], u.params[3]);
        case UnitaryFamily::TwoParam:
            return build_two_param(u.params[0], u.params[1]);
        case UnitaryFamily::ClassicalPermutation:
            return build_classical_neuron_permutation(u.weights, u.threshold);
    }
    throw std::invalid_argument("materialize: unknown family");
}

}  // namespace qfnn
