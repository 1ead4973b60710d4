// Copyright 2026 The rydgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rydgate/propagator.h"

#include <array>
#include <cmath>

#include "rydgate/error.h"

namespace rydgate {

namespace {

constexpr Complex kI{0.0, 1.0};

double norm(std::span<const double> v) {
    if (v.size() == 1) {
        return std::abs(v[0]);
    }
    double sum = 0;
    for (double x : v) {
        sum += x * x;
    }
    return std::sqrt(sum);
}

}  // namespace

double BlockPropagator::unitarity_error() const {
    BlockMatrix product = matrix.adjoint() * matrix;
    double worst = 0;
    for (Eigen::Index i = 0; i < product.rows(); ++i) {
        for (Eigen::Index j = 0; j < product.cols(); ++j) {
            Complex expected = i == j ? Complex{1.0} : Complex{0.0};
            worst = std::max(worst, std::abs(product(i, j) - expected));
        }
    }
    return worst;
}

BlockPropagator star_propagator(std::span<const double> coupling, double theta) {
    const auto n = static_cast<Eigen::Index>(coupling.size());
    if (n > kMaxQubits) {
        throw Error(ErrorCode::kInvalidArgument, "coupling longer than the largest supported register");
    }
    BlockPropagator u{BlockMatrix::Identity(n + 1, n + 1)};
    double s = norm(coupling);
    if (s == 0.0) {
        return u;
    }
    double c = std::cos(s * theta);
    double sn = std::sin(s * theta);
    u.matrix(0, 0) = c;
    for (Eigen::Index i = 0; i < n; ++i) {
        double ui = coupling[i] / s;
        u.matrix(0, i + 1) = kI * (ui * sn);
        u.matrix(i + 1, 0) = kI * (ui * sn);
        for (Eigen::Index j = 0; j < n; ++j) {
            double uj = coupling[j] / s;
            // Diagonal written as (1 - u_i^2) + u_i^2 c so that a single
            // coupling reproduces cos exactly.
            u.matrix(i + 1, j + 1) = i == j ? (1.0 - ui * ui) + ui * ui * c : ui * uj * (c - 1.0);
        }
    }
    return u;
}

std::vector<Eigen::VectorXd> dark_states(std::span<const double> coupling) {
    const auto n = static_cast<Eigen::Index>(coupling.size());
    if (n < 2) {
        throw Error(ErrorCode::kNoDarkSubspace, "a dark subspace needs at least two Rydberg states");
    }
    double s = norm(coupling);
    if (s == 0.0) {
        throw Error(ErrorCode::kZeroVector, "zero coupling has no bright state");
    }
    if (n == 2) {
        Eigen::Vector2d d(-coupling[1] / s, coupling[0] / s);
        return {d};
    }
    Eigen::VectorXd u(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        u(i) = coupling[i] / s;
    }
    // The first Householder column is +-u; the remaining ones complete it to an
    // orthonormal basis.
    Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(u).householderQ();
    std::vector<Eigen::VectorXd> basis;
    for (Eigen::Index k = 1; k < n; ++k) {
        basis.emplace_back(q.col(k));
    }
    return basis;
}

SubsystemBlock make_block(const Protocol &protocol, const BasisState &state) {
    if (state.n_qubits() != protocol.n_qubits()) {
        throw Error(ErrorCode::kDimensionMismatch, "basis state and protocol differ in qubit count");
    }
    SubsystemBlock block{state, state.zero_qubits(), {}};
    block.couplings.reserve(protocol.size());
    for (const Pulse &pulse : protocol.pulses()) {
        std::vector<double> v;
        v.reserve(block.zero_qubits.size());
        for (int q : block.zero_qubits) {
            v.push_back(pulse.vector[q]);
        }
        block.couplings.push_back(std::move(v));
    }
    return block;
}

std::vector<SubsystemBlock> block_decompose(const Protocol &protocol) {
    std::vector<SubsystemBlock> blocks;
    for (const BasisState &state : computational_basis(protocol.n_qubits())) {
        blocks.push_back(make_block(protocol, state));
    }
    return blocks;
}

BlockPropagator compose_block(const SubsystemBlock &block, std::span<const double> mixing_angles) {
    if (mixing_angles.size() != block.couplings.size()) {
        throw Error(ErrorCode::kLengthMismatch, "one mixing angle per pulse is required");
    }
    const int dim = block.dimension();
    BlockPropagator total{BlockMatrix::Identity(dim, dim)};
    for (std::size_t k = 0; k < mixing_angles.size(); ++k) {
        BlockMatrix step = star_propagator(block.couplings[k], mixing_angles[k]).matrix;
        total.matrix = (step * total.matrix).eval();
    }
    return total;
}

BlockPropagator compose_block(const Protocol &protocol, const BasisState &state) {
    std::vector<double> angles;
    for (const Pulse &pulse : protocol.pulses()) {
        angles.push_back(pulse.mixing_angle());
    }
    return compose_block(make_block(protocol, state), angles);
}

Complex sequence_amplitude(const Protocol &protocol, const BasisState &state) {
    if (state.n_qubits() != protocol.n_qubits()) {
        throw Error(ErrorCode::kDimensionMismatch, "basis state and protocol differ in qubit count");
    }
    std::array<int, kMaxQubits> zeros{};
    int m = 0;
    for (int q = 0; q < state.n_qubits(); ++q) {
        if (!state.is_one(q)) {
            zeros[m++] = q;
        }
    }
    // Propagate the state vector column instead of full matrices: only the
    // ground-ground element is needed.
    Complex ground{1.0};
    std::array<Complex, kMaxQubits> rydberg{};
    std::array<double, kMaxQubits> u{};
    for (const Pulse &pulse : protocol.pulses()) {
        double s_sq = 0;
        for (int i = 0; i < m; ++i) {
            u[i] = pulse.vector[zeros[i]];
            s_sq += u[i] * u[i];
        }
        if (s_sq == 0.0) {
            continue;
        }
        double s = std::sqrt(s_sq);
        double angle = s * pulse.mixing_angle();
        double c = std::cos(angle);
        double sn = std::sin(angle);
        Complex projection{0.0};
        for (int i = 0; i < m; ++i) {
            u[i] /= s;
            projection += u[i] * rydberg[i];
        }
        Complex new_ground = c * ground + kI * sn * projection;
        Complex kick = (c - 1.0) * projection + kI * sn * ground;
        for (int i = 0; i < m; ++i) {
            rydberg[i] += u[i] * kick;
        }
        ground = new_ground;
    }
    return ground;
}

std::vector<Complex> diagonal_amplitudes(const Protocol &protocol) {
    std::vector<Complex> out;
    for (const BasisState &state : computational_basis(protocol.n_qubits())) {
        out.push_back(sequence_amplitude(protocol, state));
    }
    return out;
}

double u11v_threepulse(const StructuralVector &e1, const StructuralVector &e2, const StructuralVector &e3,
                       double theta1, double theta2, double theta3) {
    double d21 = e2.dot(e1);
    double d32 = e3.dot(e2);
    double d31 = e3.dot(e1);
    double c1 = std::cos(theta1), s1 = std::sin(theta1);
    double c2 = std::cos(theta2), s2 = std::sin(theta2);
    double c3 = std::cos(theta3), s3 = std::sin(theta3);
    return c3 * c2 * c1 - d21 * c3 * s2 * s1 - d32 * s3 * s2 * c1 - d32 * d21 * s3 * c2 * s1 -
           (d31 - d32 * d21) * s3 * s1;
}

double u11v_sop(double theta1, double theta2) {
    double c1 = std::cos(theta1);
    double s1 = std::sin(theta1);
    return c1 * c1 * std::cos(theta2) - s1 * s1;
}

double u11_alpha(std::span<const double> alphas, std::span<const double> thetas) {
    if (alphas.size() != thetas.size()) {
        throw Error(ErrorCode::kLengthMismatch, "one geometrical factor per pulse is required");
    }
    double phase = 0;
    for (std::size_t k = 0; k < alphas.size(); ++k) {
        phase += alphas[k] * thetas[k];
    }
    return std::cos(phase);
}

double u11_alpha(const Protocol &protocol, std::span<const double> alphas) {
    std::vector<double> thetas;
    for (const Pulse &pulse : protocol.pulses()) {
        thetas.push_back(pulse.mixing_angle());
    }
    return u11_alpha(alphas, thetas);
}

namespace {

void require_unit(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b) || std::abs(a * a + b * b - 1.0) > 1e-12) {
        throw Error(ErrorCode::kNotNormalized, "rotation needs a^2 + b^2 = 1");
    }
}

}  // namespace

AreaPair rotate_areas(double a, double b, AreaPair areas) {
    require_unit(a, b);
    return {a * areas.odd - b * areas.even, b * areas.odd + a * areas.even};
}

AreaPair unrotate_areas(double a, double b, AreaPair rotated) {
    require_unit(a, b);
    return {a * rotated.odd + b * rotated.even, -b * rotated.odd + a * rotated.even};
}

double u11v_esop(int pulses, double theta_odd, double theta_even) {
    double co = std::cos(theta_odd), so = std::sin(theta_odd);
    double ce = std::cos(theta_even), se = std::sin(theta_even);
    switch (pulses) {
        case 2:
            return ce * co;
        case 3:
            return co * co * ce - so * so;
        case 4:
            return co * co * ce * ce - so * so - se * se;
        case 5:
            return co * co * co * ce * ce - 3 * so * so - se * se;
        default:
            throw Error(ErrorCode::kUnsupportedM, "closed forms exist for M = 2..5 only");
    }
}

double u11v_alternating_exact(int pulses, double theta_odd, double theta_even) {
    if (pulses < 1) {
        throw Error(ErrorCode::kInvalidM, "need at least one pulse");
    }
    StructuralVector odd = make_structural_vector({1.0, 0.0});
    StructuralVector even = make_structural_vector({0.0, 1.0});
    std::vector<Pulse> sequence;
    for (int k = 0; k < pulses; ++k) {
        bool is_odd = k % 2 == 0;
        sequence.push_back({2 * (is_odd ? theta_odd : theta_even), is_odd ? odd : even});
    }
    return sequence_amplitude(Protocol(2, std::move(sequence)), BasisState(2, 0)).real();
}

}  // namespace rydgate
