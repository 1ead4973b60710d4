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

#ifndef RYDGATE_PROPAGATOR_H_
#define RYDGATE_PROPAGATOR_H_

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "rydgate/model.h"

namespace rydgate {

using Complex = std::complex<double>;

/// Square complex matrix over {ground, r_1, ..., r_n} of one blockade block.
/// Storage is bounded by kMaxQubits so no heap allocation takes place.
using BlockMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxQubits + 1, kMaxQubits + 1>;

struct BlockPropagator {
    BlockMatrix matrix;

    Eigen::Index dimension() const {
        return matrix.rows();
    }
    /// max |(U^dagger U - I)_ij|
    double unitarity_error() const;
};

/// Exact propagator of a resonant pulse with mixing angle `theta` on a star
/// coupling ground <-> r_i with strengths v_i. With s = |v| and bright state
/// sum_i (v_i / s)|r_i>:
///   U_gg = cos(s theta), U_{g r_i} = U_{r_i g} = i (v_i/s) sin(s theta),
///   U_{r_i r_j} = delta_ij + (v_i v_j / s^2)(cos(s theta) - 1).
/// A zero coupling (s == 0) yields the identity.
BlockPropagator star_propagator(std::span<const double> coupling, double theta);

/// Orthonormal basis of the dark subspace (Rydberg coordinates, dimension
/// n - 1) of a star coupling. For v = (a, b) this is the single vector (-b, a).
/// Throws kNoDarkSubspace for n < 2, kZeroVector for v == 0.
std::vector<Eigen::VectorXd> dark_states(std::span<const double> coupling);

/// The part of the blockaded Hamiltonian reached from one computational state:
/// the state itself plus one singly excited Rydberg state per qubit in |0>.
struct SubsystemBlock {
    BasisState initial_state;
    std::vector<int> zero_qubits;
    /// couplings[k] is pulse k's structural vector restricted to zero_qubits.
    std::vector<std::vector<double>> couplings;

    int dimension() const noexcept {
        return 1 + static_cast<int>(zero_qubits.size());
    }
};

SubsystemBlock make_block(const Protocol &protocol, const BasisState &state);

/// One block per computational state, in computational_basis() order.
std::vector<SubsystemBlock> block_decompose(const Protocol &protocol);

/// U_M ... U_2 U_1 for the block, built by explicit matrix products.
BlockPropagator compose_block(const SubsystemBlock &block, std::span<const double> mixing_angles);
BlockPropagator compose_block(const Protocol &protocol, const BasisState &state);

/// Ground-to-ground amplitude U_jj of `state` after the whole protocol.
Complex sequence_amplitude(const Protocol &protocol, const BasisState &state);

/// sequence_amplitude for every state of computational_basis(n_qubits).
std::vector<Complex> diagonal_amplitudes(const Protocol &protocol);

/// Closed-form (1,1) element of three star propagators with unit vectors
/// e1, e2, e3 of any common dimension. Throws kDimensionMismatch.
double u11v_threepulse(const StructuralVector &e1, const StructuralVector &e2, const StructuralVector &e3,
                       double theta1, double theta2, double theta3);

/// cos^2(theta1) cos(theta2) - sin^2(theta1): symmetric protocol with
/// orthogonal odd and even vectors.
double u11v_sop(double theta1, double theta2);

/// cos(sum_k alpha_k theta_k): the single-qubit blocks. Throws kLengthMismatch.
double u11_alpha(std::span<const double> alphas, std::span<const double> thetas);
/// Same, with theta_k taken from the protocol's pulses.
double u11_alpha(const Protocol &protocol, std::span<const double> alphas);

/// Mixed areas (a A_odd - b A_even, b A_odd + a A_even). Throws kNotNormalized
/// unless a^2 + b^2 = 1 to 1e-12.
AreaPair rotate_areas(double a, double b, AreaPair areas);
/// Inverse (transpose) of rotate_areas.
AreaPair unrotate_areas(double a, double b, AreaPair rotated);

/// Reference closed forms for alternating orthogonal sequences, M in 2..5:
///   M=2: cos(to) cos(te)
///   M=3: cos^2(to) cos(te) - sin^2(to)
///   M=4: cos^2(to) cos^2(te) - sin^2(to) - sin^2(te)
///   M=5: cos^3(to) cos^2(te) - 3 sin^2(to) - sin^2(te)
/// Throws kUnsupportedM otherwise. The M = 4 and M = 5 expressions do not agree
/// with the propagator product; see u11v_alternating_exact.
double u11v_esop(int pulses, double theta_odd, double theta_even);

/// Ground amplitude of M alternating pulses with orthogonal odd/even vectors,
/// obtained from the propagator product. Valid for any M >= 1.
double u11v_alternating_exact(int pulses, double theta_odd, double theta_even);

}  // namespace rydgate

#endif  // RYDGATE_PROPAGATOR_H_
