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

// Shared helpers for the test suites: random generators and reference
// calculations that do not go through the library's block machinery.

#ifndef RYDGATE_TESTS_TEST_SUPPORT_H_
#define RYDGATE_TESTS_TEST_SUPPORT_H_

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "rydgate/error.h"
#include "rydgate/model.h"

namespace rydgate::test_util {

/// Code of the rydgate::Error thrown by f, or nullopt if nothing was thrown.
template <typename F>
std::optional<ErrorCode> code_of(F &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    return std::nullopt;
}

class Generator {
   public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {
    }

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }
    int integer(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }
    std::vector<double> gaussian_vector(int n) {
        std::normal_distribution<double> normal;
        std::vector<double> v(n);
        for (double &x : v) {
            x = normal(rng_);
        }
        return v;
    }
    StructuralVector unit_vector(int n) {
        while (true) {
            std::vector<double> v = gaussian_vector(n);
            double s = 0;
            for (double x : v) {
                s += x * x;
            }
            if (s > 1e-6) {
                return make_structural_vector(std::move(v));
            }
        }
    }
    /// Arbitrary pulses: independent random vectors and areas in [-limit, limit].
    Protocol protocol(int n_qubits, int pulses, double limit) {
        std::vector<Pulse> sequence;
        for (int k = 0; k < pulses; ++k) {
            sequence.push_back({uniform(-limit, limit), unit_vector(n_qubits)});
        }
        return Protocol(n_qubits, std::move(sequence));
    }

   private:
    std::mt19937_64 rng_;
};

/// Blockaded register states: every qubit in {0, 1} (index = mask) followed by
/// every state with exactly one qubit in |r>, the others in {0, 1}.
struct BlockadeSpace {
    int n_qubits;
    std::vector<std::pair<std::uint32_t, int>> states;  // (ones mask, rydberg qubit or -1)

    explicit BlockadeSpace(int n) : n_qubits(n) {
        for (std::uint32_t m = 0; m < (1u << n); ++m) {
            states.emplace_back(m, -1);
        }
        for (int q = 0; q < n; ++q) {
            for (std::uint32_t m = 0; m < (1u << n); ++m) {
                if (!((m >> q) & 1u)) {
                    states.emplace_back(m, q);
                }
            }
        }
    }

    int index_of(std::uint32_t mask, int rydberg) const {
        for (std::size_t i = 0; i < states.size(); ++i) {
            if (states[i].first == mask && states[i].second == rydberg) {
                return static_cast<int>(i);
            }
        }
        return -1;
    }
};

/// Propagator of the full protocol on the blockaded register, each pulse as
/// exp(i theta_k K_k) with K_k coupling |..0_q..> <-> |..r_q..> by e_k[q].
/// Computed with a general matrix exponential, independently of any block
/// structure.
inline Eigen::MatrixXcd full_register_propagator(const Protocol &protocol) {
    BlockadeSpace space(protocol.n_qubits());
    const auto dim = static_cast<Eigen::Index>(space.states.size());
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Identity(dim, dim);
    for (const Pulse &pulse : protocol.pulses()) {
        Eigen::MatrixXcd k = Eigen::MatrixXcd::Zero(dim, dim);
        for (std::uint32_t m = 0; m < (1u << protocol.n_qubits()); ++m) {
            for (int q = 0; q < protocol.n_qubits(); ++q) {
                if ((m >> q) & 1u) {
                    continue;
                }
                int g = space.index_of(m, -1);
                int r = space.index_of(m, q);
                k(g, r) = pulse.vector[q];
                k(r, g) = pulse.vector[q];
            }
        }
        Eigen::MatrixXcd step = (std::complex<double>(0.0, pulse.mixing_angle()) * k).exp();
        total = step * total;
    }
    return total;
}

/// Diagonal amplitude of a computational state from full_register_propagator.
inline std::complex<double> full_register_amplitude(const Eigen::MatrixXcd &u, const BasisState &state) {
    std::uint32_t mask = 0;
    for (int q = 0; q < state.n_qubits(); ++q) {
        if (state.is_one(q)) {
            mask |= 1u << q;
        }
    }
    return u(mask, mask);
}

}  // namespace rydgate::test_util

#endif  // RYDGATE_TESTS_TEST_SUPPORT_H_
