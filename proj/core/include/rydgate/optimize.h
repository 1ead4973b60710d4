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

#ifndef RYDGATE_OPTIMIZE_H_
#define RYDGATE_OPTIMIZE_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "rydgate/fidelity.h"
#include "rydgate/model.h"

namespace rydgate {

struct ParameterSpec {
    std::string name;
    double lower;
    double upper;
    /// Feasible values satisfy |x| >= min_magnitude (0 disables the bound).
    double min_magnitude = 0.0;
};

/// Maximise `objective` over a box with optional per-parameter magnitude
/// floors. Equality ties are expected to be built into the parameterisation.
struct OptimizationProblem {
    std::vector<ParameterSpec> parameters;
    std::function<double(std::span<const double>)> objective;
    /// Optional replacement for the default projection (clamp into the box,
    /// then push |x| up to min_magnitude). Must map any point into the feasible
    /// set; the result is what gets evaluated.
    std::function<void(std::span<double>)> project;
    /// Optional starting points; restart k < initial_points.size() starts from
    /// initial_points[k] (projected) instead of a Latin-hypercube sample.
    std::vector<std::vector<double>> initial_points;
};

struct NelderMeadOptions {
    int restarts = 16;
    int max_evaluations = 2000;
    double diameter_tolerance = 1e-6;
    /// Initial simplex edge as a fraction of each parameter's range.
    double initial_step = 0.1;
    /// Restarts run on this many workers; results do not depend on it.
    int threads = 1;
};

struct OptimizationResult {
    std::vector<double> best_parameters;
    double best_fidelity = 0.0;
    long evaluations = 0;
    int restarts_used = 0;
};

/// Multistart Nelder-Mead (reflection 1, expansion 2, contraction 1/2,
/// shrink 1/2) with every vertex projected onto the feasible set before
/// evaluation. Starting points are Latin-hypercube samples from `seed`; the
/// best restart wins (earliest on ties). best_fidelity is the objective
/// re-evaluated at best_parameters. Throws kInfeasibleStart when a bound
/// admits no feasible value.
OptimizationResult nelder_mead_constrained(const OptimizationProblem &problem, std::uint64_t seed,
                                           const NelderMeadOptions &options = {});

/// Local refinement of (A_odd, A_even) within +-radius of `start`; the result
/// parameters are the refined areas in radians.
OptimizationResult refine_area_optimum(const ProtocolFamily &family, const GateSignature &target, AreaPair start,
                                       double radius, std::uint64_t seed, const NelderMeadOptions &options = {});

struct FactorOptimization {
    OptimizationResult result;
    /// Best protocol's odd and even structural vectors.
    std::vector<double> odd_vector;
    std::vector<double> even_vector;
};

/// Three-qubit SOP with the third components c_odd, c_even free and
/// c_k^2 >= min_sq. The (a, b) sub-vectors keep the direction of the
/// reference family three_qubit(b, c_reference, kSubVector) and are rescaled to
/// sqrt(1 - c_k^2); the odd and even sub-vectors stay orthogonal and e3 = e1.
/// Parameters: (c_odd, c_even).
FactorOptimization optimize_third_qubit(AreaPair areas, double b, double min_sq, double c_reference,
                                        std::uint64_t seed, const NelderMeadOptions &options = {});
Protocol third_qubit_protocol(AreaPair areas, double b, double c_reference, double c_odd, double c_even);

/// Three-qubit protocol with c fixed on every pulse and the (a, b) parts of the
/// odd and even vectors free on the circle of radius sqrt(1 - c^2), subject to
/// a_k^2 >= min_sq and b_k^2 >= min_sq; e3 = e1, no orthogonality.
/// Parameters: polar angles (phi_odd, phi_even). The first two restarts start
/// from the fixed-factor protocols three_qubit(sqrt(min_sq), c_fixed, ...) with
/// sub-vector and full-vector orthogonality. Throws kInfeasibleStart when
/// 2 min_sq > 1 - c^2.
FactorOptimization optimize_all_factors(AreaPair areas, double c_fixed, double min_sq, std::uint64_t seed,
                                        const NelderMeadOptions &options = {});
Protocol all_factors_protocol(AreaPair areas, double c_fixed, double phi_odd, double phi_even);

struct OptimizedMap {
    FidelityMap map;
    /// Column names of the per-cell vectors, e.g. a_odd, b_odd, c_odd, ...
    std::vector<std::string> parameter_names;
    /// parameters[cell] in the same row-major order as map.values.
    std::vector<std::vector<double>> parameters;
};

using CellOptimizer = std::function<FactorOptimization(AreaPair areas, std::uint64_t seed)>;

/// Runs `optimizer` on every grid cell, seeding cell k with seed + k so that
/// the result does not depend on the thread count.
OptimizedMap optimized_map(const CellOptimizer &optimizer, int n_qubits, const AreaGrid &odd,
                           const AreaGrid &even, std::uint64_t seed, int threads = 1);

/// Map CSV columns followed by the odd and even structural vector components.
void write_optimized_map_csv(std::ostream &out, const OptimizedMap &map);

}  // namespace rydgate

#endif  // RYDGATE_OPTIMIZE_H_
