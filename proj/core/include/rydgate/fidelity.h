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

#ifndef RYDGATE_FIDELITY_H_
#define RYDGATE_FIDELITY_H_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rydgate/model.h"
#include "rydgate/propagator.h"

namespace rydgate {

enum class FidelityDefinition {
    /// |Tr(T^dagger U) / d|^2
    kTraceSquared,
    /// |Tr(T^dagger U) / d|
    kTrace,
    /// (|Tr M|^2 + Tr M^dagger M) / (d^2 + d) with M = T^dagger U restricted
    /// to the diagonal.
    kAverage,
};

/// "trace-sq", "trace", "average".
std::string_view fidelity_definition_name(FidelityDefinition definition);
/// Inverse of fidelity_definition_name. Throws kParseError.
FidelityDefinition parse_fidelity_definition(std::string_view name);

/// Fidelity of the diagonal amplitudes (in computational_basis order) against
/// the target phases. Throws kSignatureMismatch on a length mismatch.
double fidelity_from_amplitudes(std::span<const Complex> diagonal, const GateSignature &target,
                                FidelityDefinition definition = FidelityDefinition::kTraceSquared);

/// Throws kSignatureMismatch unless the target covers protocol.n_qubits().
double gate_fidelity(const Protocol &protocol, const GateSignature &target,
                     FidelityDefinition definition = FidelityDefinition::kTraceSquared);

/// Inclusive grid lo, lo + step, ..., up to hi (within step * 1e-9), radians.
struct AreaGrid {
    double lo;
    double hi;
    double step;

    /// Throws kEmptyGrid for step <= 0, hi < lo or non-finite bounds.
    std::vector<double> axis() const;

    /// Grid given in units of pi.
    static AreaGrid in_pi_units(double lo, double hi, double step) {
        return {lo * kPi, hi * kPi, step * kPi};
    }
};

struct MapMeta {
    int n_qubits = 2;
    int pulses = 3;
    std::vector<double> odd_vector;
    std::vector<double> even_vector;
    FidelityDefinition definition = FidelityDefinition::kTraceSquared;
};

/// values is row-major: values[i * axis_even.size() + j] is the fidelity at
/// (axis_odd[i], axis_even[j]).
struct FidelityMap {
    std::vector<double> axis_odd;
    std::vector<double> axis_even;
    std::vector<double> values;
    MapMeta meta;

    std::size_t rows() const noexcept {
        return axis_odd.size();
    }
    std::size_t cols() const noexcept {
        return axis_even.size();
    }
    double at(std::size_t i, std::size_t j) const {
        return values[i * axis_even.size() + j];
    }
};

/// Evaluates gate_fidelity on every grid point of the family, split over
/// `threads` workers (0 picks the hardware concurrency). The result does not
/// depend on the thread count.
FidelityMap fidelity_map(const ProtocolFamily &family, const GateSignature &target, const AreaGrid &odd,
                         const AreaGrid &even,
                         FidelityDefinition definition = FidelityDefinition::kTraceSquared, int threads = 1);

/// Header `a_odd_over_pi,a_even_over_pi,fidelity`, row-major, 9 significant
/// digits.
void write_map_csv(std::ostream &out, const FidelityMap &map);

struct MapMaximum {
    double a_odd;
    double a_even;
    double fidelity;
};

struct LatticeReport {
    /// Sorted by fidelity, descending; ties by (a_odd, a_even).
    std::vector<MapMaximum> maxima;
    /// Clockwise rotation of the lattice relative to the area axes, folded into
    /// (-pi/4, pi/4].
    double rotation_angle;
    /// Median nearest-neighbour distance between maxima, radians.
    double nn_spacing;
};

/// Strict local maxima over the 8-neighbourhood with F >= threshold. Cells on
/// the grid boundary are not considered.
std::vector<MapMaximum> find_local_maxima(const FidelityMap &map, double threshold);

/// Throws kNoMaximaFound when fewer than two maxima pass the threshold.
LatticeReport lattice_analysis(const FidelityMap &map, double threshold = 0.7);

/// Distance between two lattice orientations modulo a quarter turn.
double lattice_angle_distance(double alpha, double beta);

struct RobustnessCurves {
    std::vector<double> deltas;
    /// The states whose amplitude is tracked (every state except |1...1>).
    std::vector<BasisState> states;
    /// amplitudes[s][k]: real part of U_jj for states[s] at deltas[k].
    std::vector<std::vector<double>> amplitudes;
};

/// Adds delta to every odd pulse area and 2 delta to every even pulse area.
RobustnessCurves robustness_scan(const Protocol &protocol, std::span<const double> deltas);

/// Least-squares slope of log|y| against log|x|. Throws kLengthMismatch, and
/// kInvalidArgument with fewer than two usable points.
double loglog_slope(std::span<const double> x, std::span<const double> y);

struct BScanPoint {
    double b_squared;
    double fidelity;
};

/// Fidelity of the two-qubit three-pulse family at fixed summed areas as b^2
/// varies. orthogonal selects e_even = (-b, a) over (b, a).
std::vector<BScanPoint> b_scan(AreaPair areas, std::span<const double> b_squared_values, bool orthogonal,
                               FidelityDefinition definition = FidelityDefinition::kTraceSquared);

}  // namespace rydgate

#endif  // RYDGATE_FIDELITY_H_
