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

#include "rydgate/fidelity.h"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "parallel.h"
#include "rydgate/error.h"

namespace rydgate {

std::string_view fidelity_definition_name(FidelityDefinition definition) {
    switch (definition) {
        case FidelityDefinition::kTraceSquared:
            return "trace-sq";
        case FidelityDefinition::kTrace:
            return "trace";
        case FidelityDefinition::kAverage:
            return "average";
    }
    return "trace-sq";
}

FidelityDefinition parse_fidelity_definition(std::string_view name) {
    for (auto d : {FidelityDefinition::kTraceSquared, FidelityDefinition::kTrace, FidelityDefinition::kAverage}) {
        if (fidelity_definition_name(d) == name) {
            return d;
        }
    }
    throw Error(ErrorCode::kParseError, "unknown fidelity definition '" + std::string(name) + "'");
}

double fidelity_from_amplitudes(std::span<const Complex> diagonal, const GateSignature &target,
                                FidelityDefinition definition) {
    std::span<const int> phases = target.phases();
    if (diagonal.size() != phases.size()) {
        throw Error(ErrorCode::kSignatureMismatch, "signature length differs from the number of basis states");
    }
    Complex trace{0.0};
    double weight = 0;
    for (std::size_t j = 0; j < diagonal.size(); ++j) {
        trace += static_cast<double>(phases[j]) * diagonal[j];
        weight += std::norm(diagonal[j]);
    }
    const auto d = static_cast<double>(diagonal.size());
    switch (definition) {
        case FidelityDefinition::kTraceSquared:
            return std::norm(trace / d);
        case FidelityDefinition::kTrace:
            return std::abs(trace / d);
        case FidelityDefinition::kAverage:
            return (std::norm(trace) + weight) / (d * d + d);
    }
    return 0.0;
}

double gate_fidelity(const Protocol &protocol, const GateSignature &target, FidelityDefinition definition) {
    if (target.n_qubits() != protocol.n_qubits()) {
        throw Error(ErrorCode::kSignatureMismatch, "signature and protocol differ in qubit count");
    }
    std::vector<Complex> diagonal = diagonal_amplitudes(protocol);
    return fidelity_from_amplitudes(diagonal, target, definition);
}

std::vector<double> AreaGrid::axis() const {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step) || step <= 0 || hi < lo) {
        throw Error(ErrorCode::kEmptyGrid, "grid needs finite lo <= hi and step > 0");
    }
    auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> values(count);
    for (std::size_t i = 0; i < count; ++i) {
        values[i] = lo + static_cast<double>(i) * step;
    }
    return values;
}

FidelityMap fidelity_map(const ProtocolFamily &family, const GateSignature &target, const AreaGrid &odd,
                         const AreaGrid &even, FidelityDefinition definition, int threads) {
    if (target.n_qubits() != family.n_qubits()) {
        throw Error(ErrorCode::kSignatureMismatch, "signature and protocol family differ in qubit count");
    }
    FidelityMap map;
    map.axis_odd = odd.axis();
    map.axis_even = even.axis();
    map.values.assign(map.rows() * map.cols(), 0.0);
    map.meta.n_qubits = family.n_qubits();
    map.meta.pulses = family.pulses();
    map.meta.odd_vector.assign(family.odd_vector().components().begin(), family.odd_vector().components().end());
    map.meta.even_vector.assign(family.even_vector().components().begin(),
                                family.even_vector().components().end());
    map.meta.definition = definition;
    const std::size_t cols = map.cols();
    internal::parallel_for(map.rows(), threads, [&](std::size_t i) {
        for (std::size_t j = 0; j < cols; ++j) {
            Protocol protocol = family.at(map.axis_odd[i], map.axis_even[j]);
            map.values[i * cols + j] = gate_fidelity(protocol, target, definition);
        }
    });
    return map;
}

void write_map_csv(std::ostream &out, const FidelityMap &map) {
    out << "a_odd_over_pi,a_even_over_pi,fidelity\n";
    char line[96];
    for (std::size_t i = 0; i < map.rows(); ++i) {
        for (std::size_t j = 0; j < map.cols(); ++j) {
            std::snprintf(line, sizeof line, "%.9g,%.9g,%.9g\n", map.axis_odd[i] / kPi, map.axis_even[j] / kPi,
                          map.at(i, j));
            out << line;
        }
    }
}

RobustnessCurves robustness_scan(const Protocol &protocol, std::span<const double> deltas) {
    RobustnessCurves curves;
    curves.deltas.assign(deltas.begin(), deltas.end());
    for (const BasisState &state : computational_basis(protocol.n_qubits())) {
        if (!state.zero_qubits().empty()) {
            curves.states.push_back(state);
        }
    }
    curves.amplitudes.assign(curves.states.size(), std::vector<double>(deltas.size()));
    for (std::size_t k = 0; k < deltas.size(); ++k) {
        std::vector<Pulse> shifted = protocol.pulses();
        for (std::size_t p = 0; p < shifted.size(); ++p) {
            shifted[p].area += (p % 2 == 0 ? 1.0 : 2.0) * deltas[k];
        }
        Protocol perturbed(protocol.n_qubits(), std::move(shifted));
        for (std::size_t s = 0; s < curves.states.size(); ++s) {
            curves.amplitudes[s][k] = sequence_amplitude(perturbed, curves.states[s]).real();
        }
    }
    return curves;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw Error(ErrorCode::kLengthMismatch, "x and y differ in length");
    }
    double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] == 0.0 || y[k] == 0.0) {
            continue;
        }
        double lx = std::log(std::abs(x[k]));
        double ly = std::log(std::abs(y[k]));
        n += 1;
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double denominator = n * sxx - sx * sx;
    if (n < 2 || denominator == 0.0) {
        throw Error(ErrorCode::kInvalidArgument, "slope needs two distinct non-zero points");
    }
    return (n * sxy - sx * sy) / denominator;
}

std::vector<BScanPoint> b_scan(AreaPair areas, std::span<const double> b_squared_values, bool orthogonal,
                               FidelityDefinition definition) {
    GateSignature target = GateSignature::cphase(2);
    std::vector<BScanPoint> curve;
    for (double b2 : b_squared_values) {
        if (!(b2 >= 0.0 && b2 <= 1.0)) {
            throw Error(ErrorCode::kInvalidArgument, "b^2 must lie in [0, 1]");
        }
        double b = std::sqrt(b2);
        ProtocolFamily family = orthogonal ? ProtocolFamily::sop(b) : ProtocolFamily::non_orthogonal(b);
        curve.push_back({b2, gate_fidelity(family.at(areas.odd, areas.even), target, definition)});
    }
    return curve;
}

}  // namespace rydgate
