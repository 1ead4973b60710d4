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

#include "rydgate/serialize.h"

#include <json.hpp>

#include "rydgate/error.h"

namespace rydgate {

namespace {

using nlohmann::json;

constexpr double kDegreesPerRadian = 180.0 / kPi;

}  // namespace

std::string protocol_to_json(const Protocol &protocol, int indent) {
    json pulses = json::array();
    for (const Pulse &pulse : protocol.pulses()) {
        auto v = pulse.vector.components();
        pulses.push_back({{"area_over_pi", pulse.area / kPi}, {"vector", std::vector<double>(v.begin(), v.end())}});
    }
    json doc = {{"n_qubits", protocol.n_qubits()}, {"pulses", std::move(pulses)}};
    return doc.dump(indent);
}

Protocol protocol_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw Error(ErrorCode::kParseError, e.what());
    }
    try {
        int n_qubits = doc.at("n_qubits").get<int>();
        std::vector<Pulse> pulses;
        for (const json &p : doc.at("pulses")) {
            double area = p.at("area_over_pi").get<double>() * kPi;
            pulses.push_back({area, make_structural_vector(p.at("vector").get<std::vector<double>>())});
        }
        return Protocol(n_qubits, std::move(pulses));
    } catch (const json::exception &e) {
        throw Error(ErrorCode::kParseError, e.what());
    }
}

std::string lattice_report_to_json(const LatticeReport &report, double threshold, int indent) {
    json maxima = json::array();
    for (const MapMaximum &m : report.maxima) {
        maxima.push_back(
            {{"a_odd_over_pi", m.a_odd / kPi}, {"a_even_over_pi", m.a_even / kPi}, {"fidelity", m.fidelity}});
    }
    json doc = {{"threshold", threshold},
                {"rotation_angle_deg", report.rotation_angle * kDegreesPerRadian},
                {"nn_spacing_over_pi", report.nn_spacing / kPi},
                {"maxima", std::move(maxima)}};
    return doc.dump(indent);
}

std::string validation_report_to_json(const ValidationReport &report, int indent) {
    json states = json::array();
    for (const StateDeviation &s : report.states) {
        states.push_back({{"state", s.state.label()},
                          {"analytic", {s.analytic.real(), s.analytic.imag()}},
                          {"numeric", {s.numeric.real(), s.numeric.imag()}},
                          {"deviation", s.deviation},
                          {"block_deviation", s.block_deviation}});
    }
    json settings = {{"shape", std::string(envelope_shape_name(report.settings.shape))},
                     {"pulse_duration", report.settings.pulse_duration},
                     {"gap", report.settings.gap},
                     {"min_steps_per_pulse", report.settings.min_steps_per_pulse},
                     {"steps_per_pi", report.settings.steps_per_pi}};
    json doc = {{"tolerance", report.tolerance},
                {"max_deviation", report.max_deviation},
                {"passed", report.passed},
                {"settings", std::move(settings)},
                {"states", std::move(states)}};
    return doc.dump(indent);
}

}  // namespace rydgate
