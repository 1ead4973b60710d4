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

#include "rydgate/oracle.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "rydgate/error.h"

namespace rydgate {

namespace {

constexpr double kUnitarityDrift = 1e-6;
constexpr double kGaussianWidths = 4.0;
constexpr double kSigmaPerDuration = 1.0 / (2 * kGaussianWidths);

double coupling_norm(const std::vector<double> &v) {
    double sum = 0;
    for (double x : v) {
        sum += x * x;
    }
    return std::sqrt(sum);
}

BlockPropagator integrate_steps(const SubsystemBlock &block, std::span<const PulseEnvelope> envelopes,
                                std::span<const long> steps) {
    if (envelopes.size() != block.couplings.size()) {
        throw Error(ErrorCode::kLengthMismatch, "one envelope per pulse is required");
    }
    for (std::size_t k = 1; k < envelopes.size(); ++k) {
        if (envelopes[k].start() < envelopes[k - 1].end()) {
            throw Error(ErrorCode::kInvalidArgument, "pulse envelopes overlap");
        }
    }
    const int dim = block.dimension();
    BlockPropagator u{BlockMatrix::Identity(dim, dim)};
    for (std::size_t k = 0; k < envelopes.size(); ++k) {
        const PulseEnvelope &env = envelopes[k];
        // G = (i/2) K: the generator per unit Rabi frequency.
        BlockMatrix g = BlockMatrix::Zero(dim, dim);
        for (int i = 0; i + 1 < dim; ++i) {
            g(0, i + 1) = Complex(0.0, 0.5 * block.couplings[k][i]);
            g(i + 1, 0) = g(0, i + 1);
        }
        const long n = steps[k];
        const double h = env.duration() / static_cast<double>(n);
        BlockMatrix &m = u.matrix;
        for (long step = 0; step < n; ++step) {
            // Clamp so rounding never pushes the last stage past the window.
            double t = env.start() + static_cast<double>(step) * h;
            double w0 = env.rabi(t);
            double w1 = env.rabi(t + 0.5 * h);
            double w2 = env.rabi(std::min(t + h, env.end()));
            BlockMatrix k1 = w0 * (g * m);
            BlockMatrix k2 = w1 * (g * (m + (0.5 * h) * k1));
            BlockMatrix k3 = w1 * (g * (m + (0.5 * h) * k2));
            BlockMatrix k4 = w2 * (g * (m + h * k3));
            m += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
    }
    double drift = u.unitarity_error();
    if (!(drift <= kUnitarityDrift)) {
        throw Error(ErrorCode::kStepTooLarge, "unitarity drift " + std::to_string(drift) + " exceeds 1e-6");
    }
    return u;
}

}  // namespace

std::string_view envelope_shape_name(EnvelopeShape shape) {
    return shape == EnvelopeShape::kGaussian ? "gaussian" : "squared-sine";
}

EnvelopeShape parse_envelope_shape(std::string_view name) {
    if (name == "squared-sine") {
        return EnvelopeShape::kSquaredSine;
    }
    if (name == "gaussian") {
        return EnvelopeShape::kGaussian;
    }
    throw Error(ErrorCode::kParseError, "unknown envelope shape '" + std::string(name) + "'");
}

PulseEnvelope::PulseEnvelope(EnvelopeShape shape, double start, double duration, double area)
    : shape_(shape), start_(start), duration_(duration), area_(area), amplitude_(0.0) {
    if (!std::isfinite(start) || !std::isfinite(duration) || !std::isfinite(area) || duration <= 0) {
        throw Error(ErrorCode::kInvalidArgument, "envelope needs finite start/area and positive duration");
    }
    if (shape == EnvelopeShape::kSquaredSine) {
        amplitude_ = 2 * area / duration;
    } else {
        double sigma = kSigmaPerDuration * duration;
        double mass = std::erf(kGaussianWidths / std::sqrt(2.0));
        amplitude_ = area / (sigma * std::sqrt(2 * kPi) * mass);
    }
}

double PulseEnvelope::peak_rabi() const noexcept {
    return std::abs(amplitude_);
}

double PulseEnvelope::rabi(double t) const noexcept {
    if (t < start_ || t > end()) {
        return 0.0;
    }
    double x = t - start_;
    if (shape_ == EnvelopeShape::kSquaredSine) {
        double s = std::sin(kPi * x / duration_);
        return amplitude_ * s * s;
    }
    double sigma = kSigmaPerDuration * duration_;
    double z = (x - 0.5 * duration_) / sigma;
    return amplitude_ * std::exp(-0.5 * z * z);
}

std::vector<PulseEnvelope> schedule_envelopes(const Protocol &protocol, const IntegrationSettings &settings) {
    if (!(settings.gap >= 0.0)) {
        throw Error(ErrorCode::kInvalidArgument, "gap between pulses must be non-negative");
    }
    std::vector<PulseEnvelope> envelopes;
    double t = 0;
    for (const Pulse &pulse : protocol.pulses()) {
        envelopes.emplace_back(settings.shape, t, settings.pulse_duration, pulse.area);
        t += settings.pulse_duration + settings.gap;
    }
    return envelopes;
}

BlockPropagator integrate_block(const SubsystemBlock &block, std::span<const PulseEnvelope> envelopes, double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw Error(ErrorCode::kInvalidArgument, "time step must be positive");
    }
    std::vector<long> steps;
    for (const PulseEnvelope &env : envelopes) {
        steps.push_back(std::max(1L, static_cast<long>(std::ceil(env.duration() / dt - 1e-9))));
    }
    return integrate_steps(block, envelopes, steps);
}

BlockPropagator integrate_block(const SubsystemBlock &block, std::span<const PulseEnvelope> envelopes,
                                const IntegrationSettings &settings) {
    if (envelopes.size() != block.couplings.size()) {
        throw Error(ErrorCode::kLengthMismatch, "one envelope per pulse is required");
    }
    std::vector<long> steps;
    for (std::size_t k = 0; k < envelopes.size(); ++k) {
        double rotations = std::abs(envelopes[k].area()) * coupling_norm(block.couplings[k]) / kPi;
        auto wanted = static_cast<long>(std::ceil(settings.steps_per_pi * rotations));
        steps.push_back(std::max<long>(settings.min_steps_per_pulse, wanted));
    }
    return integrate_steps(block, envelopes, steps);
}

ValidationReport validate_protocol(const Protocol &protocol, double tolerance, const IntegrationSettings &settings) {
    ValidationReport report;
    report.tolerance = tolerance;
    report.settings = settings;
    std::vector<PulseEnvelope> envelopes = schedule_envelopes(protocol, settings);
    for (const BasisState &state : computational_basis(protocol.n_qubits())) {
        SubsystemBlock block = make_block(protocol, state);
        BlockPropagator numeric = integrate_block(block, envelopes, settings);
        BlockPropagator analytic = compose_block(protocol, state);
        Complex amplitude = sequence_amplitude(protocol, state);
        double block_dev = (numeric.matrix - analytic.matrix).cwiseAbs().maxCoeff();
        double dev = std::abs(amplitude - numeric.matrix(0, 0));
        report.states.push_back({state, amplitude, numeric.matrix(0, 0), dev, block_dev});
        report.max_deviation = std::max(report.max_deviation, dev);
    }
    report.passed = report.max_deviation <= tolerance;
    return report;
}

EsopFormulaCheck check_esop_formula(int pulses, double theta_odd, double theta_even,
                                    const IntegrationSettings &settings) {
    double printed = u11v_esop(pulses, theta_odd, theta_even);
    double product = u11v_alternating_exact(pulses, theta_odd, theta_even);
    Protocol protocol =
        build_esop_protocol(pulses, make_structural_vector({1.0, 0.0}), {2 * theta_odd, 2 * theta_even});
    BasisState ground(2, 0);
    std::vector<PulseEnvelope> envelopes = schedule_envelopes(protocol, settings);
    BlockPropagator numeric = integrate_block(make_block(protocol, ground), envelopes, settings);
    return {pulses, theta_odd, theta_even, printed, product, numeric.matrix(0, 0).real()};
}

}  // namespace rydgate
