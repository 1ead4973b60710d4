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

#ifndef RYDGATE_ORACLE_H_
#define RYDGATE_ORACLE_H_

#include <span>
#include <string_view>
#include <vector>

#include "rydgate/model.h"
#include "rydgate/propagator.h"

namespace rydgate {

enum class EnvelopeShape {
    /// (2A/T) sin^2(pi (t - t0) / T) on [t0, t0 + T].
    kSquaredSine,
    /// Gaussian centred in the window with sigma = T/8, cut at +-4 sigma and
    /// rescaled so that the truncated integral equals the area.
    kGaussian,
};

std::string_view envelope_shape_name(EnvelopeShape shape);
/// "squared-sine" or "gaussian". Throws kParseError.
EnvelopeShape parse_envelope_shape(std::string_view name);

class PulseEnvelope {
   public:
    /// Throws kInvalidArgument for a non-positive duration or non-finite input.
    PulseEnvelope(EnvelopeShape shape, double start, double duration, double area);

    EnvelopeShape shape() const noexcept {
        return shape_;
    }
    double start() const noexcept {
        return start_;
    }
    double duration() const noexcept {
        return duration_;
    }
    double end() const noexcept {
        return start_ + duration_;
    }
    double area() const noexcept {
        return area_;
    }
    /// Largest |Omega(t)|.
    double peak_rabi() const noexcept;
    /// Omega(t); zero outside [start, end].
    double rabi(double t) const noexcept;

   private:
    EnvelopeShape shape_;
    double start_;
    double duration_;
    double area_;
    double amplitude_;
};

struct IntegrationSettings {
    EnvelopeShape shape = EnvelopeShape::kSquaredSine;
    double pulse_duration = 1.0;
    double gap = 0.1;
    int min_steps_per_pulse = 400;
    /// Steps per pi of accumulated rotation, |A| s / pi, on top of the minimum.
    double steps_per_pi = 200.0;
};

/// One envelope per pulse, back to back with settings.gap between them.
std::vector<PulseEnvelope> schedule_envelopes(const Protocol &protocol, const IntegrationSettings &settings = {});

/// Fourth-order Runge-Kutta solution of dU/dt = (i/2) Omega_k(t) K_k U from
/// the identity, where K_k couples the ground state to r_i with strength
/// block.couplings[k][i]. Each pulse window is cut into ceil(duration / dt)
/// steps. Throws kLengthMismatch if the envelope count differs from the pulse
/// count, kInvalidArgument for overlapping envelopes or dt <= 0, and
/// kStepTooLarge if the result drifts from unitarity by more than 1e-6.
BlockPropagator integrate_block(const SubsystemBlock &block, std::span<const PulseEnvelope> envelopes, double dt);

/// As above with per-pulse step counts
/// max(min_steps_per_pulse, ceil(steps_per_pi |A_k| |v_k| / pi)).
BlockPropagator integrate_block(const SubsystemBlock &block, std::span<const PulseEnvelope> envelopes,
                                const IntegrationSettings &settings);

struct StateDeviation {
    BasisState state;
    Complex analytic;
    Complex numeric;
    /// |analytic - numeric| for the ground-ground amplitude.
    double deviation;
    /// Largest element-wise deviation over the whole block.
    double block_deviation;
};

struct ValidationReport {
    std::vector<StateDeviation> states;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = true;
    IntegrationSettings settings;
};

/// Integrates every computational block of the protocol and compares against
/// the analytic composition. Deviations above tolerance set passed = false.
ValidationReport validate_protocol(const Protocol &protocol, double tolerance,
                                   const IntegrationSettings &settings = {});

struct EsopFormulaCheck {
    int pulses;
    double theta_odd;
    double theta_even;
    /// u11v_esop
    double printed;
    /// u11v_alternating_exact
    double product;
    /// Real part of the integrated |00> amplitude.
    double numeric;
};

/// Compares the reference closed form for M pulses against the propagator
/// product and the integrated dynamics (e_odd = (1, 0)).
EsopFormulaCheck check_esop_formula(int pulses, double theta_odd, double theta_even,
                                    const IntegrationSettings &settings = {});

}  // namespace rydgate

#endif  // RYDGATE_ORACLE_H_
