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

#ifndef RYDGATE_SERIALIZE_H_
#define RYDGATE_SERIALIZE_H_

#include <string>
#include <string_view>

#include "rydgate/fidelity.h"
#include "rydgate/model.h"
#include "rydgate/oracle.h"

namespace rydgate {

/// {"n_qubits": n, "pulses": [{"area_over_pi": x, "vector": [...]}, ...]}
/// Doubles are written with round-trip precision.
std::string protocol_to_json(const Protocol &protocol, int indent = 2);

/// Inverse of protocol_to_json; vectors are normalized on the way in.
/// Throws kParseError on malformed input, plus any model validation error.
Protocol protocol_from_json(std::string_view text);

/// Maxima in units of pi, rotation in degrees, spacing in units of pi.
std::string lattice_report_to_json(const LatticeReport &report, double threshold, int indent = 2);

/// Per-state deviations, settings and the overall verdict.
std::string validation_report_to_json(const ValidationReport &report, int indent = 2);

}  // namespace rydgate

#endif  // RYDGATE_SERIALIZE_H_
