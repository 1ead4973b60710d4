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

#include "rydgate/model.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rydgate/error.h"

namespace rydgate {

namespace {

constexpr double kZeroComponent = 1e-15;

void require_b_squared(double b) {
    if (!std::isfinite(b) || b * b > 1.0) {
        throw Error(ErrorCode::kInvalidArgument, "geometric factor b must satisfy b^2 <= 1");
    }
}

}  // namespace

double StructuralVector::dot(const StructuralVector &other) const {
    if (dimension() != other.dimension()) {
        throw Error(ErrorCode::kDimensionMismatch, "dot product of structural vectors of different dimension");
    }
    double sum = 0;
    for (std::size_t i = 0; i < dimension(); ++i) {
        sum += components_[i] * other.components_[i];
    }
    return sum;
}

StructuralVector make_structural_vector(std::vector<double> components) {
    if (components.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "structural vector needs at least one component");
    }
    bool all_zero = true;
    double sum_sq = 0;
    for (double x : components) {
        if (!std::isfinite(x)) {
            throw Error(ErrorCode::kInvalidArgument, "structural vector component is not finite");
        }
        all_zero = all_zero && std::abs(x) < kZeroComponent;
        sum_sq += x * x;
    }
    if (all_zero) {
        throw Error(ErrorCode::kZeroVector, "all components below 1e-15");
    }
    double norm = std::sqrt(sum_sq);
    if (std::abs(norm - 1.0) > 2 * std::numeric_limits<double>::epsilon()) {
        for (double &x : components) {
            x /= norm;
        }
    }
    return StructuralVector(std::move(components));
}

StructuralVector orthogonal_complement_2d(const StructuralVector &e) {
    if (e.dimension() != 2) {
        throw Error(ErrorCode::kDimensionMismatch, "orthogonal complement is defined for 2-component vectors");
    }
    return make_structural_vector({-e[1], e[0]});
}

Protocol::Protocol(int n_qubits, std::vector<Pulse> pulses) : n_qubits_(n_qubits), pulses_(std::move(pulses)) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw Error(ErrorCode::kInvalidArgument, "n_qubits must lie in [1, " + std::to_string(kMaxQubits) + "]");
    }
    if (pulses_.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "protocol needs at least one pulse");
    }
    for (const Pulse &p : pulses_) {
        if (!std::isfinite(p.area)) {
            throw Error(ErrorCode::kInvalidArgument, "pulse area is not finite");
        }
        if (static_cast<int>(p.vector.dimension()) != n_qubits) {
            throw Error(ErrorCode::kDimensionMismatch, "pulse vector dimension differs from n_qubits");
        }
    }
}

double Protocol::a_odd() const noexcept {
    double sum = 0;
    for (std::size_t k = 0; k < pulses_.size(); k += 2) {
        sum += pulses_[k].area;
    }
    return sum;
}

double Protocol::a_even() const noexcept {
    double sum = 0;
    for (std::size_t k = 1; k < pulses_.size(); k += 2) {
        sum += pulses_[k].area;
    }
    return sum;
}

double Protocol::total_area() const noexcept {
    return std::abs(a_odd()) + std::abs(a_even());
}

Protocol build_jp_protocol(int n_qubits, AreaTriple areas) {
    if (n_qubits != 2) {
        throw Error(ErrorCode::kInvalidArgument, "the independent-qubit protocol is defined for two qubits");
    }
    StructuralVector qubit_a = make_structural_vector({1.0, 0.0});
    StructuralVector qubit_b = make_structural_vector({0.0, 1.0});
    return Protocol(2, {{areas.first, qubit_a}, {areas.second, qubit_b}, {areas.third, qubit_a}});
}

Protocol build_sop_protocol(double b, AreaTriple areas) {
    require_b_squared(b);
    double scale = std::max({1.0, std::abs(areas.first), std::abs(areas.third)});
    if (std::abs(areas.third - areas.first) > 1e-12 * scale) {
        throw Error(ErrorCode::kAsymmetricAreas, "symmetric protocol requires A3 == A1");
    }
    ProtocolFamily family = ProtocolFamily::sop(b, 3);
    const StructuralVector &e1 = family.odd_vector();
    const StructuralVector &e2 = family.even_vector();
    return Protocol(2, {{areas.first, e1}, {areas.second, e2}, {areas.first, e1}});
}

Protocol build_esop_protocol(int pulses, const StructuralVector &e_odd, AlternatingAreas areas) {
    if (pulses < 2) {
        throw Error(ErrorCode::kInvalidM, "alternating protocols need at least two pulses");
    }
    StructuralVector e_even = orthogonal_complement_2d(e_odd);
    std::vector<Pulse> sequence;
    sequence.reserve(pulses);
    for (int k = 0; k < pulses; ++k) {
        bool odd = k % 2 == 0;
        sequence.push_back({odd ? areas.odd : areas.even, odd ? e_odd : e_even});
    }
    return Protocol(2, std::move(sequence));
}

BasisState::BasisState(int n_qubits, std::uint32_t ones_mask) : n_qubits_(n_qubits), mask_(ones_mask) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw Error(ErrorCode::kInvalidArgument, "basis state qubit count out of range");
    }
    if (ones_mask >> n_qubits) {
        throw Error(ErrorCode::kInvalidArgument, "basis state mask has bits beyond n_qubits");
    }
}

BasisState BasisState::from_label(const std::string &label) {
    if (label.empty() || label.size() > static_cast<std::size_t>(kMaxQubits)) {
        throw Error(ErrorCode::kInvalidArgument, "bad basis label '" + label + "'");
    }
    std::uint32_t mask = 0;
    for (std::size_t q = 0; q < label.size(); ++q) {
        if (label[q] == '1') {
            mask |= 1u << q;
        } else if (label[q] != '0') {
            throw Error(ErrorCode::kInvalidArgument, "bad basis label '" + label + "'");
        }
    }
    return BasisState(static_cast<int>(label.size()), mask);
}

std::vector<int> BasisState::zero_qubits() const {
    std::vector<int> zeros;
    for (int q = 0; q < n_qubits_; ++q) {
        if (!is_one(q)) {
            zeros.push_back(q);
        }
    }
    return zeros;
}

std::string BasisState::label() const {
    std::string s(n_qubits_, '0');
    for (int q = 0; q < n_qubits_; ++q) {
        if (is_one(q)) {
            s[q] = '1';
        }
    }
    return s;
}

std::vector<BasisState> computational_basis(int n_qubits) {
    if (n_qubits == 3) {
        std::vector<BasisState> basis;
        for (const char *label : {"000", "010", "100", "001", "101", "011", "110", "111"}) {
            basis.push_back(BasisState::from_label(label));
        }
        return basis;
    }
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw Error(ErrorCode::kInvalidArgument, "n_qubits out of range");
    }
    std::vector<BasisState> basis;
    std::uint32_t count = 1u << n_qubits;
    basis.reserve(count);
    for (std::uint32_t index = 0; index < count; ++index) {
        // Lexicographic order: the leftmost qubit is the most significant digit.
        std::uint32_t mask = 0;
        for (int q = 0; q < n_qubits; ++q) {
            if ((index >> (n_qubits - 1 - q)) & 1u) {
                mask |= 1u << q;
            }
        }
        basis.emplace_back(n_qubits, mask);
    }
    return basis;
}

GateSignature::GateSignature(std::vector<int> phases) : n_qubits_(0), phases_(std::move(phases)) {
    std::size_t n = phases_.size();
    while ((std::size_t{1} << n_qubits_) < n) {
        ++n_qubits_;
    }
    if (n < 2 || (std::size_t{1} << n_qubits_) != n || n_qubits_ > kMaxQubits) {
        throw Error(ErrorCode::kInvalidArgument, "signature length must be 2^n_qubits");
    }
    for (int p : phases_) {
        if (p != 1 && p != -1) {
            throw Error(ErrorCode::kInvalidArgument, "signature entries must be +1 or -1");
        }
    }
}

GateSignature GateSignature::cphase(int n_qubits) {
    if (n_qubits < 2 || n_qubits > kMaxQubits) {
        throw Error(ErrorCode::kInvalidArgument, "C-PHASE needs at least two qubits");
    }
    std::vector<int> phases;
    for (const BasisState &s : computational_basis(n_qubits)) {
        phases.push_back(s.is_one(0) && s.is_one(1) ? 1 : -1);
    }
    return GateSignature(std::move(phases));
}

ProtocolFamily::ProtocolFamily(StructuralVector odd_vector, StructuralVector even_vector, int pulses)
    : odd_(std::move(odd_vector)), even_(std::move(even_vector)), pulses_(pulses) {
    if (pulses < 2) {
        throw Error(ErrorCode::kInvalidM, "alternating protocols need at least two pulses");
    }
    if (odd_.dimension() != even_.dimension()) {
        throw Error(ErrorCode::kDimensionMismatch, "odd and even vectors differ in dimension");
    }
}

ProtocolFamily ProtocolFamily::sop(double b, int pulses) {
    require_b_squared(b);
    double a = std::sqrt(1.0 - b * b);
    return ProtocolFamily(make_structural_vector({a, b}), make_structural_vector({-b, a}), pulses);
}

ProtocolFamily ProtocolFamily::non_orthogonal(double b, int pulses) {
    require_b_squared(b);
    double a = std::sqrt(1.0 - b * b);
    return ProtocolFamily(make_structural_vector({a, b}), make_structural_vector({b, a}), pulses);
}

ProtocolFamily ProtocolFamily::three_qubit(double b, double c, Orthogonality orthogonality, int pulses) {
    double rest = 1.0 - b * b - c * c;
    if (!std::isfinite(rest) || rest < 0) {
        throw Error(ErrorCode::kInvalidArgument, "three-qubit factors need b^2 + c^2 <= 1");
    }
    double a = std::sqrt(rest);
    StructuralVector odd = make_structural_vector({a, b, c});
    if (orthogonality == Orthogonality::kSubVector) {
        return ProtocolFamily(odd, make_structural_vector({-b, a, c}), pulses);
    }
    // Keep |(x, y)| = sqrt(1 - c^2) and solve a x + b y = -c^2 for the rotation
    // closest to (-b, a).
    double radius_sq = 1.0 - c * c;
    double cosine = -c * c / radius_sq;
    if (cosine < -1.0) {
        throw Error(ErrorCode::kInvalidArgument, "full-vector orthogonality needs c^2 <= 1/2");
    }
    double radius = std::sqrt(radius_sq);
    double phase = std::atan2(b, a) + std::acos(cosine);
    StructuralVector even = make_structural_vector({radius * std::cos(phase), radius * std::sin(phase), c});
    return ProtocolFamily(std::move(odd), std::move(even), pulses);
}

Protocol ProtocolFamily::at(double a_odd, double a_even) const {
    int n_odd = (pulses_ + 1) / 2;
    int n_even = pulses_ / 2;
    double odd_area = a_odd / n_odd;
    double even_area = a_even / n_even;
    std::vector<Pulse> sequence;
    sequence.reserve(pulses_);
    for (int k = 0; k < pulses_; ++k) {
        if (k % 2 == 0) {
            sequence.push_back({odd_area, odd_});
        } else {
            sequence.push_back({even_area, even_});
        }
    }
    return Protocol(n_qubits(), std::move(sequence));
}

}  // namespace rydgate
