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

#ifndef RYDGATE_MODEL_H_
#define RYDGATE_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace rydgate {

inline constexpr double kPi = std::numbers::pi;

/// Registers larger than this are rejected; block propagators are sized
/// (1 + n_qubits) and kept on the stack.
inline constexpr int kMaxQubits = 8;

/// Unit vector of per-qubit field amplitude factors for one pulse. Components
/// may be negative (a pi phase flip of the field at that qubit).
class StructuralVector {
   public:
    std::size_t dimension() const noexcept {
        return components_.size();
    }
    std::span<const double> components() const noexcept {
        return components_;
    }
    double operator[](std::size_t i) const {
        return components_[i];
    }

    /// Throws kDimensionMismatch when dimensions differ.
    double dot(const StructuralVector &other) const;

    bool operator==(const StructuralVector &) const = default;

   private:
    friend StructuralVector make_structural_vector(std::vector<double> components);
    explicit StructuralVector(std::vector<double> components) : components_(std::move(components)) {
    }

    std::vector<double> components_;
};

/// Scales `components` to unit Euclidean norm, keeping signs. A vector whose
/// norm is already 1 to within two ulps is returned bit-for-bit, so the
/// operation is idempotent. Throws kZeroVector if every |component| < 1e-15.
StructuralVector make_structural_vector(std::vector<double> components);

/// (e1, e2) -> (-e2, e1). Throws kDimensionMismatch unless e is 2-dimensional.
StructuralVector orthogonal_complement_2d(const StructuralVector &e);

struct Pulse {
    double area;  // radians, signed
    StructuralVector vector;

    double mixing_angle() const noexcept {
        return 0.5 * area;
    }
    bool operator==(const Pulse &) const = default;
};

/// Ordered sequence of non-overlapping resonant pulses on an n-qubit register.
class Protocol {
   public:
    /// Throws kInvalidArgument for n_qubits outside [1, kMaxQubits] or an empty
    /// pulse list, kDimensionMismatch if a vector has the wrong dimension.
    Protocol(int n_qubits, std::vector<Pulse> pulses);

    int n_qubits() const noexcept {
        return n_qubits_;
    }
    const std::vector<Pulse> &pulses() const noexcept {
        return pulses_;
    }
    std::size_t size() const noexcept {
        return pulses_.size();
    }

    /// Sum of the areas of pulses 1, 3, 5, ... (1-based).
    double a_odd() const noexcept;
    /// Sum of the areas of pulses 2, 4, ... (1-based).
    double a_even() const noexcept;
    /// |A_odd| + |A_even|.
    double total_area() const noexcept;

    bool operator==(const Protocol &) const = default;

   private:
    int n_qubits_;
    std::vector<Pulse> pulses_;
};

struct AreaTriple {
    double first = kPi;
    double second = 2 * kPi;
    double third = kPi;
};

/// Summed areas (A_odd, A_even) of an alternating sequence, in radians.
struct AreaPair {
    double odd;
    double even;
};

/// Per-pulse areas of an alternating sequence: every odd pulse carries `odd`,
/// every even pulse carries `even`.
struct AlternatingAreas {
    double odd;
    double even;
};

/// Independent-qubit pi / 2pi / pi sequence: pulses 1 and 3 address qubit a,
/// pulse 2 addresses qubit b. Only n_qubits == 2 is accepted.
Protocol build_jp_protocol(int n_qubits = 2, AreaTriple areas = {});

/// Symmetric three-pulse protocol with e1 = e3 = (sqrt(1-b^2), b) and
/// e2 = (-b, sqrt(1-b^2)). Throws kAsymmetricAreas if A3 != A1.
Protocol build_sop_protocol(double b, AreaTriple areas = {});

/// M pulses alternating e_odd and its orthogonal complement, odd pulses all
/// carrying `areas.odd` and even pulses `areas.even`.
Protocol build_esop_protocol(int pulses, const StructuralVector &e_odd, AlternatingAreas areas);

/// A computational basis state. Qubit 0 is the leftmost character of the label
/// (qubit a), qubit 1 is qubit b, qubit 2 is qubit c.
class BasisState {
   public:
    BasisState(int n_qubits, std::uint32_t ones_mask);
    /// Parses a label such as "010". Throws kInvalidArgument on bad input.
    static BasisState from_label(const std::string &label);

    int n_qubits() const noexcept {
        return n_qubits_;
    }
    bool is_one(int qubit) const noexcept {
        return (mask_ >> qubit) & 1u;
    }
    /// Indices of the qubits in |0>, ascending.
    std::vector<int> zero_qubits() const;
    std::string label() const;

    bool operator==(const BasisState &) const = default;

   private:
    int n_qubits_;
    std::uint32_t mask_;
};

/// Computational basis in the order used by gate signatures:
///   2 qubits: 00, 01, 10, 11
///   3 qubits: 000, 010, 100, 001, 101, 011, 110, 111
/// Other sizes use lexicographic order.
std::vector<BasisState> computational_basis(int n_qubits);

/// Target diagonal phases (+1 / -1) over computational_basis(n).
class GateSignature {
   public:
    explicit GateSignature(std::vector<int> phases);

    /// C-PHASE on qubits a and b, identity on every other qubit:
    /// diag(-1,-1,-1,1) for two qubits, diag(-1,-1,-1,-1,-1,-1,1,1) for three.
    static GateSignature cphase(int n_qubits);

    int n_qubits() const noexcept {
        return n_qubits_;
    }
    std::span<const int> phases() const noexcept {
        return phases_;
    }

   private:
    int n_qubits_;
    std::vector<int> phases_;
};

enum class Orthogonality {
    /// (a, b) sub-vectors of odd and even pulses are orthogonal; the third
    /// component rides along.
    kSubVector,
    /// The full structural vectors of odd and even pulses are orthogonal.
    kFullVector,
};

/// Two-vector family of alternating protocols parameterised by the summed
/// odd and even areas. at() splits A_odd equally among the odd pulses and
/// A_even equally among the even pulses.
class ProtocolFamily {
   public:
    ProtocolFamily(StructuralVector odd_vector, StructuralVector even_vector, int pulses);

    /// Two-qubit SOP / ESOP with e_odd = (sqrt(1-b^2), b), e_even = (-b, sqrt(1-b^2)).
    static ProtocolFamily sop(double b, int pulses = 3);
    /// Two-qubit family with e_even = (b, sqrt(1-b^2)): atoms approach each
    /// other without orthogonalising the fields.
    static ProtocolFamily non_orthogonal(double b, int pulses = 3);
    /// Three-qubit family with geometric factors e_odd = (sqrt(1-b^2-c^2), b, c)
    /// and c on every pulse. With kSubVector, e_even = (-b, sqrt(1-b^2-c^2), c);
    /// with kFullVector e_even keeps |(a,b)| and c but is rotated until
    /// e_even . e_odd = 0 (requires c^2 <= 1/2).
    static ProtocolFamily three_qubit(double b, double c, Orthogonality orthogonality, int pulses = 3);

    Protocol at(double a_odd, double a_even) const;

    int n_qubits() const noexcept {
        return static_cast<int>(odd_.dimension());
    }
    int pulses() const noexcept {
        return pulses_;
    }
    const StructuralVector &odd_vector() const noexcept {
        return odd_;
    }
    const StructuralVector &even_vector() const noexcept {
        return even_;
    }

   private:
    StructuralVector odd_;
    StructuralVector even_;
    int pulses_;
};

}  // namespace rydgate

#endif  // RYDGATE_MODEL_H_
