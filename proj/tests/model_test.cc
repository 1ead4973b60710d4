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

#include <cmath>

#include <gtest/gtest.h>

#include "rydgate/error.h"
#include "test_support.h"

namespace rydgate {
namespace {

using test_util::code_of;

TEST(StructuralVectorTest, KeepsUnitVector) {
    StructuralVector e = make_structural_vector({1.0, 0.0});
    EXPECT_EQ(e[0], 1.0);
    EXPECT_EQ(e[1], 0.0);
}

TEST(StructuralVectorTest, NormalizesThreeFour) {
    StructuralVector e = make_structural_vector({3.0, 4.0});
    EXPECT_DOUBLE_EQ(e[0], 0.6);
    EXPECT_DOUBLE_EQ(e[1], 0.8);
}

TEST(StructuralVectorTest, KeepsSigns) {
    StructuralVector e = make_structural_vector({-std::sqrt(0.1), std::sqrt(0.9)});
    EXPECT_NEAR(e[0], -0.31623, 5e-6);
    EXPECT_NEAR(e[1], 0.94868, 5e-6);
    EXPECT_NEAR(e[0] * e[0] + e[1] * e[1], 1.0, 1e-15);
}

TEST(StructuralVectorTest, RejectsZero) {
    EXPECT_EQ(code_of([] { make_structural_vector({0.0, 1e-16}); }), ErrorCode::kZeroVector);
    EXPECT_EQ(code_of([] { make_structural_vector({}); }), ErrorCode::kInvalidArgument);
}

TEST(StructuralVectorTest, NormalizationIsIdempotent) {
    for (auto raw : {std::vector<double>{0.3, -1.7, 2.2}, std::vector<double>{1e-3, 5.0}, {0.1, 0.2, 0.3, 0.4}}) {
        StructuralVector once = make_structural_vector(raw);
        auto c = once.components();
        StructuralVector twice = make_structural_vector(std::vector<double>(c.begin(), c.end()));
        EXPECT_EQ(once, twice);
    }
}

TEST(StructuralVectorTest, OrthogonalComplement) {
    StructuralVector x = orthogonal_complement_2d(make_structural_vector({1.0, 0.0}));
    EXPECT_EQ(x[0], -0.0);
    EXPECT_EQ(x[1], 1.0);

    double a = std::sqrt(0.9), b = std::sqrt(0.1);
    StructuralVector e = make_structural_vector({a, b});
    StructuralVector o = orthogonal_complement_2d(e);
    EXPECT_DOUBLE_EQ(o[0], -b);
    EXPECT_DOUBLE_EQ(o[1], a);
    EXPECT_EQ(e.dot(o), 0.0);
    EXPECT_EQ(code_of([] { orthogonal_complement_2d(make_structural_vector({1.0, 0.0, 0.0})); }),
              ErrorCode::kDimensionMismatch);
}

TEST(ProtocolTest, JpDefaults) {
    Protocol jp = build_jp_protocol();
    ASSERT_EQ(jp.size(), 3u);
    EXPECT_DOUBLE_EQ(jp.pulses()[0].area, kPi);
    EXPECT_DOUBLE_EQ(jp.pulses()[1].area, 2 * kPi);
    EXPECT_DOUBLE_EQ(jp.pulses()[2].area, kPi);
    EXPECT_EQ(jp.pulses()[0].vector, make_structural_vector({1.0, 0.0}));
    EXPECT_EQ(jp.pulses()[1].vector, make_structural_vector({0.0, 1.0}));
    EXPECT_EQ(jp.pulses()[2].vector, make_structural_vector({1.0, 0.0}));
    EXPECT_DOUBLE_EQ(jp.pulses()[0].mixing_angle(), kPi / 2);
}

TEST(ProtocolTest, JpOddAreaSums) {
    Protocol jp = build_jp_protocol(2, {3 * kPi, 2 * kPi, 3 * kPi});
    EXPECT_DOUBLE_EQ(jp.a_odd(), 6 * kPi);
    EXPECT_DOUBLE_EQ(jp.a_even(), 2 * kPi);
    EXPECT_DOUBLE_EQ(jp.total_area(), 8 * kPi);
    EXPECT_EQ(code_of([] { build_jp_protocol(3); }), ErrorCode::kInvalidArgument);
}

TEST(ProtocolTest, SopAtZeroIsJp) {
    EXPECT_EQ(build_sop_protocol(0.0), build_jp_protocol());
}

TEST(ProtocolTest, SopVectors) {
    Protocol sop = build_sop_protocol(std::sqrt(0.1));
    EXPECT_NEAR(sop.pulses()[0].vector[0], 0.94868, 5e-6);
    EXPECT_NEAR(sop.pulses()[0].vector[1], 0.31623, 5e-6);
    EXPECT_NEAR(sop.pulses()[1].vector[0], -0.31623, 5e-6);
    EXPECT_NEAR(sop.pulses()[1].vector[1], 0.94868, 5e-6);
    EXPECT_EQ(sop.pulses()[0].vector, sop.pulses()[2].vector);
    EXPECT_NEAR(sop.pulses()[0].vector.dot(sop.pulses()[1].vector), 0.0, 1e-15);
}

TEST(ProtocolTest, SopHalfIsFortyFiveDegrees) {
    Protocol sop = build_sop_protocol(std::sqrt(0.5));
    const StructuralVector &e = sop.pulses()[0].vector;
    EXPECT_NEAR(std::atan2(e[1], e[0]), kPi / 4, 1e-15);
}

TEST(ProtocolTest, SopRejectsAsymmetricAreas) {
    EXPECT_EQ(code_of([] { build_sop_protocol(0.3, {kPi, 2 * kPi, 1.1 * kPi}); }), ErrorCode::kAsymmetricAreas);
    EXPECT_EQ(code_of([] { build_sop_protocol(1.5); }), ErrorCode::kInvalidArgument);
}

TEST(ProtocolTest, EsopThreeMatchesSop) {
    double b = std::sqrt(0.2);
    Protocol sop = build_sop_protocol(b, {1.3, 2.1, 1.3});
    Protocol esop = build_esop_protocol(3, make_structural_vector({std::sqrt(1 - b * b), b}), {1.3, 2.1});
    EXPECT_EQ(sop, esop);
}

TEST(ProtocolTest, EsopTwoPulses) {
    Protocol p = build_esop_protocol(2, make_structural_vector({1.0, 0.0}), {0.5, 0.7});
    ASSERT_EQ(p.size(), 2u);
    EXPECT_EQ(p.pulses()[0].vector, make_structural_vector({1.0, 0.0}));
    EXPECT_EQ(p.pulses()[1].vector[1], 1.0);
    EXPECT_DOUBLE_EQ(p.pulses()[1].area, 0.7);
}

TEST(ProtocolTest, EsopFiveAlternates) {
    Protocol p = build_esop_protocol(5, make_structural_vector({std::sqrt(0.9), std::sqrt(0.1)}), {1.0, 2.0});
    ASSERT_EQ(p.size(), 5u);
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        EXPECT_NEAR(p.pulses()[k].vector.dot(p.pulses()[k + 1].vector), 0.0, 1e-12);
    }
    EXPECT_DOUBLE_EQ(p.a_odd(), 3.0);
    EXPECT_DOUBLE_EQ(p.a_even(), 4.0);
    EXPECT_EQ(code_of([] { build_esop_protocol(1, make_structural_vector({1.0, 0.0}), {1.0, 1.0}); }),
              ErrorCode::kInvalidM);
}

TEST(ProtocolTest, RejectsWrongDimension) {
    EXPECT_EQ(code_of([] { Protocol(3, {{1.0, make_structural_vector({1.0, 0.0})}}); }),
              ErrorCode::kDimensionMismatch);
    EXPECT_EQ(code_of([] { Protocol(2, {}); }), ErrorCode::kInvalidArgument);
}

TEST(BasisTest, LabelsRoundTrip) {
    BasisState s = BasisState::from_label("010");
    EXPECT_FALSE(s.is_one(0));
    EXPECT_TRUE(s.is_one(1));
    EXPECT_FALSE(s.is_one(2));
    EXPECT_EQ(s.label(), "010");
    EXPECT_EQ(s.zero_qubits(), (std::vector<int>{0, 2}));
    EXPECT_EQ(code_of([] { BasisState::from_label("0x1"); }), ErrorCode::kInvalidArgument);
}

TEST(BasisTest, Orderings) {
    std::vector<std::string> two, three;
    for (const BasisState &s : computational_basis(2)) {
        two.push_back(s.label());
    }
    for (const BasisState &s : computational_basis(3)) {
        three.push_back(s.label());
    }
    EXPECT_EQ(two, (std::vector<std::string>{"00", "01", "10", "11"}));
    EXPECT_EQ(three, (std::vector<std::string>{"000", "010", "100", "001", "101", "011", "110", "111"}));
}

TEST(GateSignatureTest, Cphase) {
    GateSignature two = GateSignature::cphase(2);
    EXPECT_EQ(std::vector<int>(two.phases().begin(), two.phases().end()), (std::vector<int>{-1, -1, -1, 1}));
    GateSignature three = GateSignature::cphase(3);
    EXPECT_EQ(std::vector<int>(three.phases().begin(), three.phases().end()),
              (std::vector<int>{-1, -1, -1, -1, -1, -1, 1, 1}));
    EXPECT_EQ(code_of([] { GateSignature({1, -1, 1}); }), ErrorCode::kInvalidArgument);
    EXPECT_EQ(code_of([] { GateSignature({1, 2}); }), ErrorCode::kInvalidArgument);
}

TEST(ProtocolFamilyTest, SplitsAreasEqually) {
    ProtocolFamily f = ProtocolFamily::sop(std::sqrt(0.1), 5);
    Protocol p = f.at(3.0, 4.0);
    ASSERT_EQ(p.size(), 5u);
    EXPECT_DOUBLE_EQ(p.pulses()[0].area, 1.0);
    EXPECT_DOUBLE_EQ(p.pulses()[1].area, 2.0);
    EXPECT_DOUBLE_EQ(p.a_odd(), 3.0);
    EXPECT_DOUBLE_EQ(p.a_even(), 4.0);
}

TEST(ProtocolFamilyTest, ThreePulseFamilyMatchesBuilder) {
    double b = std::sqrt(0.3);
    Protocol from_family = ProtocolFamily::sop(b).at(2.4, 1.1);
    EXPECT_EQ(from_family, build_sop_protocol(b, {1.2, 1.1, 1.2}));
}

TEST(ProtocolFamilyTest, NonOrthogonalVectors) {
    double b = std::sqrt(0.1);
    ProtocolFamily f = ProtocolFamily::non_orthogonal(b);
    EXPECT_DOUBLE_EQ(f.even_vector()[0], b);
    EXPECT_DOUBLE_EQ(f.even_vector()[1], std::sqrt(0.9));
}

TEST(ProtocolFamilyTest, ThreeQubitSubVector) {
    double b = std::sqrt(0.1), c = std::sqrt(0.1);
    ProtocolFamily f = ProtocolFamily::three_qubit(b, c, Orthogonality::kSubVector);
    EXPECT_NEAR(f.odd_vector()[0], std::sqrt(0.8), 1e-15);
    EXPECT_NEAR(f.odd_vector()[1], b, 1e-15);
    EXPECT_NEAR(f.odd_vector()[2], c, 1e-15);
    EXPECT_NEAR(f.even_vector()[0], -b, 1e-15);
    EXPECT_NEAR(f.even_vector()[1], std::sqrt(0.8), 1e-15);
    double ab_dot = f.odd_vector()[0] * f.even_vector()[0] + f.odd_vector()[1] * f.even_vector()[1];
    EXPECT_NEAR(ab_dot, 0.0, 1e-15);
}

TEST(ProtocolFamilyTest, ThreeQubitFullVector) {
    double b = std::sqrt(0.1), c = std::sqrt(0.1);
    ProtocolFamily f = ProtocolFamily::three_qubit(b, c, Orthogonality::kFullVector);
    EXPECT_NEAR(f.odd_vector().dot(f.even_vector()), 0.0, 1e-15);
    EXPECT_NEAR(f.even_vector()[2], c, 1e-15);
    // c = 0 collapses onto the two-qubit complement (-b, a, 0).
    ProtocolFamily flat = ProtocolFamily::three_qubit(b, 0.0, Orthogonality::kFullVector);
    EXPECT_NEAR(flat.even_vector()[0], -b, 1e-15);
    EXPECT_NEAR(flat.even_vector()[1], std::sqrt(0.9), 1e-15);
    EXPECT_EQ(code_of([] { ProtocolFamily::three_qubit(0.1, 0.8, Orthogonality::kFullVector); }),
              ErrorCode::kInvalidArgument);
}

TEST(ErrorTest, MessageCarriesCodeName) {
    Error e(ErrorCode::kEmptyGrid, "nothing");
    EXPECT_STREQ(e.what(), "EmptyGrid: nothing");
    EXPECT_EQ(error_code_name(ErrorCode::kStepTooLarge), "StepTooLarge");
}

}  // namespace
}  // namespace rydgate
