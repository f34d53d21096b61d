// Copyright 2026 The entswap Authors
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

#include "entswap/hilbert.h"

#include <cmath>
#include <limits>

#include "test_util.h"

namespace entswap {
namespace {

using testing::near_vector;
using testing::random_state;

TEST(StateVector, RejectsBadLengthsAndNorms) {
    EXPECT_THROW(StateVector({1.0}), std::invalid_argument);
    EXPECT_THROW(StateVector({1.0, 0.0, 0.0}), std::invalid_argument);
    EXPECT_THROW(StateVector({1.0, 1.0}), std::invalid_argument);
    EXPECT_THROW(StateVector({std::numeric_limits<double>::quiet_NaN(), 1.0}), std::invalid_argument);
    EXPECT_NO_THROW(StateVector({oracle::kR, Amplitude(0, oracle::kR)}));
}

TEST(StateVector, BasisKetUsesMostSignificantFirst) {
    auto s = StateVector::basis_ket("0110");
    EXPECT_EQ(s.num_qubits(), 4);
    EXPECT_EQ(s[6], Amplitude(1.0));
    EXPECT_EQ(s.bit(6, 0), 0);
    EXPECT_EQ(s.bit(6, 1), 1);
    EXPECT_EQ(s.bit(6, 3), 0);
    EXPECT_EQ(StateVector::basis_ket(4, 6), s);
    EXPECT_THROW(StateVector::basis_ket("012"), std::invalid_argument);
    EXPECT_THROW(StateVector::basis_ket(""), std::invalid_argument);
    EXPECT_THROW(StateVector::basis_ket(2, 4), std::invalid_argument);
}

TEST(Tensor, KetsConcatenate) {
    EXPECT_EQ(tensor(StateVector::basis_ket("0"), StateVector::basis_ket("1")), StateVector::basis_ket("01"));
    EXPECT_EQ(tensor(StateVector::basis_ket("10"), StateVector::basis_ket("1")), StateVector::basis_ket("101"));
}

TEST(Tensor, AmplitudesMultiply) {
    std::mt19937_64 gen(3);
    auto a = random_state(1, gen), b = random_state(2, gen);
    auto t = tensor(a, b);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            EXPECT_NEAR(std::abs(t[i * 4 + j] - a[i] * b[j]), 0.0, 1e-15);
        }
    }
}

TEST(Inner, ConjugateLinearInFirstArgument) {
    StateVector a({Amplitude(0, 1) * oracle::kR, oracle::kR});
    StateVector b = StateVector::basis_ket("0");
    EXPECT_NEAR(std::abs(inner(a, b) - Amplitude(0, -oracle::kR)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(inner(b, a) - Amplitude(0, oracle::kR)), 0.0, 1e-15);
    EXPECT_THROW(inner(a, StateVector::basis_ket("00")), std::invalid_argument);
}

TEST(Inner, HermitianSymmetryOnRandomStates) {
    std::mt19937_64 gen(11);
    for (int t = 0; t < 50; ++t) {
        auto a = random_state(3, gen), b = random_state(3, gen);
        EXPECT_NEAR(std::abs(inner(a, b) - std::conj(inner(b, a))), 0.0, 1e-12);
        EXPECT_NEAR(inner(a, a).real(), 1.0, 1e-12);
    }
}

TEST(QubitPermutation, Validation) {
    EXPECT_THROW(QubitPermutation({0, 0}), std::invalid_argument);
    EXPECT_THROW(QubitPermutation({0, 2}), std::invalid_argument);
    EXPECT_THROW(QubitPermutation({}), std::invalid_argument);
    EXPECT_THROW(QubitPermutation::swap(3, 0, 3), std::invalid_argument);
    auto p = QubitPermutation({1, 2, 0});
    EXPECT_EQ(p.inverse(), QubitPermutation({2, 0, 1}));
    EXPECT_EQ(QubitPermutation::swap(4, 1, 2), QubitPermutation({0, 2, 1, 3}));
}

TEST(PermuteQubits, MovesBitsToImagePositions) {
    EXPECT_EQ(permute_qubits(StateVector::basis_ket("01"), QubitPermutation::swap(2, 0, 1)),
              StateVector::basis_ket("10"));
    // bit at position 0 goes to position 1, 1 -> 2, 2 -> 0
    EXPECT_EQ(permute_qubits(StateVector::basis_ket("100"), QubitPermutation({1, 2, 0})),
              StateVector::basis_ket("010"));
    EXPECT_EQ(permute_qubits(StateVector::basis_ket("110"), QubitPermutation({1, 2, 0})),
              StateVector::basis_ket("011"));
    EXPECT_THROW(permute_qubits(StateVector::basis_ket("11"), QubitPermutation::identity(3)), std::invalid_argument);
}

TEST(PermuteQubits, InverseUndoes) {
    std::mt19937_64 gen(5);
    auto s = random_state(4, gen);
    QubitPermutation p({2, 0, 3, 1});
    EXPECT_TRUE(near_vector(permute_qubits(permute_qubits(s, p), p.inverse()),
                            oracle::Vec(s.amplitudes().begin(), s.amplitudes().end()), 1e-15));
}

TEST(EqualUpToPhase, Basics) {
    std::mt19937_64 gen(9);
    auto s = random_state(2, gen);
    auto c = equal_up_to_phase(s, s);
    ASSERT_TRUE(c);
    EXPECT_NEAR(std::abs(*c - Amplitude(1)), 0.0, 1e-12);

    std::vector<Amplitude> rotated(s.amplitudes().begin(), s.amplitudes().end());
    const Amplitude phase = std::polar(1.0, 0.7);
    for (auto& a : rotated) a *= phase;
    auto c2 = equal_up_to_phase(StateVector(rotated), s);
    ASSERT_TRUE(c2);
    EXPECT_NEAR(std::abs(*c2 - phase), 0.0, 1e-12);

    StateVector b00({oracle::kR, 0, 0, oracle::kR});
    StateVector b01({oracle::kR, 0, 0, -oracle::kR});
    EXPECT_FALSE(equal_up_to_phase(b00, b01));
    EXPECT_FALSE(equal_up_to_phase(b00, StateVector::basis_ket("0")));
}

TEST(EqualUpToPhase, SigmaYOnZeroIsPlusIOne) {
    // (0, i) = i |1>
    StateVector y0({0, Amplitude(0, 1)});
    auto c = equal_up_to_phase(y0, StateVector::basis_ket("1"));
    ASSERT_TRUE(c);
    EXPECT_NEAR(std::abs(*c - Amplitude(0, 1)), 0.0, 1e-15);
}

TEST(ExpandInBasis, RoundTripsThroughReconstruct) {
    std::mt19937_64 gen(17);
    std::vector<StateVector> basis;
    for (std::size_t k = 0; k < 8; ++k) basis.push_back(StateVector::basis_ket(3, k));
    for (int t = 0; t < 20; ++t) {
        auto s = random_state(3, gen);
        auto coeffs = expand_in_basis(s, basis);
        EXPECT_NEAR(squared_norm(coeffs), 1.0, 1e-12);
        auto back = reconstruct(coeffs, basis);
        for (std::size_t k = 0; k < 8; ++k) EXPECT_NEAR(std::abs(back[k] - s[k]), 0.0, 1e-12);
    }
}

TEST(ExpandInBasis, RejectsBadBases) {
    auto s = StateVector::basis_ket("00");
    std::vector<StateVector> incomplete = {StateVector::basis_ket("00"), StateVector::basis_ket("01")};
    EXPECT_THROW(expand_in_basis(s, incomplete), std::invalid_argument);
    std::vector<StateVector> repeated = {StateVector::basis_ket("00"), StateVector::basis_ket("00"),
                                         StateVector::basis_ket("10"), StateVector::basis_ket("11")};
    EXPECT_THROW(expand_in_basis(s, repeated), std::invalid_argument);
    std::vector<StateVector> wrong_dim = {StateVector::basis_ket("0"), StateVector::basis_ket("1")};
    EXPECT_THROW(expand_in_basis(s, wrong_dim), std::invalid_argument);
}

}  // namespace
}  // namespace entswap
