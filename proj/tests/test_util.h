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

#pragma once

#include <gtest/gtest.h>

#include <random>

#include "entswap/hilbert.h"
#include "oracle.h"

namespace entswap::testing {

inline StateVector random_state(int n, std::mt19937_64& gen) {
    std::normal_distribution<double> g;
    std::vector<Amplitude> amps(std::size_t{1} << n);
    double norm = 0;
    for (auto& a : amps) {
        a = {g(gen), g(gen)};
        norm += std::norm(a);
    }
    for (auto& a : amps) {
        a /= std::sqrt(norm);
    }
    return StateVector(amps);
}

inline StateVector from_oracle(const oracle::Vec& v) { return StateVector(v); }

inline ::testing::AssertionResult near_vector(const StateVector& s, const oracle::Vec& expected, double tol = 1e-10) {
    if (s.dimension() != expected.size()) {
        return ::testing::AssertionFailure() << "dimension " << s.dimension() << " vs " << expected.size();
    }
    for (std::size_t k = 0; k < expected.size(); ++k) {
        if (std::abs(s[k] - expected[k]) > tol) {
            return ::testing::AssertionFailure() << "amplitude " << k << " is " << s[k] << ", expected " << expected[k];
        }
    }
    return ::testing::AssertionSuccess();
}

inline ::testing::AssertionResult near_state(const StateVector& s, const StateVector& expected, double tol = 1e-12) {
    return near_vector(s, oracle::Vec(expected.amplitudes().begin(), expected.amplitudes().end()), tol);
}

}  // namespace entswap::testing

namespace entswap {
inline void PrintTo(const StateVector& s, std::ostream* os) { *os << s.to_string(); }
}  // namespace entswap
