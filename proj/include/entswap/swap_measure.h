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

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "entswap/bases.h"
#include "entswap/hilbert.h"
#include "entswap/report.h"

namespace entswap {

/// Bell-pair labels (i0, j0, i1, j1) of a 4-qubit swap-basis element.
struct SwapLabels {
    int i0 = 0, j0 = 0, i1 = 0, j1 = 0;

    static SwapLabels from_index(int index);
    /// Radix value 8 i0 + 4 j0 + 2 i1 + j1.
    int index() const { return (i0 << 3) | (j0 << 2) | (i1 << 1) | j1; }
    /// "i0j0i1j1" as digits.
    std::string to_string() const;

    bool operator==(const SwapLabels&) const = default;
};

/// z_{i0 j0 i1 j1} = b^{(01)}_{i0 j0} ⊗ b^{(23)}_{i1 j1}, written out on |q0 q1 q2 q3>.
StateVector z_state(SwapLabels labels);

/// y_{i0 j0 i1 j1} = b^{(02)}_{i0 j0} ⊗ b^{(13)}_{i1 j1}, i.e. z with the middle qubits swapped.
StateVector y_state(SwapLabels labels);

/// M[a][b] = <y_a | z_b> over radix label indices. Real for this pair of families.
std::array<std::array<double, 16>, 16> swap_overlap_matrix();

/// Expands every z in the y family and every y in the z family and checks the
/// four-term identity with its published sign pattern.
Report verify_swap_identities();

/// Deterministic 64-bit generator; identical seeds reproduce identical draws.
class RandomSource {
 public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }
    /// Uniform double in [0, 1) built from the top 53 bits of one draw.
    double uniform();
    /// Uniform integer in [0, bound), bound > 0.
    std::uint64_t below(std::uint64_t bound);

 private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

struct MeasurementOutcome {
    int basis_index;
    double probability;
    StateVector post_state;
};

/// Probability of each basis outcome when the qubits at basis.support() of s are
/// measured; values below 1e-12 are clamped to 0 and the rest renormalized.
std::vector<double> outcome_probabilities(const StateVector& s, const EntangledBasis& basis);

/// Projective measurement of the supported qubits of s in `basis` (projectors
/// basis_k ⊗ I on the other qubits). One uniform draw, inverse-CDF sampling.
MeasurementOutcome measure_subset(const StateVector& s, const EntangledBasis& basis, RandomSource& rng);

/// Like measure_subset, but the basis must cover the whole register.
MeasurementOutcome measure_full(const StateVector& s, const EntangledBasis& basis, RandomSource& rng);

}  // namespace entswap
