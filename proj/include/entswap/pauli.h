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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entswap/hilbert.h"

namespace entswap {

/// Index of a Pauli operator, numbered [σ0 σ1 σ2 σ3] = [I X Y Z].
class PauliIndex {
 public:
    /// Throws std::invalid_argument unless 0 <= value <= 3.
    explicit PauliIndex(int value);

    int value() const { return value_; }
    char symbol() const { return static_cast<char>('0' + value_); }

    auto operator<=>(const PauliIndex&) const = default;

 private:
    std::uint8_t value_;
};

/// Tensor product of Pauli operators, one factor per qubit position.
class PauliWord {
 public:
    explicit PauliWord(std::vector<PauliIndex> indices);
    /// Parses digit strings such as "033" (σ0 ⊗ σ3 ⊗ σ3).
    static PauliWord parse(std::string_view digits);

    std::size_t size() const { return indices_.size(); }
    PauliIndex operator[](std::size_t position) const { return indices_[position]; }
    const std::vector<PauliIndex>& indices() const { return indices_; }

    /// Digits, e.g. "033".
    std::string to_string() const;

    /// Lexicographic on the digit sequence.
    auto operator<=>(const PauliWord&) const = default;

    /// All 4^arity words in lexicographic order.
    static std::vector<PauliWord> all(int arity);

 private:
    std::vector<PauliIndex> indices_;
};

/// A word in which some positions are unknown; used for decoding queries.
using PartialWord = std::vector<std::optional<PauliIndex>>;

using Matrix2 = std::array<std::array<Amplitude, 2>, 2>;

Matrix2 pauli_matrix(PauliIndex i);

/// (I ⊗ ... ⊗ σ_i ⊗ ... ⊗ I) s with σ_i at `position`.
StateVector apply_local(const StateVector& s, int position, PauliIndex i);

/// Applies word[p] at every position p. The word length must equal the qubit count.
StateVector apply_word(const StateVector& s, const PauliWord& word);

}  // namespace entswap
