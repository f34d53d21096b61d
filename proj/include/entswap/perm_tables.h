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

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "entswap/bases.h"
#include "entswap/pauli.h"
#include "entswap/report.h"

namespace entswap {

/// A bijection on basis indices {0..size-1}.
class BasisPermutation {
 public:
    explicit BasisPermutation(std::vector<int> images);
    static BasisPermutation identity(int size);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int k) const { return images_.at(k); }
    const std::vector<int>& images() const { return images_; }

    /// (this ∘ other)(k) = this(other(k)).
    BasisPermutation after(const BasisPermutation& other) const;
    bool is_identity() const;

    /// "[2 3 0 1]"
    std::string to_string() const;

    auto operator<=>(const BasisPermutation&) const = default;

 private:
    std::vector<int> images_;
};

/// What one Pauli word does to a basis: basis_k -> phases[k] * basis_{permutation(k)}.
struct ActionEntry {
    PauliWord word;
    BasisPermutation permutation;
    std::vector<Amplitude> phases;
};

/// One permutation of the image together with its label and its preimage words.
struct PermutationClass {
    int label;
    BasisPermutation permutation;
    std::vector<PauliWord> preimage;  // lexicographic
};

/// The map from Pauli words of a fixed arity to the basis permutations they induce.
class ActionTable {
 public:
    ActionTable(int arity, std::vector<ActionEntry> entries, std::vector<PermutationClass> classes);

    int arity() const { return arity_; }
    const std::vector<ActionEntry>& entries() const { return entries_; }
    /// Sorted by label.
    const std::vector<PermutationClass>& classes() const { return classes_; }

    /// Throws std::out_of_range when the word is not in the table.
    const ActionEntry& entry(const PauliWord& word) const;
    const PermutationClass& by_label(int label) const;
    /// Label of the class containing `word`.
    int label_of(const PauliWord& word) const;

 private:
    int arity_;
    std::vector<ActionEntry> entries_;
    std::vector<PermutationClass> classes_;
};

/// Applies `word` to every element of a full-register basis and locates the
/// unique basis element it lands on (up to phase). Throws std::logic_error if
/// an image matches no basis element.
ActionEntry derive_action(const PauliWord& word, const EntangledBasis& basis);

/// All 16 two-qubit words acting on the Bell basis. Label ℓ is the index for
/// which σ_{0ℓ} realizes the permutation.
ActionTable build_a2();

/// All 64 three-qubit words acting on the GHZ basis. Label μ is the image of
/// basis index 0 under the permutation.
ActionTable build_a3();

/// The 16 words σ_ijk of `a3` with j, k ∈ {0, 2}; labels are kept.
ActionTable restrict_to_s(const ActionTable& a3);

class DecodeError : public std::runtime_error {
 public:
    enum class Kind { kNoCandidate, kAmbiguous };
    DecodeError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

 private:
    Kind kind_;
};

/// Finds the unique word of `table` that agrees with `known` on its known
/// positions and sends basis index `initial` to `outcome`.
/// Throws DecodeError when there is no such word or more than one.
PauliWord decode_partner(const ActionTable& table, int initial, int outcome, const PartialWord& known);

/// Cross-checks the derived tables against the published correspondence tables.
Report verify_tables();

}  // namespace entswap
