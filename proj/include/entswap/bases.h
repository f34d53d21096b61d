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

#include <string>
#include <vector>

#include "entswap/hilbert.h"
#include "entswap/report.h"

namespace entswap {

/// Hadamard vectors h0 = (|0>+|1>)/√2 and h1 = (|0>-|1>)/√2.
StateVector hadamard_state(int h);

/// b_ij = (|0 i> + (-1)^j |1 ī>)/√2; radix index 2i + j.
StateVector bell_state(int i, int j);
StateVector bell_state(int index);

/// GHZ vector b_{e1 e2 e3} = (|0 e1 e2> + (-1)^{e3} |1 ē1 ē2>)/√2; radix index 4e1 + 2e2 + e3.
StateVector ghz_state(int e1, int e2, int e3);
StateVector ghz_state(int index);

/// Canonical basis of n qubits in index order.
std::vector<StateVector> canonical_basis(int n);

/// Products h_{a_0} ⊗ ... ⊗ h_{a_{n-1}} ordered by the radix value of (a_0 ... a_{n-1}).
std::vector<StateVector> hadamard_product_basis(int n);

/// An ordered pair of distinct qubit positions (μ, ν).
struct BellPairing {
    int first = 0;
    int second = 1;

    bool operator==(const BellPairing&) const = default;
};

/// An orthonormal basis of the qubits at `support` inside a register of
/// `host_qubits` qubits. Local qubit t of each state sits at host position support[t].
class EntangledBasis {
 public:
    enum class Kind { kBell, kGhz };

    EntangledBasis(Kind kind, int host_qubits, std::vector<int> support, std::vector<StateVector> states);

    Kind kind() const { return kind_; }
    int host_qubits() const { return host_qubits_; }
    const std::vector<int>& support() const { return support_; }
    const std::vector<StateVector>& states() const { return states_; }
    std::size_t size() const { return states_.size(); }
    const StateVector& operator[](std::size_t k) const { return states_[k]; }

    bool covers_host() const { return static_cast<int>(support_.size()) == host_qubits_; }

    /// Basis element k as a vector of the host register. Requires covers_host().
    StateVector host_state(std::size_t k) const;

    /// "bell(0,2)" or "ghz".
    std::string label() const;

 private:
    Kind kind_;
    int host_qubits_;
    std::vector<int> support_;
    std::vector<StateVector> states_;
};

/// The Bell basis b^{(μν)} of the pair `pairing` inside an n-qubit register, n ∈ {2, 4}.
EntangledBasis bell_basis_on(BellPairing pairing, int n);

/// The 8 GHZ states of a 3-qubit register in radix order.
EntangledBasis ghz_basis();

/// Expands the four Bell and eight GHZ vectors in the Hadamard product basis and
/// compares them with the published coefficient listings.
Report verify_hadamard_expansions();

}  // namespace entswap
