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
#include <stdexcept>
#include <vector>

#include "entswap/message.h"
#include "entswap/perm_tables.h"
#include "entswap/simulation.h"
#include "entswap/swap_measure.h"

namespace entswap {

/// A run could not recover a message (decoding found no word or several).
class ProtocolError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

/// Protocol step taken out of order, e.g. decoding before authorization.
class StateMachineError : public std::logic_error {
 public:
    using std::logic_error::logic_error;
};

struct QsdcResult {
    MessageWord decoded;
    MessageWord padded_sent;
    MessageWord padded_decoded;
    std::vector<int> outcomes;
    Transcript transcript;
};

/// Direct communication over n copies of Bell state k. Alice pads msg into the
/// layout and encodes symbol j on qubit 1 of each pair; Bob applies σ_i to
/// qubit 0, measures in the Bell basis and decodes j from (i, k, outcome).
QsdcResult run_qsdc(const MessageWord& msg, PauliIndex i, int k, const PadSpec& pad, std::uint64_t seed);

struct BidirectionalResult {
    MessageWord alice_decoded;  // Bob's message as recovered by Alice
    MessageWord bob_decoded;    // Alice's message as recovered by Bob
    std::vector<int> outcomes;
    Transcript transcript;
};

/// Alice encodes on qubit 0 and Bob on qubit 1 of each copy of Bell state k;
/// one joint Bell measurement per pair is seen by both.
BidirectionalResult run_bidirectional(const MessageWord& alice_msg, const MessageWord& bob_msg, int k,
                                      std::uint64_t seed);

/// What one party concludes about all three inputs (its own included).
struct MultiView {
    Party party;
    int alice_index;  // σ index chosen by Alice, 0..3
    int bob_bit;
    int claire_bit;
};

struct MultidirectionalResult {
    std::array<MultiView, 3> views;  // alice, bob, claire
    int outcome;
    bool reference_untouched;
    Transcript transcript;
};

/// Three parties share two copies of GHZ state ell; the second copy is encoded
/// (Alice: σ_{alice_bits}; Bob, Claire: σ0 or σ2) and measured in the GHZ basis.
MultidirectionalResult run_multidirectional(int alice_bits, int bob_bit, int claire_bit, int ell, std::uint64_t seed);

/// Controlled bidirectional exchange, step by step. Claire holds qubit 0 of
/// every GHZ copy, Alice qubit 1, Bob qubit 2.
class ControlledSession {
 public:
    ControlledSession(MessageWord alice_msg, MessageWord bob_msg, int ell, PadSpec pad, std::uint64_t seed);

    /// Alice and Bob encode (message at the layout positions, random Paulis
    /// elsewhere) and send their qubits to Claire.
    void encode();
    /// With grant, Claire measures every copy and broadcasts the outcomes.
    void authorize(bool grant);

    bool authorized() const { return state_ == Stage::kAuthorized; }
    const std::vector<int>& outcomes() const { return outcomes_; }

    /// Throws StateMachineError unless authorized.
    MessageWord alice_decodes();
    MessageWord bob_decodes();

    Transcript take_transcript() { return sim_.take_transcript(); }

 private:
    enum class Stage { kCreated, kEncoded, kWithheld, kAuthorized };

    MessageWord decode(Party who);

    MessageWord alice_msg_, bob_msg_;
    int ell_;
    PadSpec pad_;
    Simulation sim_;
    Stage state_ = Stage::kCreated;
    std::vector<int> groups_;
    std::vector<int> alice_ops_, bob_ops_;
    std::vector<int> outcomes_;
};

struct ControlledResult {
    std::optional<MessageWord> alice_decoded;  // Bob's message
    std::optional<MessageWord> bob_decoded;    // Alice's message
    std::vector<int> outcomes;
    Transcript transcript;
};

ControlledResult run_controlled(const MessageWord& alice_msg, const MessageWord& bob_msg, int ell, const PadSpec& pad,
                                bool grant, std::uint64_t seed);

/// One 4-qubit block of the swapping key agreement.
struct KeyBlock {
    SwapLabels initial;
    int alice_action;  // 0: leave, 1: swap middle qubits
    int bob_action;    // 0: measure (0,1),(2,3); 1: measure (0,2),(1,3)
    int first_outcome;
    int second_outcome;

    bool correlated() const { return alice_action == bob_action; }
};

struct KeyAgreementStats {
    std::vector<KeyBlock> blocks;
    int correlated = 0;
    int anticorrelated = 0;
    /// Over anticorrelated blocks: how often Bob's first pair landed on each
    /// offset (a ⊕ i0, b ⊕ j0) from Alice's first pair, radix-ordered.
    std::array<int, 4> anticorrelated_offsets{};
};

struct KeyAgreementResult {
    std::vector<int> alice_key;
    std::vector<int> bob_key;
    KeyAgreementStats stats;
    Transcript transcript;
};

/// m blocks; correlated blocks contribute Bob's four outcome bits (first pair,
/// then second), anticorrelated ones the two parities a⊕c, b⊕d.
KeyAgreementResult run_key_agreement(int blocks, std::uint64_t seed);

std::string bits_to_string(const std::vector<int>& bits);

}  // namespace entswap
