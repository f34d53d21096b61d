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

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "entswap/bases.h"
#include "entswap/pauli.h"
#include "entswap/swap_measure.h"

namespace entswap {

enum class Party { kAlice, kBob, kClaire };

std::string party_name(Party p);

/// A qubit inside an entangled group.
struct QubitRef {
    int group = 0;
    int position = 0;

    auto operator<=>(const QubitRef&) const = default;
};

/// Raised when a party touches a qubit it does not hold.
class OwnershipError : public std::logic_error {
 public:
    using std::logic_error::logic_error;
};

/// Joint states of entangled groups and who holds each qubit. Sending a qubit
/// only changes ownership; amplitudes are never copied between groups.
class EntanglementRegistry {
 public:
    int create_group(StateVector state, std::vector<Party> owners);

    std::size_t group_count() const { return groups_.size(); }
    const StateVector& state(int group) const;
    Party owner(QubitRef q) const;

    void transfer(QubitRef q, Party from, Party to);
    void apply_local(Party actor, QubitRef q, PauliIndex pauli);
    /// Exchanges the roles of two positions of a group held entirely by `actor` at those positions.
    void swap_positions(Party actor, int group, int a, int b);
    /// Measures the supported positions of a group; the group collapses to the post-state.
    MeasurementOutcome measure(int group, const EntangledBasis& basis, RandomSource& rng);

 private:
    struct Group {
        StateVector state;
        std::vector<Party> owners;
    };
    Group& group(int id);
    const Group& group(int id) const;
    void require_owner(Party actor, QubitRef q) const;

    std::vector<Group> groups_;
};

/// One transcript record; absent fields are omitted when serialized.
struct Event {
    std::string event{};
    std::string actor{};
    std::optional<std::string> target{};
    std::optional<int> group{};
    std::optional<int> position{};
    std::optional<int> pauli{};
    std::optional<std::string> basis{};
    std::optional<int> outcome{};
    std::optional<double> prob{};
    std::optional<std::string> payload{};

    bool operator==(const Event&) const = default;
};

/// Ordered record of a protocol run.
class Transcript {
 public:
    void append(Event e) { events_.push_back(std::move(e)); }
    const std::vector<Event>& events() const { return events_; }
    std::size_t size() const { return events_.size(); }

    /// One JSON object per line with keys in the fixed order
    /// event, step, actor, target, group, position, pauli, basis, outcome, prob, payload.
    std::string to_jsonl() const;
    static Transcript from_jsonl(std::string_view text);

    bool operator==(const Transcript&) const = default;

 private:
    std::vector<Event> events_;
};

/// Replays ownership from prepare/quantum-send/local-swap events and checks that
/// every local operation is performed by the current holder, and that no decode
/// precedes a measurement. Returns a description of the first violation.
std::optional<std::string> check_transcript(const Transcript& transcript);

/// Registry, transcript and random source of one protocol run. Every action is
/// applied to the registry and recorded.
class Simulation {
 public:
    explicit Simulation(std::uint64_t seed) : rng_(seed) {}

    RandomSource& rng() { return rng_; }
    const EntanglementRegistry& registry() const { return registry_; }
    const Transcript& transcript() const { return transcript_; }
    Transcript take_transcript() { return std::move(transcript_); }

    int prepare(StateVector state, std::vector<Party> owners, const std::string& label);
    void send_qubit(Party from, Party to, QubitRef q);
    void apply(Party actor, QubitRef q, PauliIndex pauli);
    void swap(Party actor, int group, int a, int b);
    MeasurementOutcome measure(const std::string& actor, int group, const EntangledBasis& basis);
    void send_classical(Party from, Party to, const std::string& payload);
    void record_decode(Party actor, const std::string& payload);

 private:
    RandomSource rng_;
    EntanglementRegistry registry_;
    Transcript transcript_;
};

}  // namespace entswap
