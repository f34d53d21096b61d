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

#include "entswap/protocols.h"

#include <string>

namespace entswap {

namespace {

const ActionTable& a2_table() {
    static const ActionTable table = build_a2();
    return table;
}

const ActionTable& a3_table() {
    static const ActionTable table = build_a3();
    return table;
}

const ActionTable& s_table() {
    static const ActionTable table = restrict_to_s(a3_table());
    return table;
}

PauliWord decode_or_fail(const ActionTable& table, int initial, int outcome, const PartialWord& known) {
    try {
        return decode_partner(table, initial, outcome, known);
    } catch (const DecodeError& e) {
        throw ProtocolError(std::string("decoding failed: ") + e.what());
    }
}

void require_range(int value, int lo, int hi, const char* what) {
    if (value < lo || value > hi) {
        throw std::invalid_argument(std::string(what) + " must be in [" + std::to_string(lo) + "," +
                                    std::to_string(hi) + "], got " + std::to_string(value));
    }
}

std::string digits(const std::vector<int>& values) {
    std::string out;
    for (int v : values) {
        out += std::to_string(v);
    }
    return out;
}

}  // namespace

std::string bits_to_string(const std::vector<int>& bits) { return digits(bits); }

QsdcResult run_qsdc(const MessageWord& msg, PauliIndex i, int k, const PadSpec& pad, std::uint64_t seed) {
    require_range(k, 0, 3, "Bell index k");
    Simulation sim(seed);
    const MessageWord padded = pad_message(msg, pad, sim.rng());
    const auto bell = bell_basis_on({0, 1}, 2);

    std::vector<int> groups;
    for (std::size_t n = 0; n < pad.length(); ++n) {
        groups.push_back(sim.prepare(bell_state(k), {Party::kBob, Party::kAlice}, "bell " + std::to_string(k)));
    }
    for (std::size_t n = 0; n < groups.size(); ++n) {
        sim.apply(Party::kAlice, {groups[n], 1}, PauliIndex(padded[n]));
    }
    for (int g : groups) {
        sim.send_qubit(Party::kAlice, Party::kBob, {g, 1});
    }

    std::vector<int> outcomes;
    std::vector<int> recovered;
    for (int g : groups) {
        sim.apply(Party::kBob, {g, 0}, i);
        int outcome = sim.measure("bob", g, bell).basis_index;
        outcomes.push_back(outcome);
        recovered.push_back(decode_or_fail(a2_table(), k, outcome, {i, std::nullopt})[1].value());
    }
    MessageWord padded_decoded(std::move(recovered));
    MessageWord decoded = unpad_message(padded_decoded, pad);
    sim.record_decode(Party::kBob, decoded.to_string());
    return {decoded, padded, padded_decoded, std::move(outcomes), sim.take_transcript()};
}

BidirectionalResult run_bidirectional(const MessageWord& alice_msg, const MessageWord& bob_msg, int k,
                                      std::uint64_t seed) {
    require_range(k, 0, 3, "Bell index k");
    if (alice_msg.size() != bob_msg.size()) {
        throw std::invalid_argument("bidirectional messages must have equal length");
    }
    Simulation sim(seed);
    const auto bell = bell_basis_on({0, 1}, 2);
    std::vector<int> groups;
    for (std::size_t n = 0; n < alice_msg.size(); ++n) {
        groups.push_back(sim.prepare(bell_state(k), {Party::kAlice, Party::kBob}, "bell " + std::to_string(k)));
    }
    for (std::size_t n = 0; n < groups.size(); ++n) {
        sim.apply(Party::kAlice, {groups[n], 0}, PauliIndex(alice_msg[n]));
        sim.apply(Party::kBob, {groups[n], 1}, PauliIndex(bob_msg[n]));
    }
    for (int g : groups) {
        sim.send_qubit(Party::kAlice, Party::kBob, {g, 0});
    }
    for (int g : groups) {
        sim.send_qubit(Party::kBob, Party::kAlice, {g, 1});
    }

    std::vector<int> outcomes, alice_view, bob_view;
    for (std::size_t n = 0; n < groups.size(); ++n) {
        int outcome = sim.measure("alice+bob", groups[n], bell).basis_index;
        outcomes.push_back(outcome);
        PauliIndex mine_a(alice_msg[n]);
        PauliIndex mine_b(bob_msg[n]);
        alice_view.push_back(decode_or_fail(a2_table(), k, outcome, {mine_a, std::nullopt})[1].value());
        bob_view.push_back(decode_or_fail(a2_table(), k, outcome, {std::nullopt, mine_b})[0].value());
    }
    MessageWord alice_decoded(std::move(alice_view));
    MessageWord bob_decoded(std::move(bob_view));
    sim.record_decode(Party::kAlice, alice_decoded.to_string());
    sim.record_decode(Party::kBob, bob_decoded.to_string());
    return {alice_decoded, bob_decoded, std::move(outcomes), sim.take_transcript()};
}

MultidirectionalResult run_multidirectional(int alice_bits, int bob_bit, int claire_bit, int ell, std::uint64_t seed) {
    require_range(alice_bits, 0, 3, "Alice's two-bit index");
    require_range(bob_bit, 0, 1, "Bob's bit");
    require_range(claire_bit, 0, 1, "Claire's bit");
    require_range(ell, 0, 7, "GHZ index ell");
    Simulation sim(seed);
    const std::vector<Party> holders = {Party::kAlice, Party::kBob, Party::kClaire};
    const int reference = sim.prepare(ghz_state(ell), holders, "ghz " + std::to_string(ell) + " reference");
    const int working = sim.prepare(ghz_state(ell), holders, "ghz " + std::to_string(ell));

    sim.apply(Party::kAlice, {working, 0}, PauliIndex(alice_bits));
    sim.apply(Party::kBob, {working, 1}, PauliIndex(2 * bob_bit));
    sim.apply(Party::kClaire, {working, 2}, PauliIndex(2 * claire_bit));
    const int outcome = sim.measure("alice+bob+claire", working, ghz_basis()).basis_index;

    std::array<MultiView, 3> views{};
    const std::array<int, 3> own = {alice_bits, 2 * bob_bit, 2 * claire_bit};
    for (int p = 0; p < 3; ++p) {
        PartialWord known(3);
        known[p] = PauliIndex(own[p]);
        PauliWord word = decode_or_fail(s_table(), ell, outcome, known);
        views[p] = {holders[p], word[0].value(), word[1].value() / 2, word[2].value() / 2};
        sim.record_decode(holders[p], word.to_string());
    }
    const bool untouched = sim.registry().state(reference) == ghz_state(ell);
    return {views, outcome, untouched, sim.take_transcript()};
}

ControlledSession::ControlledSession(MessageWord alice_msg, MessageWord bob_msg, int ell, PadSpec pad,
                                     std::uint64_t seed)
    : alice_msg_(std::move(alice_msg)), bob_msg_(std::move(bob_msg)), ell_(ell), pad_(std::move(pad)), sim_(seed) {
    require_range(ell, 0, 7, "GHZ index ell");
    if (alice_msg_.size() != pad_.positions().size() || bob_msg_.size() != pad_.positions().size()) {
        throw std::invalid_argument("controlled messages must both match the padding positions");
    }
}

void ControlledSession::encode() {
    if (state_ != Stage::kCreated) {
        throw StateMachineError("encode called twice");
    }
    for (std::size_t n = 0; n < pad_.length(); ++n) {
        groups_.push_back(
            sim_.prepare(ghz_state(ell_), {Party::kClaire, Party::kAlice, Party::kBob}, "ghz " + std::to_string(ell_)));
    }
    alice_ops_ = pad_message(alice_msg_, pad_, sim_.rng()).symbols();
    bob_ops_ = pad_message(bob_msg_, pad_, sim_.rng()).symbols();
    for (std::size_t n = 0; n < groups_.size(); ++n) {
        sim_.apply(Party::kAlice, {groups_[n], 1}, PauliIndex(alice_ops_[n]));
    }
    for (int g : groups_) {
        sim_.send_qubit(Party::kAlice, Party::kClaire, {g, 1});
    }
    for (std::size_t n = 0; n < groups_.size(); ++n) {
        sim_.apply(Party::kBob, {groups_[n], 2}, PauliIndex(bob_ops_[n]));
    }
    for (int g : groups_) {
        sim_.send_qubit(Party::kBob, Party::kClaire, {g, 2});
    }
    state_ = Stage::kEncoded;
}

void ControlledSession::authorize(bool grant) {
    if (state_ != Stage::kEncoded) {
        throw StateMachineError("authorization requires the encoded sequences");
    }
    if (!grant) {
        sim_.send_classical(Party::kClaire, Party::kAlice, "withheld");
        sim_.send_classical(Party::kClaire, Party::kBob, "withheld");
        state_ = Stage::kWithheld;
        return;
    }
    const auto ghz = ghz_basis();
    for (int g : groups_) {
        outcomes_.push_back(sim_.measure("claire", g, ghz).basis_index);
    }
    sim_.send_classical(Party::kClaire, Party::kAlice, digits(outcomes_));
    sim_.send_classical(Party::kClaire, Party::kBob, digits(outcomes_));
    state_ = Stage::kAuthorized;
}

MessageWord ControlledSession::alice_decodes() { return decode(Party::kAlice); }

MessageWord ControlledSession::bob_decodes() { return decode(Party::kBob); }

MessageWord ControlledSession::decode(Party who) {
    if (state_ != Stage::kAuthorized) {
        throw StateMachineError(party_name(who) + " cannot decode without Claire's authorization");
    }
    std::vector<int> recovered;
    for (std::size_t pos : pad_.positions()) {
        PartialWord known = {PauliIndex(0), std::nullopt, std::nullopt};
        if (who == Party::kAlice) {
            known[1] = PauliIndex(alice_ops_[pos]);
        } else {
            known[2] = PauliIndex(bob_ops_[pos]);
        }
        PauliWord word = decode_or_fail(a3_table(), ell_, outcomes_[pos], known);
        recovered.push_back(word[who == Party::kAlice ? 2 : 1].value());
    }
    MessageWord out(std::move(recovered));
    sim_.record_decode(who, out.to_string());
    return out;
}

ControlledResult run_controlled(const MessageWord& alice_msg, const MessageWord& bob_msg, int ell, const PadSpec& pad,
                                bool grant, std::uint64_t seed) {
    ControlledSession session(alice_msg, bob_msg, ell, pad, seed);
    session.encode();
    session.authorize(grant);
    ControlledResult result;
    if (session.authorized()) {
        result.alice_decoded = session.alice_decodes();
        result.bob_decoded = session.bob_decodes();
    }
    result.outcomes = session.outcomes();
    result.transcript = session.take_transcript();
    return result;
}

KeyAgreementResult run_key_agreement(int blocks, std::uint64_t seed) {
    if (blocks < 1) {
        throw std::invalid_argument("key agreement needs at least one block");
    }
    Simulation sim(seed);
    KeyAgreementResult result;
    auto& stats = result.stats;
    std::vector<int> groups;
    const std::vector<Party> alice4(4, Party::kAlice);

    for (int b = 0; b < blocks; ++b) {
        int first = static_cast<int>(sim.rng().below(4));
        int second = static_cast<int>(sim.rng().below(4));
        SwapLabels labels{first >> 1, first & 1, second >> 1, second & 1};
        groups.push_back(
            sim.prepare(z_state(labels), alice4, "bell " + std::to_string(first) + " " + std::to_string(second)));
        KeyBlock block{labels, static_cast<int>(sim.rng().below(2)), 0, 0, 0};
        if (block.alice_action == 1) {
            sim.swap(Party::kAlice, groups.back(), 1, 2);
        }
        stats.blocks.push_back(block);
    }
    for (int g : groups) {
        for (int p = 0; p < 4; ++p) {
            sim.send_qubit(Party::kAlice, Party::kBob, {g, p});
        }
    }
    const auto b01 = bell_basis_on({0, 1}, 4), b23 = bell_basis_on({2, 3}, 4);
    const auto b02 = bell_basis_on({0, 2}, 4), b13 = bell_basis_on({1, 3}, 4);
    for (std::size_t n = 0; n < groups.size(); ++n) {
        auto& block = stats.blocks[n];
        block.bob_action = static_cast<int>(sim.rng().below(2));
        const auto& p1 = block.bob_action == 0 ? b01 : b02;
        const auto& p2 = block.bob_action == 0 ? b23 : b13;
        block.first_outcome = sim.measure("bob", groups[n], p1).basis_index;
        block.second_outcome = sim.measure("bob", groups[n], p2).basis_index;
    }

    std::vector<int> alice_actions, bob_actions;
    for (const auto& block : stats.blocks) {
        alice_actions.push_back(block.alice_action);
        bob_actions.push_back(block.bob_action);
    }
    sim.send_classical(Party::kAlice, Party::kBob, digits(alice_actions));
    sim.send_classical(Party::kBob, Party::kAlice, digits(bob_actions));

    for (const auto& block : stats.blocks) {
        const auto& l = block.initial;
        const int a = block.first_outcome >> 1, bb = block.first_outcome & 1;
        const int c = block.second_outcome >> 1, d = block.second_outcome & 1;
        if (block.correlated()) {
            ++stats.correlated;
            result.alice_key.insert(result.alice_key.end(), {l.i0, l.j0, l.i1, l.j1});
            result.bob_key.insert(result.bob_key.end(), {a, bb, c, d});
        } else {
            ++stats.anticorrelated;
            ++stats.anticorrelated_offsets[((a ^ l.i0) << 1) | (bb ^ l.j0)];
            result.alice_key.insert(result.alice_key.end(), {l.i0 ^ l.i1, l.j0 ^ l.j1});
            result.bob_key.insert(result.bob_key.end(), {a ^ c, bb ^ d});
        }
    }
    sim.record_decode(Party::kAlice, digits(result.alice_key));
    sim.record_decode(Party::kBob, digits(result.bob_key));
    result.transcript = sim.take_transcript();
    return result;
}

}  // namespace entswap
