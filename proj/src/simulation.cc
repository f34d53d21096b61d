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

#include "entswap/simulation.h"

#include <set>
#include <sstream>

#include "json.hpp"

namespace entswap {

namespace {

std::pair<int, int> parse_pair(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw std::invalid_argument("expected 'a,b', got '" + text + "'");
    }
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

}  // namespace

std::string party_name(Party p) {
    switch (p) {
        case Party::kAlice:
            return "alice";
        case Party::kBob:
            return "bob";
        case Party::kClaire:
            return "claire";
    }
    return "?";
}

int EntanglementRegistry::create_group(StateVector state, std::vector<Party> owners) {
    if (static_cast<int>(owners.size()) != state.num_qubits()) {
        throw std::invalid_argument("every qubit of a new group needs an owner");
    }
    groups_.push_back({std::move(state), std::move(owners)});
    return static_cast<int>(groups_.size()) - 1;
}

EntanglementRegistry::Group& EntanglementRegistry::group(int id) {
    if (id < 0 || id >= static_cast<int>(groups_.size())) {
        throw std::out_of_range("unknown entangled group " + std::to_string(id));
    }
    return groups_[id];
}

const EntanglementRegistry::Group& EntanglementRegistry::group(int id) const {
    return const_cast<EntanglementRegistry*>(this)->group(id);
}

const StateVector& EntanglementRegistry::state(int id) const { return group(id).state; }

Party EntanglementRegistry::owner(QubitRef q) const {
    const auto& g = group(q.group);
    if (q.position < 0 || q.position >= static_cast<int>(g.owners.size())) {
        throw std::out_of_range("qubit position out of range");
    }
    return g.owners[q.position];
}

void EntanglementRegistry::require_owner(Party actor, QubitRef q) const {
    if (owner(q) != actor) {
        throw OwnershipError(party_name(actor) + " does not hold qubit " + std::to_string(q.position) + " of group " +
                             std::to_string(q.group));
    }
}

void EntanglementRegistry::transfer(QubitRef q, Party from, Party to) {
    require_owner(from, q);
    group(q.group).owners[q.position] = to;
}

void EntanglementRegistry::apply_local(Party actor, QubitRef q, PauliIndex pauli) {
    require_owner(actor, q);
    auto& g = group(q.group);
    g.state = entswap::apply_local(g.state, q.position, pauli);
}

void EntanglementRegistry::swap_positions(Party actor, int id, int a, int b) {
    require_owner(actor, {id, a});
    require_owner(actor, {id, b});
    auto& g = group(id);
    g.state = permute_qubits(g.state, QubitPermutation::swap(g.state.num_qubits(), a, b));
}

MeasurementOutcome EntanglementRegistry::measure(int id, const EntangledBasis& basis, RandomSource& rng) {
    auto& g = group(id);
    auto outcome = measure_subset(g.state, basis, rng);
    g.state = outcome.post_state;
    return outcome;
}

std::string Transcript::to_jsonl() const {
    std::string out;
    for (std::size_t step = 0; step < events_.size(); ++step) {
        const auto& e = events_[step];
        nlohmann::ordered_json j;
        j["event"] = e.event;
        j["step"] = step;
        j["actor"] = e.actor;
        if (e.target) j["target"] = *e.target;
        if (e.group) j["group"] = *e.group;
        if (e.position) j["position"] = *e.position;
        if (e.pauli) j["pauli"] = *e.pauli;
        if (e.basis) j["basis"] = *e.basis;
        if (e.outcome) j["outcome"] = *e.outcome;
        if (e.prob) j["prob"] = *e.prob;
        if (e.payload) j["payload"] = *e.payload;
        out += j.dump();
        out += '\n';
    }
    return out;
}

Transcript Transcript::from_jsonl(std::string_view text) {
    Transcript t;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        auto j = nlohmann::json::parse(line);
        Event e;
        e.event = j.at("event").get<std::string>();
        e.actor = j.at("actor").get<std::string>();
        if (j.contains("target")) e.target = j["target"].get<std::string>();
        if (j.contains("group")) e.group = j["group"].get<int>();
        if (j.contains("position")) e.position = j["position"].get<int>();
        if (j.contains("pauli")) e.pauli = j["pauli"].get<int>();
        if (j.contains("basis")) e.basis = j["basis"].get<std::string>();
        if (j.contains("outcome")) e.outcome = j["outcome"].get<int>();
        if (j.contains("prob")) e.prob = j["prob"].get<double>();
        if (j.contains("payload")) e.payload = j["payload"].get<std::string>();
        t.append(std::move(e));
    }
    return t;
}

std::optional<std::string> check_transcript(const Transcript& transcript) {
    std::map<QubitRef, std::string> owners;
    bool measured = false;
    auto holder = [&](int group, int position) -> std::optional<std::string> {
        auto it = owners.find({group, position});
        if (it == owners.end()) {
            return std::nullopt;
        }
        return it->second;
    };
    const auto& events = transcript.events();
    for (std::size_t step = 0; step < events.size(); ++step) {
        const auto& e = events[step];
        const std::string where = "step " + std::to_string(step) + " (" + e.event + "): ";
        static const std::set<std::string> kKinds = {"prepare",     "quantum-send", "local-op",      "local-swap",
                                                     "measurement", "decode",       "classical-send"};
        if (!kKinds.contains(e.event)) {
            return where + "unknown event kind";
        }
        const bool complete = e.event == "measurement" || e.event == "decode" || e.event == "classical-send" ||
                              (e.group && (e.event == "local-swap" ? e.payload.has_value() : e.position.has_value()));
        if (!complete || (e.event == "quantum-send" && !e.target)) {
            return where + "missing fields";
        }
        if (e.event == "prepare") {
            owners[{e.group.value(), e.position.value()}] = e.actor;
        } else if (e.event == "quantum-send" || e.event == "local-op") {
            auto h = holder(e.group.value(), e.position.value());
            if (h != e.actor) {
                return where + e.actor + " does not hold qubit " + std::to_string(*e.position) + " of group " +
                       std::to_string(*e.group);
            }
            if (e.event == "quantum-send") {
                owners[{*e.group, *e.position}] = e.target.value();
            }
        } else if (e.event == "local-swap") {
            auto [a, b] = parse_pair(e.payload.value());
            if (holder(*e.group, a) != e.actor || holder(*e.group, b) != e.actor) {
                return where + e.actor + " swaps qubits it does not hold";
            }
        } else if (e.event == "measurement") {
            if (!e.group || !e.outcome) {
                return where + "measurement without group or outcome";
            }
            measured = true;
        } else if (e.event == "decode") {
            if (!measured) {
                return where + "decode before any measurement";
            }
        }
    }
    return std::nullopt;
}

int Simulation::prepare(StateVector state, std::vector<Party> owners, const std::string& label) {
    auto copy = owners;
    int id = registry_.create_group(std::move(state), std::move(owners));
    for (std::size_t p = 0; p < copy.size(); ++p) {
        Event e{"prepare", party_name(copy[p])};
        e.group = id;
        e.position = static_cast<int>(p);
        e.payload = label;
        transcript_.append(std::move(e));
    }
    return id;
}

void Simulation::send_qubit(Party from, Party to, QubitRef q) {
    registry_.transfer(q, from, to);
    Event e{"quantum-send", party_name(from), party_name(to)};
    e.group = q.group;
    e.position = q.position;
    transcript_.append(std::move(e));
}

void Simulation::apply(Party actor, QubitRef q, PauliIndex pauli) {
    registry_.apply_local(actor, q, pauli);
    Event e{"local-op", party_name(actor)};
    e.group = q.group;
    e.position = q.position;
    e.pauli = pauli.value();
    transcript_.append(std::move(e));
}

void Simulation::swap(Party actor, int group, int a, int b) {
    registry_.swap_positions(actor, group, a, b);
    Event e{"local-swap", party_name(actor)};
    e.group = group;
    e.payload = std::to_string(a) + "," + std::to_string(b);
    transcript_.append(std::move(e));
}

MeasurementOutcome Simulation::measure(const std::string& actor, int group, const EntangledBasis& basis) {
    auto outcome = registry_.measure(group, basis, rng_);
    Event e{"measurement", actor};
    e.group = group;
    e.basis = basis.label();
    e.outcome = outcome.basis_index;
    e.prob = outcome.probability;
    transcript_.append(std::move(e));
    return outcome;
}

void Simulation::send_classical(Party from, Party to, const std::string& payload) {
    Event e{"classical-send", party_name(from), party_name(to)};
    e.payload = payload;
    transcript_.append(std::move(e));
}

void Simulation::record_decode(Party actor, const std::string& payload) {
    Event e{"decode", party_name(actor)};
    e.payload = payload;
    transcript_.append(std::move(e));
}

}  // namespace entswap
