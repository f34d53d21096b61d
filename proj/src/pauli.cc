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

#include "entswap/pauli.h"

#include <stdexcept>

namespace entswap {

PauliIndex::PauliIndex(int value) : value_(static_cast<std::uint8_t>(value)) {
    if (value < 0 || value > 3) {
        throw std::invalid_argument("Pauli index must be in [0,3], got " + std::to_string(value));
    }
}

PauliWord::PauliWord(std::vector<PauliIndex> indices) : indices_(std::move(indices)) {
    if (indices_.empty()) {
        throw std::invalid_argument("Pauli word must have at least one factor");
    }
}

PauliWord PauliWord::parse(std::string_view digits) {
    std::vector<PauliIndex> indices;
    for (char c : digits) {
        if (c < '0' || c > '3') {
            throw std::invalid_argument("Pauli word digits must be in 0..3");
        }
        indices.emplace_back(c - '0');
    }
    return PauliWord(std::move(indices));
}

std::string PauliWord::to_string() const {
    std::string out;
    for (auto i : indices_) {
        out += i.symbol();
    }
    return out;
}

std::vector<PauliWord> PauliWord::all(int arity) {
    if (arity < 1) {
        throw std::invalid_argument("Pauli word arity must be positive");
    }
    std::size_t count = std::size_t{1} << (2 * arity);
    std::vector<PauliWord> words;
    words.reserve(count);
    for (std::size_t code = 0; code < count; ++code) {
        std::vector<PauliIndex> indices;
        for (int p = 0; p < arity; ++p) {
            indices.emplace_back(static_cast<int>((code >> (2 * (arity - 1 - p))) & 3U));
        }
        words.emplace_back(std::move(indices));
    }
    return words;
}

Matrix2 pauli_matrix(PauliIndex i) {
    using namespace std::complex_literals;
    switch (i.value()) {
        case 0:
            return {{{1.0, 0.0}, {0.0, 1.0}}};
        case 1:
            return {{{0.0, 1.0}, {1.0, 0.0}}};
        case 2:
            return {{{0.0, -1i}, {1i, 0.0}}};
        default:
            return {{{1.0, 0.0}, {0.0, -1.0}}};
    }
}

StateVector apply_local(const StateVector& s, int position, PauliIndex i) {
    if (position < 0 || position >= s.num_qubits()) {
        throw std::out_of_range("qubit position " + std::to_string(position) + " out of range for " +
                                std::to_string(s.num_qubits()) + " qubits");
    }
    const Matrix2 m = pauli_matrix(i);
    const std::size_t mask = std::size_t{1} << (s.num_qubits() - 1 - position);
    std::vector<Amplitude> out(s.dimension());
    for (std::size_t idx = 0; idx < s.dimension(); ++idx) {
        if (idx & mask) {
            continue;
        }
        const Amplitude a0 = s[idx];
        const Amplitude a1 = s[idx | mask];
        out[idx] = m[0][0] * a0 + m[0][1] * a1;
        out[idx | mask] = m[1][0] * a0 + m[1][1] * a1;
    }
    return StateVector(std::move(out));
}

StateVector apply_word(const StateVector& s, const PauliWord& word) {
    if (static_cast<int>(word.size()) != s.num_qubits()) {
        throw std::invalid_argument("Pauli word " + word.to_string() + " does not match " +
                                    std::to_string(s.num_qubits()) + " qubits");
    }
    StateVector out = s;
    for (std::size_t p = 0; p < word.size(); ++p) {
        if (word[p].value() != 0) {
            out = apply_local(out, static_cast<int>(p), word[p]);
        }
    }
    return out;
}

}  // namespace entswap
