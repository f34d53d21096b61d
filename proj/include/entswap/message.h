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
#include <string_view>
#include <vector>

#include "entswap/swap_measure.h"

namespace entswap {

/// A word over {0,1,2,3}; each symbol carries two classical bits.
class MessageWord {
 public:
    MessageWord() = default;
    explicit MessageWord(std::vector<int> symbols);

    /// Radix-4 digit string, e.g. "1302". The empty string is the empty word.
    static MessageWord parse(std::string_view digits);
    /// Pairs contiguous bits: "0111" -> (1, 3). Length must be even.
    static MessageWord from_bits(std::string_view bits);

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    int operator[](std::size_t k) const { return symbols_[k]; }
    const std::vector<int>& symbols() const { return symbols_; }
    std::string to_string() const;

    bool operator==(const MessageWord&) const = default;

 private:
    std::vector<int> symbols_;
};

/// Length-n padding layout: message symbol t goes to positions()[t].
class PadSpec {
 public:
    /// Positions must be distinct and in [0, n-1]; they are kept in increasing order.
    PadSpec(std::size_t n, std::vector<std::size_t> positions);
    /// Comma-separated positions, e.g. "1,3,5,7".
    static PadSpec parse(std::size_t n, std::string_view positions);

    std::size_t length() const { return n_; }
    const std::vector<std::size_t>& positions() const { return positions_; }
    bool contains(std::size_t position) const;

 private:
    std::size_t n_;
    std::vector<std::size_t> positions_;
};

/// Places msg at the padding positions and seeded-random symbols elsewhere.
/// Throws std::invalid_argument when |msg| differs from the number of positions.
MessageWord pad_message(const MessageWord& msg, const PadSpec& pad, RandomSource& rng);

/// Reads the symbols at the padding positions back out.
MessageWord unpad_message(const MessageWord& padded, const PadSpec& pad);

}  // namespace entswap
