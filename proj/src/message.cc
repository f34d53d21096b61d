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

#include "entswap/message.h"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace entswap {

MessageWord::MessageWord(std::vector<int> symbols) : symbols_(std::move(symbols)) {
    for (int s : symbols_) {
        if (s < 0 || s > 3) {
            throw std::invalid_argument("message symbols must be in [0,3], got " + std::to_string(s));
        }
    }
}

MessageWord MessageWord::parse(std::string_view digits) {
    std::vector<int> symbols;
    for (char c : digits) {
        if (c < '0' || c > '3') {
            throw std::invalid_argument("message must be a radix-4 digit string");
        }
        symbols.push_back(c - '0');
    }
    return MessageWord(std::move(symbols));
}

MessageWord MessageWord::from_bits(std::string_view bits) {
    if (bits.size() % 2 != 0) {
        throw std::invalid_argument("bit message must have even length");
    }
    std::vector<int> symbols;
    for (std::size_t k = 0; k < bits.size(); k += 2) {
        if ((bits[k] != '0' && bits[k] != '1') || (bits[k + 1] != '0' && bits[k + 1] != '1')) {
            throw std::invalid_argument("bit message must be a 0/1 string");
        }
        symbols.push_back(2 * (bits[k] - '0') + (bits[k + 1] - '0'));
    }
    return MessageWord(std::move(symbols));
}

std::string MessageWord::to_string() const {
    std::string out;
    for (int s : symbols_) {
        out += static_cast<char>('0' + s);
    }
    return out;
}

PadSpec::PadSpec(std::size_t n, std::vector<std::size_t> positions) : n_(n), positions_(std::move(positions)) {
    std::sort(positions_.begin(), positions_.end());
    if (std::adjacent_find(positions_.begin(), positions_.end()) != positions_.end()) {
        throw std::invalid_argument("padding positions must be distinct");
    }
    if (!positions_.empty() && positions_.back() >= n_) {
        throw std::invalid_argument("padding position " + std::to_string(positions_.back()) + " outside length " +
                                    std::to_string(n_));
    }
}

PadSpec PadSpec::parse(std::size_t n, std::string_view text) {
    std::vector<std::size_t> positions;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto token = text.substr(0, comma);
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw std::invalid_argument("bad padding position '" + std::string(token) + "'");
        }
        positions.push_back(value);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    }
    return PadSpec(n, std::move(positions));
}

bool PadSpec::contains(std::size_t position) const {
    return std::binary_search(positions_.begin(), positions_.end(), position);
}

MessageWord pad_message(const MessageWord& msg, const PadSpec& pad, RandomSource& rng) {
    if (msg.size() != pad.positions().size()) {
        throw std::invalid_argument("message length " + std::to_string(msg.size()) + " does not match " +
                                    std::to_string(pad.positions().size()) + " padding positions");
    }
    std::vector<int> out(pad.length());
    std::size_t next = 0;
    for (std::size_t p = 0; p < pad.length(); ++p) {
        if (pad.contains(p)) {
            out[p] = msg[next++];
        } else {
            out[p] = static_cast<int>(rng.below(4));
        }
    }
    return MessageWord(std::move(out));
}

MessageWord unpad_message(const MessageWord& padded, const PadSpec& pad) {
    if (padded.size() != pad.length()) {
        throw std::invalid_argument("padded word length does not match the padding layout");
    }
    std::vector<int> out;
    for (auto p : pad.positions()) {
        out.push_back(padded[p]);
    }
    return MessageWord(std::move(out));
}

}  // namespace entswap
