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

#include <gtest/gtest.h>

#include <random>

namespace entswap {
namespace {

TEST(MessageWord, Parsing) {
    auto m = MessageWord::parse("1302");
    EXPECT_EQ(m.symbols(), (std::vector<int>{1, 3, 0, 2}));
    EXPECT_EQ(m.to_string(), "1302");
    EXPECT_TRUE(MessageWord::parse("").empty());
    EXPECT_THROW(MessageWord::parse("14"), std::invalid_argument);
    EXPECT_THROW(MessageWord::parse("1a"), std::invalid_argument);
    EXPECT_THROW(MessageWord(std::vector<int>{4}), std::invalid_argument);
}

TEST(MessageWord, FromContiguousBitPairs) {
    EXPECT_EQ(MessageWord::from_bits("0111"), MessageWord::parse("13"));
    EXPECT_EQ(MessageWord::from_bits("100100"), MessageWord::parse("210"));
    EXPECT_THROW(MessageWord::from_bits("011"), std::invalid_argument);
    EXPECT_THROW(MessageWord::from_bits("0121"), std::invalid_argument);
}

TEST(PadSpec, Validation) {
    EXPECT_THROW(PadSpec(4, {1, 1}), std::invalid_argument);
    EXPECT_THROW(PadSpec(4, {4}), std::invalid_argument);
    PadSpec p(8, {5, 1, 3});
    EXPECT_EQ(p.positions(), (std::vector<std::size_t>{1, 3, 5}));
    EXPECT_TRUE(p.contains(3));
    EXPECT_FALSE(p.contains(2));
    EXPECT_EQ(PadSpec::parse(8, "1,3,5,7").positions(), (std::vector<std::size_t>{1, 3, 5, 7}));
    EXPECT_TRUE(PadSpec::parse(3, "").positions().empty());
    EXPECT_THROW(PadSpec::parse(8, "1,x"), std::invalid_argument);
    EXPECT_THROW(PadSpec::parse(8, "1,,2"), std::invalid_argument);
}

TEST(Padding, FullLayoutIsIdentity) {
    RandomSource rng(1);
    auto msg = MessageWord::parse("3120");
    EXPECT_EQ(pad_message(msg, PadSpec(4, {0, 1, 2, 3}), rng), msg);
}

TEST(Padding, SingleSymbolInTheMiddle) {
    RandomSource rng(2);
    PadSpec pad(3, {1});
    auto padded = pad_message(MessageWord::parse("3"), pad, rng);
    ASSERT_EQ(padded.size(), 3u);
    EXPECT_EQ(padded[1], 3);
    EXPECT_EQ(unpad_message(padded, pad), MessageWord::parse("3"));
}

TEST(Padding, SizeMismatch) {
    RandomSource rng(3);
    EXPECT_THROW(pad_message(MessageWord::parse("12"), PadSpec(4, {0}), rng), std::invalid_argument);
    EXPECT_THROW(unpad_message(MessageWord::parse("12"), PadSpec(4, {0})), std::invalid_argument);
}

TEST(Padding, RoundTripProperty) {
    std::mt19937_64 gen(99);
    RandomSource rng(99);
    for (int t = 0; t < 1000; ++t) {
        std::size_t n = 1 + gen() % 16;
        std::vector<std::size_t> all(n);
        for (std::size_t k = 0; k < n; ++k) all[k] = k;
        std::shuffle(all.begin(), all.end(), gen);
        all.resize(gen() % (n + 1));
        PadSpec pad(n, all);
        std::vector<int> symbols;
        for (std::size_t k = 0; k < all.size(); ++k) symbols.push_back(static_cast<int>(gen() % 4));
        MessageWord msg(symbols);
        auto padded = pad_message(msg, pad, rng);
        ASSERT_EQ(padded.size(), n);
        EXPECT_EQ(unpad_message(padded, pad), msg);
    }
}

TEST(Padding, FillersDependOnSeedOnly) {
    PadSpec pad(12, {2, 7});
    auto msg = MessageWord::parse("31");
    RandomSource a(5), b(5);
    EXPECT_EQ(pad_message(msg, pad, a), pad_message(msg, pad, b));
}

}  // namespace
}  // namespace entswap
