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

#include "cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace entswap::cli {
namespace {

struct Result {
    int code;
    std::string out;

    std::vector<std::string> lines() const {
        std::vector<std::string> v;
        std::istringstream in(out);
        for (std::string l; std::getline(in, l);) v.push_back(l);
        return v;
    }
    std::string last() const { return lines().empty() ? "" : lines().back(); }
    bool has_line(const std::string& l) const {
        auto v = lines();
        return std::find(v.begin(), v.end(), l) != v.end();
    }
};

Result call(std::vector<std::string> args) {
    std::ostringstream out;
    int code = run(args, out);
    return {code, out.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

TEST(Cli, TablesA3Text) {
    auto r = call({"tables", "a3"});
    EXPECT_EQ(r.code, kExitOk);
    auto lines = r.lines();
    ASSERT_EQ(lines.size(), 9u);
    EXPECT_EQ(lines[1], "mu=0 [0 1 2 3 4 5 6 7] 000,033,111,122,212,221,303,330");
}

TEST(Cli, TablesRecords) {
    auto r = call({"tables", "s", "--format", "records"});
    EXPECT_EQ(r.code, kExitOk);
    auto lines = r.lines();
    ASSERT_EQ(lines.size(), 8u);
    for (std::size_t k = 0; k < lines.size(); ++k) {
        auto j = nlohmann::json::parse(lines[k]);
        EXPECT_EQ(j["mu"], static_cast<int>(k));
        EXPECT_EQ(j["preimage"].size(), 2u);
        EXPECT_EQ(j["images"].size(), 8u);
    }
    EXPECT_EQ(lines[7], R"({"mu":7,"images":[7,6,5,4,3,2,1,0],"preimage":["200","322"]})");

    auto a2 = call({"tables", "a2", "--format", "records"}).lines();
    ASSERT_EQ(a2.size(), 4u);
    for (const auto& l : a2) EXPECT_EQ(nlohmann::json::parse(l)["preimage"].size(), 4u);
    EXPECT_EQ(a2[0], R"({"ell":0,"images":[0,1,2,3],"preimage":["00","11","22","33"]})");
}

TEST(Cli, TablesUnknownName) {
    auto r = call({"tables", "a4"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_TRUE(r.last().starts_with("status=usage-error reason="));
}

TEST(Cli, VerifyHadamard) {
    auto r = call({"verify", "hadamard"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_TRUE(r.has_line("suite=hadamard checks=12 failed=0"));
    EXPECT_EQ(r.last(), "status=ok");
}

TEST(Cli, VerifySwapReportsSignMismatches) {
    auto r = call({"verify", "swap"});
    EXPECT_EQ(r.code, kExitVerification);
    EXPECT_TRUE(r.has_line("suite=swap checks=34 failed=24"));
    EXPECT_EQ(r.last(), "status=verification-failure reason=24 check(s) failed, first: swap.z_in_y.0001");
}

TEST(Cli, VerifyTablesAnnotatesTwoQubitTable) {
    auto r = call({"verify", "tables"});
    EXPECT_EQ(r.code, kExitVerification);
    EXPECT_TRUE(r.has_line("note tables: printed A2 preimage for l=0 is {00,01,02,03}, derived {00,11,22,33}"));
    EXPECT_EQ(r.last(), "status=verification-failure reason=6 check(s) failed, first: tables.a3.row1.permutation");
}

TEST(Cli, VerifyAllComposes) {
    auto r = call({"verify", "all"});
    EXPECT_EQ(r.code, kExitVerification);
    EXPECT_TRUE(r.has_line("suite=hadamard checks=12 failed=0"));
    EXPECT_TRUE(r.has_line("suite=swap checks=34 failed=24"));
    EXPECT_TRUE(r.has_line("suite=tables checks=40 failed=6"));
    EXPECT_EQ(r.last(), "status=verification-failure reason=30 check(s) failed, first: swap.z_in_y.0001");
}

TEST(Cli, RunQsdcExample) {
    auto r =
        call({"run", "qsdc", "--msg", "1302", "--n", "8", "--J", "1,3,5,7", "--i", "0", "--k", "0", "--seed", "7"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_TRUE(r.has_line("decoded=1302"));
    EXPECT_EQ(r.last(), "status=ok");
}

TEST(Cli, RunKeyAgreementExample) {
    auto r = call({"run", "keyagree", "--m", "50", "--seed", "1"});
    EXPECT_EQ(r.code, kExitOk);
    std::string a, b;
    int blocks = 0;
    for (const auto& l : r.lines()) {
        if (l.starts_with("alice_key=")) a = l.substr(10);
        if (l.starts_with("bob_key=")) b = l.substr(8);
        blocks += l.starts_with("block=");
    }
    EXPECT_EQ(blocks, 50);
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, b);
}

TEST(Cli, RunControlledWithheld) {
    auto r = call({"run", "controlled", "--msg-a", "12", "--msg-b", "03", "--n", "4", "--J", "1,2", "--ell", "3",
                   "--grant", "false", "--seed", "2"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_TRUE(r.has_line("no authorization; no message exchanged"));
}

TEST(Cli, RunOtherProtocols) {
    auto m = call({"run", "multi", "--bits-a", "10", "--bit-b", "0", "--bit-c", "0", "--ell", "0"});
    EXPECT_EQ(m.code, kExitOk);
    EXPECT_TRUE(m.has_line("outcome=7"));
    EXPECT_TRUE(m.has_line("view=bob alice=10 bob=0 claire=0"));
    auto b = call({"run", "bidi", "--msg-a", "0123", "--msg-b", "3210", "--k", "2"});
    EXPECT_EQ(b.code, kExitOk);
    EXPECT_TRUE(b.has_line("alice_decoded=3210"));
    EXPECT_TRUE(b.has_line("bob_decoded=0123"));
    auto c = call({"run", "controlled", "--msg-a", "12", "--msg-b", "03", "--n", "5", "--J", "0,4", "--ell", "6"});
    EXPECT_EQ(c.code, kExitOk);
    EXPECT_TRUE(c.has_line("alice_decoded=03"));
}

TEST(Cli, UsageErrors) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"run", "qsdc", "--ell", "2"},
             {"run", "qsdc", "--msg", "19"},
             {"run", "qsdc", "--msg", "12", "--n", "1"},
             {"run", "qsdc", "--k", "4"},
             {"run", "bidi", "--msg-a", "1", "--msg-b", "12"},
             {"run", "multi", "--bits-a", "2"},
             {"run", "keyagree", "--m", "0"},
             {"run", "teleport"},
             {"verify", "nothing"},
             {"info", "--bogus"},
         }) {
        auto r = call(args);
        EXPECT_EQ(r.code, kExitUsage) << r.out;
        EXPECT_TRUE(r.last().starts_with("status=usage-error reason=")) << r.out;
    }
}

TEST(Cli, TraceOutIsDeterministic) {
    auto dir = std::filesystem::temp_directory_path() / "entswap_cli_test";
    std::filesystem::create_directories(dir);
    auto p1 = dir / "a.jsonl", p2 = dir / "b.jsonl";
    std::vector<std::string> base = {"run", "controlled", "--msg-a", "3102", "--msg-b", "2211", "--n",        "7",
                                     "--J", "0,2,3,6",    "--ell",   "5",    "--seed",  "99",   "--trace-out"};
    auto args1 = base, args2 = base;
    args1.push_back(p1.string());
    args2.push_back(p2.string());
    auto r1 = call(args1), r2 = call(args2);
    EXPECT_EQ(r1.code, kExitOk);
    EXPECT_EQ(r1.out, r2.out);
    auto t1 = slurp(p1);
    EXPECT_FALSE(t1.empty());
    EXPECT_EQ(t1, slurp(p2));
    EXPECT_NE(t1.find(R"({"event":"prepare","step":0,"actor":"claire","group":0,"position":0,)"), std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST(Cli, TraceOutUnwritable) {
    auto r = call({"run", "keyagree", "--m", "2", "--trace-out", "/nonexistent-dir/x.jsonl"});
    EXPECT_EQ(r.code, kExitUsage);
}

TEST(Cli, SeedFromEnvironment) {
    auto explicit_seed = call({"run", "keyagree", "--m", "20", "--seed", "31"});
    ::setenv(kSeedEnv, "31", 1);
    auto from_env = call({"run", "keyagree", "--m", "20"});
    ::setenv(kSeedEnv, "oops", 1);
    auto bad = call({"run", "keyagree", "--m", "20"});
    ::unsetenv(kSeedEnv);
    EXPECT_EQ(explicit_seed.out, from_env.out);
    EXPECT_EQ(bad.code, kExitUsage);
    auto defaulted = call({"run", "keyagree", "--m", "20"});
    EXPECT_TRUE(defaulted.has_line("seed=1"));
}

TEST(Cli, InfoAndHelp) {
    EXPECT_EQ(call({"info"}).code, kExitOk);
    auto h = call({"--help"});
    EXPECT_EQ(h.code, kExitOk);
    EXPECT_NE(h.out.find("tables"), std::string::npos);
}

}  // namespace
}  // namespace entswap::cli
