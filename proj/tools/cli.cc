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

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "entswap/bases.h"
#include "entswap/perm_tables.h"
#include "entswap/protocols.h"
#include "entswap/swap_measure.h"

namespace entswap::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

struct Failure {
    int code;
    std::string reason;
};

[[noreturn]] void usage(const std::string& reason) { throw Failure{kExitUsage, reason}; }

std::string join(const std::vector<std::size_t>& values) {
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        out += (k ? "," : "") + std::to_string(values[k]);
    }
    return out;
}

std::string digits(const std::vector<int>& values) { return bits_to_string(values); }

std::uint64_t default_seed() {
    const char* env = std::getenv(kSeedEnv);
    if (env == nullptr || *env == '\0') {
        return kDefaultSeed;
    }
    std::string_view text(env);
    std::uint64_t seed = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
    if (ec != std::errc() || end != text.data() + text.size()) {
        usage(std::string(kSeedEnv) + " is not a decimal 64-bit integer: " + env);
    }
    return seed;
}

// ---- tables ----

void cmd_tables(const std::string& which, const std::string& format, std::ostream& out) {
    ActionTable table = which == "a2" ? build_a2() : which == "a3" ? build_a3() : restrict_to_s(build_a3());
    const char* key = which == "a2" ? "ell" : "mu";
    if (format == "records") {
        for (const auto& c : table.classes()) {
            nlohmann::ordered_json rec;
            rec[key] = c.label;
            rec["images"] = c.permutation.images();
            auto& words = rec["preimage"] = nlohmann::ordered_json::array();
            for (const auto& w : c.preimage) {
                words.push_back(w.to_string());
            }
            out << rec.dump() << '\n';
        }
        return;
    }
    out << "table=" << which << " words=" << table.entries().size() << " permutations=" << table.classes().size()
        << '\n';
    for (const auto& c : table.classes()) {
        out << key << '=' << c.label << ' ' << c.permutation.to_string() << ' ';
        for (std::size_t k = 0; k < c.preimage.size(); ++k) {
            out << (k ? "," : "") << c.preimage[k].to_string();
        }
        out << '\n';
    }
}

// ---- verify ----

void cmd_verify(const std::string& suite, bool verbose, std::ostream& out) {
    std::vector<Report> reports;
    if (suite == "hadamard" || suite == "all") {
        reports.push_back(verify_hadamard_expansions());
    }
    if (suite == "swap" || suite == "all") {
        reports.push_back(verify_swap_identities());
    }
    if (suite == "tables" || suite == "all") {
        reports.push_back(verify_tables());
    }
    std::vector<std::string> failed;
    for (const auto& r : reports) {
        out << "suite=" << r.suite << " checks=" << r.checks.size() << " failed=" << r.failures() << '\n';
        for (const auto& c : r.checks) {
            if (!c.passed) {
                failed.push_back(r.suite + "." + c.name);
            }
            if (!c.passed || verbose) {
                out << (c.passed ? "PASS " : "FAIL ") << r.suite << '.' << c.name;
                if (!c.detail.empty()) {
                    out << ' ' << c.detail;
                }
                out << '\n';
            }
        }
        for (const auto& n : r.notes) {
            out << "note " << r.suite << ": " << n << '\n';
        }
    }
    if (!failed.empty()) {
        throw Failure{kExitVerification, std::to_string(failed.size()) + " check(s) failed, first: " + failed.front()};
    }
}

// ---- run ----

struct RunOptions {
    std::string protocol;
    std::string msg, msg_a, msg_b, positions, bits_a = "00", trace_out;
    std::size_t n = 0;
    int i = 0, k = 0, ell = 0, bit_b = 0, bit_c = 0, m = 200;
    bool grant = true;
    std::uint64_t seed = kDefaultSeed;
    std::map<std::string, CLI::Option*> given;

    bool has(const std::string& name) const { return given.at(name)->count() > 0; }
};

const std::map<std::string, std::set<std::string>>& allowed_options() {
    static const std::map<std::string, std::set<std::string>> allowed = {
        {"qsdc", {"msg", "n", "J", "i", "k"}},
        {"bidi", {"msg-a", "msg-b", "k"}},
        {"multi", {"bits-a", "bit-b", "bit-c", "ell"}},
        {"controlled", {"msg-a", "msg-b", "n", "J", "ell", "grant"}},
        {"keyagree", {"m"}},
    };
    return allowed;
}

PadSpec pad_from(const RunOptions& o, std::size_t m) {
    std::size_t n = o.has("n") ? o.n : m;
    if (o.has("J")) {
        return PadSpec::parse(n, o.positions);
    }
    std::vector<std::size_t> first(m);
    for (std::size_t t = 0; t < m; ++t) {
        first[t] = t;
    }
    return PadSpec(n, first);
}

void write_trace(const RunOptions& o, const Transcript& t) {
    if (o.trace_out.empty()) {
        return;
    }
    std::ofstream file(o.trace_out, std::ios::binary);
    file << t.to_jsonl();
    if (!file) {
        usage("cannot write transcript to " + o.trace_out);
    }
}

void protocol_failure(const std::string& reason) { throw Failure{kExitProtocol, reason}; }

void run_qsdc_cmd(const RunOptions& o, std::ostream& out) {
    MessageWord msg = MessageWord::parse(o.msg);
    PadSpec pad = pad_from(o, msg.size());
    auto r = run_qsdc(msg, PauliIndex(o.i), o.k, pad, o.seed);
    write_trace(o, r.transcript);
    out << "n=" << pad.length() << " J=" << join(pad.positions()) << " i=" << o.i << " k=" << o.k << '\n';
    out << "sent=" << msg.to_string() << '\n';
    out << "padded=" << r.padded_sent.to_string() << '\n';
    out << "outcomes=" << digits(r.outcomes) << '\n';
    out << "decoded=" << r.decoded.to_string() << '\n';
    if (r.decoded != msg) {
        protocol_failure("decoded message " + r.decoded.to_string() + " differs from " + msg.to_string());
    }
}

void run_bidi_cmd(const RunOptions& o, std::ostream& out) {
    MessageWord a = MessageWord::parse(o.msg_a);
    MessageWord b = MessageWord::parse(o.msg_b);
    auto r = run_bidirectional(a, b, o.k, o.seed);
    write_trace(o, r.transcript);
    out << "k=" << o.k << '\n';
    out << "outcomes=" << digits(r.outcomes) << '\n';
    out << "alice_decoded=" << r.alice_decoded.to_string() << '\n';
    out << "bob_decoded=" << r.bob_decoded.to_string() << '\n';
    if (r.alice_decoded != b || r.bob_decoded != a) {
        protocol_failure("bidirectional exchange did not recover both messages");
    }
}

void run_multi_cmd(const RunOptions& o, std::ostream& out) {
    if (o.bits_a.size() != 2 || o.bits_a.find_first_not_of("01") != std::string::npos) {
        usage("--bits-a must be two bits, got '" + o.bits_a + "'");
    }
    const int alice = ((o.bits_a[0] - '0') << 1) | (o.bits_a[1] - '0');
    auto r = run_multidirectional(alice, o.bit_b, o.bit_c, o.ell, o.seed);
    write_trace(o, r.transcript);
    out << "ell=" << o.ell << '\n';
    out << "outcome=" << r.outcome << '\n';
    bool ok = r.reference_untouched;
    for (const auto& v : r.views) {
        out << "view=" << party_name(v.party) << " alice=" << (v.alice_index >> 1) << (v.alice_index & 1)
            << " bob=" << v.bob_bit << " claire=" << v.claire_bit << '\n';
        ok = ok && v.alice_index == alice && v.bob_bit == o.bit_b && v.claire_bit == o.bit_c;
    }
    out << "reference_untouched=" << (r.reference_untouched ? "true" : "false") << '\n';
    if (!ok) {
        protocol_failure("a party decoded the wrong inputs or the reference copy changed");
    }
}

void run_controlled_cmd(const RunOptions& o, std::ostream& out) {
    MessageWord a = MessageWord::parse(o.msg_a);
    MessageWord b = MessageWord::parse(o.msg_b);
    PadSpec pad = pad_from(o, a.size());
    auto r = run_controlled(a, b, o.ell, pad, o.grant, o.seed);
    write_trace(o, r.transcript);
    out << "n=" << pad.length() << " J=" << join(pad.positions()) << " ell=" << o.ell << '\n';
    if (!o.grant) {
        bool measured = false;
        for (const auto& e : r.transcript.events()) {
            measured = measured || e.event == "measurement";
        }
        out << "no authorization; no message exchanged\n";
        if (measured || r.alice_decoded || r.bob_decoded || !r.outcomes.empty()) {
            protocol_failure("withheld run produced measurements or outputs");
        }
        return;
    }
    out << "outcomes=" << digits(r.outcomes) << '\n';
    out << "alice_decoded=" << r.alice_decoded->to_string() << '\n';
    out << "bob_decoded=" << r.bob_decoded->to_string() << '\n';
    if (*r.alice_decoded != b || *r.bob_decoded != a) {
        protocol_failure("controlled exchange did not recover both messages");
    }
}

void run_keyagree_cmd(const RunOptions& o, std::ostream& out) {
    auto r = run_key_agreement(o.m, o.seed);
    write_trace(o, r.transcript);
    std::size_t offset = 0;
    for (std::size_t n = 0; n < r.stats.blocks.size(); ++n) {
        const auto& b = r.stats.blocks[n];
        const std::size_t width = b.correlated() ? 4 : 2;
        std::vector<int> bits(r.bob_key.begin() + offset, r.bob_key.begin() + offset + width);
        offset += width;
        out << "block=" << n << " initial=" << b.initial.to_string() << " alice=A" << b.alice_action << " bob=B"
            << b.bob_action << " outcomes=" << b.first_outcome << ',' << b.second_outcome
            << " kind=" << (b.correlated() ? "correlated" : "anticorrelated") << " bits=" << digits(bits) << '\n';
    }
    const auto& off = r.stats.anticorrelated_offsets;
    out << "correlated=" << r.stats.correlated << " anticorrelated=" << r.stats.anticorrelated << '\n';
    out << "anticorrelated_offsets=" << off[0] << ',' << off[1] << ',' << off[2] << ',' << off[3] << '\n';
    out << "key_length=" << r.alice_key.size() << '\n';
    out << "alice_key=" << digits(r.alice_key) << '\n';
    out << "bob_key=" << digits(r.bob_key) << '\n';
    if (r.alice_key != r.bob_key) {
        protocol_failure("keys differ");
    }
}

void cmd_run(const RunOptions& o, std::ostream& out) {
    const auto& allowed = allowed_options().at(o.protocol);
    for (const auto& [name, opt] : o.given) {
        if (opt->count() > 0 && !allowed.contains(name)) {
            usage("--" + name + " is not an option of 'run " + o.protocol + "'");
        }
    }
    out << "protocol=" << o.protocol << '\n';
    out << "seed=" << o.seed << '\n';
    if (o.protocol == "qsdc") {
        run_qsdc_cmd(o, out);
    } else if (o.protocol == "bidi") {
        run_bidi_cmd(o, out);
    } else if (o.protocol == "multi") {
        run_multi_cmd(o, out);
    } else if (o.protocol == "controlled") {
        run_controlled_cmd(o, out);
    } else {
        run_keyagree_cmd(o, out);
    }
}

void cmd_info(std::ostream& out) {
    out << "entswap 1.0.0\n"
        << "qubits: position 0 is the most significant bit of an amplitude index\n"
        << "pauli: 0=I 1=X 2=Y 3=Z\n"
        << "bell: b_ij at index 2i+j\n"
        << "ghz: b_e1e2e3 at index 4e1+2e2+e3\n"
        << "tables: a2 (16 words), a3 (64 words), s (16 words)\n"
        << "protocols: qsdc bidi multi controlled keyagree\n"
        << "default seed: " << kDefaultSeed << " (override with " << kSeedEnv << ")\n";
}

std::string one_line(std::string text) {
    for (char& c : text) {
        if (c == '\n' || c == '\r') {
            c = ' ';
        }
    }
    return text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"Bell/GHZ Pauli-action tables, swapping identities and protocol simulations", "entswap"};
    app.require_subcommand(1, 1);

    std::string which, format = "text", suite;
    bool verbose = false;
    auto* tables = app.add_subcommand("tables", "print a derived action table");
    tables->add_option("which", which, "a2, a3 or s")->required()->check(CLI::IsMember({"a2", "a3", "s"}));
    tables->add_option("--format", format, "text or records")->check(CLI::IsMember({"text", "records"}));

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suite", suite, "hadamard, swap, tables or all")
        ->required()
        ->check(CLI::IsMember({"hadamard", "swap", "tables", "all"}));
    verify->add_flag("--verbose", verbose, "list passing checks too");

    RunOptions o;
    auto* runner = app.add_subcommand("run", "simulate a protocol");
    runner->add_option("protocol", o.protocol, "qsdc, bidi, multi, controlled or keyagree")
        ->required()
        ->check(CLI::IsMember({"qsdc", "bidi", "multi", "controlled", "keyagree"}));
    o.given["msg"] = runner->add_option("--msg", o.msg, "message as radix-4 digits");
    o.given["msg-a"] = runner->add_option("--msg-a", o.msg_a, "Alice's message (radix-4 digits)");
    o.given["msg-b"] = runner->add_option("--msg-b", o.msg_b, "Bob's message (radix-4 digits)");
    o.given["n"] = runner->add_option("--n", o.n, "padded length");
    o.given["J"] = runner->add_option("--J", o.positions, "comma-separated message positions");
    o.given["i"] = runner->add_option("--i", o.i, "Bob's fixed Pauli index")->check(CLI::Range(0, 3));
    o.given["k"] = runner->add_option("--k", o.k, "Bell index")->check(CLI::Range(0, 3));
    o.given["ell"] = runner->add_option("--ell", o.ell, "GHZ index")->check(CLI::Range(0, 7));
    o.given["bits-a"] = runner->add_option("--bits-a", o.bits_a, "Alice's two bits");
    o.given["bit-b"] = runner->add_option("--bit-b", o.bit_b, "Bob's bit")->check(CLI::Range(0, 1));
    o.given["bit-c"] = runner->add_option("--bit-c", o.bit_c, "Claire's bit")->check(CLI::Range(0, 1));
    o.given["grant"] = runner->add_option("--grant", o.grant, "whether Claire authorizes (true/false)");
    o.given["m"] = runner->add_option("--m", o.m, "number of key blocks")->check(CLI::PositiveNumber);
    auto* seed_opt = runner->add_option("--seed", o.seed, "decimal 64-bit seed");
    runner->add_option("--trace-out", o.trace_out, "write the JSON Lines transcript here");

    app.add_subcommand("info", "print conventions");

    std::vector<const char*> argv = {"entswap"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::CallForHelp& e) {
            out << app.help();
            return kExitOk;
        } catch (const CLI::ParseError& e) {
            usage(e.what());
        }
        if (*tables) {
            cmd_tables(which, format, out);
            return kExitOk;
        }
        if (*verify) {
            cmd_verify(suite, verbose, out);
        } else if (*runner) {
            if (seed_opt->count() == 0) {
                o.seed = default_seed();
            }
            cmd_run(o, out);
        } else {
            cmd_info(out);
        }
        out << "status=ok\n";
        return kExitOk;
    } catch (const Failure& f) {
        static const std::map<int, std::string> kind = {{kExitUsage, "usage-error"},
                                                        {kExitVerification, "verification-failure"},
                                                        {kExitProtocol, "protocol-failure"}};
        out << "status=" << kind.at(f.code) << " reason=" << one_line(f.reason) << '\n';
        return f.code;
    } catch (const std::invalid_argument& e) {
        out << "status=usage-error reason=" << one_line(e.what()) << '\n';
        return kExitUsage;
    } catch (const ProtocolError& e) {
        out << "status=protocol-failure reason=" << one_line(e.what()) << '\n';
        return kExitProtocol;
    } catch (const StateMachineError& e) {
        out << "status=protocol-failure reason=" << one_line(e.what()) << '\n';
        return kExitProtocol;
    }
}

}  // namespace entswap::cli
