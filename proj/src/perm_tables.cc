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

#include "entswap/perm_tables.h"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>

namespace entswap {

namespace {

// Published correspondence tables, transcribed verbatim. Row order as printed.
struct PrintedRow {
    int label;
    std::vector<int> permutation;
    std::vector<std::string> words;
};

const std::vector<PrintedRow>& printed_a2() {
    static const std::vector<PrintedRow> rows = {
        {0, {0, 1, 2, 3}, {"00", "01", "02", "03"}},
        {1, {2, 3, 0, 1}, {"01", "00", "03", "02"}},
        {2, {3, 2, 1, 0}, {"02", "03", "00", "01"}},
        {3, {1, 0, 3, 2}, {"03", "02", "01", "00"}},
    };
    return rows;
}

const std::vector<PrintedRow>& printed_a3() {
    static const std::vector<PrintedRow> rows = {
        {0, {0, 1, 2, 3, 4, 5, 6, 7}, {"000", "033", "111", "122", "212", "221", "303", "330"}},
        {1, {2, 3, 0, 1, 6, 7, 4, 5}, {"003", "030", "112", "121", "211", "222", "300", "333"}},
        {2, {3, 2, 1, 0, 7, 6, 5, 4}, {"001", "032", "110", "123", "213", "220", "302", "331"}},
        {3, {1, 0, 3, 2, 5, 4, 7, 6}, {"002", "031", "113", "120", "210", "223", "301", "332"}},
        {4, {4, 5, 6, 7, 0, 1, 2, 3}, {"010", "023", "101", "132", "202", "231", "313", "320"}},
        {5, {6, 7, 4, 5, 2, 3, 0, 1}, {"013", "020", "102", "131", "201", "232", "310", "323"}},
        {6, {7, 6, 5, 4, 3, 2, 1, 0}, {"011", "022", "100", "133", "203", "230", "312", "321"}},
        {7, {5, 4, 7, 6, 1, 0, 3, 2}, {"012", "021", "103", "130", "200", "233", "311", "322"}},
    };
    return rows;
}

const std::vector<PrintedRow>& printed_s() {
    static const std::vector<PrintedRow> rows = {
        {0, {}, {"000", "122"}}, {3, {}, {"002", "120"}}, {5, {}, {"020", "102"}}, {6, {}, {"022", "100"}},
        {7, {}, {"200", "322"}}, {4, {}, {"202", "320"}}, {2, {}, {"220", "302"}}, {1, {}, {"222", "300"}},
    };
    return rows;
}

std::set<std::string> word_set(const std::vector<PauliWord>& words) {
    std::set<std::string> out;
    for (const auto& w : words) {
        out.insert(w.to_string());
    }
    return out;
}

std::string join(const std::set<std::string>& words) {
    std::string out = "{";
    for (const auto& w : words) {
        out += (out.size() > 1 ? "," : "") + w;
    }
    return out + "}";
}

using Labeler = std::function<int(const BasisPermutation&, const std::vector<PauliWord>&)>;

ActionTable build_table(int arity, const EntangledBasis& basis, const Labeler& labeler) {
    std::vector<ActionEntry> entries;
    std::map<BasisPermutation, std::vector<PauliWord>> groups;
    for (const auto& word : PauliWord::all(arity)) {
        entries.push_back(derive_action(word, basis));
        groups[entries.back().permutation].push_back(word);
    }
    std::vector<PermutationClass> classes;
    for (auto& [perm, words] : groups) {
        int label = labeler(perm, words);
        classes.push_back({label, perm, std::move(words)});
    }
    return ActionTable(arity, std::move(entries), std::move(classes));
}

bool image_is_group_of_involutions(const ActionTable& table) {
    std::set<BasisPermutation> image;
    for (const auto& c : table.classes()) {
        image.insert(c.permutation);
    }
    for (const auto& a : image) {
        if (!a.after(a).is_identity()) {
            return false;
        }
        for (const auto& b : image) {
            if (!image.contains(a.after(b))) {
                return false;
            }
        }
    }
    return true;
}

// For every assignment of the positions in `fixed`, the varying position must
// map injectively to labels.
bool injective_in_position(const ActionTable& table, int varying) {
    std::map<std::string, std::set<int>> seen;
    for (const auto& e : table.entries()) {
        std::string key = e.word.to_string();
        key[varying] = '*';
        int label = table.label_of(e.word);
        if (!seen[key].insert(label).second) {
            return false;
        }
    }
    return true;
}

}  // namespace

BasisPermutation::BasisPermutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v]) {
            throw std::invalid_argument("basis permutation is not a bijection");
        }
        seen[v] = true;
    }
}

BasisPermutation BasisPermutation::identity(int size) {
    std::vector<int> images(size);
    for (int k = 0; k < size; ++k) {
        images[k] = k;
    }
    return BasisPermutation(std::move(images));
}

BasisPermutation BasisPermutation::after(const BasisPermutation& other) const {
    if (other.size() != size()) {
        throw std::invalid_argument("composing permutations of different sizes");
    }
    std::vector<int> out(images_.size());
    for (std::size_t k = 0; k < images_.size(); ++k) {
        out[k] = images_[other.images_[k]];
    }
    return BasisPermutation(std::move(out));
}

bool BasisPermutation::is_identity() const {
    for (std::size_t k = 0; k < images_.size(); ++k) {
        if (images_[k] != static_cast<int>(k)) {
            return false;
        }
    }
    return true;
}

std::string BasisPermutation::to_string() const {
    std::string out = "[";
    for (std::size_t k = 0; k < images_.size(); ++k) {
        out += (k ? " " : "") + std::to_string(images_[k]);
    }
    return out + "]";
}

ActionTable::ActionTable(int arity, std::vector<ActionEntry> entries, std::vector<PermutationClass> classes)
    : arity_(arity), entries_(std::move(entries)), classes_(std::move(classes)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const ActionEntry& a, const ActionEntry& b) { return a.word < b.word; });
    std::sort(classes_.begin(), classes_.end(),
              [](const PermutationClass& a, const PermutationClass& b) { return a.label < b.label; });
    for (auto& c : classes_) {
        std::sort(c.preimage.begin(), c.preimage.end());
    }
    for (std::size_t k = 1; k < classes_.size(); ++k) {
        if (classes_[k].label == classes_[k - 1].label) {
            throw std::logic_error("duplicate permutation label " + std::to_string(classes_[k].label));
        }
    }
}

const ActionEntry& ActionTable::entry(const PauliWord& word) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), word,
                               [](const ActionEntry& e, const PauliWord& w) { return e.word < w; });
    if (it == entries_.end() || it->word != word) {
        throw std::out_of_range("word " + word.to_string() + " not in action table");
    }
    return *it;
}

const PermutationClass& ActionTable::by_label(int label) const {
    for (const auto& c : classes_) {
        if (c.label == label) {
            return c;
        }
    }
    throw std::out_of_range("no permutation labelled " + std::to_string(label));
}

int ActionTable::label_of(const PauliWord& word) const {
    const auto& perm = entry(word).permutation;
    for (const auto& c : classes_) {
        if (c.permutation == perm) {
            return c.label;
        }
    }
    throw std::logic_error("word " + word.to_string() + " has no permutation class");
}

ActionEntry derive_action(const PauliWord& word, const EntangledBasis& basis) {
    if (static_cast<int>(word.size()) != basis.host_qubits()) {
        throw std::invalid_argument("word " + word.to_string() + " does not match the basis register");
    }
    std::vector<StateVector> states;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        states.push_back(basis.host_state(k));
    }
    std::vector<int> images;
    std::vector<Amplitude> phases;
    for (std::size_t k = 0; k < states.size(); ++k) {
        StateVector image = apply_word(states[k], word);
        bool found = false;
        for (std::size_t m = 0; m < states.size() && !found; ++m) {
            if (auto phase = equal_up_to_phase(image, states[m])) {
                images.push_back(static_cast<int>(m));
                phases.push_back(*phase);
                found = true;
            }
        }
        if (!found) {
            throw std::logic_error("image of basis element " + std::to_string(k) + " under " + word.to_string() +
                                   " is not a basis element up to phase");
        }
    }
    return {word, BasisPermutation(std::move(images)), std::move(phases)};
}

ActionTable build_a2() {
    return build_table(2, bell_basis_on({0, 1}, 2), [](const BasisPermutation&, const std::vector<PauliWord>& words) {
        for (const auto& w : words) {
            if (w[0].value() == 0) {
                return w[1].value();
            }
        }
        throw std::logic_error("A2 class without a word of the form 0j");
    });
}

ActionTable build_a3() {
    return build_table(3, ghz_basis(),
                       [](const BasisPermutation& perm, const std::vector<PauliWord>&) { return perm(0); });
}

ActionTable restrict_to_s(const ActionTable& a3) {
    if (a3.arity() != 3) {
        throw std::invalid_argument("restriction to S needs the arity-3 table");
    }
    auto in_s = [](const PauliWord& w) {
        return (w[1].value() == 0 || w[1].value() == 2) && (w[2].value() == 0 || w[2].value() == 2);
    };
    std::vector<ActionEntry> entries;
    for (const auto& e : a3.entries()) {
        if (in_s(e.word)) {
            entries.push_back(e);
        }
    }
    std::vector<PermutationClass> classes;
    for (const auto& c : a3.classes()) {
        PermutationClass restricted{c.label, c.permutation, {}};
        for (const auto& w : c.preimage) {
            if (in_s(w)) {
                restricted.preimage.push_back(w);
            }
        }
        classes.push_back(std::move(restricted));
    }
    return ActionTable(3, std::move(entries), std::move(classes));
}

PauliWord decode_partner(const ActionTable& table, int initial, int outcome, const PartialWord& known) {
    if (static_cast<int>(known.size()) != table.arity()) {
        throw std::invalid_argument("partial word length does not match the table arity");
    }
    std::vector<const PauliWord*> candidates;
    for (const auto& e : table.entries()) {
        bool consistent = true;
        for (std::size_t p = 0; p < known.size() && consistent; ++p) {
            consistent = !known[p] || *known[p] == e.word[p];
        }
        if (consistent && e.permutation(initial) == outcome) {
            candidates.push_back(&e.word);
        }
    }
    auto describe = [&] {
        std::string pattern;
        for (const auto& k : known) {
            pattern += k ? k->symbol() : '?';
        }
        return "initial=" + std::to_string(initial) + " outcome=" + std::to_string(outcome) + " known=" + pattern;
    };
    if (candidates.empty()) {
        throw DecodeError(DecodeError::Kind::kNoCandidate, "no word consistent with " + describe());
    }
    if (candidates.size() > 1) {
        throw DecodeError(DecodeError::Kind::kAmbiguous,
                          std::to_string(candidates.size()) + " words consistent with " + describe());
    }
    return *candidates.front();
}

Report verify_tables() {
    Report report{"tables", {}, {}};

    const ActionTable a2 = build_a2();
    report.add("a2.image_size", a2.classes().size() == 4, "size=" + std::to_string(a2.classes().size()));
    bool sizes_ok = true;
    for (const auto& c : a2.classes()) {
        sizes_ok = sizes_ok && c.preimage.size() == 4;
    }
    report.add("a2.preimage_sizes", sizes_ok);
    for (const auto& row : printed_a2()) {
        const auto& derived = a2.by_label(row.label).permutation;
        report.add("a2.row" + std::to_string(row.label) + ".permutation", derived == BasisPermutation(row.permutation),
                   "derived=" + derived.to_string());
    }
    // A2(σ_{i β_a(i)}) = β_b for (a, b) in {(0,0), (3,1), (1,2), (2,3)}, every i.
    bool relations_ok = true;
    constexpr std::array<std::pair<int, int>, 4> kRelations = {{{0, 0}, {3, 1}, {1, 2}, {2, 3}}};
    for (auto [source, target] : kRelations) {
        const auto& beta = a2.by_label(source).permutation;
        for (int i = 0; i < 4; ++i) {
            PauliWord w({PauliIndex(i), PauliIndex(beta(i))});
            relations_ok = relations_ok && a2.label_of(w) == target;
        }
    }
    report.add("a2.summary_relations", relations_ok);
    report.add("a2.image_is_klein_group", image_is_group_of_involutions(a2));
    report.add("a2.fixed_first_index_injective", injective_in_position(a2, 1));
    report.add("a2.fixed_second_index_injective", injective_in_position(a2, 0));
    for (const auto& row : printed_a2()) {
        std::set<std::string> printed(row.words.begin(), row.words.end());
        auto derived = word_set(a2.by_label(row.label).preimage);
        if (printed != derived) {
            report.notes.push_back("printed A2 preimage for l=" + std::to_string(row.label) + " is " + join(printed) +
                                   ", derived " + join(derived));
        }
    }

    const ActionTable a3 = build_a3();
    report.add("a3.image_size", a3.classes().size() == 8, "size=" + std::to_string(a3.classes().size()));
    sizes_ok = true;
    for (const auto& c : a3.classes()) {
        sizes_ok = sizes_ok && c.preimage.size() == 8;
    }
    report.add("a3.preimage_sizes", sizes_ok);
    for (const auto& row : printed_a3()) {
        const auto& derived = a3.by_label(row.label);
        std::set<std::string> printed(row.words.begin(), row.words.end());
        auto words = word_set(derived.preimage);
        report.add("a3.row" + std::to_string(row.label) + ".preimage", printed == words, "derived=" + join(words));
        report.add(
            "a3.row" + std::to_string(row.label) + ".permutation",
            derived.permutation == BasisPermutation(row.permutation),
            "derived=" + derived.permutation.to_string() + " printed=" + BasisPermutation(row.permutation).to_string());
    }
    report.add("a3.image_closed_involutions", image_is_group_of_involutions(a3));
    report.add("a3.fixed_first_two_indices_injective", injective_in_position(a3, 2));

    const ActionTable s = restrict_to_s(a3);
    report.add("s.size", s.entries().size() == 16, "entries=" + std::to_string(s.entries().size()));
    for (const auto& row : printed_s()) {
        std::set<std::string> printed(row.words.begin(), row.words.end());
        auto derived = word_set(s.by_label(row.label).preimage);
        report.add("s.row" + std::to_string(row.label), printed == derived, "derived=" + join(derived));
    }
    bool unique = true;
    for (const auto& c : s.classes()) {
        for (int p = 0; p < 3; ++p) {
            std::set<int> values;
            for (const auto& w : c.preimage) {
                values.insert(w[p].value());
            }
            unique = unique && values.size() == c.preimage.size();
        }
    }
    report.add("s.one_index_determines_word", unique);
    return report;
}

}  // namespace entswap
