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

#include "entswap/bases.h"

#include <array>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace entswap {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void require_bit(int b, const char* what) {
    if (b != 0 && b != 1) {
        throw std::invalid_argument(std::string(what) + " label must be a bit");
    }
}

// (|0 x> + sign |1 x̄>)/√2 where x is the tail bit string of length `tail`.
StateVector cat_state(int tail, std::size_t tail_bits, int sign_bit) {
    const std::size_t dim = std::size_t{1} << (tail + 1);
    const std::size_t tail_mask = (std::size_t{1} << tail) - 1;
    std::vector<Amplitude> amps(dim);
    amps[tail_bits] = kInvSqrt2;
    amps[(std::size_t{1} << tail) | (~tail_bits & tail_mask)] = sign_bit ? -kInvSqrt2 : kInvSqrt2;
    return StateVector(std::move(amps));
}

// Published Hadamard-basis coefficients, in units of the listed prefactor and
// ordered by the radix value of the Hadamard labels.
struct GoldenExpansion {
    const char* state;
    double scale;
    std::array<int, 8> coefficients;
};

constexpr std::array<GoldenExpansion, 4> kBellGolden = {{
    {"b_00", kInvSqrt2, {1, 0, 0, 1}},   // h0h0 + h1h1
    {"b_01", kInvSqrt2, {0, 1, 1, 0}},   // h1h0 + h0h1
    {"b_10", kInvSqrt2, {1, 0, 0, -1}},  // h0h0 - h1h1
    {"b_11", kInvSqrt2, {0, -1, 1, 0}},  // h1h0 - h0h1
}};

constexpr std::array<GoldenExpansion, 8> kGhzGolden = {{
    {"b_000", 0.5, {1, 0, 0, 1, 0, 1, 1, 0}},
    {"b_001", 0.5, {0, 1, 1, 0, 1, 0, 0, 1}},
    {"b_010", 0.5, {1, 0, 0, -1, 0, -1, 1, 0}},
    {"b_011", 0.5, {0, -1, 1, 0, 1, 0, 0, -1}},
    {"b_100", 0.5, {1, 0, 0, -1, 0, 1, -1, 0}},
    {"b_101", 0.5, {0, 1, -1, 0, 1, 0, 0, -1}},
    {"b_110", 0.5, {1, 0, 0, 1, 0, -1, -1, 0}},
    {"b_111", 0.5, {0, -1, -1, 0, 1, 0, 0, 1}},
}};

void check_expansion(Report& report, const GoldenExpansion& golden, const StateVector& state,
                     const std::vector<StateVector>& hadamard) {
    auto coefficients = expand_in_basis(state, hadamard);
    double max_dev = 0;
    for (std::size_t k = 0; k < coefficients.size(); ++k) {
        double expected = golden.scale * golden.coefficients[k];
        max_dev = std::max(max_dev, std::abs(coefficients[k] - expected));
    }
    std::ostringstream detail;
    detail << "max_dev=" << std::scientific << std::setprecision(3) << max_dev;
    report.add(golden.state, max_dev < kEps, detail.str());
}

}  // namespace

StateVector hadamard_state(int h) {
    require_bit(h, "Hadamard");
    return StateVector({kInvSqrt2, h ? -kInvSqrt2 : kInvSqrt2});
}

StateVector bell_state(int i, int j) {
    require_bit(i, "Bell");
    require_bit(j, "Bell");
    return cat_state(1, static_cast<std::size_t>(i), j);
}

StateVector bell_state(int index) {
    if (index < 0 || index > 3) {
        throw std::invalid_argument("Bell index must be in [0,3]");
    }
    return bell_state(index >> 1, index & 1);
}

StateVector ghz_state(int e1, int e2, int e3) {
    require_bit(e1, "GHZ");
    require_bit(e2, "GHZ");
    require_bit(e3, "GHZ");
    return cat_state(2, static_cast<std::size_t>((e1 << 1) | e2), e3);
}

StateVector ghz_state(int index) {
    if (index < 0 || index > 7) {
        throw std::invalid_argument("GHZ index must be in [0,7]");
    }
    return ghz_state((index >> 2) & 1, (index >> 1) & 1, index & 1);
}

std::vector<StateVector> canonical_basis(int n) {
    std::vector<StateVector> out;
    for (std::size_t k = 0; k < (std::size_t{1} << n); ++k) {
        out.push_back(StateVector::basis_ket(n, k));
    }
    return out;
}

std::vector<StateVector> hadamard_product_basis(int n) {
    std::vector<StateVector> out;
    for (std::size_t k = 0; k < (std::size_t{1} << n); ++k) {
        StateVector v = hadamard_state(static_cast<int>((k >> (n - 1)) & 1U));
        for (int p = 1; p < n; ++p) {
            v = tensor(v, hadamard_state(static_cast<int>((k >> (n - 1 - p)) & 1U)));
        }
        out.push_back(std::move(v));
    }
    return out;
}

EntangledBasis::EntangledBasis(Kind kind, int host_qubits, std::vector<int> support, std::vector<StateVector> states)
    : kind_(kind), host_qubits_(host_qubits), support_(std::move(support)), states_(std::move(states)) {
    std::vector<bool> seen(std::max(host_qubits_, 0), false);
    for (int p : support_) {
        if (p < 0 || p >= host_qubits_ || seen[p]) {
            throw std::invalid_argument("basis support positions must be distinct and inside the register");
        }
        seen[p] = true;
    }
    if (states_.size() != (std::size_t{1} << support_.size())) {
        throw std::invalid_argument("basis must have 2^k states for k supported qubits");
    }
    for (const auto& s : states_) {
        if (s.num_qubits() != static_cast<int>(support_.size())) {
            throw std::invalid_argument("basis state size does not match its support");
        }
    }
    require_orthonormal(states_);
}

StateVector EntangledBasis::host_state(std::size_t k) const {
    if (!covers_host()) {
        throw std::logic_error("basis " + label() + " does not cover the whole register");
    }
    return permute_qubits(states_.at(k), QubitPermutation(support_));
}

std::string EntangledBasis::label() const {
    if (kind_ == Kind::kGhz) {
        return "ghz";
    }
    return "bell(" + std::to_string(support_[0]) + "," + std::to_string(support_[1]) + ")";
}

EntangledBasis bell_basis_on(BellPairing pairing, int n) {
    if (n != 2 && n != 4) {
        throw std::invalid_argument("Bell bases are provided for 2- and 4-qubit registers");
    }
    if (pairing.first == pairing.second || pairing.first < 0 || pairing.second < 0 || pairing.first >= n ||
        pairing.second >= n) {
        throw std::invalid_argument("invalid Bell pairing (" + std::to_string(pairing.first) + "," +
                                    std::to_string(pairing.second) + ") for " + std::to_string(n) + " qubits");
    }
    std::vector<StateVector> states;
    for (int k = 0; k < 4; ++k) {
        states.push_back(bell_state(k));
    }
    return EntangledBasis(EntangledBasis::Kind::kBell, n, {pairing.first, pairing.second}, std::move(states));
}

EntangledBasis ghz_basis() {
    std::vector<StateVector> states;
    for (int k = 0; k < 8; ++k) {
        states.push_back(ghz_state(k));
    }
    return EntangledBasis(EntangledBasis::Kind::kGhz, 3, {0, 1, 2}, std::move(states));
}

Report verify_hadamard_expansions() {
    Report report{"hadamard", {}, {}};
    const auto h2 = hadamard_product_basis(2);
    for (int k = 0; k < 4; ++k) {
        check_expansion(report, kBellGolden[k], bell_state(k), h2);
    }
    const auto h3 = hadamard_product_basis(3);
    for (int k = 0; k < 8; ++k) {
        check_expansion(report, kGhzGolden[k], ghz_state(k), h3);
    }
    return report;
}

}  // namespace entswap
