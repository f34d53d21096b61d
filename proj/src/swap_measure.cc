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

#include "entswap/swap_measure.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace entswap {

namespace {

constexpr double kClampProbability = 1e-12;

std::size_t ket_index(int q0, int q1, int q2, int q3) {
    return static_cast<std::size_t>((q0 << 3) | (q1 << 2) | (q2 << 1) | q3);
}

int sign_of(int exponent) { return (exponent & 1) ? -1 : 1; }

// Host index with the bits of `local` at `support` and the bits of `rest` at the
// remaining positions (both in increasing local order).
std::size_t compose_index(int n, const std::vector<int>& support, const std::vector<int>& others, std::size_t local,
                          std::size_t rest) {
    std::size_t out = 0;
    const int m = static_cast<int>(support.size());
    for (int q = 0; q < m; ++q) {
        std::size_t bit = (local >> (m - 1 - q)) & 1U;
        out |= bit << (n - 1 - support[q]);
    }
    const int r = static_cast<int>(others.size());
    for (int q = 0; q < r; ++q) {
        std::size_t bit = (rest >> (r - 1 - q)) & 1U;
        out |= bit << (n - 1 - others[q]);
    }
    return out;
}

std::vector<int> complement(int n, const std::vector<int>& support) {
    std::vector<int> out;
    for (int p = 0; p < n; ++p) {
        if (std::find(support.begin(), support.end(), p) == support.end()) {
            out.push_back(p);
        }
    }
    return out;
}

struct Projection {
    double probability;
    std::vector<Amplitude> remainder;
};

std::vector<Projection> project_all(const StateVector& s, const EntangledBasis& basis) {
    if (basis.host_qubits() != s.num_qubits()) {
        throw std::invalid_argument("basis " + basis.label() + " is for " + std::to_string(basis.host_qubits()) +
                                    " qubits, state has " + std::to_string(s.num_qubits()));
    }
    const int n = s.num_qubits();
    const auto& support = basis.support();
    const auto others = complement(n, support);
    const std::size_t local_dim = std::size_t{1} << support.size();
    const std::size_t rest_dim = std::size_t{1} << others.size();
    std::vector<Projection> out;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        Projection p{0.0, std::vector<Amplitude>(rest_dim)};
        for (std::size_t r = 0; r < rest_dim; ++r) {
            Amplitude acc = 0;
            for (std::size_t t = 0; t < local_dim; ++t) {
                acc += std::conj(basis[k][t]) * s[compose_index(n, support, others, t, r)];
            }
            p.remainder[r] = acc;
        }
        p.probability = squared_norm(p.remainder);
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<double> clamped(const std::vector<Projection>& projections) {
    std::vector<double> probs;
    double total = 0;
    for (const auto& p : projections) {
        probs.push_back(p.probability < kClampProbability ? 0.0 : p.probability);
        total += probs.back();
    }
    for (auto& p : probs) {
        p /= total;
    }
    return probs;
}

struct IdentityTerm {
    SwapLabels labels;
    int sign;
};

// The four terms of the published identity for left-hand labels L.
std::array<IdentityTerm, 4> printed_terms(SwapLabels l) {
    return {{{{l.i0, l.j0, l.i1, l.j1}, 1},
             {{l.i0, 1 - l.j0, l.i1, 1 - l.j1}, sign_of(l.j1)},
             {{1 - l.i0, l.j0, 1 - l.i1, l.j1}, sign_of(l.j0)},
             {{1 - l.i0, 1 - l.j0, 1 - l.i1, 1 - l.j1}, sign_of(l.j0 + l.j1)}}};
}

// Sign pattern obtained by expanding the two families directly.
std::array<IdentityTerm, 4> derived_terms(SwapLabels l) {
    auto terms = printed_terms(l);
    terms[1].sign = sign_of(l.i0);
    terms[2].sign = sign_of(l.j1);
    terms[3].sign = sign_of(l.i0 + l.j1);
    return terms;
}

bool matches(const std::vector<Amplitude>& coefficients, const std::array<IdentityTerm, 4>& terms,
             std::string* detail) {
    std::array<double, 16> expected{};
    for (const auto& t : terms) {
        expected[t.labels.index()] = 0.5 * t.sign;
    }
    for (int k = 0; k < 16; ++k) {
        if (std::abs(coefficients[k] - expected[k]) >= kEps) {
            if (detail) {
                *detail = "coefficient of " + SwapLabels::from_index(k).to_string() + " is " +
                          std::to_string(coefficients[k].real()) + ", expected " + std::to_string(expected[k]);
            }
            return false;
        }
    }
    return true;
}

}  // namespace

SwapLabels SwapLabels::from_index(int index) {
    if (index < 0 || index > 15) {
        throw std::invalid_argument("swap label index must be in [0,15]");
    }
    return {(index >> 3) & 1, (index >> 2) & 1, (index >> 1) & 1, index & 1};
}

std::string SwapLabels::to_string() const {
    return std::to_string(i0) + std::to_string(j0) + std::to_string(i1) + std::to_string(j1);
}

StateVector z_state(SwapLabels l) {
    std::vector<Amplitude> amps(16);
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            amps[ket_index(x, l.i0 ^ x, y, l.i1 ^ y)] = 0.5 * sign_of(x * l.j0 + y * l.j1);
        }
    }
    return StateVector(std::move(amps));
}

StateVector y_state(SwapLabels l) {
    std::vector<Amplitude> amps(16);
    for (int u = 0; u < 2; ++u) {
        for (int v = 0; v < 2; ++v) {
            amps[ket_index(u, v, l.i0 ^ u, l.i1 ^ v)] = 0.5 * sign_of(u * l.j0 + v * l.j1);
        }
    }
    return StateVector(std::move(amps));
}

std::array<std::array<double, 16>, 16> swap_overlap_matrix() {
    std::array<std::array<double, 16>, 16> m{};
    for (int a = 0; a < 16; ++a) {
        for (int b = 0; b < 16; ++b) {
            m[a][b] = inner(y_state(SwapLabels::from_index(a)), z_state(SwapLabels::from_index(b))).real();
        }
    }
    return m;
}

Report verify_swap_identities() {
    Report report{"swap", {}, {}};
    std::vector<StateVector> zs, ys;
    for (int k = 0; k < 16; ++k) {
        zs.push_back(z_state(SwapLabels::from_index(k)));
        ys.push_back(y_state(SwapLabels::from_index(k)));
    }
    int derived_matches = 0;
    auto run_direction = [&](const char* name, const std::vector<StateVector>& lhs,
                             const std::vector<StateVector>& rhs) {
        for (int k = 0; k < 16; ++k) {
            auto labels = SwapLabels::from_index(k);
            auto coefficients = expand_in_basis(lhs[k], rhs);
            std::string detail;
            bool ok = matches(coefficients, printed_terms(labels), &detail);
            report.add(std::string(name) + "." + labels.to_string(), ok, ok ? "" : detail);
            derived_matches += matches(coefficients, derived_terms(labels), nullptr) ? 1 : 0;
        }
    };
    run_direction("z_in_y", zs, ys);
    run_direction("y_in_z", ys, zs);

    const auto m = swap_overlap_matrix();
    bool symmetric = true;
    bool involutive = true;
    for (int a = 0; a < 16; ++a) {
        for (int b = 0; b < 16; ++b) {
            symmetric = symmetric && std::abs(m[a][b] - m[b][a]) < kEps;
            double square = 0;
            for (int c = 0; c < 16; ++c) {
                square += m[a][c] * m[c][b];
            }
            involutive = involutive && std::abs(square - (a == b ? 1.0 : 0.0)) < kEps;
        }
    }
    report.add("overlap_matrix.symmetric", symmetric);
    report.add("overlap_matrix.involutive", involutive);
    report.notes.push_back(
        "expansions matching signs (+, (-1)^i0, (-1)^j1, (-1)^(i0+j1)): " + std::to_string(derived_matches) + "/32");
    return report;
}

double RandomSource::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t RandomSource::below(std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("RandomSource::below needs a positive bound");
    }
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw;
    do {
        draw = engine_();
    } while (draw >= limit);
    return draw % bound;
}

std::vector<double> outcome_probabilities(const StateVector& s, const EntangledBasis& basis) {
    return clamped(project_all(s, basis));
}

MeasurementOutcome measure_subset(const StateVector& s, const EntangledBasis& basis, RandomSource& rng) {
    auto projections = project_all(s, basis);
    auto probs = clamped(projections);
    const double u = rng.uniform();
    int chosen = -1;
    double cumulative = 0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        if (probs[k] == 0.0) {
            continue;
        }
        chosen = static_cast<int>(k);
        cumulative += probs[k];
        if (u < cumulative) {
            break;
        }
    }
    const auto& remainder = projections[chosen].remainder;
    const double norm = std::sqrt(projections[chosen].probability);
    const int n = s.num_qubits();
    const auto& support = basis.support();
    const auto others = complement(n, support);
    std::vector<Amplitude> post(s.dimension());
    for (std::size_t t = 0; t < basis[chosen].dimension(); ++t) {
        for (std::size_t r = 0; r < remainder.size(); ++r) {
            post[compose_index(n, support, others, t, r)] = basis[chosen][t] * remainder[r] / norm;
        }
    }
    return {chosen, probs[chosen], StateVector(std::move(post))};
}

MeasurementOutcome measure_full(const StateVector& s, const EntangledBasis& basis, RandomSource& rng) {
    if (!basis.covers_host() || basis.host_qubits() != s.num_qubits()) {
        throw std::invalid_argument("basis " + basis.label() + " does not span the " + std::to_string(s.num_qubits()) +
                                    "-qubit state space");
    }
    return measure_subset(s, basis, rng);
}

}  // namespace entswap
