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

#include "entswap/hilbert.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace entswap {

namespace {

int log2_exact(std::size_t n) {
    int k = 0;
    while ((std::size_t{1} << k) < n) {
        ++k;
    }
    return (std::size_t{1} << k) == n ? k : -1;
}

}  // namespace

StateVector::StateVector(std::vector<Amplitude> amplitudes) : amplitudes_(std::move(amplitudes)) {
    num_qubits_ = log2_exact(amplitudes_.size());
    if (num_qubits_ < 1) {
        throw std::invalid_argument("state vector length must be a power of two >= 2, got " +
                                    std::to_string(amplitudes_.size()));
    }
    for (const auto& a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("state vector has a non-finite amplitude");
        }
    }
    double norm = std::sqrt(squared_norm(amplitudes_));
    if (std::abs(norm - 1.0) >= kEps) {
        throw std::invalid_argument("state vector is not normalized (norm " + std::to_string(norm) + ")");
    }
}

StateVector StateVector::basis_ket(std::string_view bits) {
    if (bits.empty()) {
        throw std::invalid_argument("basis ket needs at least one qubit");
    }
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("basis ket label must be a 0/1 string");
        }
        index = (index << 1) | static_cast<std::size_t>(c - '0');
    }
    return basis_ket(static_cast<int>(bits.size()), index);
}

StateVector StateVector::basis_ket(int num_qubits, std::size_t index) {
    if (num_qubits < 1 || num_qubits > 16) {
        throw std::invalid_argument("unsupported qubit count " + std::to_string(num_qubits));
    }
    std::size_t dim = std::size_t{1} << num_qubits;
    if (index >= dim) {
        throw std::invalid_argument("basis index out of range");
    }
    std::vector<Amplitude> amps(dim);
    amps[index] = 1.0;
    return StateVector(std::move(amps));
}

std::string StateVector::to_string() const {
    std::ostringstream out;
    out << std::setprecision(6);
    bool first = true;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        const auto& a = amplitudes_[i];
        if (std::abs(a) < kEps) {
            continue;
        }
        if (!first) {
            out << " + ";
        }
        first = false;
        out << "(" << a.real() << (a.imag() < 0 ? "-" : "+") << std::abs(a.imag()) << "i)|";
        for (int p = 0; p < num_qubits_; ++p) {
            out << bit(i, p);
        }
        out << ">";
    }
    return out.str();
}

QubitPermutation::QubitPermutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v]) {
            throw std::invalid_argument("qubit permutation is not a bijection");
        }
        seen[v] = true;
    }
    if (images_.empty()) {
        throw std::invalid_argument("qubit permutation must be non-empty");
    }
}

QubitPermutation QubitPermutation::identity(int n) {
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) {
        images[i] = i;
    }
    return QubitPermutation(std::move(images));
}

QubitPermutation QubitPermutation::swap(int n, int a, int b) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
        throw std::invalid_argument("swap positions out of range");
    }
    auto p = identity(n);
    std::swap(p.images_[a], p.images_[b]);
    return p;
}

QubitPermutation QubitPermutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t k = 0; k < images_.size(); ++k) {
        inv[images_[k]] = static_cast<int>(k);
    }
    return QubitPermutation(std::move(inv));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    std::vector<Amplitude> out(a.dimension() * b.dimension());
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        for (std::size_t j = 0; j < b.dimension(); ++j) {
            out[i * b.dimension() + j] = a[i] * b[j];
        }
    }
    return StateVector(std::move(out));
}

Amplitude inner(const StateVector& a, const StateVector& b) {
    if (a.dimension() != b.dimension()) {
        throw std::invalid_argument("inner product of states with different qubit counts");
    }
    Amplitude acc = 0;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

StateVector permute_qubits(const StateVector& s, const QubitPermutation& p) {
    const int n = s.num_qubits();
    if (p.size() != n) {
        throw std::invalid_argument("permutation length " + std::to_string(p.size()) + " does not match qubit count " +
                                    std::to_string(n));
    }
    std::vector<Amplitude> out(s.dimension());
    for (std::size_t src = 0; src < s.dimension(); ++src) {
        std::size_t dst = 0;
        for (int k = 0; k < n; ++k) {
            dst |= static_cast<std::size_t>(s.bit(src, k)) << (n - 1 - p(k));
        }
        out[dst] = s[src];
    }
    return StateVector(std::move(out));
}

std::optional<Amplitude> equal_up_to_phase(const StateVector& a, const StateVector& b, double tol) {
    if (a.dimension() != b.dimension()) {
        return std::nullopt;
    }
    std::size_t pivot = 0;
    while (pivot < b.dimension() && std::abs(b[pivot]) <= tol) {
        ++pivot;
    }
    if (pivot == b.dimension()) {
        return std::nullopt;
    }
    Amplitude c = a[pivot] / b[pivot];
    if (std::abs(std::abs(c) - 1.0) > tol) {
        return std::nullopt;
    }
    c /= std::abs(c);
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        if (std::abs(a[i] - c * b[i]) > tol) {
            return std::nullopt;
        }
    }
    return c;
}

void require_orthonormal(std::span<const StateVector> basis, double tol) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            Amplitude expected = i == j ? 1.0 : 0.0;
            if (std::abs(inner(basis[i], basis[j]) - expected) >= tol) {
                throw std::invalid_argument("basis is not orthonormal at pair (" + std::to_string(i) + "," +
                                            std::to_string(j) + ")");
            }
        }
    }
}

std::vector<Amplitude> expand_in_basis(const StateVector& s, std::span<const StateVector> basis) {
    if (basis.size() != s.dimension()) {
        throw std::invalid_argument("basis does not span the state space");
    }
    for (const auto& v : basis) {
        if (v.dimension() != s.dimension()) {
            throw std::invalid_argument("basis vector dimension mismatch");
        }
    }
    require_orthonormal(basis);
    std::vector<Amplitude> coefficients;
    coefficients.reserve(basis.size());
    for (const auto& v : basis) {
        coefficients.push_back(inner(v, s));
    }
    return coefficients;
}

std::vector<Amplitude> reconstruct(std::span<const Amplitude> coefficients, std::span<const StateVector> basis) {
    if (coefficients.size() != basis.size() || basis.empty()) {
        throw std::invalid_argument("coefficient count does not match basis size");
    }
    std::vector<Amplitude> out(basis.front().dimension());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] += coefficients[k] * basis[k][i];
        }
    }
    return out;
}

double squared_norm(std::span<const Amplitude> amplitudes) {
    double acc = 0;
    for (const auto& a : amplitudes) {
        acc += std::norm(a);
    }
    return acc;
}

}  // namespace entswap
