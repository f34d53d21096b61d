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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace entswap {

using Amplitude = std::complex<double>;

/// Tolerance used for every equality, normalization and orthonormality check.
inline constexpr double kEps = 1e-10;

/// Largest joint register the library is meant for (dimension 16).
inline constexpr int kMaxQubits = 4;

/// A normalized vector of 2^n amplitudes.
///
/// Index bit ordering follows ket labels: the leftmost ket symbol (qubit
/// position 0) is the most significant bit of the amplitude index, so
/// |x_0 x_1 ... x_{n-1}> lives at index sum_k x_k * 2^(n-1-k).
class StateVector {
 public:
    /// Throws std::invalid_argument unless the length is a power of two
    /// (at least 2), every amplitude is finite and the norm is 1 within kEps.
    explicit StateVector(std::vector<Amplitude> amplitudes);

    /// Computational basis ket |bits>, e.g. basis_ket("0110").
    static StateVector basis_ket(std::string_view bits);
    static StateVector basis_ket(int num_qubits, std::size_t index);

    int num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    std::span<const Amplitude> amplitudes() const { return amplitudes_; }
    const Amplitude& operator[](std::size_t index) const { return amplitudes_[index]; }

    /// Bit of qubit `position` inside amplitude index `index`.
    int bit(std::size_t index, int position) const {
        return static_cast<int>((index >> (num_qubits_ - 1 - position)) & 1U);
    }

    /// Exact componentwise equality.
    bool operator==(const StateVector& other) const = default;

    std::string to_string() const;

 private:
    int num_qubits_;
    std::vector<Amplitude> amplitudes_;
};

/// A bijection on qubit positions {0..n-1}; position p is sent to images[p].
class QubitPermutation {
 public:
    explicit QubitPermutation(std::vector<int> images);

    static QubitPermutation identity(int n);
    /// Transposition of positions a and b on n qubits.
    static QubitPermutation swap(int n, int a, int b);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int position) const { return images_[position]; }
    QubitPermutation inverse() const;
    std::span<const int> images() const { return images_; }

    bool operator==(const QubitPermutation& other) const = default;

 private:
    std::vector<int> images_;
};

/// a ⊗ b; the amplitude at i * 2^{b.n} + j is a[i] * b[j].
StateVector tensor(const StateVector& a, const StateVector& b);

/// <a|b>, conjugate-linear in a. Throws std::invalid_argument on dimension mismatch.
Amplitude inner(const StateVector& a, const StateVector& b);

/// Moves the amplitude of |x_0 ... x_{n-1}> to the ket carrying bit x_k at
/// position p(k).
StateVector permute_qubits(const StateVector& s, const QubitPermutation& p);

/// Returns the unit-modulus c with a = c * b (within tol), or nullopt.
std::optional<Amplitude> equal_up_to_phase(const StateVector& a, const StateVector& b, double tol = kEps);

/// Coefficients c_k = <basis_k|s>. The basis must be orthonormal, complete and
/// of the same dimension as s; otherwise std::invalid_argument.
std::vector<Amplitude> expand_in_basis(const StateVector& s, std::span<const StateVector> basis);

/// sum_k coefficients[k] * basis[k], without normalization checks.
std::vector<Amplitude> reconstruct(std::span<const Amplitude> coefficients, std::span<const StateVector> basis);

/// Throws std::invalid_argument when the vectors are not pairwise orthonormal within tol.
void require_orthonormal(std::span<const StateVector> basis, double tol = kEps);

/// Sum of squared moduli.
double squared_norm(std::span<const Amplitude> amplitudes);

}  // namespace entswap
