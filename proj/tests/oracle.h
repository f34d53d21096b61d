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

// Reference values computed without the library: dense Kronecker products,
// literal kets, and frozen tables. Tests compare library output against these.

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Dense = std::vector<std::vector<C>>;
using Vec = std::vector<C>;

inline const double kR = 1.0 / std::sqrt(2.0);

inline Dense pauli(int i) {
    const C I(0, 1);
    switch (i) {
        case 0:
            return {{1, 0}, {0, 1}};
        case 1:
            return {{0, 1}, {1, 0}};
        case 2:
            return {{0, -I}, {I, 0}};
        default:
            return {{1, 0}, {0, -1}};
    }
}

inline Dense kron(const Dense& a, const Dense& b) {
    const std::size_t n = a.size(), m = b.size();
    Dense out(n * m, std::vector<C>(n * m));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t rr = 0; rr < m; ++rr)
                for (std::size_t cc = 0; cc < m; ++cc) out[r * m + rr][c * m + cc] = a[r][c] * b[rr][cc];
    return out;
}

/// Matrix of a word given as digits, leftmost factor acting on position 0.
inline Dense word_matrix(const std::string& digits) {
    Dense out = pauli(digits[0] - '0');
    for (std::size_t k = 1; k < digits.size(); ++k) out = kron(out, pauli(digits[k] - '0'));
    return out;
}

inline Vec apply(const Dense& m, const Vec& v) {
    Vec out(v.size());
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
    return out;
}

inline std::size_t ket(const std::string& bits) {
    std::size_t idx = 0;
    for (char b : bits) idx = idx * 2 + static_cast<std::size_t>(b - '0');
    return idx;
}

inline Vec bell(int i, int j) {
    Vec v(4);
    v[ket(std::string{'0', char('0' + i)})] = kR;
    v[ket(std::string{'1', char('0' + (1 - i))})] = (j ? -1.0 : 1.0) * kR;
    return v;
}

inline Vec ghz(int e1, int e2, int e3) {
    Vec v(8);
    v[ket(std::string{'0', char('0' + e1), char('0' + e2)})] = kR;
    v[ket(std::string{'1', char('0' + (1 - e1)), char('0' + (1 - e2))})] = (e3 ? -1.0 : 1.0) * kR;
    return v;
}

/// <y_abcd | z_pqrs>, closed form.
inline double swap_coefficient(int a, int b, int c, int d, int p, int q, int r, int s) {
    if ((a ^ c) != (p ^ r) || (b ^ d) != (q ^ s)) return 0.0;
    return ((a * s + p * d) % 2 ? -0.5 : 0.5);
}

/// Single-qubit actions on |0>, |1>, h0, h1 as coefficient vectors over (|0>,|1>),
/// worked out by hand from the matrices above. rows: σ0..σ3, cols: |0> |1> h0 h1.
inline std::array<std::array<Vec, 4>, 4> single_qubit_actions() {
    const C I(0, 1);
    const Vec z{1, 0}, o{0, 1}, h0{kR, kR}, h1{kR, -kR};
    auto sc = [](C c, const Vec& v) { return Vec{c * v[0], c * v[1]}; };
    return {{
        {z, o, h0, h1},
        {o, z, h0, sc(-1, h1)},
        {sc(I, o), sc(-I, z), sc(-I, h1), sc(I, h0)},
        {z, sc(-1, o), h1, h0},
    }};
}

/// The single-qubit action sketch as published: identical except for the σ2 row,
/// which lists -i|1>, i|0>, i h1, -i h0.
inline std::array<std::array<Vec, 4>, 4> printed_single_qubit_actions() {
    const C I(0, 1);
    const Vec z{1, 0}, o{0, 1}, h0{kR, kR}, h1{kR, -kR};
    auto sc = [](C c, const Vec& v) { return Vec{c * v[0], c * v[1]}; };
    return {{
        {z, o, h0, h1},
        {o, z, h0, sc(-1, h1)},
        {sc(-I, o), sc(I, z), sc(I, h1), sc(-I, h0)},
        {z, sc(-1, o), h1, h0},
    }};
}

// Cosets of the two-qubit action, keyed by the label l such that σ_{0l} is in row l.
inline const std::array<std::array<const char*, 4>, 4> kA2Rows = {{
    {"00", "11", "22", "33"},
    {"01", "10", "23", "32"},
    {"02", "13", "20", "31"},
    {"03", "12", "21", "30"},
}};
inline const std::array<std::array<int, 4>, 4> kA2Perms = {{
    {0, 1, 2, 3},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
    {1, 0, 3, 2},
}};

// Cosets of the three-qubit action keyed by the image of index 0.
inline const std::array<std::array<const char*, 8>, 8> kA3Rows = {{
    {"000", "033", "111", "122", "212", "221", "303", "330"},
    {"003", "030", "112", "121", "211", "222", "300", "333"},
    {"001", "032", "110", "123", "213", "220", "302", "331"},
    {"002", "031", "113", "120", "210", "223", "301", "332"},
    {"010", "023", "101", "132", "202", "231", "313", "320"},
    {"013", "020", "102", "131", "201", "232", "310", "323"},
    {"011", "022", "100", "133", "203", "230", "312", "321"},
    {"012", "021", "103", "130", "200", "233", "311", "322"},
}};

inline const std::array<std::array<const char*, 2>, 8> kSRows = {{
    {"000", "122"},
    {"222", "300"},
    {"220", "302"},
    {"002", "120"},
    {"202", "320"},
    {"020", "102"},
    {"022", "100"},
    {"200", "322"},
}};

}  // namespace oracle
