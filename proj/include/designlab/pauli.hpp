// Copyright 2026 The designlab Authors
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

#ifndef DESIGNLAB_PAULI_HPP
#define DESIGNLAB_PAULI_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace designlab {

class Rng;

// n-qubit Pauli operator i^phase * prod_q (i^{x_q z_q} X^{x_q} Z^{z_q}).
// Qubit q lives in bit q of the masks; qubit 0 is the leftmost letter and the
// most significant tensor factor.
struct PauliString {
    int n = 0;
    uint64_t x = 0;
    uint64_t z = 0;
    int phase = 0;

    static constexpr int kMaxQubits = 64;

    PauliString() = default;
    PauliString(int n, uint64_t x, uint64_t z, int phase = 0);

    static PauliString identity(int n);
    static PauliString single(int n, int qubit, char letter);
    // "XIZY", optionally prefixed with +, -, i, +i, -i.
    static PauliString parse(std::string_view text);

    bool x_bit(int q) const { return (x >> q) & 1; }
    bool z_bit(int q) const { return (z >> q) & 1; }
    bool is_identity_up_to_phase() const { return x == 0 && z == 0; }
    int weight() const;

    // Letters only; the phase is dropped.
    std::string str() const;
    // Letters with a sign prefix when the phase is not 0.
    std::string signed_str() const;

    PauliString representative() const { return PauliString(n, x, z, 0); }
    // Position in enumerate_paulis(n).
    uint64_t index() const;

    bool operator==(const PauliString &other) const = default;
};

PauliString mul(const PauliString &p, const PauliString &q);
PauliString operator*(const PauliString &p, const PauliString &q);
PauliString dagger(const PauliString &p);
// Tensor product, p on the leading qubits.
PauliString tensor(const PauliString &p, const PauliString &q);

bool commutes(const PauliString &p, const PauliString &q);
// q^dag p q = k_phase(p, q) p.
int k_phase(const PauliString &p, const PauliString &q);

// Exponent e with tr(prod) = d * i^e, or nothing when the trace vanishes.
std::optional<int> trace_phase(std::span<const PauliString> factors);
std::complex<double> trace_product(std::span<const PauliString> factors);
std::complex<double> trace_product(std::initializer_list<PauliString> factors);

inline constexpr int kPauliEnumerationGuard = 8;
std::vector<PauliString> enumerate_paulis(int n);
PauliString pauli_from_index(int n, uint64_t index);
PauliString random_pauli(int n, Rng &rng, bool exclude_identity);

}  // namespace designlab

#endif
