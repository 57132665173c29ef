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

#include "designlab/pauli.hpp"

#include <bit>
#include <stdexcept>

#include "designlab/rng.hpp"

namespace designlab {

namespace {

uint64_t mask_for(int n) {
    return n == 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
}

void require_same_n(const PauliString &p, const PauliString &q) {
    if (p.n != q.n) {
        throw std::invalid_argument(
            "Pauli qubit count mismatch: " + std::to_string(p.n) + " vs " + std::to_string(q.n));
    }
}

// Power of i picked up by sigma(x1,z1) sigma(x2,z2) on one qubit.
int g_phase(int x1, int z1, int x2, int z2) {
    if (x1 == 0 && z1 == 0) {
        return 0;
    }
    if (x1 == 1 && z1 == 1) {
        return z2 - x2;
    }
    if (x1 == 1) {
        return z2 * (2 * x2 - 1);
    }
    return x2 * (1 - 2 * z2);
}

}  // namespace

PauliString::PauliString(int n, uint64_t x, uint64_t z, int phase) : n(n), x(x), z(z), phase(((phase % 4) + 4) % 4) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("Pauli qubit count out of range: " + std::to_string(n));
    }
    if ((x | z) & ~mask_for(n)) {
        throw std::invalid_argument("Pauli bits set beyond qubit count");
    }
}

PauliString PauliString::identity(int n) {
    return PauliString(n, 0, 0, 0);
}

PauliString PauliString::single(int n, int qubit, char letter) {
    if (qubit < 0 || qubit >= n) {
        throw std::invalid_argument("qubit index out of range");
    }
    uint64_t b = uint64_t{1} << qubit;
    switch (letter) {
        case 'I':
            return PauliString(n, 0, 0);
        case 'X':
            return PauliString(n, b, 0);
        case 'Z':
            return PauliString(n, 0, b);
        case 'Y':
            return PauliString(n, b, b);
        default:
            throw std::invalid_argument(std::string("unknown Pauli letter '") + letter + "'");
    }
}

PauliString PauliString::parse(std::string_view text) {
    int phase = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        phase = text[0] == '-' ? 2 : 0;
        text.remove_prefix(1);
    }
    if (!text.empty() && text[0] == 'i') {
        phase += 1;
        text.remove_prefix(1);
    }
    if (text.empty()) {
        throw std::invalid_argument("empty Pauli string");
    }
    int n = int(text.size());
    if (n > kMaxQubits) {
        throw std::invalid_argument("Pauli string too long");
    }
    uint64_t x = 0;
    uint64_t z = 0;
    for (int q = 0; q < n; q++) {
        char c = text[q];
        if (c == '_') {
            c = 'I';
        }
        PauliString s = single(n, q, c);
        x |= s.x;
        z |= s.z;
    }
    return PauliString(n, x, z, phase);
}

int PauliString::weight() const {
    return std::popcount(x | z);
}

std::string PauliString::str() const {
    std::string out(n, 'I');
    for (int q = 0; q < n; q++) {
        int d = int(x_bit(q)) + 2 * int(z_bit(q));
        out[q] = "IXZY"[d];
    }
    return out;
}

std::string PauliString::signed_str() const {
    static const char *prefixes[] = {"", "i", "-", "-i"};
    return prefixes[phase] + str();
}

uint64_t PauliString::index() const {
    uint64_t idx = 0;
    for (int q = 0; q < n; q++) {
        idx = idx * 4 + uint64_t(x_bit(q)) + 2 * uint64_t(z_bit(q));
    }
    return idx;
}

PauliString mul(const PauliString &p, const PauliString &q) {
    require_same_n(p, q);
    int phase = p.phase + q.phase;
    uint64_t active = (p.x | p.z) & (q.x | q.z);
    while (active) {
        int b = std::countr_zero(active);
        active &= active - 1;
        phase += g_phase(p.x_bit(b), p.z_bit(b), q.x_bit(b), q.z_bit(b));
    }
    return PauliString(p.n, p.x ^ q.x, p.z ^ q.z, phase);
}

PauliString operator*(const PauliString &p, const PauliString &q) {
    return mul(p, q);
}

PauliString dagger(const PauliString &p) {
    return PauliString(p.n, p.x, p.z, 4 - p.phase);
}

PauliString tensor(const PauliString &p, const PauliString &q) {
    int n = p.n + q.n;
    if (n > PauliString::kMaxQubits) {
        throw std::invalid_argument("tensor product exceeds qubit limit");
    }
    return PauliString(n, p.x | (q.x << p.n), p.z | (q.z << p.n), p.phase + q.phase);
}

bool commutes(const PauliString &p, const PauliString &q) {
    require_same_n(p, q);
    return std::popcount((p.x & q.z) ^ (p.z & q.x)) % 2 == 0;
}

int k_phase(const PauliString &p, const PauliString &q) {
    return commutes(p, q) ? 1 : -1;
}

std::optional<int> trace_phase(std::span<const PauliString> factors) {
    if (factors.empty()) {
        return 0;
    }
    PauliString acc = factors[0];
    for (size_t i = 1; i < factors.size(); i++) {
        acc = mul(acc, factors[i]);
    }
    if (!acc.is_identity_up_to_phase()) {
        return std::nullopt;
    }
    return acc.phase;
}

std::complex<double> trace_product(std::span<const PauliString> factors) {
    if (factors.empty()) {
        throw std::invalid_argument("trace_product of an empty list needs a qubit count");
    }
    auto e = trace_phase(factors);
    if (!e) {
        return 0.0;
    }
    double d = std::ldexp(1.0, factors[0].n);
    static const std::complex<double> powers[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return d * powers[*e];
}

std::complex<double> trace_product(std::initializer_list<PauliString> factors) {
    return trace_product(std::span<const PauliString>(factors.begin(), factors.size()));
}

PauliString pauli_from_index(int n, uint64_t index) {
    uint64_t x = 0;
    uint64_t z = 0;
    for (int q = n - 1; q >= 0; q--) {
        uint64_t digit = index & 3;
        index >>= 2;
        x |= (digit & 1) << q;
        z |= (digit >> 1) << q;
    }
    return PauliString(n, x, z, 0);
}

std::vector<PauliString> enumerate_paulis(int n) {
    if (n < 1 || n > kPauliEnumerationGuard) {
        throw std::invalid_argument("enumerate_paulis: n must be in [1, 8], got " + std::to_string(n));
    }
    uint64_t count = uint64_t{1} << (2 * n);
    std::vector<PauliString> out;
    out.reserve(count);
    for (uint64_t i = 0; i < count; i++) {
        out.push_back(pauli_from_index(n, i));
    }
    return out;
}

PauliString random_pauli(int n, Rng &rng, bool exclude_identity) {
    while (true) {
        uint64_t x = rng.bits() & mask_for(n);
        uint64_t z = rng.bits() & mask_for(n);
        if (exclude_identity && x == 0 && z == 0) {
            continue;
        }
        return PauliString(n, x, z, 0);
    }
}

}  // namespace designlab
