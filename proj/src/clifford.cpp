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

#include "designlab/clifford.hpp"

#include <stdexcept>
#include <string>

#include "designlab/rng.hpp"

namespace designlab {

namespace {

bool sym_inner(const PauliString &a, const PauliString &b) {
    return !commutes(a, b);
}

PauliString from_bits(int n, const std::vector<uint8_t> &bits) {
    uint64_t x = 0;
    uint64_t z = 0;
    for (int q = 0; q < n; q++) {
        x |= uint64_t(bits[q] & 1) << q;
        z |= uint64_t(bits[n + q] & 1) << q;
    }
    return PauliString(n, x, z);
}

}  // namespace

CliffordTableau::CliffordTableau(std::vector<PauliString> x_images, std::vector<PauliString> z_images)
    : xs_(std::move(x_images)), zs_(std::move(z_images)) {
    if (xs_.empty() || xs_.size() != zs_.size()) {
        throw std::invalid_argument("tableau needs n X images and n Z images");
    }
    n_ = int(xs_.size());
    for (int j = 0; j < n_; j++) {
        if (xs_[j].n != n_ || zs_[j].n != n_) {
            throw std::invalid_argument("tableau image has the wrong qubit count");
        }
        if (xs_[j].phase % 2 || zs_[j].phase % 2) {
            throw std::invalid_argument("tableau images must be Hermitian");
        }
    }
}

CliffordTableau CliffordTableau::identity(int n) {
    std::vector<PauliString> xs;
    std::vector<PauliString> zs;
    for (int j = 0; j < n; j++) {
        xs.push_back(PauliString::single(n, j, 'X'));
        zs.push_back(PauliString::single(n, j, 'Z'));
    }
    return CliffordTableau(std::move(xs), std::move(zs));
}

CliffordTableau CliffordTableau::hadamard(int n, int q) {
    CliffordTableau t = identity(n);
    std::swap(t.xs_[q], t.zs_[q]);
    return t;
}

CliffordTableau CliffordTableau::phase_s(int n, int q) {
    CliffordTableau t = identity(n);
    PauliString y = PauliString::single(n, q, 'Y');
    y.phase = 2;
    t.xs_[q] = y;
    return t;
}

CliffordTableau CliffordTableau::cz(int n, int a, int b) {
    if (a == b) {
        throw std::invalid_argument("cz needs two distinct qubits");
    }
    CliffordTableau t = identity(n);
    t.xs_[a] = mul(PauliString::single(n, a, 'X'), PauliString::single(n, b, 'Z'));
    t.xs_[b] = mul(PauliString::single(n, a, 'Z'), PauliString::single(n, b, 'X'));
    return t;
}

CliffordTableau CliffordTableau::cnot(int n, int control, int target) {
    if (control == target) {
        throw std::invalid_argument("cnot needs two distinct qubits");
    }
    CliffordTableau t = identity(n);
    t.xs_[control] = mul(PauliString::single(n, control, 'X'), PauliString::single(n, target, 'X'));
    t.zs_[target] = mul(PauliString::single(n, control, 'Z'), PauliString::single(n, target, 'Z'));
    return t;
}

CliffordTableau CliffordTableau::from_pauli(const PauliString &p) {
    CliffordTableau t = identity(p.n);
    for (int j = 0; j < p.n; j++) {
        if (!commutes(t.xs_[j], p)) {
            t.xs_[j].phase = 2;
        }
        if (!commutes(t.zs_[j], p)) {
            t.zs_[j].phase = 2;
        }
    }
    return t;
}

CliffordTableau CliffordTableau::from_symplectic(
    const std::vector<std::vector<uint8_t>> &symplectic, const std::vector<uint8_t> &phases) {
    size_t rows = symplectic.size();
    if (rows == 0 || rows % 2 || phases.size() != rows) {
        throw std::invalid_argument("symplectic matrix must be 2n x 2n with 2n phase bits");
    }
    int n = int(rows / 2);
    std::vector<PauliString> xs;
    std::vector<PauliString> zs;
    for (size_t r = 0; r < rows; r++) {
        if (symplectic[r].size() != rows) {
            throw std::invalid_argument("symplectic matrix must be square");
        }
        PauliString p = from_bits(n, symplectic[r]);
        p.phase = phases[r] ? 2 : 0;
        (int(r) < n ? xs : zs).push_back(p);
    }
    CliffordTableau t(std::move(xs), std::move(zs));
    if (!t.is_symplectic()) {
        throw std::invalid_argument("matrix violates the symplectic condition");
    }
    return t;
}

std::vector<std::vector<uint8_t>> CliffordTableau::symplectic() const {
    std::vector<std::vector<uint8_t>> out;
    for (int r = 0; r < 2 * n_; r++) {
        const PauliString &p = r < n_ ? xs_[r] : zs_[r - n_];
        std::vector<uint8_t> row(2 * n_);
        for (int q = 0; q < n_; q++) {
            row[q] = p.x_bit(q);
            row[n_ + q] = p.z_bit(q);
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<uint8_t> CliffordTableau::phases() const {
    std::vector<uint8_t> out;
    for (const auto &p : xs_) {
        out.push_back(p.phase == 2);
    }
    for (const auto &p : zs_) {
        out.push_back(p.phase == 2);
    }
    return out;
}

bool CliffordTableau::is_symplectic() const {
    for (int i = 0; i < n_; i++) {
        for (int j = 0; j < n_; j++) {
            if (sym_inner(xs_[i], xs_[j]) || sym_inner(zs_[i], zs_[j])) {
                return false;
            }
            if (sym_inner(xs_[i], zs_[j]) != (i == j)) {
                return false;
            }
        }
    }
    return true;
}

PauliString conjugate_pauli(const CliffordTableau &c, const PauliString &p) {
    if (p.n != c.n()) {
        throw std::invalid_argument("conjugate_pauli: qubit count mismatch");
    }
    PauliString acc(p.n, 0, 0, p.phase + std::popcount(p.x & p.z));
    for (int q = 0; q < p.n; q++) {
        if (p.x_bit(q)) {
            acc = mul(acc, c.x_image(q));
        }
    }
    for (int q = 0; q < p.n; q++) {
        if (p.z_bit(q)) {
            acc = mul(acc, c.z_image(q));
        }
    }
    return acc;
}

CliffordTableau CliffordTableau::inverse() const {
    std::vector<PauliString> xs;
    std::vector<PauliString> zs;
    auto preimage = [&](const PauliString &u) {
        uint64_t x = 0;
        uint64_t z = 0;
        for (int i = 0; i < n_; i++) {
            x |= uint64_t(sym_inner(u, zs_[i])) << i;
            z |= uint64_t(sym_inner(u, xs_[i])) << i;
        }
        PauliString q(n_, x, z);
        PauliString image = conjugate_pauli(*this, q);
        q.phase = (4 - image.phase) % 4;
        return q;
    };
    for (int j = 0; j < n_; j++) {
        xs.push_back(preimage(PauliString::single(n_, j, 'X')));
        zs.push_back(preimage(PauliString::single(n_, j, 'Z')));
    }
    return CliffordTableau(std::move(xs), std::move(zs));
}

CliffordTableau operator*(const CliffordTableau &a, const CliffordTableau &b) {
    if (a.n() != b.n()) {
        throw std::invalid_argument("tableau qubit count mismatch");
    }
    std::vector<PauliString> xs;
    std::vector<PauliString> zs;
    for (int j = 0; j < a.n(); j++) {
        xs.push_back(conjugate_pauli(b, a.x_image(j)));
        zs.push_back(conjugate_pauli(b, a.z_image(j)));
    }
    return CliffordTableau(std::move(xs), std::move(zs));
}

CliffordTableau random_clifford(int n, Rng &rng) {
    if (n < 1 || n > 32) {
        throw std::invalid_argument("random_clifford: n must be in [1, 32]");
    }
    std::vector<PauliString> basis;
    for (int j = 0; j < n; j++) {
        basis.push_back(PauliString::single(n, j, 'X'));
        basis.push_back(PauliString::single(n, j, 'Z'));
    }
    auto combo = [&](bool nonzero) {
        while (true) {
            PauliString v = PauliString::identity(n);
            bool any = false;
            for (const auto &b : basis) {
                if (rng.bits() & 1) {
                    v = PauliString(n, v.x ^ b.x, v.z ^ b.z);
                    any = true;
                }
            }
            if (!nonzero || (any && !v.is_identity_up_to_phase())) {
                return v;
            }
        }
    };
    std::vector<PauliString> xs(n);
    std::vector<PauliString> zs(n);
    for (int j = 0; j < n; j++) {
        PauliString v = combo(true);
        PauliString w = combo(false);
        while (!sym_inner(v, w)) {
            w = combo(false);
        }
        xs[j] = v;
        zs[j] = w;
        // Project the remaining space onto the symplectic complement of (v, w).
        std::vector<PauliString> projected;
        for (const auto &u : basis) {
            uint64_t x = u.x;
            uint64_t z = u.z;
            if (sym_inner(u, w)) {
                x ^= v.x;
                z ^= v.z;
            }
            if (sym_inner(u, v)) {
                x ^= w.x;
                z ^= w.z;
            }
            projected.emplace_back(n, x, z);
        }
        // Row-reduce to an independent spanning set.
        std::vector<uint64_t> slots(64, 0);
        std::vector<PauliString> reduced;
        for (const auto &p : projected) {
            uint64_t key = p.x | (p.z << 32);
            for (int bit = 63; bit >= 0 && key; bit--) {
                if (!((key >> bit) & 1)) {
                    continue;
                }
                if (!slots[bit]) {
                    slots[bit] = key;
                    reduced.emplace_back(n, key & 0xFFFFFFFFULL, key >> 32);
                    break;
                }
                key ^= slots[bit];
            }
        }
        basis = std::move(reduced);
        if (int(basis.size()) != 2 * (n - j - 1)) {
            throw std::logic_error("random_clifford: complement has the wrong dimension");
        }
    }
    for (int j = 0; j < n; j++) {
        xs[j].phase = (rng.bits() & 1) ? 2 : 0;
        zs[j].phase = (rng.bits() & 1) ? 2 : 0;
    }
    return CliffordTableau(std::move(xs), std::move(zs));
}

std::vector<CliffordTableau> enumerate_single_qubit() {
    const char letters[3] = {'X', 'Z', 'Y'};
    std::vector<CliffordTableau> out;
    for (char a : letters) {
        for (char b : letters) {
            if (a == b) {
                continue;
            }
            for (int sx = 0; sx < 2; sx++) {
                for (int sz = 0; sz < 2; sz++) {
                    PauliString xi = PauliString::single(1, 0, a);
                    PauliString zi = PauliString::single(1, 0, b);
                    xi.phase = 2 * sx;
                    zi.phase = 2 * sz;
                    out.emplace_back(std::vector<PauliString>{xi}, std::vector<PauliString>{zi});
                }
            }
        }
    }
    return out;
}

DenseUnitary to_dense(const CliffordTableau &c) {
    int n = c.n();
    if (n > kCliffordDenseGuard) {
        throw std::invalid_argument("to_dense: Clifford dense conversion limited to n <= 5");
    }
    int64_t d = int64_t{1} << n;
    // Columns of U^dag: U^dag|0> is the joint +1 eigenvector of the Z images.
    Matrix m = Matrix::Identity(d, d);
    for (int j = 0; j < n; j++) {
        m = (m + pauli_left(c.z_image(j), m)) * 0.5;
    }
    int64_t best = 0;
    for (int64_t r = 1; r < d; r++) {
        if (m.col(r).norm() > m.col(best).norm()) {
            best = r;
        }
    }
    Matrix psi0 = m.col(best) / m.col(best).norm();
    Matrix v(d, d);
    for (int64_t b = 0; b < d; b++) {
        Matrix col = psi0;
        for (int q = 0; q < n; q++) {
            if ((b >> (n - 1 - q)) & 1) {
                col = pauli_left(c.x_image(q), col);
            }
        }
        v.col(b) = col;
    }
    return DenseUnitary(v.adjoint(), 1e-9);
}

CliffordTableau tableau_from_dense(const Matrix &u) {
    int n = qubits_of_dim(u.rows());
    if (n > kCliffordDenseGuard) {
        throw std::invalid_argument("tableau_from_dense: limited to n <= 5");
    }
    double d = double(u.rows());
    auto image = [&](const PauliString &g) {
        Matrix m = heisenberg(u, g);
        for (const auto &q : enumerate_paulis(n)) {
            Complex c = pauli_left(q, m).trace() / d;
            if (std::abs(c) > 0.5) {
                if (std::abs(std::abs(c) - 1) > 1e-8 || std::abs(c.imag()) > 1e-8) {
                    break;
                }
                PauliString out = q;
                out.phase = c.real() > 0 ? 0 : 2;
                return out;
            }
        }
        throw std::invalid_argument("matrix is not a Clifford unitary");
    };
    std::vector<PauliString> xs;
    std::vector<PauliString> zs;
    for (int j = 0; j < n; j++) {
        xs.push_back(image(PauliString::single(n, j, 'X')));
        zs.push_back(image(PauliString::single(n, j, 'Z')));
    }
    return CliffordTableau(std::move(xs), std::move(zs));
}

int64_t trace_norm_squared(const CliffordTableau &c) {
    int n = c.n();
    if (n > kPauliEnumerationGuard) {
        throw std::invalid_argument("trace_norm_squared: limited to n <= 8");
    }
    int64_t s = 0;
    uint64_t count = uint64_t{1} << (2 * n);
    for (uint64_t i = 0; i < count; i++) {
        PauliString p = pauli_from_index(n, i);
        PauliString t = conjugate_pauli(c, p);
        if (t.x == p.x && t.z == p.z) {
            s += t.phase == 0 ? 1 : -1;
        }
    }
    return s;
}

}  // namespace designlab
