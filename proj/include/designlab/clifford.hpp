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

#ifndef DESIGNLAB_CLIFFORD_HPP
#define DESIGNLAB_CLIFFORD_HPP

#include <cstdint>
#include <vector>

#include "designlab/dense.hpp"
#include "designlab/pauli.hpp"

namespace designlab {

class Rng;

// Clifford C stored through the images C^dag X_j C and C^dag Z_j C.
class CliffordTableau {
   public:
    CliffordTableau() = default;
    // Images must be Hermitian (phase 0 or 2).
    CliffordTableau(std::vector<PauliString> x_images, std::vector<PauliString> z_images);

    static CliffordTableau identity(int n);
    static CliffordTableau hadamard(int n, int q);
    // S = diag(1, i).
    static CliffordTableau phase_s(int n, int q);
    static CliffordTableau cz(int n, int a, int b);
    static CliffordTableau cnot(int n, int control, int target);
    // The Pauli operator p viewed as a Clifford.
    static CliffordTableau from_pauli(const PauliString &p);
    // symplectic[r] holds x bits then z bits of generator image r; rows
    // X_0..X_{n-1}, Z_0..Z_{n-1}. phases[r] is the sign bit.
    static CliffordTableau from_symplectic(
        const std::vector<std::vector<uint8_t>> &symplectic, const std::vector<uint8_t> &phases);

    int n() const { return n_; }
    const PauliString &x_image(int j) const { return xs_[j]; }
    const PauliString &z_image(int j) const { return zs_[j]; }
    std::vector<std::vector<uint8_t>> symplectic() const;
    std::vector<uint8_t> phases() const;

    // S Omega S^T == Omega over GF(2).
    bool is_symplectic() const;
    CliffordTableau inverse() const;

    bool operator==(const CliffordTableau &other) const = default;

   private:
    int n_ = 0;
    std::vector<PauliString> xs_;
    std::vector<PauliString> zs_;
};

// C^dag p C.
PauliString conjugate_pauli(const CliffordTableau &c, const PauliString &p);
// Tableau of the operator product a * b.
CliffordTableau operator*(const CliffordTableau &a, const CliffordTableau &b);

CliffordTableau random_clifford(int n, Rng &rng);
std::vector<CliffordTableau> enumerate_single_qubit();

inline constexpr int kCliffordDenseGuard = 5;
DenseUnitary to_dense(const CliffordTableau &c);
// Reads the tableau off a dense Clifford unitary.
CliffordTableau tableau_from_dense(const Matrix &u);

// |tr C|^2, exact.
int64_t trace_norm_squared(const CliffordTableau &c);

}  // namespace designlab

#endif
