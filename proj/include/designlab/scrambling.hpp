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

#ifndef DESIGNLAB_SCRAMBLING_HPP
#define DESIGNLAB_SCRAMBLING_HPP

#include <string_view>
#include <utility>
#include <vector>

#include "designlab/dense.hpp"
#include "designlab/pauli.hpp"

namespace designlab {

// Qubits 0..n-1 are the input register, n..2n-1 the output register.
struct ChoiState {
    int n = 0;
    Vector amplitudes;
};

ChoiState choi_state(const DenseUnitary &u);

// Reduced state of a pure vector on `total` qubits, keeping `keep` in order.
Matrix reduced_density(const Vector &psi, int total, const std::vector<int> &keep);

// Bits. k = 1 is the von Neumann entropy.
double renyi_entropy(const Matrix &rho, int k);

// A is a subset of input qubits (B its complement), D a subset of output
// qubits (C its complement).
struct IoPartition {
    int n = 0;
    std::vector<int> a;
    std::vector<int> d;

    IoPartition() = default;
    IoPartition(int n, std::vector<int> a, std::vector<int> d);
    // "A=0;D=1" or "A=0,1;D=1".
    static IoPartition parse(std::string_view text, int n);
    std::vector<int> b() const;
    std::vector<int> c() const;
    std::string str() const;
};

// All 4^{|qubits|} Hermitian Paulis supported on `qubits`.
std::vector<PauliString> paulis_on(int n, const std::vector<int> &qubits);

struct IdentityCheck {
    double lhs = 0;
    double rhs = 0;
};

IdentityCheck oto_renyi2_check(const DenseUnitary &u, const IoPartition &part);
IdentityCheck renyi_k_oto(const DenseUnitary &u, const IoPartition &part, int k);

// Renyi-2 mutual information I(A:BD) in bits; throws std::logic_error if it
// disagrees with -log2 of the OTO average.
double mutual_info_2(const DenseUnitary &u, const IoPartition &part);

using PerturbationDistribution = std::vector<std::pair<PauliString, double>>;
double catch_game(const DenseUnitary &u, const PerturbationDistribution &dist);

}  // namespace designlab

#endif
