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

#ifndef DESIGNLAB_DENSE_HPP
#define DESIGNLAB_DENSE_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "designlab/estimate.hpp"
#include "designlab/pauli.hpp"
#include "designlab/permutation.hpp"

namespace designlab {

class Rng;

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Largest side of any constructed dense matrix.
inline constexpr int64_t kDenseGuard = 4096;
void check_dense_guard(int64_t dim, const char *what);

double max_abs(const Matrix &m);
bool is_hermitian(const Matrix &m, double tol = 1e-10);
bool is_unitary(const Matrix &m, double tol = 1e-10);
bool is_finite(const Matrix &m);
int qubits_of_dim(int64_t d);

class DenseUnitary {
   public:
    DenseUnitary() = default;
    // Throws unless ||U^dag U - I||_max <= tol.
    explicit DenseUnitary(Matrix m, double tol = 1e-10);

    const Matrix &matrix() const { return m_; }
    int dim() const { return int(m_.rows()); }
    DenseUnitary adjoint() const;
    DenseUnitary operator*(const DenseUnitary &other) const;

   private:
    Matrix m_;
};

Matrix pauli_to_dense(const PauliString &p);
// p * m and m * p in O(d^2).
Matrix pauli_left(const PauliString &p, const Matrix &m);
Matrix pauli_right(const Matrix &m, const PauliString &p);
// U^dag P U.
Matrix heisenberg(const Matrix &u, const PauliString &p);

DenseUnitary haar_unitary(int d, Rng &rng);
Matrix gue_hamiltonian(int d, Rng &rng);
DenseUnitary evolve(const Matrix &h, double t);

// f applied to the eigenvalues of a Hermitian matrix.
Matrix hermitian_function(const Matrix &h, const std::function<Complex(double)> &f);
// rho^p for positive semidefinite rho; eigenvalues in [-1e-12, 0) clip to 0.
Matrix psd_power(const Matrix &rho, double p);
void check_density_matrix(const Matrix &rho, double tol = 1e-10);

Matrix tensor(const Matrix &a, const Matrix &b);
Matrix tensor_power(const Matrix &a, int k);
// keep[q] selects qubit q (qubit 0 most significant).
Matrix partial_trace(const Matrix &rho, const std::vector<bool> &keep);

// W_pi |a_1 ... a_k> = |a_pi(1) ... a_pi(k)>.
DenseUnitary permutation_operator(const Permutation &pi, int d);
// Basis index of W_pi |a>, where a is a base-d index on k sites.
int64_t permuted_index(const Permutation &pi, int d, int64_t a);
// tr(W_pi A) without building W_pi.
Complex trace_with_permutation(const Permutation &pi, int d, const Matrix &a);

Estimate random_sign_state_overlap(int d, int64_t pairs, uint64_t seed);

}  // namespace designlab

#endif
