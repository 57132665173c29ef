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

#include "designlab/dense.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "designlab/rng.hpp"

namespace designlab {

namespace {

const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// Qubit masks (bit q = qubit q) to basis-index masks (qubit 0 most significant).
uint64_t index_mask(uint64_t mask, int n) {
    uint64_t out = 0;
    for (int q = 0; q < n; q++) {
        if ((mask >> q) & 1) {
            out |= uint64_t{1} << (n - 1 - q);
        }
    }
    return out;
}

struct PauliAction {
    uint64_t flip;
    uint64_t sign;
    int phase;
};

PauliAction action_of(const PauliString &p) {
    PauliAction a;
    a.flip = index_mask(p.x, p.n);
    a.sign = index_mask(p.z, p.n);
    a.phase = (p.phase + std::popcount(p.x & p.z)) % 4;
    return a;
}

// P|b> = coef(b) |b ^ flip>.
Complex coef(const PauliAction &a, uint64_t b) {
    int e = a.phase + 2 * (std::popcount(a.sign & b) & 1);
    return kIPow[e % 4];
}

}  // namespace

void check_dense_guard(int64_t dim, const char *what) {
    if (dim > kDenseGuard) {
        throw std::invalid_argument(
            std::string(what) + ": dimension " + std::to_string(dim) + " exceeds the dense guard " +
            std::to_string(kDenseGuard));
    }
}

double max_abs(const Matrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix &m, double tol) {
    return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

bool is_unitary(const Matrix &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    return max_abs(m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())) <= tol;
}

bool is_finite(const Matrix &m) {
    return m.allFinite();
}

int qubits_of_dim(int64_t d) {
    if (d < 2 || (d & (d - 1)) != 0) {
        throw std::invalid_argument("dimension " + std::to_string(d) + " is not a power of two");
    }
    return std::countr_zero(uint64_t(d));
}

DenseUnitary::DenseUnitary(Matrix m, double tol) : m_(std::move(m)) {
    if (!is_finite(m_) || !is_unitary(m_, tol)) {
        throw std::invalid_argument("matrix is not unitary within tolerance");
    }
}

DenseUnitary DenseUnitary::adjoint() const {
    DenseUnitary u;
    u.m_ = m_.adjoint();
    return u;
}

DenseUnitary DenseUnitary::operator*(const DenseUnitary &other) const {
    DenseUnitary u;
    u.m_ = m_ * other.m_;
    return u;
}

Matrix pauli_to_dense(const PauliString &p) {
    int64_t d = int64_t{1} << p.n;
    check_dense_guard(d, "pauli_to_dense");
    PauliAction a = action_of(p);
    Matrix m = Matrix::Zero(d, d);
    for (int64_t b = 0; b < d; b++) {
        m(b ^ a.flip, b) = coef(a, b);
    }
    return m;
}

Matrix pauli_left(const PauliString &p, const Matrix &m) {
    if (m.rows() != (int64_t{1} << p.n)) {
        throw std::invalid_argument("pauli_left: dimension mismatch");
    }
    PauliAction a = action_of(p);
    Matrix out(m.rows(), m.cols());
    for (int64_t b = 0; b < m.rows(); b++) {
        out.row(b ^ a.flip) = coef(a, b) * m.row(b);
    }
    return out;
}

Matrix pauli_right(const Matrix &m, const PauliString &p) {
    if (m.cols() != (int64_t{1} << p.n)) {
        throw std::invalid_argument("pauli_right: dimension mismatch");
    }
    PauliAction a = action_of(p);
    Matrix out(m.rows(), m.cols());
    for (int64_t c = 0; c < m.cols(); c++) {
        out.col(c) = coef(a, c) * m.col(c ^ a.flip);
    }
    return out;
}

Matrix heisenberg(const Matrix &u, const PauliString &p) {
    return u.adjoint() * pauli_left(p, u);
}

DenseUnitary haar_unitary(int d, Rng &rng) {
    if (d < 1) {
        throw std::invalid_argument("haar_unitary: d must be positive");
    }
    check_dense_guard(d, "haar_unitary");
    while (true) {
        Matrix g(d, d);
        for (int j = 0; j < d; j++) {
            for (int i = 0; i < d; i++) {
                g(i, j) = rng.complex_normal();
            }
        }
        Eigen::HouseholderQR<Matrix> qr(g);
        Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
        Matrix q = qr.householderQ();
        bool ok = true;
        for (int j = 0; j < d; j++) {
            double a = std::abs(r(j, j));
            if (a < 1e-12) {
                ok = false;
                break;
            }
            q.col(j) *= r(j, j) / a;
        }
        if (ok) {
            return DenseUnitary(std::move(q));
        }
    }
}

Matrix gue_hamiltonian(int d, Rng &rng) {
    if (d < 1) {
        throw std::invalid_argument("gue_hamiltonian: d must be positive");
    }
    check_dense_guard(d, "gue_hamiltonian");
    // E|G_ij|^2 = 2/d gives E tr H^2 = d.
    double scale = std::sqrt(2.0 / d);
    Matrix g(d, d);
    for (int j = 0; j < d; j++) {
        for (int i = 0; i < d; i++) {
            g(i, j) = scale * rng.complex_normal();
        }
    }
    Matrix h = (g + g.adjoint()) * 0.5;
    for (int i = 0; i < d; i++) {
        h(i, i) = h(i, i).real();
    }
    return h;
}

Matrix hermitian_function(const Matrix &h, const std::function<Complex(double)> &f) {
    if (!is_hermitian(h)) {
        throw std::invalid_argument("matrix is not Hermitian within 1e-10");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("Hermitian eigendecomposition failed");
    }
    const auto &vals = es.eigenvalues();
    Eigen::VectorXcd fv(vals.size());
    for (int i = 0; i < vals.size(); i++) {
        fv(i) = f(vals(i));
    }
    const Matrix &v = es.eigenvectors();
    return v * fv.asDiagonal() * v.adjoint();
}

DenseUnitary evolve(const Matrix &h, double t) {
    Matrix u = hermitian_function(h, [t](double e) { return std::exp(Complex(0, -e * t)); });
    return DenseUnitary(std::move(u));
}

void check_density_matrix(const Matrix &rho, double tol) {
    if (!is_hermitian(rho, tol)) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - Complex(1, 0)) > tol) {
        throw std::invalid_argument("density matrix does not have unit trace");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-12) {
        throw std::invalid_argument("density matrix is not positive semidefinite");
    }
}

Matrix psd_power(const Matrix &rho, double p) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
    if (es.eigenvalues().minCoeff() < -1e-12) {
        throw std::invalid_argument("psd_power: matrix is not positive semidefinite");
    }
    return hermitian_function(rho, [p](double e) { return e <= 0 ? Complex(0) : Complex(std::pow(e, p)); });
}

Matrix tensor(const Matrix &a, const Matrix &b) {
    check_dense_guard(a.rows() * b.rows(), "tensor");
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int64_t i = 0; i < a.rows(); i++) {
        for (int64_t j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix tensor_power(const Matrix &a, int k) {
    if (k < 1) {
        throw std::invalid_argument("tensor_power: k must be positive");
    }
    Matrix out = a;
    for (int i = 1; i < k; i++) {
        out = tensor(out, a);
    }
    return out;
}

Matrix partial_trace(const Matrix &rho, const std::vector<bool> &keep) {
    int n = int(keep.size());
    if (rho.rows() != rho.cols() || rho.rows() != (int64_t{1} << n)) {
        throw std::invalid_argument("partial_trace: mask length does not match dimension");
    }
    std::vector<int64_t> kept_bits;
    std::vector<int64_t> traced_bits;
    for (int q = 0; q < n; q++) {
        (keep[q] ? kept_bits : traced_bits).push_back(int64_t{1} << (n - 1 - q));
    }
    auto offsets = [](const std::vector<int64_t> &bits) {
        int m = int(bits.size());
        std::vector<int64_t> out(size_t{1} << m, 0);
        for (size_t v = 0; v < out.size(); v++) {
            for (int j = 0; j < m; j++) {
                // Bit (m-1-j) of v drives the j-th listed qubit.
                if ((v >> (m - 1 - j)) & 1) {
                    out[v] |= bits[j];
                }
            }
        }
        return out;
    };
    auto ko = offsets(kept_bits);
    auto to = offsets(traced_bits);
    int64_t dk = int64_t(ko.size());
    Matrix out = Matrix::Zero(dk, dk);
    for (int64_t i = 0; i < dk; i++) {
        for (int64_t j = 0; j < dk; j++) {
            Complex s = 0;
            for (int64_t t : to) {
                s += rho(ko[i] | t, ko[j] | t);
            }
            out(i, j) = s;
        }
    }
    return out;
}

int64_t permuted_index(const Permutation &pi, int d, int64_t a) {
    int k = pi.size();
    thread_local std::vector<int64_t> digits;
    digits.assign(k, 0);
    for (int j = k - 1; j >= 0; j--) {
        digits[j] = a % d;
        a /= d;
    }
    int64_t out = 0;
    for (int j = 0; j < k; j++) {
        out = out * d + digits[pi(j)];
    }
    return out;
}

DenseUnitary permutation_operator(const Permutation &pi, int d) {
    int64_t dim = 1;
    for (int j = 0; j < pi.size(); j++) {
        dim *= d;
        check_dense_guard(dim, "permutation_operator");
    }
    Matrix w = Matrix::Zero(dim, dim);
    for (int64_t a = 0; a < dim; a++) {
        w(permuted_index(pi, d, a), a) = 1;
    }
    return DenseUnitary(std::move(w));
}

Complex trace_with_permutation(const Permutation &pi, int d, const Matrix &a) {
    Complex s = 0;
    for (int64_t c = 0; c < a.rows(); c++) {
        s += a(c, permuted_index(pi, d, c));
    }
    return s;
}

Estimate random_sign_state_overlap(int d, int64_t pairs, uint64_t seed) {
    if (d < 2) {
        throw std::invalid_argument("random_sign_state_overlap: d must be at least 2");
    }
    if (pairs < 2) {
        throw std::invalid_argument("random_sign_state_overlap: need at least 2 pairs");
    }
    std::vector<double> samples(pairs);
    for (int64_t p = 0; p < pairs; p++) {
        Rng rng(seed, uint64_t(p));
        int64_t dot = 0;
        for (int i = 0; i < d; i += 64) {
            uint64_t a = rng.bits();
            uint64_t b = rng.bits();
            int m = std::min(64, d - i);
            uint64_t mask = m == 64 ? ~uint64_t{0} : ((uint64_t{1} << m) - 1);
            int disagree = std::popcount((a ^ b) & mask);
            dot += m - 2 * disagree;
        }
        samples[p] = std::abs(double(dot)) / d;
    }
    return summarize(samples, seed);
}

}  // namespace designlab
