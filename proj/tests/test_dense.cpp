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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "designlab/clifford.hpp"
#include "designlab/dense.hpp"
#include "designlab/ensemble.hpp"
#include "designlab/io.hpp"
#include "designlab/permutation.hpp"
#include "designlab/rng.hpp"
#include "designlab/wg.hpp"

using namespace designlab;

namespace {

Matrix random_matrix(int d, Rng &rng) {
    Matrix m(d, d);
    for (int i = 0; i < d; i++)
        for (int j = 0; j < d; j++) m(i, j) = rng.complex_normal();
    return m;
}

Matrix random_density(int d, Rng &rng) {
    Matrix g = random_matrix(d, rng);
    Matrix r = g * g.adjoint();
    return r / r.trace().real();
}

// Two-sample Kolmogorov-Smirnov statistic.
double ks_statistic(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    size_t i = 0, j = 0;
    double best = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j]) {
            i++;
        } else {
            j++;
        }
        best = std::max(best, std::abs(double(i) / a.size() - double(j) / b.size()));
    }
    return best;
}

}  // namespace

TEST(Haar, UnitarityOverManyDraws) {
    Rng rng(1);
    for (int i = 0; i < 1000; i++) {
        DenseUnitary u = haar_unitary(8, rng);
        Matrix e = u.matrix().adjoint() * u.matrix() - Matrix::Identity(8, 8);
        ASSERT_LE(max_abs(e), 1e-12);
    }
}

TEST(Haar, FirstFramePotentialMoment) {
    Rng rng(2);
    std::vector<double> v;
    for (int i = 0; i < 5000; i++) {
        DenseUnitary a = haar_unitary(4, rng);
        DenseUnitary b = haar_unitary(4, rng);
        v.push_back(std::norm((a.matrix().adjoint() * b.matrix()).trace()));
    }
    EXPECT_TRUE(summarize(v, 2).within(1.0, 5));
}

TEST(Haar, LeftInvariance) {
    Rng rng(3);
    DenseUnitary w = haar_unitary(2, rng);
    std::vector<double> plain, shifted;
    for (int i = 0; i < 10000; i++) {
        plain.push_back(std::abs(haar_unitary(2, rng).matrix().trace()));
        shifted.push_back(std::abs((w.matrix() * haar_unitary(2, rng).matrix()).trace()));
    }
    // Critical value at alpha = 0.001.
    EXPECT_LT(ks_statistic(plain, shifted), 1.95 * std::sqrt(2.0 / 10000));
}

TEST(Haar, SecondMomentOfEntry) {
    Rng rng(4);
    std::vector<double> v;
    for (int i = 0; i < 20000; i++) v.push_back(std::norm(haar_unitary(4, rng).matrix()(0, 0)));
    EXPECT_TRUE(summarize(v, 4).within(0.25, 5));
}

TEST(Gue, Normalization) {
    Rng rng(5);
    std::vector<double> tr2, tr1;
    for (int i = 0; i < 10000; i++) {
        Matrix h = gue_hamiltonian(4, rng);
        ASSERT_EQ(max_abs(h - h.adjoint()), 0.0);
        tr2.push_back((h * h).trace().real() / 4);
        tr1.push_back(h.trace().real());
    }
    EXPECT_TRUE(summarize(tr2, 5).within(1.0, 5));
    EXPECT_TRUE(summarize(tr1, 5).within(0.0, 5));
}

TEST(Evolve, Examples) {
    Rng rng(6);
    Matrix h = gue_hamiltonian(4, rng);
    EXPECT_LT(max_abs(evolve(h, 0).matrix() - Matrix::Identity(4, 4)), 1e-12);
    Matrix diag = Matrix::Zero(3, 3);
    double e[3] = {0.3, -1.2, 2.5};
    for (int j = 0; j < 3; j++) diag(j, j) = e[j];
    Matrix u = evolve(diag, 0.7).matrix();
    for (int j = 0; j < 3; j++) EXPECT_LT(std::abs(u(j, j) - std::polar(1.0, -e[j] * 0.7)), 1e-12);
    EXPECT_LT(max_abs((evolve(h, 0.4) * evolve(h, 1.1)).matrix() - evolve(h, 1.5).matrix()), 1e-10);
    Matrix bad = Matrix::Zero(2, 2);
    bad(0, 1) = 1;
    EXPECT_THROW(evolve(bad, 1), std::invalid_argument);
}

TEST(TensorPartialTrace, Examples) {
    EXPECT_EQ(max_abs(tensor(Matrix::Identity(2, 2), Matrix::Identity(2, 2)) - Matrix::Identity(4, 4)), 0.0);
    Vector epr = Vector::Zero(4);
    epr(0) = epr(3) = 1 / std::sqrt(2.0);
    Matrix rho = epr * epr.adjoint();
    EXPECT_LT(max_abs(partial_trace(rho, {true, false}) - Matrix::Identity(2, 2) / 2.0), 1e-15);
    Rng rng(7);
    Matrix r = random_density(8, rng);
    for (int mask = 0; mask < 8; mask++) {
        std::vector<bool> keep = {bool(mask & 4), bool(mask & 2), bool(mask & 1)};
        EXPECT_NEAR(partial_trace(r, keep).trace().real(), 1.0, 1e-12);
    }
    EXPECT_THROW(partial_trace(r, {true, false}), std::invalid_argument);
}

TEST(TensorPartialTrace, KeepsRightFactor) {
    Rng rng(8);
    Matrix a = random_density(2, rng);
    Matrix b = random_density(4, rng);
    EXPECT_LT(max_abs(partial_trace(tensor(a, b), {true, false, false}) - a), 1e-12);
    EXPECT_LT(max_abs(partial_trace(tensor(a, b), {false, true, true}) - b), 1e-12);
}

TEST(PermutationOperator, Examples) {
    EXPECT_EQ(max_abs(permutation_operator(Permutation::identity(3), 2).matrix() - Matrix::Identity(8, 8)), 0.0);
    // SWAP = (1/d) sum_P P (x) P^dag.
    Matrix swap = Matrix::Zero(4, 4);
    for (const auto &p : enumerate_paulis(1)) swap += tensor(pauli_to_dense(p), pauli_to_dense(dagger(p)));
    swap /= 2.0;
    EXPECT_LT(max_abs(permutation_operator(Permutation({1, 0}), 2).matrix() - swap), 1e-15);
    auto perms = enumerate_permutations(3);
    for (const auto &s : perms) {
        for (const auto &l : perms) {
            Complex tr = (permutation_operator(s, 3).matrix() * permutation_operator(l, 3).matrix()).trace();
            EXPECT_EQ(tr, Complex(std::pow(3.0, (s * l).num_cycles())));
        }
    }
}

TEST(PermutationOperator, ActionAndComposition) {
    // W_pi |a_1 a_2 a_3> = |a_pi(1) a_pi(2) a_pi(3)>.
    Permutation pi({1, 2, 0});
    Matrix w = permutation_operator(pi, 2).matrix();
    for (int a = 0; a < 8; a++) {
        int bits[3] = {(a >> 2) & 1, (a >> 1) & 1, a & 1};
        int out = (bits[pi(0)] << 2) | (bits[pi(1)] << 1) | bits[pi(2)];
        EXPECT_EQ(w(out, a), Complex(1));
    }
    auto perms = enumerate_permutations(3);
    for (const auto &s : perms) {
        for (const auto &t : perms) {
            Matrix lhs = permutation_operator(s, 2).matrix() * permutation_operator(t, 2).matrix();
            EXPECT_EQ(max_abs(lhs - permutation_operator(t * s, 2).matrix()), 0.0);
        }
    }
    EXPECT_THROW(permutation_operator(Permutation::identity(4), 10), std::invalid_argument);
}

TEST(PermutationOperator, PermutesTensorFactors) {
    Rng rng(9);
    Matrix a = random_matrix(2, rng), b = random_matrix(2, rng), c = random_matrix(2, rng);
    Matrix abc = tensor(tensor(a, b), c);
    Permutation pi({1, 2, 0});
    Matrix w = permutation_operator(pi, 2).matrix();
    Matrix conj = w * abc * w.adjoint();
    // Factor j of the result is factor pi(j) of the input.
    Matrix f[3] = {a, b, c};
    Matrix expect = tensor(tensor(f[pi(0)], f[pi(1)]), f[pi(2)]);
    EXPECT_LT(max_abs(conj - expect), 1e-12);
}

TEST(KfoldChannel, Examples) {
    Rng rng(10);
    Matrix a = random_matrix(2, rng);
    Matrix out = kfold_channel_apply(pauli_ensemble(1), a, 1, 0).mean;
    EXPECT_LT(max_abs(out - a.trace() / 2.0 * Matrix::Identity(2, 2)), 1e-12);
    Matrix a4 = random_matrix(4, rng);
    EXPECT_LT(max_abs(kfold_channel_apply(trivial_ensemble(2), a4, 1, 0).mean - a4), 1e-14);
    Matrix swap = permutation_operator(Permutation({1, 0}), 2).matrix();
    Matrix id = Matrix::Identity(4, 4);
    for (char c : {'X', 'Y', 'Z'}) {
        Matrix p = pauli_to_dense(PauliString::single(1, 0, c));
        Matrix phi = kfold_channel_apply(clifford1_ensemble(), tensor(p, p), 2, 0).mean;
        // Least-squares fit on span{I, SWAP}.
        Eigen::MatrixXcd basis(16, 2);
        basis.col(0) = Eigen::Map<const Eigen::VectorXcd>(id.data(), 16);
        basis.col(1) = Eigen::Map<const Eigen::VectorXcd>(swap.data(), 16);
        Eigen::VectorXcd y = Eigen::Map<const Eigen::VectorXcd>(phi.data(), 16);
        Eigen::VectorXcd coef = basis.colPivHouseholderQr().solve(y);
        EXPECT_LT((basis * coef - y).norm(), 1e-10);
    }
}

TEST(KfoldChannel, HaarSamplesConvergeToReference) {
    Rng rng(11);
    Matrix a = random_matrix(4, rng);
    ChannelEstimate est = kfold_channel_apply(haar_ensemble(2, 12), a, 2, 10000);
    Matrix ref = haar_channel_reference(a, 2, 2);
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            double dev = std::abs(est.mean(i, j) - ref(i, j));
            EXPECT_LE(dev, 5 * est.std_error(i, j) + 1e-12) << i << "," << j;
        }
    }
}

TEST(HaarChannelReference, Examples) {
    Rng rng(13);
    Matrix a = random_matrix(2, rng);
    EXPECT_LT(max_abs(haar_channel_reference(a, 1, 2) - a.trace() / 2.0 * Matrix::Identity(2, 2)), 1e-12);
    // k = 2, d = 2 with coefficients 1/(d^2-1) and -1/(d(d^2-1)).
    Matrix a2 = random_matrix(4, rng);
    Matrix s = permutation_operator(Permutation({1, 0}), 2).matrix();
    Matrix id = Matrix::Identity(4, 4);
    Complex ti = a2.trace(), ts = (s * a2).trace();
    double d = 2;
    Matrix want = (ti / (d * d - 1) - ts / (d * (d * d - 1))) * id + (ts / (d * d - 1) - ti / (d * (d * d - 1))) * s;
    EXPECT_LT(max_abs(haar_channel_reference(a2, 2, 2) - want), 1e-12);
    for (int k = 2; k <= 3; k++) {
        for (const auto &l : enumerate_permutations(k)) {
            Matrix w = permutation_operator(l, 4).matrix();
            EXPECT_LT(max_abs(haar_channel_reference(w, k, 4) - w), 1e-10);
        }
    }
    EXPECT_THROW(haar_channel_reference(Matrix::Identity(8, 8), 3, 2), std::domain_error);
}

TEST(RandomSignStates, OverlapScaling) {
    Estimate small = random_sign_state_overlap(1024, 10000, 14);
    EXPECT_LE(small.value, 2 / std::sqrt(1024.0));
    EXPECT_NEAR(small.value * std::sqrt(1024.0), std::sqrt(2 / M_PI), 0.03);
    Estimate big = random_sign_state_overlap(4096, 10000, 15);
    EXPECT_NEAR(big.value / small.value, 0.5, 0.05);
}

TEST(Ensembles, SamplersAreReproducible) {
    for (const auto &e : {haar_ensemble(4, 3), gue_evolution_ensemble(4, 0.5, 3), brickwork_ensemble(3, 4, 3),
                          clifford_ensemble(2, 3)}) {
        DenseUnitary a = e.draw_dense(17);
        DenseUnitary b = e.with_seed(3).draw_dense(17);
        EXPECT_EQ(max_abs(a.matrix() - b.matrix()), 0.0) << e.label();
        EXPECT_GT(max_abs(a.matrix() - e.draw_dense(18).matrix()), 0.0) << e.label();
    }
}

TEST(Ensembles, DiscreteWeightsValidated) {
    std::vector<WeightedElement> bad = {{0.5, PauliString::parse("X")}, {0.4, PauliString::parse("Z")}};
    EXPECT_THROW(Ensemble::discrete("bad", bad), std::invalid_argument);
    std::vector<WeightedElement> neg = {{1.5, PauliString::parse("X")}, {-0.5, PauliString::parse("Z")}};
    EXPECT_THROW(Ensemble::discrete("neg", neg), std::invalid_argument);
    EXPECT_THROW(Ensemble::uniform("empty", {}), std::invalid_argument);
    EXPECT_EQ(clifford1_ensemble().elements().size(), 24u);
    EXPECT_EQ(pauli_ensemble(2).elements().size(), 16u);
    EXPECT_EQ(pauli_x_ensemble(3).elements().size(), 8u);
}

TEST(Ensembles, BrickworkIsUnitary) {
    Rng rng(16);
    for (int n = 2; n <= 4; n++) {
        DenseUnitary u = brickwork_circuit(n, 3, rng);
        EXPECT_TRUE(is_unitary(u.matrix(), 1e-10));
    }
}

TEST(Io, EnsembleJsonRoundTrip) {
    Ensemble c = clifford1_ensemble();
    Ensemble back = ensemble_from_json(ensemble_to_json(c));
    ASSERT_EQ(back.elements().size(), 24u);
    for (size_t i = 0; i < 24; i++) {
        Matrix a = to_dense(c.elements()[i].element).matrix();
        Matrix b = to_dense(back.elements()[i].element).matrix();
        EXPECT_LT(max_abs(a - b), 1e-12);
    }
    Rng rng(17);
    Matrix u = haar_unitary(2, rng).matrix();
    nlohmann::json j = {{"kind", "discrete"},
                        {"label", "one"},
                        {"seed", 4},
                        {"elements", {{{"weight", 1.0}, {"matrix", matrix_to_json(u)}}}}};
    Ensemble one = ensemble_from_json(j);
    EXPECT_LT(max_abs(to_dense(one.elements()[0].element).matrix() - u), 1e-15);
    Ensemble h = ensemble_from_json(ensemble_to_json(haar_ensemble(4, 9)));
    EXPECT_FALSE(h.is_discrete());
    EXPECT_EQ(max_abs(h.draw_dense(3).matrix() - haar_ensemble(4, 9).draw_dense(3).matrix()), 0.0);
}

TEST(Dense, GuardsAndChecks) {
    EXPECT_THROW(check_dense_guard(8192, "x"), std::invalid_argument);
    Matrix rho = Matrix::Identity(2, 2);
    EXPECT_THROW(check_density_matrix(rho), std::invalid_argument);
    Matrix nonu = Matrix::Identity(2, 2) * 2.0;
    EXPECT_THROW(DenseUnitary{nonu}, std::invalid_argument);
    Matrix r = Matrix::Zero(2, 2);
    r(0, 0) = 0.7;
    r(1, 1) = 0.3;
    Matrix sq = psd_power(r, 0.5);
    EXPECT_LT(max_abs(sq * sq - r), 1e-14);
}
