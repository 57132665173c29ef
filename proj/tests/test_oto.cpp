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

#include "designlab/clifford.hpp"
#include "designlab/dense.hpp"
#include "designlab/ensemble.hpp"
#include "designlab/oto.hpp"
#include "designlab/rng.hpp"

using namespace designlab;

namespace {

PauliString P(const char *s) { return PauliString::parse(s); }

Matrix hadamard() {
    Matrix h(2, 2);
    h << 1, 1, 1, -1;
    return h / std::sqrt(2.0);
}

}  // namespace

TEST(OtoCorrelator, Examples) {
    DenseUnitary id2{Matrix::Identity(2, 2)};
    EXPECT_NEAR(std::abs(oto_correlator(id2, OtoSpec({P("X")}, {P("X")})) - 1.0), 0, 1e-15);
    Rng rng(1);
    DenseUnitary id4{Matrix::Identity(4, 4)};
    for (int i = 0; i < 20; i++) {
        auto a1 = random_pauli(2, rng, false), b1 = random_pauli(2, rng, false);
        auto a2 = random_pauli(2, rng, false), b2 = random_pauli(2, rng, false);
        Complex want = trace_product({a1, b1, a2, b2}) / 4.0;
        EXPECT_LT(std::abs(oto_correlator(id4, OtoSpec({a1, a2}, {b1, b2})) - want), 1e-14);
    }
    DenseUnitary h{hadamard()};
    EXPECT_LT(std::abs(oto_correlator(h, OtoSpec({P("Z")}, {P("Z")}))), 1e-15);
    EXPECT_LT(std::abs(oto_correlator(h, OtoSpec({P("X")}, {P("Z")})) - 1.0), 1e-15);
}

TEST(OtoCorrelator, SpecValidation) {
    EXPECT_THROW(OtoSpec({P("X")}, {P("X"), P("Z")}), std::invalid_argument);
    EXPECT_THROW(OtoSpec({P("X")}, {P("XX")}), std::invalid_argument);
    EXPECT_EQ(parse_ordering("commutator-type"), Ordering::commutator);
    EXPECT_EQ(parse_ordering(ordering_name(Ordering::non_commutator)), Ordering::non_commutator);
    EXPECT_THROW(parse_ordering("sideways"), std::invalid_argument);
}

TEST(OtoCorrelator, CommutatorOrderingWord) {
    // A B~ C D~ A^dag D~^dag C^dag B~^dag.
    OtoSpec s({P("X"), P("Y")}, {P("Z"), P("X")}, Ordering::commutator);
    auto w = expand_word(s);
    ASSERT_EQ(w.size(), 8u);
    std::vector<std::pair<PauliString, bool>> want = {{P("X"), false}, {P("Z"), true},  {P("Y"), false},
                                                      {P("X"), true},  {P("X"), false}, {P("X"), true},
                                                      {P("Y"), false}, {P("Z"), true}};
    for (size_t i = 0; i < 8; i++) {
        EXPECT_TRUE(w[i].op.x == want[i].first.x && w[i].op.z == want[i].first.z) << i;
        EXPECT_EQ(w[i].evolved, want[i].second) << i;
    }
    Rng rng(2);
    DenseUnitary u = haar_unitary(2, rng);
    Matrix a = pauli_to_dense(P("X")), c = pauli_to_dense(P("Y"));
    Matrix bt = u.matrix().adjoint() * pauli_to_dense(P("Z")) * u.matrix();
    Matrix dt = u.matrix().adjoint() * pauli_to_dense(P("X")) * u.matrix();
    Matrix word = a * bt * c * dt * a.adjoint() * dt.adjoint() * c.adjoint() * bt.adjoint();
    EXPECT_LT(std::abs(oto_correlator(u, s) - word.trace() / 2.0), 1e-12);
}

TEST(OtoCorrelator, IdentityBsReduceToPlainTrace) {
    Rng rng(3);
    for (int k = 1; k <= 4; k++) {
        std::vector<PauliString> a, b;
        for (int j = 0; j < k; j++) {
            a.push_back(random_pauli(2, rng, false));
            b.push_back(PauliString::identity(2));
        }
        DenseUnitary u = haar_unitary(4, rng);
        Complex want = trace_product(std::span<const PauliString>(a)) / 4.0;
        EXPECT_LT(std::abs(oto_correlator(u, OtoSpec(a, b)) - want), 1e-12) << k;
    }
}

TEST(OtoAverage, HaarFourPoint) {
    OtoSpec s({P("X"), P("X")}, {P("Z"), P("Z")});
    ComplexEstimate e = oto_ensemble_average(haar_ensemble(2, 4), s, 20000);
    EXPECT_EQ(e.method, Method::monte_carlo);
    EXPECT_TRUE(e.within(-1.0 / 3, 5)) << e.value << " +- " << e.std_error;
}

TEST(OtoAverage, CliffordFourPointIsExact) {
    OtoSpec s({P("X"), P("X")}, {P("Z"), P("Z")});
    ComplexEstimate e = oto_ensemble_average(clifford1_ensemble(), s, 0);
    EXPECT_EQ(e.method, Method::exact);
    EXPECT_LT(std::abs(e.value + 1.0 / 3), 1e-12);
}

TEST(OtoAverage, PauliFourPointFactorizes) {
    // A = X0, C = Z0 act on qubit 0; B = Z1, D = X1 on qubit 1.
    PauliString a = P("XI"), c = P("ZI"), b = P("IZ"), d = P("IX");
    ComplexEstimate e = oto_ensemble_average(pauli_ensemble(2), OtoSpec({a, c}, {b, d}), 0);
    Complex ac = trace_product({a, c}) / 4.0, bd = trace_product({b, d}) / 4.0;
    EXPECT_LT(std::abs(e.value - ac * bd), 1e-12);
    PauliString a2 = P("XI"), b2 = P("IY");
    e = oto_ensemble_average(pauli_ensemble(2), OtoSpec({a2, dagger(a2)}, {b2, dagger(b2)}), 0);
    EXPECT_LT(std::abs(e.value - 1.0), 1e-12);
    GaussianRational pred = predict(EnsembleKind::pauli, CorrelatorKind::four_point, 4, OtoSpec({a, c}, {b, d}));
    EXPECT_LT(std::abs(pred.to_complex() - ac * bd), 1e-15);
}

TEST(Regulated, Examples) {
    Rng rng(5);
    DenseUnitary u = haar_unitary(4, rng);
    OtoSpec s({P("XZ"), P("YI")}, {P("ZZ"), P("IX")});
    Matrix mixed = Matrix::Identity(4, 4) / 4.0;
    EXPECT_LT(std::abs(regulated_oto(mixed, u, s) - oto_correlator(u, s)), 1e-12);
    Matrix zero = Matrix::Zero(2, 2);
    zero(0, 0) = 1;
    DenseUnitary id{Matrix::Identity(2, 2)};
    EXPECT_LT(std::abs(regulated_oto(zero, id, OtoSpec({P("Z")}, {P("Z")})) - 1.0), 1e-12);
    Matrix bad = Matrix::Zero(2, 2);
    bad(0, 0) = 1.5;
    bad(1, 1) = -0.5;
    EXPECT_THROW(regulated_oto(bad, id, OtoSpec({P("Z")}, {P("Z")})), std::invalid_argument);
}

TEST(MTensor, Examples) {
    for (const auto &a : enumerate_paulis(1)) {
        for (const auto &c : enumerate_paulis(1)) {
            Complex want = (a.x == c.x && a.z == c.z) ? Complex(2) : Complex(0);
            EXPECT_EQ(m_tensor({a}, {c}), want);
        }
    }
    EXPECT_THROW(m_tensor_full(3, 2), std::invalid_argument);
}

TEST(MTensor, Orthogonality) {
    for (int k = 1; k <= 2; k++) {
        auto m = m_tensor_full(1, k);
        size_t dim = m.size();
        double d2k = std::pow(2.0, 2 * k);
        for (size_t a = 0; a < dim; a++) {
            for (size_t b = 0; b < dim; b++) {
                Complex s = 0;
                for (size_t c = 0; c < dim; c++) s += std::conj(m[a][c]) * m[b][c];
                EXPECT_EQ(s, Complex(a == b ? d2k : 0.0)) << k << " " << a << " " << b;
            }
        }
    }
}

TEST(MTensor, TupleIndexRoundTrip) {
    for (uint64_t i = 0; i < 256; i++) EXPECT_EQ(tuple_index(tuple_from_index(2, 2, i)), i);
    EXPECT_EQ(tuple_index({P("X"), P("I")}), 4u);
}

TEST(Reconstruct, Examples) {
    auto check = [](const ChannelCoefficients &g, const std::vector<PauliString> &support, Complex value) {
        for (uint64_t i = 0; i < g.gamma.size(); i++) {
            Complex want = i == tuple_index(support) ? value : Complex(0);
            EXPECT_LT(std::abs(g.gamma[i] - want), 1e-10) << i;
        }
    };
    std::vector<PauliString> xz = {P("X"), P("Z")};
    check(reconstruct_channel(measure_alpha(trivial_ensemble(1), xz), 2, 1), xz, 1.0);
    std::vector<PauliString> xx = {P("X"), P("X")};
    check(reconstruct_channel(measure_alpha(pauli_ensemble(1), xx), 2, 1), xx, 1.0);
    check(reconstruct_channel(measure_alpha(pauli_ensemble(1), xz), 2, 1), xz, 0.0);
    EXPECT_THROW(reconstruct_channel(std::vector<Complex>(15), 2, 1), std::invalid_argument);
}

TEST(Reconstruct, MatchesDirectExpansion) {
    std::vector<Ensemble> ensembles = {trivial_ensemble(1), pauli_ensemble(1), pauli_x_ensemble(1),
                                       clifford1_ensemble()};
    for (const auto &ens : ensembles) {
        for (int k = 1; k <= 2; k++) {
            for (uint64_t bi = 0; bi < (uint64_t(1) << (2 * k)); bi++) {
                auto b = tuple_from_index(1, k, bi);
                auto rec = reconstruct_channel(measure_alpha(ens, b), k, 1);
                auto dir = channel_coefficients_direct(ens, b);
                ASSERT_EQ(rec.gamma.size(), dir.gamma.size());
                for (size_t i = 0; i < rec.gamma.size(); i++)
                    EXPECT_LT(std::abs(rec.gamma[i] - dir.gamma[i]), 1e-10) << ens.label() << " " << k;
            }
        }
    }
}

TEST(Reconstruct, HaarChannelLivesOnPermutations) {
    // SWAP = (1/2) sum_P P (x) P, so the output has gamma_II and one shared
    // value on the diagonal pairs (P, P).
    Matrix xx = tensor(pauli_to_dense(P("X")), pauli_to_dense(P("X")));
    auto g = pauli_expand(haar_channel_reference(xx, 2, 2), 1, 2);
    Complex diag = g.at({P("X"), P("X")});
    for (const auto &p : enumerate_paulis(1)) {
        for (const auto &q : enumerate_paulis(1)) {
            Complex v = g.at({p, q});
            if (p.is_identity_up_to_phase() || q.is_identity_up_to_phase() || !(p == q)) {
                if (!(p.is_identity_up_to_phase() && q.is_identity_up_to_phase())) EXPECT_LT(std::abs(v), 1e-10);
            } else {
                EXPECT_LT(std::abs(v - diag), 1e-10);
            }
        }
    }
}

TEST(Predict, Examples) {
    OtoSpec four({P("X"), P("X")}, {P("Z"), P("Z")});
    EXPECT_EQ(predict(EnsembleKind::haar, CorrelatorKind::four_point, 2, four).re, make_rational(-1, 3));
    OtoSpec c8 = canonical_spec(CorrelatorKind::eight_point_commutator, 2);
    EXPECT_EQ(predict(EnsembleKind::haar, CorrelatorKind::eight_point_commutator, 4, c8).re,
              make_rational(-101, 1260));
    OtoSpec nest = canonical_spec(CorrelatorKind::nested, 1);
    EXPECT_EQ(predict(EnsembleKind::haar, CorrelatorKind::nested, 2, nest).re, make_rational(1, 9));
    EXPECT_EQ(predict(EnsembleKind::haar, CorrelatorKind::two_point_square, 4, canonical_spec(CorrelatorKind::two_point_square, 2)).re,
              make_rational(1, 15));
    OtoSpec six = canonical_spec(CorrelatorKind::six_point, 2);
    EXPECT_EQ(predict(EnsembleKind::haar, CorrelatorKind::six_point, 4, six).re, make_rational(32, 180));
}

TEST(Predict, UnsupportedPatternListsSupported) {
    OtoSpec bad({P("X"), P("Y")}, {P("Z"), P("Z")});
    try {
        predict(EnsembleKind::pauli, CorrelatorKind::six_point, 2, bad);
        FAIL() << "expected invalid_argument";
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find(supported_patterns()), std::string::npos);
    }
}

TEST(Predict, FourPointMatchesExactHaarAverage) {
    Rng rng(6);
    for (int i = 0; i < 40; i++) {
        std::vector<PauliString> a = {random_pauli(2, rng, false), random_pauli(2, rng, false)};
        std::vector<PauliString> b = {random_pauli(2, rng, false), random_pauli(2, rng, false)};
        OtoSpec s(a, b);
        GaussianRational exact = haar_average_exact(s);
        GaussianRational pred = predict(EnsembleKind::haar, CorrelatorKind::four_point, 4, s);
        EXPECT_TRUE(exact == pred) << a[0].str() << a[1].str() << b[0].str() << b[1].str();
    }
}

TEST(Predict, TwoPointMatchesExactAndSamples) {
    for (int n = 1; n <= 2; n++) {
        int64_t d = int64_t(1) << n;
        OtoSpec s = canonical_spec(CorrelatorKind::two_point_mean, n);
        EXPECT_TRUE(predict(EnsembleKind::haar, CorrelatorKind::two_point_mean, d, s) == haar_average_exact(s));
        OtoSpec sq = canonical_spec(CorrelatorKind::two_point_square, n);
        double want = to_double(predict(EnsembleKind::haar, CorrelatorKind::two_point_square, d, sq).re);
        Estimate m = oto_ensemble_mean_square(haar_ensemble(int(d), 7), OtoSpec({sq.a_ops[0]}, {sq.b_ops[0]}), 20000);
        EXPECT_TRUE(m.within(want, 5)) << n << " " << m.value;
    }
}

TEST(Predict, CliffordEightPointMatchesEnumeration) {
    auto paulis = enumerate_paulis(1);
    for (size_t a = 1; a < 4; a++) {
        for (size_t c = 1; c < 4; c++) {
            OtoSpec s({paulis[a], paulis[c]}, {P("Z"), P("X")}, Ordering::commutator);
            GaussianRational pred = predict(EnsembleKind::clifford, CorrelatorKind::eight_point_commutator, 2, s);
            ComplexEstimate e = oto_ensemble_average(clifford1_ensemble(), s, 0);
            EXPECT_LT(std::abs(e.value - pred.to_complex()), 1e-12) << a << " " << c;
        }
    }
}

TEST(Predict, NestedMatchesRestrictedAverage) {
    OtoSpec s = canonical_spec(CorrelatorKind::nested, 1);
    double want = to_double(predict(EnsembleKind::haar, CorrelatorKind::nested, 2, s).re);
    ComplexEstimate c = nested_restricted_average(clifford1_ensemble(), s.a_ops, s.b_ops.back(), 0);
    EXPECT_NEAR(c.value.real(), want, 1e-12);
    ComplexEstimate h = nested_restricted_average(haar_ensemble(2, 8), s.a_ops, s.b_ops.back(), 4000);
    EXPECT_TRUE(h.within(want, 5)) << h.value << " +- " << h.std_error;
}

TEST(HaarExact, SixAndEightPointValues) {
    // Values obtained independently by summing the Weingarten expansion.
    OtoSpec six = canonical_spec(CorrelatorKind::six_point, 2);
    EXPECT_EQ(haar_average_exact(six).re, make_rational(1, 9));
    OtoSpec c8 = canonical_spec(CorrelatorKind::eight_point_commutator, 2);
    EXPECT_EQ(haar_average_exact(c8).re, make_rational(-13, 315));
    ComplexEstimate mc = oto_ensemble_average(haar_ensemble(4, 9), c8, 20000);
    EXPECT_TRUE(mc.within(-13.0 / 315, 5)) << mc.value << " +- " << mc.std_error;
}

TEST(HaarExact, MatchesCliffordBelowFourthMoment) {
    // Words with at most three evolved factors only see the 3-design part.
    Rng rng(10);
    for (int i = 0; i < 30; i++) {
        std::vector<PauliString> a = {random_pauli(1, rng, false), random_pauli(1, rng, false)};
        std::vector<PauliString> b = {random_pauli(1, rng, false), random_pauli(1, rng, false)};
        OtoSpec s(a, b);
        Complex exact = haar_average_exact(s).to_complex();
        EXPECT_LT(std::abs(oto_ensemble_average(clifford1_ensemble(), s, 0).value - exact), 1e-12);
    }
}
