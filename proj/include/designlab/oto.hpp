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

#ifndef DESIGNLAB_OTO_HPP
#define DESIGNLAB_OTO_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "designlab/dense.hpp"
#include "designlab/ensemble.hpp"
#include "designlab/estimate.hpp"
#include "designlab/pauli.hpp"
#include "designlab/wg.hpp"

namespace designlab {

enum class Ordering {
    // A1 B1~ ... Ak Bk~
    standard,
    // A1 K A1^dag K^dag with K = B1~ A2 B2~ ... Ak Bk~; for k = 2 this is
    // A B~ C D~ A^dag D~^dag C^dag B~^dag.
    commutator,
    // A1 B1~ ... Ak Bk~ A1^dag B1~^dag ... Ak^dag Bk~^dag
    non_commutator,
    // A1 B1~ ... Am Bm~ Am^dag B(m-1)~^dag A(m-1)^dag ... B1~^dag A1^dag Bm~^dag
    nested,
};

std::string ordering_name(Ordering o);
Ordering parse_ordering(const std::string &name);

struct OtoSpec {
    std::vector<PauliString> a_ops;
    std::vector<PauliString> b_ops;
    Ordering ordering = Ordering::standard;

    OtoSpec() = default;
    OtoSpec(std::vector<PauliString> a, std::vector<PauliString> b, Ordering ordering = Ordering::standard);

    int k() const { return int(a_ops.size()); }
    int n() const { return a_ops.empty() ? 0 : a_ops[0].n; }
};

struct WordFactor {
    PauliString op;
    // True for B~ = U^dag B U.
    bool evolved = false;
};

std::vector<WordFactor> expand_word(const OtoSpec &spec);

// (1/d) tr of the word with U applied to the evolved factors.
Complex evaluate_word(const Matrix &u, const std::vector<WordFactor> &word);
Complex oto_correlator(const DenseUnitary &u, const OtoSpec &spec);

// Exact weighted sum for discrete ensembles (Pauli and Clifford elements use
// exact Pauli algebra), Monte-Carlo mean over draws 0..samples-1 otherwise.
ComplexEstimate oto_ensemble_average(const Ensemble &ens, const OtoSpec &spec, int64_t samples);
// Ensemble mean of |correlator|^2.
Estimate oto_ensemble_mean_square(const Ensemble &ens, const OtoSpec &spec, int64_t samples);

// tr(r A1 r B1~ ... r Ak r Bk~), r = rho^{1/L} for a word of length L.
Complex regulated_oto(const Matrix &rho, const DenseUnitary &u, const OtoSpec &spec);

// Exact Haar average by Weingarten calculus. Needs the number of evolved
// blocks (after merging neighbours) to be at most d.
GaussianRational haar_average_exact(const OtoSpec &spec);

// Average over A1, ..., A(m-1)... of the nested word: B1..B(m-1) run over all
// non-identity Paulis; the A's and Bm stay fixed.
ComplexEstimate nested_restricted_average(
    const Ensemble &ens, const std::vector<PauliString> &a_ops, const PauliString &b_last, int64_t samples);

// 8-point commutator or non-commutator correlator averaged over the orbit of
// (A, C): all non-identity A != C whose commutation relation is fixed by
// `ac_commute`, with B and D fixed. Each draw contributes the exact orbit sum.
ComplexEstimate eight_point_orbit_average(
    const Ensemble &ens, Ordering ordering, const PauliString &b, const PauliString &d_op, bool ac_commute,
    int64_t samples);

// Theorem-1 machinery. Tuples of Pauli labels are indexed by
// sum_j index(P_j) * 4^{n(k-1-j)}.
uint64_t tuple_index(const std::vector<PauliString> &labels);
std::vector<PauliString> tuple_from_index(int n, int k, uint64_t index);

Complex m_tensor(const std::vector<PauliString> &a_labels, const std::vector<PauliString> &c_labels);
// Full tensor M[a][c], guarded at n*k <= 5.
std::vector<std::vector<Complex>> m_tensor_full(int n, int k);

struct ChannelCoefficients {
    int k = 0;
    int n = 0;
    // gamma[tuple_index(C)].
    std::vector<Complex> gamma;

    Complex at(const std::vector<PauliString> &c_labels) const { return gamma.at(tuple_index(c_labels)); }
};

// alpha[tuple_index(A)] = <(1/d) tr(A1 B1~ ... Ak Bk~)>_ens for all A tuples.
std::vector<Complex> measure_alpha(const Ensemble &ens, const std::vector<PauliString> &b_labels, int64_t samples = 0);
ChannelCoefficients reconstruct_channel(const std::vector<Complex> &alpha, int k, int n);
ChannelCoefficients channel_coefficients_direct(const Ensemble &ens, const std::vector<PauliString> &b_labels, int64_t samples = 0);
// Expansion of a dense operator on d^k in the k-fold Pauli basis.
ChannelCoefficients pauli_expand(const Matrix &op, int n, int k);

enum class EnsembleKind { haar, clifford, pauli };
enum class CorrelatorKind {
    two_point_mean,
    two_point_square,
    four_point,
    six_point,
    eight_point_commutator,
    nested,
};

std::string correlator_kind_name(CorrelatorKind k);
// Closed-form table. The Pauli relations come from the operators in spec.
// Throws std::invalid_argument listing the supported patterns otherwise.
GaussianRational predict(EnsembleKind ensemble, CorrelatorKind kind, int64_t d, const OtoSpec &spec);
std::string supported_patterns();

// Canonical operators realizing a correlator kind on n qubits.
OtoSpec canonical_spec(CorrelatorKind kind, int n);

}  // namespace designlab

#endif
