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

#include "designlab/scrambling.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "designlab/oto.hpp"

namespace designlab {

namespace {

std::vector<int> complement(int n, const std::vector<int> &s) {
    std::vector<int> out;
    for (int q = 0; q < n; q++) {
        if (std::find(s.begin(), s.end(), q) == s.end()) {
            out.push_back(q);
        }
    }
    return out;
}

std::vector<int> shifted(const std::vector<int> &s, int by) {
    std::vector<int> out;
    for (int q : s) {
        out.push_back(q + by);
    }
    return out;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int> &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

void check_partition_for(const DenseUnitary &u, const IoPartition &part) {
    if ((int64_t{1} << part.n) != u.dim()) {
        throw std::invalid_argument("partition qubit count does not match the unitary");
    }
}

}  // namespace

ChoiState choi_state(const DenseUnitary &u) {
    int64_t d = u.dim();
    check_dense_guard(d * d, "choi_state");
    ChoiState s;
    s.n = qubits_of_dim(d);
    s.amplitudes.resize(d * d);
    double norm = 1.0 / std::sqrt(double(d));
    const Matrix &m = u.matrix();
    for (int64_t j = 0; j < d; j++) {
        for (int64_t i = 0; i < d; i++) {
            s.amplitudes[j * d + i] = m(i, j) * norm;
        }
    }
    return s;
}

Matrix reduced_density(const Vector &psi, int total, const std::vector<int> &keep) {
    int64_t dim = int64_t{1} << total;
    if (psi.size() != dim) {
        throw std::invalid_argument("reduced_density: vector length is not 2^total");
    }
    for (int q : keep) {
        if (q < 0 || q >= total) {
            throw std::invalid_argument("reduced_density: qubit out of range");
        }
    }
    std::vector<int> traced;
    for (int q = 0; q < total; q++) {
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) {
            traced.push_back(q);
        }
    }
    int64_t dk = int64_t{1} << keep.size();
    int64_t dt = int64_t{1} << traced.size();
    Matrix m = Matrix::Zero(dk, dt);
    for (int64_t idx = 0; idx < dim; idx++) {
        int64_t r = 0;
        for (int q : keep) {
            r = (r << 1) | ((idx >> (total - 1 - q)) & 1);
        }
        int64_t c = 0;
        for (int q : traced) {
            c = (c << 1) | ((idx >> (total - 1 - q)) & 1);
        }
        m(r, c) = psi[idx];
    }
    return m * m.adjoint();
}

double renyi_entropy(const Matrix &rho, int k) {
    check_density_matrix(rho);
    if (k < 1) {
        throw std::invalid_argument("renyi_entropy needs integer k >= 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
    Eigen::VectorXd w = es.eigenvalues().cwiseMax(0.0);
    if (k == 1) {
        double s = 0;
        for (double p : w) {
            if (p > 0) {
                s -= p * std::log2(p);
            }
        }
        return s;
    }
    double tr = 0;
    for (double p : w) {
        tr += std::pow(p, k);
    }
    return std::log2(tr) / (1.0 - k);
}

IoPartition::IoPartition(int n_, std::vector<int> a_, std::vector<int> d_) : n(n_), a(std::move(a_)), d(std::move(d_)) {
    if (n < 1) {
        throw std::invalid_argument("partition needs n >= 1");
    }
    for (auto *s : {&a, &d}) {
        std::sort(s->begin(), s->end());
        if (std::adjacent_find(s->begin(), s->end()) != s->end()) {
            throw std::invalid_argument("partition lists a qubit twice");
        }
        for (int q : *s) {
            if (q < 0 || q >= n) {
                throw std::invalid_argument("partition qubit out of range");
            }
        }
    }
}

IoPartition IoPartition::parse(std::string_view text, int n) {
    std::vector<int> a, d;
    bool seen_a = false, seen_d = false;
    std::string s(text);
    std::stringstream groups(s);
    std::string group;
    while (std::getline(groups, group, ';')) {
        auto eq = group.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("partition group '" + group + "' lacks '='");
        }
        std::string key = group.substr(0, eq);
        std::vector<int> *target = nullptr;
        if (key == "A") {
            target = &a;
            seen_a = true;
        } else if (key == "D") {
            target = &d;
            seen_d = true;
        } else {
            throw std::invalid_argument("partition key must be A or D, got '" + key + "'");
        }
        std::stringstream qs(group.substr(eq + 1));
        std::string q;
        while (std::getline(qs, q, ',')) {
            if (q.empty()) {
                continue;
            }
            size_t used = 0;
            int v = std::stoi(q, &used);
            if (used != q.size()) {
                throw std::invalid_argument("bad qubit index '" + q + "'");
            }
            target->push_back(v);
        }
    }
    if (!seen_a || !seen_d) {
        throw std::invalid_argument("partition needs both A= and D=");
    }
    return IoPartition(n, a, d);
}

std::vector<int> IoPartition::b() const { return complement(n, a); }
std::vector<int> IoPartition::c() const { return complement(n, d); }

std::string IoPartition::str() const {
    auto list = [](const std::vector<int> &v) {
        std::string s;
        for (size_t i = 0; i < v.size(); i++) {
            s += (i ? "," : "") + std::to_string(v[i]);
        }
        return s;
    };
    return "A=" + list(a) + ";D=" + list(d);
}

std::vector<PauliString> paulis_on(int n, const std::vector<int> &qubits) {
    static const char letters[4] = {'I', 'X', 'Z', 'Y'};
    uint64_t count = uint64_t{1} << (2 * qubits.size());
    std::vector<PauliString> out;
    out.reserve(count);
    for (uint64_t t = 0; t < count; t++) {
        PauliString p = PauliString::identity(n);
        uint64_t r = t;
        for (size_t j = qubits.size(); j-- > 0;) {
            p = mul(p, PauliString::single(n, qubits[j], letters[r & 3]));
            r >>= 2;
        }
        out.push_back(p);
    }
    return out;
}

IdentityCheck oto_renyi2_check(const DenseUnitary &u, const IoPartition &part) {
    return renyi_k_oto(u, part, 2);
}

IdentityCheck renyi_k_oto(const DenseUnitary &u, const IoPartition &part, int k) {
    check_partition_for(u, part);
    if (k < 2) {
        throw std::invalid_argument("renyi_k_oto needs k >= 2");
    }
    int64_t d = u.dim();
    int64_t dk = 1;
    for (int j = 0; j < k; j++) {
        dk *= d;
        check_dense_guard(dk, "renyi_k_oto");
    }
    int n = part.n;
    auto as = paulis_on(n, part.a);
    auto ds = paulis_on(n, part.d);
    std::vector<Matrix> dt;
    for (const auto &p : ds) {
        dt.push_back(heisenberg(u.matrix(), p));
    }
    uint64_t na = as.size(), nd = ds.size();
    uint64_t combos_a = 1, combos_d = 1;
    for (int j = 0; j + 1 < k; j++) {
        combos_a *= na;
        combos_d *= nd;
    }
    if (combos_a * combos_d > (uint64_t{1} << 22)) {
        throw std::invalid_argument("renyi_k_oto: Pauli sum too large");
    }
    std::vector<Complex> terms;
    for (uint64_t ca = 0; ca < combos_a; ca++) {
        std::vector<PauliString> aw;
        uint64_t r = ca;
        PauliString prod = PauliString::identity(n);
        for (int j = 0; j + 1 < k; j++) {
            aw.push_back(as[r % na]);
            prod = mul(prod, aw.back());
            r /= na;
        }
        aw.push_back(dagger(prod));
        for (uint64_t cd = 0; cd < combos_d; cd++) {
            Matrix m = Matrix::Identity(d, d);
            uint64_t s = cd;
            PauliString dprod = PauliString::identity(n);
            for (int j = 0; j + 1 < k; j++) {
                const PauliString &dj = ds[s % nd];
                dprod = mul(dprod, dj);
                m = pauli_right(m, aw[j]) * dt[s % nd];
                s /= nd;
            }
            m = pauli_right(m, aw[k - 1]) * heisenberg(u.matrix(), dagger(dprod));
            terms.push_back(m.trace() / double(d));
        }
    }
    IdentityCheck out;
    out.lhs = pairwise_sum(terms).real() / double(terms.size());
    int64_t d_a = int64_t{1} << part.a.size();
    int64_t d_d = int64_t{1} << part.d.size();
    Matrix rho_ac = reduced_density(choi_state(u).amplitudes, 2 * n, concat(part.a, shifted(part.c(), n)));
    double s_k = renyi_entropy(rho_ac, k);
    out.rhs = std::pow(double(d) / double(d_a * d_d), k - 1) * std::exp2(-(k - 1) * s_k);
    return out;
}

double mutual_info_2(const DenseUnitary &u, const IoPartition &part) {
    check_partition_for(u, part);
    int n = part.n;
    Vector psi = choi_state(u).amplitudes;
    auto s2 = [&](const std::vector<int> &keep) { return renyi_entropy(reduced_density(psi, 2 * n, keep), 2); };
    std::vector<int> a = part.a;
    std::vector<int> bd = concat(part.b(), shifted(part.d, n));
    double value = s2(a) + s2(bd) - s2(concat(a, bd));
    double from_oto = -std::log2(oto_renyi2_check(u, part).lhs);
    if (std::abs(value - from_oto) > 1e-10) {
        throw std::logic_error("Renyi-2 mutual information disagrees with the OTO average");
    }
    return value;
}

double catch_game(const DenseUnitary &u, const PerturbationDistribution &dist) {
    int64_t d = u.dim();
    check_dense_guard(d * d, "catch_game");
    int n = qubits_of_dim(d);
    double total = 0;
    for (const auto &[p, w] : dist) {
        if (p.n != n) {
            throw std::invalid_argument("perturbation acts on the wrong number of qubits");
        }
        if (!(w >= 0)) {
            throw std::invalid_argument("perturbation weights must be nonnegative");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-10) {
        throw std::invalid_argument("perturbation distribution is not normalized");
    }
    // (X (x) Y)|psi> is X Psi Y^T for |psi> = sum Psi_{jj'} |j>|j'>.
    Matrix epr = Matrix::Identity(d, d) / std::sqrt(double(d));
    const Matrix &m = u.matrix();
    double prob = 0;
    for (const auto &[p, w] : dist) {
        Matrix phi = m * pauli_left(p, epr) * m.adjoint();
        prob += w * std::norm((epr.conjugate().array() * phi.array()).sum());
    }
    return prob;
}

}  // namespace designlab
