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

#include "designlab/ensemble.hpp"

#include <cmath>
#include <stdexcept>

#include "designlab/rng.hpp"

namespace designlab {

DenseUnitary to_dense(const UnitarySource &u) {
    struct Visitor {
        DenseUnitary operator()(const PauliString &p) const {
            return DenseUnitary(pauli_to_dense(p));
        }
        DenseUnitary operator()(const CliffordTableau &c) const {
            return to_dense(c);
        }
        DenseUnitary operator()(const DenseUnitary &m) const {
            return m;
        }
        DenseUnitary operator()(const TimeEvolution &e) const {
            return evolve(e.hamiltonian, e.time);
        }
    };
    return std::visit(Visitor{}, u);
}

int source_dim(const UnitarySource &u) {
    struct Visitor {
        int operator()(const PauliString &p) const {
            return 1 << p.n;
        }
        int operator()(const CliffordTableau &c) const {
            return 1 << c.n();
        }
        int operator()(const DenseUnitary &m) const {
            return m.dim();
        }
        int operator()(const TimeEvolution &e) const {
            return int(e.hamiltonian.rows());
        }
    };
    return std::visit(Visitor{}, u);
}

Ensemble Ensemble::discrete(std::string label, std::vector<WeightedElement> elements) {
    if (elements.empty()) {
        throw std::invalid_argument("ensemble '" + label + "' is empty");
    }
    double total = 0;
    int dim = source_dim(elements[0].element);
    for (const auto &e : elements) {
        if (!(e.weight >= 0)) {
            throw std::invalid_argument("ensemble weights must be nonnegative");
        }
        if (source_dim(e.element) != dim) {
            throw std::invalid_argument("ensemble elements have mixed dimensions");
        }
        total += e.weight;
    }
    if (std::abs(total - 1) > 1e-12) {
        throw std::invalid_argument("ensemble weights sum to " + std::to_string(total) + ", not 1");
    }
    Ensemble ens;
    ens.discrete_ = true;
    ens.label_ = std::move(label);
    ens.dim_ = dim;
    ens.elements_ = std::move(elements);
    return ens;
}

Ensemble Ensemble::uniform(std::string label, std::vector<UnitarySource> elements) {
    std::vector<WeightedElement> w;
    double p = elements.empty() ? 0 : 1.0 / double(elements.size());
    for (auto &e : elements) {
        w.push_back({p, std::move(e)});
    }
    return discrete(std::move(label), std::move(w));
}

Ensemble Ensemble::sampler(SamplerSpec spec, Draw draw, uint64_t seed) {
    if (spec.d < 1) {
        throw std::invalid_argument("sampler dimension must be positive");
    }
    Ensemble ens;
    ens.discrete_ = false;
    ens.label_ = spec.label;
    ens.dim_ = spec.d;
    ens.seed_ = seed;
    ens.spec_ = std::move(spec);
    ens.draw_ = std::move(draw);
    return ens;
}

UnitarySource Ensemble::draw(uint64_t index) const {
    if (discrete_) {
        // Weighted pick, still a pure function of (seed, index).
        Rng rng(seed_, index);
        double r = rng.uniform();
        double acc = 0;
        for (const auto &e : elements_) {
            acc += e.weight;
            if (r < acc) {
                return e.element;
            }
        }
        return elements_.back().element;
    }
    Rng rng(seed_, index);
    return draw_(rng);
}

DenseUnitary Ensemble::draw_dense(uint64_t index) const {
    return to_dense(draw(index));
}

Ensemble Ensemble::with_seed(uint64_t seed) const {
    Ensemble e = *this;
    e.seed_ = seed;
    return e;
}

Ensemble Ensemble::inverted() const {
    if (discrete_) {
        std::vector<WeightedElement> els;
        for (const auto &e : elements_) {
            UnitarySource inv;
            if (auto c = std::get_if<CliffordTableau>(&e.element)) {
                inv = c->inverse();
            } else if (auto p = std::get_if<PauliString>(&e.element)) {
                inv = dagger(*p);
            } else {
                inv = to_dense(e.element).adjoint();
            }
            els.push_back({e.weight, std::move(inv)});
        }
        return discrete(label_ + "-inverse", std::move(els));
    }
    SamplerSpec spec = spec_;
    spec.label += "-inverse";
    Draw inner = draw_;
    Ensemble e = sampler(spec, [inner](Rng &rng) -> UnitarySource { return to_dense(inner(rng)).adjoint(); }, seed_);
    return e;
}

Ensemble trivial_ensemble(int n) {
    return Ensemble::uniform("trivial", {PauliString::identity(n)});
}

Ensemble pauli_ensemble(int n) {
    std::vector<UnitarySource> els;
    for (const auto &p : enumerate_paulis(n)) {
        els.emplace_back(p);
    }
    return Ensemble::uniform("pauli", std::move(els));
}

Ensemble pauli_x_ensemble(int n) {
    if (n < 1 || n > 16) {
        throw std::invalid_argument("pauli_x_ensemble: n must be in [1, 16]");
    }
    std::vector<UnitarySource> els;
    for (uint64_t m = 0; m < (uint64_t{1} << n); m++) {
        els.emplace_back(PauliString(n, m, 0));
    }
    return Ensemble::uniform("pauli-x", std::move(els));
}

Ensemble clifford1_ensemble() {
    std::vector<UnitarySource> els;
    for (auto &c : enumerate_single_qubit()) {
        els.emplace_back(std::move(c));
    }
    return Ensemble::uniform("clifford", std::move(els));
}

Ensemble clifford_ensemble(int n, uint64_t seed) {
    SamplerSpec spec{"clifford", 1 << n, 0, 0};
    return Ensemble::sampler(spec, [n](Rng &rng) -> UnitarySource { return random_clifford(n, rng); }, seed);
}

Ensemble haar_ensemble(int d, uint64_t seed) {
    SamplerSpec spec{"haar", d, 0, 0};
    return Ensemble::sampler(spec, [d](Rng &rng) -> UnitarySource { return haar_unitary(d, rng); }, seed);
}

Ensemble gue_evolution_ensemble(int d, double t, uint64_t seed) {
    SamplerSpec spec{"gue", d, 0, t};
    return Ensemble::sampler(
        spec, [d, t](Rng &rng) -> UnitarySource { return TimeEvolution{gue_hamiltonian(d, rng), t}; }, seed);
}

Ensemble hamiltonian_evolution_ensemble(const Matrix &h, double t_max, uint64_t seed) {
    if (!is_hermitian(h)) {
        throw std::invalid_argument("Hamiltonian is not Hermitian");
    }
    SamplerSpec spec{"hamiltonian", int(h.rows()), 0, t_max};
    return Ensemble::sampler(
        spec, [h, t_max](Rng &rng) -> UnitarySource { return TimeEvolution{h, t_max * rng.uniform()}; }, seed);
}

DenseUnitary brickwork_circuit(int n, int depth, Rng &rng) {
    if (n < 2) {
        throw std::invalid_argument("brickwork needs at least 2 qubits");
    }
    int64_t d = int64_t{1} << n;
    check_dense_guard(d, "brickwork_circuit");
    Matrix u = Matrix::Identity(d, d);
    for (int layer = 0; layer < depth; layer++) {
        for (int q = layer % 2; q + 1 < n; q += 2) {
            Matrix g = haar_unitary(4, rng).matrix();
            Matrix left = Matrix::Identity(int64_t{1} << q, int64_t{1} << q);
            Matrix right = Matrix::Identity(int64_t{1} << (n - q - 2), int64_t{1} << (n - q - 2));
            u = tensor(tensor(left, g), right) * u;
        }
    }
    return DenseUnitary(std::move(u), 1e-9);
}

Ensemble brickwork_ensemble(int n, int depth, uint64_t seed) {
    SamplerSpec spec{"brickwork", 1 << n, depth, 0};
    return Ensemble::sampler(
        spec, [n, depth](Rng &rng) -> UnitarySource { return brickwork_circuit(n, depth, rng); }, seed);
}

Ensemble make_sampler(const SamplerSpec &spec, uint64_t seed) {
    if (spec.label == "haar") {
        return haar_ensemble(spec.d, seed);
    }
    if (spec.label == "clifford") {
        return clifford_ensemble(qubits_of_dim(spec.d), seed);
    }
    if (spec.label == "gue") {
        return gue_evolution_ensemble(spec.d, spec.time, seed);
    }
    if (spec.label == "brickwork") {
        return brickwork_ensemble(qubits_of_dim(spec.d), spec.depth, seed);
    }
    throw std::invalid_argument("unknown sampler '" + spec.label + "' (known: haar, clifford, gue, brickwork)");
}

ChannelEstimate kfold_channel_apply(const Ensemble &ens, const Matrix &a, int k, int64_t samples) {
    int64_t dim = 1;
    for (int i = 0; i < k; i++) {
        dim *= ens.dim();
        check_dense_guard(dim, "kfold_channel_apply");
    }
    if (a.rows() != dim || a.cols() != dim) {
        throw std::invalid_argument("kfold_channel_apply: operator side must be d^k");
    }
    auto apply = [&](const DenseUnitary &u) {
        Matrix uk = tensor_power(u.matrix(), k);
        return Matrix(uk.adjoint() * a * uk);
    };
    ChannelEstimate out;
    if (ens.is_discrete()) {
        out.mean = Matrix::Zero(dim, dim);
        for (const auto &e : ens.elements()) {
            out.mean += e.weight * apply(to_dense(e.element));
        }
        out.std_error = Eigen::MatrixXd::Zero(dim, dim);
        out.n_samples = int64_t(ens.elements().size());
        return out;
    }
    if (samples < 2) {
        throw std::invalid_argument("kfold_channel_apply: need at least 2 samples");
    }
    Matrix sum = Matrix::Zero(dim, dim);
    Eigen::MatrixXd sq = Eigen::MatrixXd::Zero(dim, dim);
    for (int64_t s = 0; s < samples; s++) {
        Matrix m = apply(ens.draw_dense(uint64_t(s)));
        sum += m;
        sq += m.cwiseAbs2();
    }
    double n = double(samples);
    out.mean = sum / n;
    Eigen::MatrixXd var = (sq / n - out.mean.cwiseAbs2()) * (n / (n - 1));
    out.std_error = (var.cwiseMax(0.0) / n).cwiseSqrt();
    out.n_samples = samples;
    return out;
}

}  // namespace designlab
