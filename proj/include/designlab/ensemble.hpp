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

#ifndef DESIGNLAB_ENSEMBLE_HPP
#define DESIGNLAB_ENSEMBLE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "designlab/clifford.hpp"
#include "designlab/dense.hpp"
#include "designlab/pauli.hpp"

namespace designlab {

class Rng;

struct TimeEvolution {
    Matrix hamiltonian;
    double time = 0;
};

using UnitarySource = std::variant<PauliString, CliffordTableau, DenseUnitary, TimeEvolution>;

DenseUnitary to_dense(const UnitarySource &u);
int source_dim(const UnitarySource &u);

struct WeightedElement {
    double weight = 0;
    UnitarySource element;
};

// Parameters that rebuild a built-in sampler.
struct SamplerSpec {
    std::string label;
    int d = 0;
    int depth = 0;
    double time = 0;
};

class Ensemble {
   public:
    using Draw = std::function<UnitarySource(Rng &)>;

    // Weights must be nonnegative and sum to 1 within 1e-12.
    static Ensemble discrete(std::string label, std::vector<WeightedElement> elements);
    static Ensemble uniform(std::string label, std::vector<UnitarySource> elements);
    static Ensemble sampler(SamplerSpec spec, Draw draw, uint64_t seed);

    bool is_discrete() const { return discrete_; }
    const std::string &label() const { return label_; }
    int dim() const { return dim_; }
    uint64_t seed() const { return seed_; }
    const std::vector<WeightedElement> &elements() const { return elements_; }
    const SamplerSpec &sampler_spec() const { return spec_; }

    // Draw number `index`; a pure function of (seed, index).
    UnitarySource draw(uint64_t index) const;
    DenseUnitary draw_dense(uint64_t index) const;
    Ensemble with_seed(uint64_t seed) const;
    // {U^dag} with the same weights.
    Ensemble inverted() const;

   private:
    bool discrete_ = true;
    std::string label_;
    int dim_ = 0;
    uint64_t seed_ = 0;
    std::vector<WeightedElement> elements_;
    SamplerSpec spec_;
    Draw draw_;
};

Ensemble trivial_ensemble(int n);
Ensemble pauli_ensemble(int n);
// The 2^n strings built from I and X.
Ensemble pauli_x_ensemble(int n);
Ensemble clifford1_ensemble();
Ensemble clifford_ensemble(int n, uint64_t seed);
Ensemble haar_ensemble(int d, uint64_t seed);
// e^{-iHt} with H drawn from the GUE.
Ensemble gue_evolution_ensemble(int d, double t, uint64_t seed);
// e^{-iHt} for a fixed H and t uniform in [0, t_max].
Ensemble hamiltonian_evolution_ensemble(const Matrix &h, double t_max, uint64_t seed);
// Alternating even/odd layers of independent Haar two-qubit gates.
Ensemble brickwork_ensemble(int n, int depth, uint64_t seed);
DenseUnitary brickwork_circuit(int n, int depth, Rng &rng);
// Rebuilds a built-in sampler from its spec.
Ensemble make_sampler(const SamplerSpec &spec, uint64_t seed);

struct ChannelEstimate {
    Matrix mean;
    Eigen::MatrixXd std_error;
    int64_t n_samples = 0;
};

// (U^{(x)k})^dag A U^{(x)k} averaged over the ensemble.
ChannelEstimate kfold_channel_apply(const Ensemble &ens, const Matrix &a, int k, int64_t samples);

}  // namespace designlab

#endif
