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

#ifndef DESIGNLAB_FRAMEPOT_HPP
#define DESIGNLAB_FRAMEPOT_HPP

#include <cstdint>
#include <vector>

#include "designlab/dense.hpp"
#include "designlab/ensemble.hpp"
#include "designlab/estimate.hpp"
#include "designlab/wg.hpp"

namespace designlab {

// Exact double sum over a discrete ensemble.
Estimate frame_potential_exact(const Ensemble &ens, int k);
// Pair i uses draws 2i and 2i+1.
Estimate frame_potential_mc(const Ensemble &ens, int k, int64_t n_pairs);
// Pauli-summed squared OTO side; n*k <= 2.
Estimate frame_potential_via_oto(const Ensemble &ens, int k);

struct TimeAverage {
    Estimate estimate;
    // Same average over [0, t_max/2].
    double half_time_value = 0;
};
TimeAverage time_averaged_frame_potential(const std::vector<double> &spectrum, int k, double t_max, int64_t n_grid);
ExactRational analytic_time_average(int k, int64_t d);

Estimate generalized_F(const Ensemble &ens, const Matrix &rho, int k, int64_t samples = 0);
ComplexEstimate generalized_G(const Ensemble &ens, const Matrix &rho, int k, int64_t samples = 0);

enum class StateKind { pure, maximally_mixed, explicit_state };
// Haar value of the generalized F. explicit_state needs rho and k <= 2.
double generalized_F_haar_reference(StateKind kind, int k, int d, const Matrix *rho = nullptr);

struct ThermalResult {
    Estimate estimate;
    double max_integrand = 0;
};
// h_ens draws TimeEvolution elements; only their Hamiltonians are used.
ThermalResult thermal_W(const Ensemble &h_ens, double beta, double t, int k, int64_t samples);

double cardinality_bound(double f, int k, int64_t d);
double complexity_bound(double f, int k, int n, double choices);
double gate_count_bound(double cardinality, double g, int n);
// Bits.
double entropy_bound(double f, int k, int n);
double depth_bound(double f, int k, int n, double g, int q);
double epsilon_bound(double f, int k, int64_t d, double epsilon, double choices);

struct EarlyTimeBound {
    double value = 0;
    double small_parameter = 0;
    bool valid = false;
};
inline constexpr double kEarlyTimeThreshold = 0.1;
EarlyTimeBound early_time_bound(double tr_h2_avg, int k, int64_t d, double t);

}  // namespace designlab

#endif
