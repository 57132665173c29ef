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

#ifndef DESIGNLAB_ESTIMATE_HPP
#define DESIGNLAB_ESTIMATE_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <string>

namespace designlab {

enum class Method { exact, monte_carlo, time_average };

std::string method_name(Method m);

struct Estimate {
    double value = 0;
    double std_error = 0;
    int64_t n_samples = 1;
    uint64_t seed = 0;
    Method method = Method::exact;

    static Estimate exact(double value, int64_t n_terms = 1);
    // Deviation from ref in units of std_error; 0 for a perfect exact match.
    double sigmas_from(double ref) const;
    bool within(double ref, double n_sigma, double abs_floor = 1e-12) const;
};

struct ComplexEstimate {
    std::complex<double> value;
    // Standard error of the complex mean, sqrt(var(re) + var(im)) / sqrt(N).
    double std_error = 0;
    int64_t n_samples = 1;
    uint64_t seed = 0;
    Method method = Method::exact;

    Estimate real() const;
    double sigmas_from(std::complex<double> ref) const;
    bool within(std::complex<double> ref, double n_sigma, double abs_floor = 1e-12) const;
};

double pairwise_sum(std::span<const double> values);
std::complex<double> pairwise_sum(std::span<const std::complex<double>> values);

// Plug-in mean and standard error of independent samples.
Estimate summarize(std::span<const double> samples, uint64_t seed);
ComplexEstimate summarize(std::span<const std::complex<double>> samples, uint64_t seed);

}  // namespace designlab

#endif
