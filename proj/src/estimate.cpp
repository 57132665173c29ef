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

#include "designlab/estimate.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace designlab {

std::string method_name(Method m) {
    switch (m) {
        case Method::exact:
            return "exact";
        case Method::monte_carlo:
            return "monte-carlo";
        case Method::time_average:
            return "time-average";
    }
    return "?";
}

Estimate Estimate::exact(double value, int64_t n_terms) {
    Estimate e;
    e.value = value;
    e.n_samples = n_terms;
    return e;
}

double Estimate::sigmas_from(double ref) const {
    double dev = std::abs(value - ref);
    if (std_error == 0) {
        return dev == 0 ? 0 : INFINITY;
    }
    return dev / std_error;
}

bool Estimate::within(double ref, double n_sigma, double abs_floor) const {
    return std::abs(value - ref) <= n_sigma * std_error + abs_floor;
}

Estimate ComplexEstimate::real() const {
    Estimate e;
    e.value = value.real();
    e.std_error = std_error;
    e.n_samples = n_samples;
    e.seed = seed;
    e.method = method;
    return e;
}

double ComplexEstimate::sigmas_from(std::complex<double> ref) const {
    double dev = std::abs(value - ref);
    if (std_error == 0) {
        return dev == 0 ? 0 : INFINITY;
    }
    return dev / std_error;
}

bool ComplexEstimate::within(std::complex<double> ref, double n_sigma, double abs_floor) const {
    return std::abs(value - ref) <= n_sigma * std_error + abs_floor;
}

namespace {

template <typename T>
T pairwise(std::span<const T> v) {
    if (v.size() <= 16) {
        T s{};
        for (const T &x : v) {
            s += x;
        }
        return s;
    }
    size_t h = v.size() / 2;
    return pairwise(v.subspan(0, h)) + pairwise(v.subspan(h));
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
    return pairwise(values);
}

std::complex<double> pairwise_sum(std::span<const std::complex<double>> values) {
    return pairwise(values);
}

Estimate summarize(std::span<const double> samples, uint64_t seed) {
    if (samples.empty()) {
        throw std::invalid_argument("no samples");
    }
    double n = double(samples.size());
    double mean = pairwise_sum(samples) / n;
    std::vector<double> sq(samples.size());
    for (size_t i = 0; i < samples.size(); i++) {
        double dv = samples[i] - mean;
        sq[i] = dv * dv;
    }
    Estimate e;
    e.value = mean;
    e.std_error = samples.size() > 1 ? std::sqrt(pairwise_sum(sq) / (n - 1) / n) : INFINITY;
    e.n_samples = int64_t(samples.size());
    e.seed = seed;
    e.method = Method::monte_carlo;
    return e;
}

ComplexEstimate summarize(std::span<const std::complex<double>> samples, uint64_t seed) {
    if (samples.empty()) {
        throw std::invalid_argument("no samples");
    }
    double n = double(samples.size());
    std::complex<double> mean = pairwise_sum(samples) / n;
    std::vector<double> sq(samples.size());
    for (size_t i = 0; i < samples.size(); i++) {
        sq[i] = std::norm(samples[i] - mean);
    }
    ComplexEstimate e;
    e.value = mean;
    e.std_error = samples.size() > 1 ? std::sqrt(pairwise_sum(sq) / (n - 1) / n) : INFINITY;
    e.n_samples = int64_t(samples.size());
    e.seed = seed;
    e.method = Method::monte_carlo;
    return e;
}

}  // namespace designlab
