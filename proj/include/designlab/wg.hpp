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

#ifndef DESIGNLAB_WG_HPP
#define DESIGNLAB_WG_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "designlab/dense.hpp"
#include "designlab/permutation.hpp"

namespace designlab {

using ExactRational = mpq_class;

std::string to_string(const ExactRational &q);
double to_double(const ExactRational &q);
ExactRational make_rational(int64_t num, int64_t den = 1);

// a + b i with rational parts.
struct GaussianRational {
    ExactRational re;
    ExactRational im;

    GaussianRational &operator+=(const GaussianRational &other);
    std::complex<double> to_complex() const;
    bool operator==(const GaussianRational &other) const { return re == other.re && im == other.im; }
};

struct Partition {
    std::vector<int> parts;

    Partition() = default;
    // Sorts the parts descending and drops zeros.
    explicit Partition(std::vector<int> parts);
    static Partition parse(std::string_view text);
    static Partition of(const Permutation &pi);

    int size() const;
    int length() const { return int(parts.size()); }
    std::string str() const;

    auto operator<=>(const Partition &other) const = default;
};

inline constexpr int kPartitionGuard = 12;
// Reverse-lexicographic order: (k), (k-1,1), ..., (1,...,1).
std::vector<Partition> partitions(int k);

int64_t character(const Partition &lambda, const Partition &mu);
int64_t irrep_dimension(const Partition &lambda);
int64_t class_size(const Partition &mu);
// prod over cells (d + j - i); zero when lambda has more than d rows.
ExactRational content_polynomial(const Partition &lambda, int64_t d);

// Throws when |mu| > d.
ExactRational weingarten(const Partition &mu, int64_t d);

using RationalMatrix = std::vector<std::vector<ExactRational>>;
// Rows and columns follow enumerate_permutations(k).
RationalMatrix q_matrix(int k, int64_t d);
RationalMatrix q_inverse(int k, int64_t d);
RationalMatrix multiply(const RationalMatrix &a, const RationalMatrix &b);
bool is_identity(const RationalMatrix &m);

ExactRational haar_frame_potential_exact(int k, int64_t d);
Matrix haar_state_kfold(int k, int d);
// sum_{pi, sigma} (Q^-1)_{pi, sigma} W_pi tr(W_sigma A).
Matrix haar_channel_reference(const Matrix &a, int k, int d);

}  // namespace designlab

#endif
