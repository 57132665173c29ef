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

#ifndef DESIGNLAB_PERMUTATION_HPP
#define DESIGNLAB_PERMUTATION_HPP

#include <string>
#include <vector>

namespace designlab {

// Permutation of {0, ..., k-1}. Composition (s * t)(j) = s(t(j)).
class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int k);
    // Cyclic shift j -> j + 1 mod k.
    static Permutation cycle(int k);

    int size() const { return int(images_.size()); }
    int operator()(int j) const { return images_[j]; }
    const std::vector<int> &images() const { return images_; }

    Permutation inverse() const;
    int num_cycles() const;
    // Cycle lengths sorted descending.
    std::vector<int> cycle_type() const;
    std::vector<std::vector<int>> cycles() const;
    std::string str() const;

    bool operator==(const Permutation &other) const = default;
    auto operator<=>(const Permutation &other) const = default;

   private:
    std::vector<int> images_;
};

Permutation operator*(const Permutation &s, const Permutation &t);

inline constexpr int kPermutationGuard = 6;
// All of S_k in lexicographic order of image lists; identity first.
std::vector<Permutation> enumerate_permutations(int k);

}  // namespace designlab

#endif
