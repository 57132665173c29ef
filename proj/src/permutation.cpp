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

#include "designlab/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace designlab {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= int(images_.size()) || seen[v]) {
            throw std::invalid_argument("not a permutation");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(int k) {
    std::vector<int> im(k);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::cycle(int k) {
    std::vector<int> im(k);
    for (int j = 0; j < k; j++) {
        im[j] = (j + 1) % k;
    }
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (size_t j = 0; j < images_.size(); j++) {
        im[images_[j]] = int(j);
    }
    return Permutation(std::move(im));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (size_t s = 0; s < images_.size(); s++) {
        if (seen[s]) {
            continue;
        }
        std::vector<int> c;
        for (int j = int(s); !seen[j]; j = images_[j]) {
            seen[j] = true;
            c.push_back(j);
        }
        out.push_back(std::move(c));
    }
    return out;
}

int Permutation::num_cycles() const {
    return int(cycles().size());
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> t;
    for (const auto &c : cycles()) {
        t.push_back(int(c.size()));
    }
    std::sort(t.rbegin(), t.rend());
    return t;
}

std::string Permutation::str() const {
    std::string out;
    for (const auto &c : cycles()) {
        out += "(";
        for (size_t i = 0; i < c.size(); i++) {
            out += (i ? " " : "") + std::to_string(c[i]);
        }
        out += ")";
    }
    return out;
}

Permutation operator*(const Permutation &s, const Permutation &t) {
    if (s.size() != t.size()) {
        throw std::invalid_argument("permutation size mismatch");
    }
    std::vector<int> im(s.size());
    for (int j = 0; j < s.size(); j++) {
        im[j] = s(t(j));
    }
    return Permutation(std::move(im));
}

std::vector<Permutation> enumerate_permutations(int k) {
    if (k < 1 || k > kPermutationGuard) {
        throw std::invalid_argument("enumerate_permutations: k must be in [1, 6], got " + std::to_string(k));
    }
    std::vector<int> im(k);
    std::iota(im.begin(), im.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

}  // namespace designlab
