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

#include "designlab/wg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace designlab {

std::string to_string(const ExactRational &q) {
    return q.get_str();
}

double to_double(const ExactRational &q) {
    return q.get_d();
}

ExactRational make_rational(int64_t num, int64_t den) {
    ExactRational q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
    q.canonicalize();
    return q;
}

GaussianRational &GaussianRational::operator+=(const GaussianRational &other) {
    re += other.re;
    im += other.im;
    return *this;
}

std::complex<double> GaussianRational::to_complex() const {
    return {re.get_d(), im.get_d()};
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (int v : parts) {
        if (v < 0) {
            throw std::invalid_argument("partition parts must be nonnegative");
        }
    }
    std::sort(parts.rbegin(), parts.rend());
    while (!parts.empty() && parts.back() == 0) {
        parts.pop_back();
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> out;
    std::string s(text);
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception &) {
            throw std::invalid_argument("bad cycle type '" + s + "'");
        }
        if (used != item.size() || v < 1) {
            throw std::invalid_argument("bad cycle type '" + s + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw std::invalid_argument("empty cycle type");
    }
    return Partition(out);
}

Partition Partition::of(const Permutation &pi) {
    return Partition(pi.cycle_type());
}

int Partition::size() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Partition::str() const {
    std::string out = "(";
    for (size_t i = 0; i < parts.size(); i++) {
        out += (i ? "," : "") + std::to_string(parts[i]);
    }
    return out + ")";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int> &cur, std::vector<Partition> &out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; p--) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

int64_t factorial(int k) {
    int64_t f = 1;
    for (int i = 2; i <= k; i++) {
        f *= i;
    }
    return f;
}

// Murnaghan-Nakayama on beta sets.
int64_t mn(const std::vector<int> &lambda, const std::vector<int> &mu, size_t next) {
    if (next == mu.size()) {
        return lambda.empty() ? 1 : 0;
    }
    int r = mu[next];
    int len = int(lambda.size());
    std::vector<int> beta(len);
    for (int i = 0; i < len; i++) {
        beta[i] = lambda[i] + (len - 1 - i);
    }
    int64_t total = 0;
    for (int i = 0; i < len; i++) {
        int target = beta[i] - r;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) {
            continue;
        }
        int between = 0;
        for (int b : beta) {
            if (b > target && b < beta[i]) {
                between++;
            }
        }
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> nl;
        for (int j = 0; j < len; j++) {
            int part = nb[j] - (len - 1 - j);
            if (part > 0) {
                nl.push_back(part);
            }
        }
        int64_t sub = mn(nl, mu, next + 1);
        total += (between % 2 ? -sub : sub);
    }
    return total;
}

std::mutex g_char_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, int64_t> g_char_memo;

std::mutex g_wg_mutex;
std::map<std::pair<std::vector<int>, int64_t>, ExactRational> g_wg_memo;

}  // namespace

std::vector<Partition> partitions(int k) {
    if (k < 1 || k > kPartitionGuard) {
        throw std::invalid_argument("partitions: k must be in [1, 12], got " + std::to_string(k));
    }
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(k, k, cur, out);
    return out;
}

int64_t character(const Partition &lambda, const Partition &mu) {
    if (lambda.size() != mu.size()) {
        throw std::invalid_argument("character: |lambda| != |mu|");
    }
    auto key = std::make_pair(lambda.parts, mu.parts);
    {
        std::lock_guard<std::mutex> lock(g_char_mutex);
        auto it = g_char_memo.find(key);
        if (it != g_char_memo.end()) {
            return it->second;
        }
    }
    int64_t v = mn(lambda.parts, mu.parts, 0);
    std::lock_guard<std::mutex> lock(g_char_mutex);
    g_char_memo.emplace(key, v);
    return v;
}

int64_t irrep_dimension(const Partition &lambda) {
    int k = lambda.size();
    std::vector<int> conj(lambda.parts.empty() ? 0 : lambda.parts[0], 0);
    for (int row : lambda.parts) {
        for (int j = 0; j < row; j++) {
            conj[j]++;
        }
    }
    mpz_class hooks = 1;
    for (int i = 0; i < lambda.length(); i++) {
        for (int j = 0; j < lambda.parts[i]; j++) {
            hooks *= (lambda.parts[i] - j - 1) + (conj[j] - i - 1) + 1;
        }
    }
    mpz_class f = 1;
    for (int i = 2; i <= k; i++) {
        f *= i;
    }
    return mpz_class(f / hooks).get_si();
}

int64_t class_size(const Partition &mu) {
    int k = mu.size();
    std::map<int, int> counts;
    for (int p : mu.parts) {
        counts[p]++;
    }
    int64_t denom = 1;
    for (auto [part, m] : counts) {
        for (int i = 0; i < m; i++) {
            denom *= part;
        }
        denom *= factorial(m);
    }
    return factorial(k) / denom;
}

ExactRational content_polynomial(const Partition &lambda, int64_t d) {
    mpz_class s = 1;
    for (int i = 0; i < lambda.length(); i++) {
        for (int j = 0; j < lambda.parts[i]; j++) {
            s *= mpz_class(std::to_string(d + j - i));
        }
    }
    return ExactRational(s);
}

ExactRational weingarten(const Partition &mu, int64_t d) {
    int k = mu.size();
    if (k > d) {
        throw std::domain_error(
            "Weingarten undefined: inverse not guaranteed (k = " + std::to_string(k) + " > d = " +
            std::to_string(d) + ")");
    }
    auto key = std::make_pair(mu.parts, d);
    {
        std::lock_guard<std::mutex> lock(g_wg_mutex);
        auto it = g_wg_memo.find(key);
        if (it != g_wg_memo.end()) {
            return it->second;
        }
    }
    ExactRational total = 0;
    for (const auto &lambda : partitions(k)) {
        ExactRational s = content_polynomial(lambda, d);
        total += ExactRational(irrep_dimension(lambda) * character(lambda, mu)) / s;
    }
    total /= ExactRational(factorial(k));
    std::lock_guard<std::mutex> lock(g_wg_mutex);
    g_wg_memo.emplace(key, total);
    return total;
}

RationalMatrix q_matrix(int k, int64_t d) {
    auto perms = enumerate_permutations(k);
    size_t m = perms.size();
    std::vector<mpz_class> powers(k + 1);
    powers[0] = 1;
    for (int c = 1; c <= k; c++) {
        powers[c] = powers[c - 1] * mpz_class(std::to_string(d));
    }
    RationalMatrix q(m, std::vector<ExactRational>(m));
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < m; j++) {
            q[i][j] = ExactRational(powers[(perms[i] * perms[j]).num_cycles()]);
        }
    }
    return q;
}

RationalMatrix q_inverse(int k, int64_t d) {
    if (k > d) {
        throw std::domain_error(
            "Q is singular: q_inverse needs k <= d (k = " + std::to_string(k) + ", d = " + std::to_string(d) + ")");
    }
    auto perms = enumerate_permutations(k);
    size_t m = perms.size();
    RationalMatrix inv(m, std::vector<ExactRational>(m));
    if (k == kPermutationGuard) {
        for (size_t i = 0; i < m; i++) {
            for (size_t j = 0; j < m; j++) {
                inv[i][j] = weingarten(Partition::of(perms[i] * perms[j]), d);
            }
        }
        return inv;
    }
    // Fraction-free Gauss-Jordan on [Q | I].
    RationalMatrix q = q_matrix(k, d);
    std::vector<std::vector<mpz_class>> a(m, std::vector<mpz_class>(2 * m, 0));
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < m; j++) {
            a[i][j] = q[i][j].get_num();
        }
        a[i][m + i] = 1;
    }
    mpz_class prev = 1;
    for (size_t c = 0; c < m; c++) {
        size_t p = c;
        while (p < m && a[p][c] == 0) {
            p++;
        }
        if (p == m) {
            throw std::domain_error("Q is singular");
        }
        std::swap(a[p], a[c]);
        for (size_t i = 0; i < m; i++) {
            if (i == c) {
                continue;
            }
            mpz_class f = a[i][c];
            for (size_t j = 0; j < 2 * m; j++) {
                mpz_class t = a[c][c] * a[i][j] - f * a[c][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
        }
        prev = a[c][c];
    }
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < m; j++) {
            inv[i][j] = ExactRational(a[i][m + j], a[i][i]);
            inv[i][j].canonicalize();
        }
    }
    return inv;
}

RationalMatrix multiply(const RationalMatrix &a, const RationalMatrix &b) {
    size_t n = a.size();
    size_t m = b.empty() ? 0 : b[0].size();
    RationalMatrix out(n, std::vector<ExactRational>(m, 0));
    for (size_t i = 0; i < n; i++) {
        for (size_t l = 0; l < b.size(); l++) {
            if (a[i][l] == 0) {
                continue;
            }
            for (size_t j = 0; j < m; j++) {
                out[i][j] += a[i][l] * b[l][j];
            }
        }
    }
    return out;
}

bool is_identity(const RationalMatrix &m) {
    for (size_t i = 0; i < m.size(); i++) {
        for (size_t j = 0; j < m[i].size(); j++) {
            if (m[i][j] != (i == j ? 1 : 0)) {
                return false;
            }
        }
    }
    return true;
}

ExactRational haar_frame_potential_exact(int k, int64_t d) {
    if (k < 1) {
        throw std::invalid_argument("frame potential order must be positive");
    }
    if (k <= d) {
        return ExactRational(factorial(k));
    }
    if (d == 2) {
        if (k > 30) {
            throw std::invalid_argument("Catalan branch limited to k <= 30");
        }
        mpz_class num = 1;
        mpz_class den = 1;
        for (int i = 2; i <= 2 * k; i++) {
            num *= i;
        }
        for (int i = 2; i <= k; i++) {
            den *= i;
        }
        for (int i = 2; i <= k + 1; i++) {
            den *= i;
        }
        ExactRational out(num, den);
        out.canonicalize();
        return out;
    }
    throw std::domain_error("Haar frame potential for d < k (d != 2) has no closed form here; use Monte Carlo");
}

Matrix haar_state_kfold(int k, int d) {
    int64_t dim = 1;
    for (int i = 0; i < k; i++) {
        dim *= d;
        check_dense_guard(dim, "haar_state_kfold");
    }
    Matrix out = Matrix::Zero(dim, dim);
    auto perms = enumerate_permutations(k);
    for (const auto &pi : perms) {
        for (int64_t a = 0; a < dim; a++) {
            out(permuted_index(pi, d, a), a) += 1.0;
        }
    }
    // Pi_sym / binom(k + d - 1, k) = (1/k!) sum W_pi / binom.
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), k + d - 1, k);
    double norm = double(factorial(k)) * binom.get_d();
    return out / norm;
}

Matrix haar_channel_reference(const Matrix &a, int k, int d) {
    if (k > d) {
        throw std::domain_error("haar_channel_reference needs k <= d");
    }
    int64_t dim = 1;
    for (int i = 0; i < k; i++) {
        dim *= d;
        check_dense_guard(dim, "haar_channel_reference");
    }
    if (a.rows() != dim || a.cols() != dim) {
        throw std::invalid_argument("haar_channel_reference: operator side must be d^k");
    }
    auto perms = enumerate_permutations(k);
    RationalMatrix c = q_inverse(k, d);
    std::vector<Complex> traces;
    for (const auto &s : perms) {
        traces.push_back(trace_with_permutation(s, d, a));
    }
    Matrix out = Matrix::Zero(dim, dim);
    for (size_t p = 0; p < perms.size(); p++) {
        Complex coef = 0;
        for (size_t s = 0; s < perms.size(); s++) {
            coef += to_double(c[p][s]) * traces[s];
        }
        for (int64_t x = 0; x < dim; x++) {
            out(permuted_index(perms[p], d, x), x) += coef;
        }
    }
    return out;
}

}  // namespace designlab
