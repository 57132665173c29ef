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

#include "designlab/oto.hpp"

#include <map>
#include <optional>
#include <stdexcept>

#include "designlab/clifford.hpp"

namespace designlab {

namespace {

const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

GaussianRational gr(const ExactRational &re, const ExactRational &im = 0) {
    return GaussianRational{re, im};
}

GaussianRational gmul(const GaussianRational &a, const GaussianRational &b) {
    return GaussianRational{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussianRational gsub(const GaussianRational &a, const GaussianRational &b) {
    return GaussianRational{a.re - b.re, a.im - b.im};
}

GaussianRational gscale(const GaussianRational &a, const ExactRational &s) {
    return GaussianRational{a.re * s, a.im * s};
}

// tr(P)/d as an exact Gaussian rational.
GaussianRational expect(const PauliString &p) {
    if (!p.is_identity_up_to_phase()) {
        return gr(0);
    }
    static const int re[4] = {1, 0, -1, 0};
    static const int im[4] = {0, 1, 0, -1};
    return gr(re[p.phase], im[p.phase]);
}

GaussianRational expect(std::initializer_list<PauliString> ops) {
    PauliString acc = *ops.begin();
    for (auto it = ops.begin() + 1; it != ops.end(); ++it) {
        acc = mul(acc, *it);
    }
    return expect(acc);
}

void check_word_dims(const Matrix &u, const std::vector<WordFactor> &word) {
    for (const auto &f : word) {
        if ((int64_t{1} << f.op.n) != u.rows()) {
            throw std::invalid_argument("correlator operators do not match the unitary dimension");
        }
    }
}

// U^dag B U as an exact Pauli when the source is Pauli or Clifford.
std::optional<PauliString> exact_evolve(const UnitarySource &src, const PauliString &b) {
    if (auto p = std::get_if<PauliString>(&src)) {
        PauliString out = b;
        if (!commutes(b, *p)) {
            out.phase = (out.phase + 2) % 4;
        }
        return out;
    }
    if (auto c = std::get_if<CliffordTableau>(&src)) {
        return conjugate_pauli(*c, b);
    }
    return std::nullopt;
}

Complex exact_word_value(const UnitarySource &src, const std::vector<WordFactor> &word, bool &ok) {
    std::vector<PauliString> ops;
    ops.reserve(word.size());
    for (const auto &f : word) {
        if (f.evolved) {
            auto e = exact_evolve(src, f.op);
            if (!e) {
                ok = false;
                return 0;
            }
            ops.push_back(*e);
        } else {
            ops.push_back(f.op);
        }
    }
    ok = true;
    auto ph = trace_phase(ops);
    return ph ? kIPow[*ph] : Complex(0);
}

Complex word_value(const UnitarySource &src, const std::vector<WordFactor> &word) {
    bool ok = false;
    Complex v = exact_word_value(src, word, ok);
    if (ok) {
        return v;
    }
    return evaluate_word(to_dense(src).matrix(), word);
}

// Weighted exact average for discrete ensembles, MC otherwise.
template <typename F>
ComplexEstimate average_over(const Ensemble &ens, int64_t samples, F &&value) {
    if (ens.is_discrete()) {
        Complex s = 0;
        for (const auto &e : ens.elements()) {
            s += e.weight * value(e.element);
        }
        ComplexEstimate out;
        out.value = s;
        out.n_samples = int64_t(ens.elements().size());
        out.seed = ens.seed();
        out.method = Method::exact;
        return out;
    }
    if (samples < 2) {
        throw std::invalid_argument("Monte-Carlo average needs at least 2 samples");
    }
    std::vector<Complex> vals(samples);
    for (int64_t i = 0; i < samples; i++) {
        vals[i] = value(ens.draw(uint64_t(i)));
    }
    return summarize(vals, ens.seed());
}

// Product over cycles of rho of tr(P_j P_rho(j) ...), as d^e * i^phase.
struct ExactTrace {
    bool zero = false;
    int d_power = 0;
    int phase = 0;
};

ExactTrace cycle_trace(const std::vector<PauliString> &ops, const Permutation &rho) {
    ExactTrace t;
    for (const auto &cyc : rho.cycles()) {
        std::vector<PauliString> chain;
        for (int j : cyc) {
            chain.push_back(ops[j]);
        }
        auto ph = trace_phase(chain);
        if (!ph) {
            t.zero = true;
            return t;
        }
        t.d_power += 1;
        t.phase = (t.phase + *ph) % 4;
    }
    return t;
}

}  // namespace

std::string ordering_name(Ordering o) {
    switch (o) {
        case Ordering::standard:
            return "standard";
        case Ordering::commutator:
            return "commutator-type";
        case Ordering::non_commutator:
            return "non-commutator-type";
        case Ordering::nested:
            return "nested";
    }
    return "?";
}

Ordering parse_ordering(const std::string &name) {
    if (name == "standard") {
        return Ordering::standard;
    }
    if (name == "commutator-type" || name == "commutator") {
        return Ordering::commutator;
    }
    if (name == "non-commutator-type" || name == "non-commutator") {
        return Ordering::non_commutator;
    }
    if (name == "nested") {
        return Ordering::nested;
    }
    throw std::invalid_argument(
        "unknown ordering '" + name + "' (standard, commutator-type, non-commutator-type, nested)");
}

OtoSpec::OtoSpec(std::vector<PauliString> a, std::vector<PauliString> b, Ordering ord)
    : a_ops(std::move(a)), b_ops(std::move(b)), ordering(ord) {
    if (a_ops.empty() || a_ops.size() != b_ops.size()) {
        throw std::invalid_argument("OtoSpec needs k >= 1 A operators and k B operators");
    }
    int n = a_ops[0].n;
    for (size_t j = 0; j < a_ops.size(); j++) {
        if (a_ops[j].n != n || b_ops[j].n != n) {
            throw std::invalid_argument("OtoSpec operators act on different qubit counts");
        }
    }
}

std::vector<WordFactor> expand_word(const OtoSpec &spec) {
    int k = spec.k();
    const auto &a = spec.a_ops;
    const auto &b = spec.b_ops;
    std::vector<WordFactor> w;
    switch (spec.ordering) {
        case Ordering::standard:
            for (int j = 0; j < k; j++) {
                w.push_back({a[j], false});
                w.push_back({b[j], true});
            }
            break;
        case Ordering::non_commutator:
            for (int j = 0; j < k; j++) {
                w.push_back({a[j], false});
                w.push_back({b[j], true});
            }
            for (int j = 0; j < k; j++) {
                w.push_back({dagger(a[j]), false});
                w.push_back({dagger(b[j]), true});
            }
            break;
        case Ordering::commutator: {
            std::vector<WordFactor> kw;
            kw.push_back({b[0], true});
            for (int j = 1; j < k; j++) {
                kw.push_back({a[j], false});
                kw.push_back({b[j], true});
            }
            w.push_back({a[0], false});
            w.insert(w.end(), kw.begin(), kw.end());
            w.push_back({dagger(a[0]), false});
            for (auto it = kw.rbegin(); it != kw.rend(); ++it) {
                w.push_back({dagger(it->op), it->evolved});
            }
            break;
        }
        case Ordering::nested:
            for (int j = 0; j < k; j++) {
                w.push_back({a[j], false});
                w.push_back({b[j], true});
            }
            w.push_back({dagger(a[k - 1]), false});
            for (int j = k - 2; j >= 0; j--) {
                w.push_back({dagger(b[j]), true});
                w.push_back({dagger(a[j]), false});
            }
            w.push_back({dagger(b[k - 1]), true});
            break;
    }
    return w;
}

Complex evaluate_word(const Matrix &u, const std::vector<WordFactor> &word) {
    check_word_dims(u, word);
    int64_t d = u.rows();
    std::map<std::tuple<uint64_t, uint64_t, int>, Matrix> cache;
    Matrix m = Matrix::Identity(d, d);
    for (const auto &f : word) {
        if (!f.evolved) {
            m = pauli_right(m, f.op);
            continue;
        }
        auto key = std::make_tuple(f.op.x, f.op.z, f.op.phase);
        auto it = cache.find(key);
        if (it == cache.end()) {
            it = cache.emplace(key, heisenberg(u, f.op)).first;
        }
        m = m * it->second;
    }
    return m.trace() / double(d);
}

Complex oto_correlator(const DenseUnitary &u, const OtoSpec &spec) {
    check_dense_guard(u.dim(), "oto_correlator");
    return evaluate_word(u.matrix(), expand_word(spec));
}

ComplexEstimate oto_ensemble_average(const Ensemble &ens, const OtoSpec &spec, int64_t samples) {
    auto word = expand_word(spec);
    return average_over(ens, samples, [&](const UnitarySource &src) { return word_value(src, word); });
}

Estimate oto_ensemble_mean_square(const Ensemble &ens, const OtoSpec &spec, int64_t samples) {
    auto word = expand_word(spec);
    return average_over(ens, samples, [&](const UnitarySource &src) { return Complex(std::norm(word_value(src, word))); })
        .real();
}

Complex regulated_oto(const Matrix &rho, const DenseUnitary &u, const OtoSpec &spec) {
    check_density_matrix(rho);
    if (rho.rows() != u.dim()) {
        throw std::invalid_argument("regulated_oto: rho and U dimensions differ");
    }
    auto word = expand_word(spec);
    check_word_dims(u.matrix(), word);
    Matrix r = psd_power(rho, 1.0 / double(word.size()));
    Matrix m = Matrix::Identity(u.dim(), u.dim());
    for (const auto &f : word) {
        m = m * r;
        if (f.evolved) {
            m = m * heisenberg(u.matrix(), f.op);
        } else {
            m = pauli_right(m, f.op);
        }
    }
    return m.trace();
}

GaussianRational haar_average_exact(const OtoSpec &spec) {
    auto word = expand_word(spec);
    int n = spec.n();
    int64_t d = int64_t{1} << n;
    bool any_evolved = false;
    bool any_plain = false;
    for (const auto &f : word) {
        (f.evolved ? any_evolved : any_plain) = true;
    }
    if (!any_evolved || !any_plain) {
        std::vector<PauliString> ops;
        for (const auto &f : word) {
            ops.push_back(f.op);
        }
        auto ph = trace_phase(ops);
        return ph ? expect(PauliString(n, 0, 0, *ph)) : gr(0);
    }
    // Rotate so the word starts with a plain factor that follows an evolved one.
    size_t len = word.size();
    size_t start = 0;
    for (size_t i = 0; i < len; i++) {
        if (!word[i].evolved && word[(i + len - 1) % len].evolved) {
            start = i;
            break;
        }
    }
    std::vector<PauliString> as;
    std::vector<PauliString> bs;
    for (size_t t = 0; t < len; t++) {
        const WordFactor &f = word[(start + t) % len];
        bool new_run = t == 0 || f.evolved != word[(start + t - 1) % len].evolved;
        auto &target = f.evolved ? bs : as;
        if (new_run) {
            target.push_back(f.op);
        } else {
            target.back() = mul(target.back(), f.op);
        }
    }
    int m = int(bs.size());
    if (m > d) {
        throw std::domain_error("haar_average_exact: more evolved blocks than the dimension");
    }
    auto perms = enumerate_permutations(m);
    Permutation c = Permutation::cycle(m);
    std::vector<ExactTrace> ta;
    std::vector<ExactTrace> tb;
    for (const auto &p : perms) {
        ta.push_back(cycle_trace(as, c * p));
        tb.push_back(cycle_trace(bs, p));
    }
    // Accumulate Gaussian-integer weights per cycle type of pi * sigma.
    std::map<Partition, std::pair<mpz_class, mpz_class>> sums;
    std::vector<mpz_class> dpow(2 * m + 1);
    dpow[0] = 1;
    for (int i = 1; i <= 2 * m; i++) {
        dpow[i] = dpow[i - 1] * mpz_class(std::to_string(d));
    }
    for (size_t i = 0; i < perms.size(); i++) {
        if (ta[i].zero) {
            continue;
        }
        for (size_t j = 0; j < perms.size(); j++) {
            if (tb[j].zero) {
                continue;
            }
            const mpz_class &mag = dpow[ta[i].d_power + tb[j].d_power];
            int ph = (ta[i].phase + tb[j].phase) % 4;
            auto &s = sums[Partition::of(perms[i] * perms[j])];
            switch (ph) {
                case 0:
                    s.first += mag;
                    break;
                case 1:
                    s.second += mag;
                    break;
                case 2:
                    s.first -= mag;
                    break;
                default:
                    s.second -= mag;
                    break;
            }
        }
    }
    GaussianRational total = gr(0);
    for (const auto &[mu, s] : sums) {
        ExactRational w = weingarten(mu, d);
        total += GaussianRational{w * s.first, w * s.second};
    }
    return gscale(total, ExactRational(1, 1) / ExactRational(mpz_class(std::to_string(d))));
}

ComplexEstimate nested_restricted_average(
    const Ensemble &ens, const std::vector<PauliString> &a_ops, const PauliString &b_last, int64_t samples) {
    int m = int(a_ops.size());
    if (m < 1) {
        throw std::invalid_argument("nested average needs m >= 1");
    }
    int n = b_last.n;
    uint64_t nonid = (uint64_t{1} << (2 * n)) - 1;
    uint64_t combos = 1;
    for (int j = 0; j + 1 < m; j++) {
        combos *= nonid;
        if (combos > (uint64_t{1} << 16)) {
            throw std::invalid_argument("nested average: too many B combinations");
        }
    }
    std::vector<std::vector<WordFactor>> words;
    for (uint64_t c = 0; c < combos; c++) {
        std::vector<PauliString> bs;
        uint64_t r = c;
        for (int j = 0; j + 1 < m; j++) {
            bs.push_back(pauli_from_index(n, 1 + r % nonid));
            r /= nonid;
        }
        bs.push_back(b_last);
        words.push_back(expand_word(OtoSpec(a_ops, bs, Ordering::nested)));
    }
    return average_over(ens, samples, [&](const UnitarySource &src) {
        bool ok = false;
        exact_word_value(src, words[0], ok);
        Matrix u;
        if (!ok) {
            u = to_dense(src).matrix();
        }
        Complex s = 0;
        for (const auto &w : words) {
            s += ok ? word_value(src, w) : evaluate_word(u, w);
        }
        return s / double(words.size());
    });
}

ComplexEstimate eight_point_orbit_average(
    const Ensemble &ens, Ordering ordering, const PauliString &b, const PauliString &d_op, bool ac_commute,
    int64_t samples) {
    if (ordering != Ordering::commutator && ordering != Ordering::non_commutator) {
        throw std::invalid_argument("orbit average supports commutator-type and non-commutator-type words");
    }
    int n = b.n;
    int64_t d = int64_t{1} << n;
    double dd = double(d);
    double s = ac_commute ? 1.0 : -1.0;
    // Number of A per fixed C.
    double per_c = ac_commute ? dd * dd / 2 - 2 : dd * dd / 2;
    if (per_c <= 0) {
        throw std::invalid_argument("orbit is empty at this dimension");
    }
    uint64_t num_c = uint64_t(d * d);
    bool commutator = ordering == Ordering::commutator;
    return average_over(ens, samples, [&](const UnitarySource &src) {
        Matrix u = to_dense(src).matrix();
        Matrix bt = heisenberg(u, b);
        Matrix dt = heisenberg(u, d_op);
        Complex total = 0;
        for (uint64_t ci = 1; ci < num_c; ci++) {
            PauliString c = pauli_from_index(n, ci);
            Matrix k = bt * pauli_left(c, dt);
            Matrix ck = pauli_left(c, k);
            Matrix ckc = pauli_right(ck, c);
            Complex tr_k = k.trace();
            Complex tr_ck = ck.trace();
            if (commutator) {
                Complex sum = dd / 2 * (std::norm(tr_k) + s * std::norm(tr_ck));
                if (ac_commute) {
                    sum -= dd;
                    sum -= (ckc.array() * k.conjugate().array()).sum();
                }
                total += sum;
            } else {
                Complex sum = dd / 2 * (tr_k * tr_k + s * tr_ck * tr_ck);
                if (ac_commute) {
                    sum -= (k.array() * k.transpose().array()).sum();
                    sum -= (ckc.array() * k.transpose().array()).sum();
                }
                total += sum;
            }
        }
        return total / (dd * per_c * double(num_c - 1));
    });
}

uint64_t tuple_index(const std::vector<PauliString> &labels) {
    uint64_t idx = 0;
    for (const auto &p : labels) {
        idx = (idx << (2 * p.n)) | p.index();
    }
    return idx;
}

std::vector<PauliString> tuple_from_index(int n, int k, uint64_t index) {
    std::vector<PauliString> out(k);
    uint64_t mask = (uint64_t{1} << (2 * n)) - 1;
    for (int j = k - 1; j >= 0; j--) {
        out[j] = pauli_from_index(n, index & mask);
        index >>= 2 * n;
    }
    return out;
}

Complex m_tensor(const std::vector<PauliString> &a_labels, const std::vector<PauliString> &c_labels) {
    if (a_labels.size() != c_labels.size() || a_labels.empty()) {
        throw std::invalid_argument("m_tensor: label lists must have equal nonzero length");
    }
    std::vector<PauliString> ops;
    for (size_t j = 0; j < a_labels.size(); j++) {
        ops.push_back(a_labels[j]);
        ops.push_back(c_labels[j]);
    }
    return trace_product(ops);
}

namespace {

void check_tensor_guard(int n, int k) {
    if (n * k > 5) {
        throw std::invalid_argument("M-tensor materialization limited to n*k <= 5");
    }
}

}  // namespace

std::vector<std::vector<Complex>> m_tensor_full(int n, int k) {
    check_tensor_guard(n, k);
    uint64_t count = uint64_t{1} << (2 * n * k);
    std::vector<std::vector<Complex>> m(count, std::vector<Complex>(count));
    for (uint64_t a = 0; a < count; a++) {
        auto al = tuple_from_index(n, k, a);
        for (uint64_t c = 0; c < count; c++) {
            m[a][c] = m_tensor(al, tuple_from_index(n, k, c));
        }
    }
    return m;
}

std::vector<Complex> measure_alpha(const Ensemble &ens, const std::vector<PauliString> &b_labels, int64_t samples) {
    int k = int(b_labels.size());
    int n = b_labels.at(0).n;
    check_tensor_guard(n, k);
    uint64_t count = uint64_t{1} << (2 * n * k);
    std::vector<std::vector<WordFactor>> words;
    for (uint64_t a = 0; a < count; a++) {
        words.push_back(expand_word(OtoSpec(tuple_from_index(n, k, a), b_labels)));
    }
    std::vector<Complex> alpha(count);
    for (uint64_t a = 0; a < count; a++) {
        alpha[a] = average_over(ens, samples, [&](const UnitarySource &src) { return word_value(src, words[a]); }).value;
    }
    return alpha;
}

ChannelCoefficients reconstruct_channel(const std::vector<Complex> &alpha, int k, int n) {
    check_tensor_guard(n, k);
    uint64_t count = uint64_t{1} << (2 * n * k);
    if (alpha.size() != count) {
        throw std::invalid_argument("reconstruct_channel: alpha must cover all 4^{nk} tuples");
    }
    double d = std::ldexp(1.0, n);
    double scale = std::pow(d, -(2.0 * k - 1));
    ChannelCoefficients out;
    out.k = k;
    out.n = n;
    out.gamma.assign(count, 0);
    for (uint64_t c = 0; c < count; c++) {
        auto cl = tuple_from_index(n, k, c);
        Complex s = 0;
        for (uint64_t a = 0; a < count; a++) {
            if (alpha[a] != Complex(0)) {
                s += std::conj(m_tensor(tuple_from_index(n, k, a), cl)) * alpha[a];
            }
        }
        out.gamma[c] = scale * s;
    }
    return out;
}

ChannelCoefficients pauli_expand(const Matrix &op, int n, int k) {
    check_tensor_guard(n, k);
    uint64_t count = uint64_t{1} << (2 * n * k);
    double dk = std::ldexp(1.0, n * k);
    if (op.rows() != int64_t(dk)) {
        throw std::invalid_argument("pauli_expand: operator side must be d^k");
    }
    ChannelCoefficients out;
    out.k = k;
    out.n = n;
    out.gamma.assign(count, 0);
    for (uint64_t c = 0; c < count; c++) {
        auto cl = tuple_from_index(n, k, c);
        PauliString big = cl[0];
        for (int j = 1; j < k; j++) {
            big = tensor(big, cl[j]);
        }
        out.gamma[c] = pauli_left(dagger(big), op).trace() / dk;
    }
    return out;
}

ChannelCoefficients channel_coefficients_direct(const Ensemble &ens, const std::vector<PauliString> &b_labels, int64_t samples) {
    int k = int(b_labels.size());
    int n = b_labels.at(0).n;
    PauliString big = b_labels[0];
    for (int j = 1; j < k; j++) {
        big = tensor(big, b_labels[j]);
    }
    Matrix phi = kfold_channel_apply(ens, pauli_to_dense(big), k, samples).mean;
    return pauli_expand(phi, n, k);
}

std::string correlator_kind_name(CorrelatorKind k) {
    switch (k) {
        case CorrelatorKind::two_point_mean:
            return "2-point mean";
        case CorrelatorKind::two_point_square:
            return "2-point squared";
        case CorrelatorKind::four_point:
            return "4-point";
        case CorrelatorKind::six_point:
            return "6-point";
        case CorrelatorKind::eight_point_commutator:
            return "8-point commutator-type";
        case CorrelatorKind::nested:
            return "4m-point nested";
    }
    return "?";
}

std::string supported_patterns() {
    return "supported patterns: "
           "haar/clifford 2-point mean (any A, B); "
           "pauli 2-point mean (any A, B); "
           "haar/clifford 2-point squared (A, B != I); "
           "haar/clifford 4-point standard (any Paulis); "
           "pauli 4-point standard with [B, C] = 0; "
           "haar 6-point standard with A..F != I, ACE = I, BDF = I, [A,C] = [B,D] = 0; "
           "haar 8-point commutator-type with A,B,C,D != I, AC, BD not prop. to I, [A,C] = [B,D] = 0; "
           "clifford 8-point commutator-type with A != I, BD not prop. to I; "
           "haar/clifford nested 4m-point with A1...Am not prop. to I and Bm != I";
}

GaussianRational predict(EnsembleKind ensemble, CorrelatorKind kind, int64_t d, const OtoSpec &spec) {
    auto unsupported = [&](const std::string &why) -> GaussianRational {
        throw std::invalid_argument("predict: unsupported pattern for " + correlator_kind_name(kind) + " (" + why +
                                    "); " + supported_patterns());
    };
    if (spec.n() > 0 && (int64_t{1} << spec.n()) != d) {
        return unsupported("d does not match the operators");
    }
    const auto &a = spec.a_ops;
    const auto &b = spec.b_ops;
    ExactRational dq(mpz_class(std::to_string(d)));
    ExactRational d2 = dq * dq;
    bool design2 = ensemble == EnsembleKind::haar || ensemble == EnsembleKind::clifford;
    auto is_id = [](const PauliString &p) { return p.is_identity_up_to_phase(); };
    switch (kind) {
        case CorrelatorKind::two_point_mean:
            if (spec.k() != 1) {
                return unsupported("needs k = 1");
            }
            if (design2) {
                return gmul(expect(a[0]), expect(b[0]));
            }
            return is_id(b[0]) ? expect({a[0], b[0]}) : gr(0);
        case CorrelatorKind::two_point_square:
            if (spec.k() != 1 || !design2 || is_id(a[0]) || is_id(b[0])) {
                return unsupported("needs k = 1, a 2-design ensemble and A, B != I");
            }
            return gr(ExactRational(1) / (d2 - 1));
        case CorrelatorKind::four_point: {
            if (spec.k() != 2 || spec.ordering != Ordering::standard) {
                return unsupported("needs k = 2, standard ordering");
            }
            const PauliString &A = a[0], &B = b[0], &C = a[1], &D = b[1];
            if (design2) {
                GaussianRational ac = expect({A, C});
                GaussianRational bd = expect({B, D});
                GaussianRational ea = expect(A), eb = expect(B), ec = expect(C), ed = expect(D);
                GaussianRational out = gmul(ac, gmul(eb, ed));
                out += gmul(gmul(ea, ec), bd);
                out = gsub(out, gmul(gmul(ea, ec), gmul(eb, ed)));
                GaussianRational cac = gsub(ac, gmul(ea, ec));
                GaussianRational cbd = gsub(bd, gmul(eb, ed));
                return gsub(out, gscale(gmul(cac, cbd), ExactRational(1) / (d2 - 1)));
            }
            if (!commutes(B, C)) {
                return unsupported("pauli branch needs [B, C] = 0");
            }
            return gmul(expect({A, C}), expect({B, D}));
        }
        case CorrelatorKind::six_point: {
            if (ensemble != EnsembleKind::haar || spec.k() != 3 || spec.ordering != Ordering::standard) {
                return unsupported("needs haar, k = 3, standard ordering");
            }
            for (int j = 0; j < 3; j++) {
                if (is_id(a[j]) || is_id(b[j])) {
                    return unsupported("all operators must differ from I");
                }
            }
            PauliString ace = mul(mul(a[0], a[1]), a[2]);
            PauliString bdf = mul(mul(b[0], b[1]), b[2]);
            if (!(ace == PauliString::identity(spec.n())) || !(bdf == PauliString::identity(spec.n()))) {
                return unsupported("needs ACE = I and BDF = I");
            }
            if (!commutes(a[0], a[1]) || !commutes(b[0], b[1])) {
                return unsupported("needs [A, C] = 0 and [B, D] = 0");
            }
            return gr(2 * d2 / ((d2 - 1) * (d2 - 4)));
        }
        case CorrelatorKind::eight_point_commutator: {
            if (spec.k() != 2 || spec.ordering != Ordering::commutator) {
                return unsupported("needs k = 2, commutator-type ordering");
            }
            const PauliString &A = a[0], &B = b[0], &C = a[1], &D = b[1];
            if (ensemble == EnsembleKind::clifford) {
                if (is_id(A) || is_id(mul(B, D))) {
                    return unsupported("clifford branch needs A != I and BD not prop. to I");
                }
                return gr(ExactRational(-k_phase(A, dagger(C))) / (d2 - 1));
            }
            if (ensemble != EnsembleKind::haar) {
                return unsupported("pauli branch not tabulated");
            }
            if (is_id(A) || is_id(B) || is_id(C) || is_id(D) || is_id(mul(A, C)) || is_id(mul(B, D))) {
                return unsupported("needs A, B, C, D != I and AC, BD not prop. to I");
            }
            if (!commutes(A, C) || !commutes(B, D)) {
                return unsupported("needs [A, C] = 0 and [B, D] = 0");
            }
            return gr((-3 * d2 - 5 * dq - 33) / ((d2 - 1) * (d2 - 4) * (d2 - 9)));
        }
        case CorrelatorKind::nested: {
            if (!design2 || spec.ordering != Ordering::nested) {
                return unsupported("needs a 2-design ensemble and nested ordering");
            }
            PauliString prod = a[0];
            for (int j = 1; j < spec.k(); j++) {
                prod = mul(prod, a[j]);
            }
            if (is_id(prod) || is_id(b.back())) {
                return unsupported("needs A1...Am not prop. to I and Bm != I");
            }
            ExactRational base = ExactRational(-1) / (d2 - 1);
            ExactRational out = 1;
            for (int j = 0; j < spec.k(); j++) {
                out *= base;
            }
            return gr(out);
        }
    }
    return unsupported("unknown kind");
}

OtoSpec canonical_spec(CorrelatorKind kind, int n) {
    auto P = [n](int q, char c) { return PauliString::single(n, q, c); };
    switch (kind) {
        case CorrelatorKind::two_point_mean:
        case CorrelatorKind::two_point_square:
            return OtoSpec({P(0, 'Z')}, {P(0, 'X')});
        case CorrelatorKind::four_point:
            return OtoSpec({P(0, 'Z'), P(0, 'Z')}, {P(0, 'X'), P(0, 'X')});
        case CorrelatorKind::six_point: {
            if (n < 2) {
                throw std::invalid_argument("commuting 6-point pattern needs n >= 2");
            }
            PauliString a = P(0, 'X'), c = P(1, 'X'), b = P(0, 'Z'), d = P(1, 'Z');
            return OtoSpec({a, c, dagger(mul(a, c))}, {b, d, dagger(mul(b, d))});
        }
        case CorrelatorKind::eight_point_commutator:
            if (n < 2) {
                throw std::invalid_argument("commuting 8-point pattern needs n >= 2");
            }
            return OtoSpec({P(0, 'X'), P(1, 'X')}, {P(0, 'Z'), P(1, 'Z')}, Ordering::commutator);
        case CorrelatorKind::nested:
            return OtoSpec({P(0, 'X'), P(0, 'Z')}, {P(0, 'Z'), P(0, 'X')}, Ordering::nested);
    }
    throw std::invalid_argument("unknown correlator kind");
}

}  // namespace designlab
