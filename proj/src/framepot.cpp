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

#include "designlab/framepot.hpp"

#include <cmath>
#include <stdexcept>

#include "designlab/clifford.hpp"
#include "designlab/oto.hpp"
#include "designlab/pauli.hpp"

namespace designlab {

namespace {

void check_k(int k) {
    if (k < 1) {
        throw std::invalid_argument("k must be >= 1");
    }
}

// |tr(U^dag V)|^2 with exact traces when both sides are Pauli or Clifford.
std::optional<double> exact_overlap_sq(const UnitarySource &u, const UnitarySource &v) {
    auto pu = std::get_if<PauliString>(&u);
    auto pv = std::get_if<PauliString>(&v);
    if (pu && pv) {
        if (pu->x == pv->x && pu->z == pv->z) {
            double d = std::ldexp(1.0, pu->n);
            return d * d;
        }
        return 0.0;
    }
    auto as_tab = [](const UnitarySource &s) -> std::optional<CliffordTableau> {
        if (auto p = std::get_if<PauliString>(&s)) {
            return CliffordTableau::from_pauli(*p);
        }
        if (auto c = std::get_if<CliffordTableau>(&s)) {
            return *c;
        }
        return std::nullopt;
    };
    auto tu = as_tab(u);
    auto tv = as_tab(v);
    if (tu && tv) {
        return double(trace_norm_squared(tu->inverse() * *tv));
    }
    return std::nullopt;
}

Complex overlap(const Matrix &u, const Matrix &v) {
    return (u.conjugate().array() * v.array()).sum();
}

template <typename F>
Estimate pair_average(const Ensemble &ens, int64_t n_pairs, F &&value) {
    if (ens.is_discrete()) {
        const auto &el = ens.elements();
        double total = 0;
        for (size_t i = 0; i < el.size(); i++) {
            for (size_t j = 0; j < el.size(); j++) {
                total += el[i].weight * el[j].weight * value(el[i].element, el[j].element);
            }
        }
        return Estimate::exact(total, int64_t(el.size() * el.size()));
    }
    if (n_pairs < 2) {
        throw std::invalid_argument("Monte-Carlo estimate needs at least 2 pairs");
    }
    std::vector<double> vals(n_pairs);
    for (int64_t i = 0; i < n_pairs; i++) {
        vals[i] = value(ens.draw(2 * uint64_t(i)), ens.draw(2 * uint64_t(i) + 1));
    }
    return summarize(vals, ens.seed());
}

}  // namespace

Estimate frame_potential_exact(const Ensemble &ens, int k) {
    check_k(k);
    if (!ens.is_discrete()) {
        throw std::invalid_argument("frame_potential_exact needs a discrete ensemble (use the Monte-Carlo variant)");
    }
    const auto &el = ens.elements();
    std::vector<std::optional<Matrix>> dense(el.size());
    auto mat = [&](size_t i) -> const Matrix & {
        if (!dense[i]) {
            dense[i] = to_dense(el[i].element).matrix();
        }
        return *dense[i];
    };
    std::vector<double> terms;
    terms.reserve(el.size() * el.size());
    for (size_t i = 0; i < el.size(); i++) {
        for (size_t j = 0; j < el.size(); j++) {
            auto ex = exact_overlap_sq(el[i].element, el[j].element);
            double sq = ex ? *ex : std::norm(overlap(mat(i), mat(j)));
            terms.push_back(el[i].weight * el[j].weight * std::pow(sq, k));
        }
    }
    return Estimate::exact(pairwise_sum(terms), int64_t(terms.size()));
}

Estimate frame_potential_mc(const Ensemble &ens, int k, int64_t n_pairs) {
    check_k(k);
    return pair_average(ens, n_pairs, [k](const UnitarySource &u, const UnitarySource &v) {
        auto ex = exact_overlap_sq(u, v);
        double sq = ex ? *ex : std::norm(overlap(to_dense(u).matrix(), to_dense(v).matrix()));
        return std::pow(sq, k);
    });
}

Estimate frame_potential_via_oto(const Ensemble &ens, int k) {
    check_k(k);
    int n = qubits_of_dim(ens.dim());
    if (n * k > 2) {
        throw std::invalid_argument("frame_potential_via_oto: Pauli enumeration limited to n*k <= 2");
    }
    if (!ens.is_discrete()) {
        throw std::invalid_argument("frame_potential_via_oto needs a discrete ensemble");
    }
    uint64_t count = uint64_t{1} << (2 * n * k);
    std::vector<double> terms;
    for (uint64_t b = 0; b < count; b++) {
        auto alpha = measure_alpha(ens, tuple_from_index(n, k, b));
        for (const auto &a : alpha) {
            terms.push_back(std::norm(a));
        }
    }
    double d = std::ldexp(1.0, n);
    double value = std::pow(d, 2.0 * (k + 1)) / std::pow(d, 4.0 * k) * pairwise_sum(terms);
    return Estimate::exact(value, int64_t(terms.size()));
}

TimeAverage time_averaged_frame_potential(const std::vector<double> &spectrum, int k, double t_max, int64_t n_grid) {
    check_k(k);
    if (n_grid < 16) {
        throw std::invalid_argument("time average needs n_grid >= 16");
    }
    if (spectrum.empty() || !(t_max > 0)) {
        throw std::invalid_argument("time average needs a nonempty spectrum and t_max > 0");
    }
    if (n_grid % 2) {
        n_grid++;
    }
    double h = t_max / double(n_grid);
    std::vector<double> f(n_grid + 1);
    for (int64_t m = 0; m <= n_grid; m++) {
        double tau = h * double(m);
        Complex s = 0;
        for (double e : spectrum) {
            s += std::polar(1.0, -e * tau);
        }
        f[m] = std::pow(std::norm(s), k);
    }
    // Double average over [0,T]^2 reduces to (2/T^2) int_0^T (T - tau) f(tau).
    auto average = [&](int64_t intervals) {
        double t = h * double(intervals);
        std::vector<double> g(intervals + 1);
        for (int64_t m = 0; m <= intervals; m++) {
            g[m] = (t - h * double(m)) * f[m];
        }
        g[0] *= 0.5;
        g[intervals] *= 0.5;
        return 2.0 / (t * t) * h * pairwise_sum(g);
    };
    TimeAverage out;
    out.estimate.value = average(n_grid);
    out.half_time_value = average(n_grid / 2);
    out.estimate.std_error = std::abs(out.estimate.value - out.half_time_value);
    out.estimate.n_samples = n_grid + 1;
    out.estimate.method = Method::time_average;
    return out;
}

ExactRational analytic_time_average(int k, int64_t d) {
    check_k(k);
    mpz_class fact = 1;
    mpz_class dk = 1;
    for (int j = 1; j <= k; j++) {
        fact *= j;
        dk *= mpz_class(std::to_string(d));
    }
    return ExactRational(fact * dk);
}

Estimate generalized_F(const Ensemble &ens, const Matrix &rho, int k, int64_t samples) {
    check_k(k);
    check_density_matrix(rho);
    Matrix r = psd_power(rho, 1.0 / k);
    return pair_average(ens, samples, [&](const UnitarySource &u, const UnitarySource &v) {
        const Matrix uv = to_dense(u).matrix() * to_dense(v).matrix().adjoint();
        return std::pow(std::norm((r * uv).trace()), k);
    });
}

ComplexEstimate generalized_G(const Ensemble &ens, const Matrix &rho, int k, int64_t samples) {
    check_k(k);
    check_density_matrix(rho);
    Matrix r = psd_power(rho, 1.0 / k);
    auto term = [&](const UnitarySource &us, const UnitarySource &vs) {
        const Matrix u = to_dense(us).matrix();
        const Matrix v = to_dense(vs).matrix();
        Complex a = (r * u * v.adjoint()).trace();
        Complex b = (r * u.adjoint() * v).trace();
        return std::pow(a * b, k);
    };
    if (ens.is_discrete()) {
        const auto &el = ens.elements();
        std::vector<Complex> terms;
        for (const auto &x : el) {
            for (const auto &y : el) {
                terms.push_back(x.weight * y.weight * term(x.element, y.element));
            }
        }
        ComplexEstimate out;
        out.value = pairwise_sum(terms);
        out.n_samples = int64_t(terms.size());
        return out;
    }
    if (samples < 2) {
        throw std::invalid_argument("Monte-Carlo estimate needs at least 2 pairs");
    }
    std::vector<Complex> vals(samples);
    for (int64_t i = 0; i < samples; i++) {
        vals[i] = term(ens.draw(2 * uint64_t(i)), ens.draw(2 * uint64_t(i) + 1));
    }
    return summarize(vals, ens.seed());
}

double generalized_F_haar_reference(StateKind kind, int k, int d, const Matrix *rho) {
    check_k(k);
    double dd = d;
    switch (kind) {
        case StateKind::pure: {
            // 1 / binom(k + d - 1, k)
            double b = 1;
            for (int j = 1; j <= k; j++) {
                b = b * (d - 1 + j) / j;
            }
            return 1.0 / b;
        }
        case StateKind::maximally_mixed:
            return to_double(haar_frame_potential_exact(k, d)) / (dd * dd);
        case StateKind::explicit_state: {
            if (!rho) {
                throw std::invalid_argument("explicit-state reference needs rho");
            }
            check_density_matrix(*rho);
            double tr2 = (*rho * *rho).trace().real();
            if (k == 1) {
                return tr2 / dd;
            }
            if (k == 2) {
                double tr1 = rho->trace().real();
                return 2 * tr1 * tr1 / (dd * dd - 1) - 2 * tr2 / (dd * (dd * dd - 1));
            }
            throw std::invalid_argument("no closed form for explicit rho at k >= 3; use the Monte-Carlo estimate");
        }
    }
    throw std::invalid_argument("unknown state kind");
}

ThermalResult thermal_W(const Ensemble &h_ens, double beta, double t, int k, int64_t samples) {
    check_k(k);
    if (beta < 0) {
        throw std::invalid_argument("thermal_W needs beta >= 0");
    }
    if (samples < 2) {
        throw std::invalid_argument("thermal_W needs at least 2 pairs");
    }
    auto hamiltonian = [&](uint64_t idx) {
        UnitarySource s = h_ens.draw(idx);
        auto te = std::get_if<TimeEvolution>(&s);
        if (!te) {
            throw std::invalid_argument("thermal_W needs a Hamiltonian ensemble");
        }
        return te->hamiltonian;
    };
    double b = beta / (2.0 * k);
    std::vector<double> vals(samples);
    double max_integrand = 0;
    for (int64_t i = 0; i < samples; i++) {
        Matrix g = hamiltonian(2 * uint64_t(i));
        Matrix h = hamiltonian(2 * uint64_t(i) + 1);
        Matrix eg = hermitian_function(g, [&](double e) { return std::exp(Complex(-b, t) * e); });
        Matrix eh = hermitian_function(h, [&](double e) { return std::exp(Complex(-b, -t) * e); });
        double zg = hermitian_function(g, [&](double e) { return Complex(std::exp(-beta * e)); }).trace().real();
        double zh = hermitian_function(h, [&](double e) { return Complex(std::exp(-beta * e)); }).trace().real();
        double v = std::pow(std::norm((eg * eh).trace()), k) / (zg * zh);
        vals[i] = v;
        max_integrand = std::max(max_integrand, v);
    }
    ThermalResult out;
    out.estimate = summarize(vals, h_ens.seed());
    out.max_integrand = max_integrand;
    return out;
}

namespace {

void check_f(double f) {
    if (!(f > 0)) {
        throw std::invalid_argument("frame potential must be positive");
    }
}

double log_choices(double choices) {
    if (!(choices > 1)) {
        throw std::invalid_argument("choices must exceed 1");
    }
    return std::log(choices);
}

}  // namespace

double cardinality_bound(double f, int k, int64_t d) {
    check_f(f);
    check_k(k);
    return std::pow(double(d), 2.0 * k) / f;
}

double complexity_bound(double f, int k, int n, double choices) {
    check_f(f);
    check_k(k);
    return (2.0 * k * n * std::log(2.0) - std::log(f)) / log_choices(choices);
}

double gate_count_bound(double cardinality, double g, int n) {
    if (!(cardinality > 0)) {
        throw std::invalid_argument("cardinality must be positive");
    }
    return std::log(cardinality) / log_choices(g * double(n) * double(n));
}

double entropy_bound(double f, int k, int n) {
    check_f(f);
    check_k(k);
    return 2.0 * k * n - std::log2(f);
}

double depth_bound(double f, int k, int n, double g, int q) {
    check_f(f);
    check_k(k);
    if (q < 1 || q > n || !(g > 0)) {
        throw std::invalid_argument("depth_bound needs 1 <= q <= n and g > 0");
    }
    // log(n! / (q!)^{n/q})
    double arrangements = std::lgamma(n + 1.0) - double(n) / q * std::lgamma(q + 1.0);
    double denom = std::log(g) + arrangements;
    if (!(denom > 0)) {
        throw std::invalid_argument("depth_bound denominator is not positive");
    }
    return (2.0 * k * n * std::log(2.0) - std::log(f)) / denom;
}

double epsilon_bound(double f, int k, int64_t d, double epsilon, double choices) {
    check_f(f);
    check_k(k);
    if (!(epsilon >= 0) || epsilon >= std::sqrt(2.0)) {
        throw std::invalid_argument("epsilon_bound needs 0 <= epsilon < sqrt(2)");
    }
    return (2.0 * k * std::log(double(d)) - k * epsilon * epsilon - std::log(f)) / log_choices(choices);
}

EarlyTimeBound early_time_bound(double tr_h2_avg, int k, int64_t d, double t) {
    check_k(k);
    if (!(tr_h2_avg > 0) || d < 1) {
        throw std::invalid_argument("early_time_bound needs tr(H^2) > 0");
    }
    EarlyTimeBound out;
    out.small_parameter = t * t * tr_h2_avg / double(d);
    out.value = 2.0 * k * out.small_parameter;
    out.valid = out.small_parameter <= kEarlyTimeThreshold;
    return out;
}

}  // namespace designlab
