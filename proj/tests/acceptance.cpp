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

// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance            run all
//   acceptance --only N   run criterion N

#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "designlab/clifford.hpp"
#include "designlab/ensemble.hpp"
#include "designlab/framepot.hpp"
#include "designlab/oto.hpp"
#include "designlab/rng.hpp"
#include "designlab/scrambling.hpp"
#include "designlab/wg.hpp"

using namespace designlab;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Prints one detail line and returns ok.
bool note(bool ok, const std::string &what) {
    std::cout << "    " << (ok ? "ok   " : "MISS ") << what << "\n";
    return ok;
}

std::string fmt(double v) {
    std::ostringstream s;
    s << std::setprecision(8) << v;
    return s.str();
}

bool sigma_check(const std::string &name, const Estimate &e, double ref, double nsig = 5) {
    return note(e.within(ref, nsig),
                name + ": " + fmt(e.value) + " +- " + fmt(e.std_error) + " vs " + fmt(ref) + " (" +
                    fmt(e.sigmas_from(ref)) + " sigma)");
}

bool close_check(const std::string &name, double v, double ref, double tol) {
    return note(std::abs(v - ref) <= tol, name + ": " + fmt(v) + " vs " + fmt(ref) + " (tol " + fmt(tol) + ")");
}

bool c1() {
    auto t0 = std::chrono::steady_clock::now();
    Ensemble h = haar_ensemble(4, 101);
    bool ok = sigma_check("F(1), d=4", frame_potential_mc(h, 1, 20000), 1);
    ok &= sigma_check("F(2), d=4", frame_potential_mc(h, 2, 20000), 2);
    double t = seconds_since(t0);
    ok &= note(t < 30, "runtime " + fmt(t) + " s < 30 s");
    return ok;
}

bool c2() {
    auto t0 = std::chrono::steady_clock::now();
    Ensemble h = haar_ensemble(2, 202);
    bool ok = sigma_check("F(3), d=2", frame_potential_mc(h, 3, 20000), 5);
    ok &= sigma_check("F(4), d=2", frame_potential_mc(h, 4, 20000), 14);
    double t = seconds_since(t0);
    ok &= note(t < 30, "runtime " + fmt(t) + " s < 30 s");
    return ok;
}

bool c3() {
    auto t0 = std::chrono::steady_clock::now();
    Ensemble p = pauli_ensemble(1);
    Ensemble c = clifford1_ensemble();
    bool ok = close_check("Pauli F(1)", frame_potential_exact(p, 1).value, 1, 1e-12);
    double p2 = frame_potential_exact(p, 2).value;
    ok &= close_check("Pauli F(2)", p2, 4, 1e-12);
    ok &= note(p2 > 2, "Pauli F(2) > 2 (not a 2-design)");
    ok &= close_check("Clifford F(2)", frame_potential_exact(c, 2).value, 2, 1e-12);
    ok &= close_check("Clifford F(3)", frame_potential_exact(c, 3).value, 5, 1e-12);
    double c4 = frame_potential_exact(c, 4).value;
    ok &= note(c4 > 14, "Clifford F(4) = " + fmt(c4) + " > 14 (not a 4-design)");
    double t = seconds_since(t0);
    ok &= note(t < 10, "runtime " + fmt(t) + " s < 10 s");
    return ok;
}

// Closed forms written out per cycle type.
ExactRational closed_wg(const std::string &mu, int64_t dv) {
    ExactRational d(dv);
    auto inv = [](const ExactRational &x) -> ExactRational { return 1 / x; };
    if (mu == "1,1") return inv(d * d - 1);
    if (mu == "2") return -inv(d * (d * d - 1));
    ExactRational a = inv(d * (d - 1) * (d - 2));
    ExactRational b = inv(d * (d + 1) * (d - 1));
    ExactRational c = inv(d * (d + 1) * (d + 2));
    if (mu == "1,1,1") return (a + 4 * b + c) / 6;
    if (mu == "2,1") return (-a + c) / 6;
    if (mu == "3") return (a - 2 * b + c) / 6;
    ExactRational den = d * d * (d * d - 1) * (d * d - 4) * (d * d - 9);
    if (mu == "1,1,1,1") return (d * d * d * d - 8 * d * d + 6) / den;
    if (mu == "2,1,1") return (-d * d * d + 4 * d) / den;
    if (mu == "2,2") return (d * d + 6) / den;
    if (mu == "3,1") return (2 * d * d - 3) / den;
    if (mu == "4") return (-5 * d) / den;
    throw std::invalid_argument("no closed form for " + mu);
}

bool c4() {
    bool ok = true;
    int checked = 0;
    for (int k = 2; k <= 4; k++) {
        for (int64_t d = 2; d <= 5; d++) {
            if (d < k) {
                continue;
            }
            for (const auto &mu : partitions(k)) {
                ExactRational got = weingarten(mu, d);
                std::string key = mu.str().substr(1, mu.str().size() - 2);
                ExactRational want = closed_wg(key, d);
                if (got != want) {
                    ok &= note(false, "Wg(" + mu.str() + ", d=" + std::to_string(d) + ") = " + to_string(got) +
                                          " expected " + to_string(want));
                }
                checked++;
            }
        }
    }
    note(ok, std::to_string(checked) + " Weingarten values match the closed forms exactly");
    bool q_ok = true;
    for (int k = 1; k <= 4; k++) {
        for (int64_t d = k; d <= 6; d++) {
            if (!is_identity(multiply(q_matrix(k, d), q_inverse(k, d)))) {
                q_ok = note(false, "Q Q^-1 != I at k=" + std::to_string(k) + ", d=" + std::to_string(d));
            }
        }
    }
    note(q_ok, "Q Q^-1 = I exactly for k <= 4, k <= d <= 6");
    return ok && q_ok;
}

bool c5() {
    bool ok = true;
    std::vector<Ensemble> ens = {trivial_ensemble(1), pauli_ensemble(1), clifford1_ensemble()};
    for (const auto &e : ens) {
        for (int k = 1; k <= 2; k++) {
            ok &= close_check(e.label() + " k=" + std::to_string(k) + " OTO side vs frame potential",
                              frame_potential_via_oto(e, k).value, frame_potential_exact(e, k).value, 1e-10);
        }
    }
    return ok;
}

bool c6() {
    bool ok = true;
    for (const auto &e : {pauli_ensemble(1), clifford1_ensemble()}) {
        double worst = 0;
        for (uint64_t b = 0; b < 16; b++) {
            auto labels = tuple_from_index(1, 2, b);
            ChannelCoefficients rec = reconstruct_channel(measure_alpha(e, labels), 2, 1);
            ChannelCoefficients dir = channel_coefficients_direct(e, labels);
            for (size_t i = 0; i < rec.gamma.size(); i++) {
                worst = std::max(worst, std::abs(rec.gamma[i] - dir.gamma[i]));
            }
        }
        ok &= note(worst <= 1e-10, e.label() + ": max |gamma_reconstructed - gamma_direct| = " + fmt(worst));
    }
    for (auto [n, k] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
        auto m = m_tensor_full(n, k);
        double target = std::pow(2.0, 2 * n * k);
        bool exact = true;
        size_t count = m.size();
        for (size_t c = 0; c < count && exact; c++) {
            for (size_t c2 = 0; c2 < count && exact; c2++) {
                Complex s = 0;
                for (size_t a = 0; a < count; a++) {
                    s += std::conj(m[a][c]) * m[a][c2];
                }
                exact = s == Complex(c == c2 ? target : 0.0, 0.0);
            }
        }
        ok &= note(exact, "sum_A conj(M) M = d^{2k} delta exactly at n=" + std::to_string(n) + ", k=" + std::to_string(k));
    }
    return ok;
}

double slope(const std::vector<double> &ds, const std::vector<double> &vs) {
    double mx = 0, my = 0;
    size_t m = ds.size();
    for (size_t i = 0; i < m; i++) {
        mx += std::log(ds[i]) / m;
        my += std::log(std::abs(vs[i])) / m;
    }
    double sxy = 0, sxx = 0;
    for (size_t i = 0; i < m; i++) {
        double x = std::log(ds[i]) - mx;
        sxy += x * (std::log(std::abs(vs[i])) - my);
        sxx += x * x;
    }
    return sxy / sxx;
}

bool c7() {
    bool ok = true;
    Ensemble h = haar_ensemble(4, 707);
    int64_t samples = 50000;
    struct Case {
        CorrelatorKind kind;
        const char *name;
    };
    for (Case cs : {Case{CorrelatorKind::four_point, "4-point, A=C^dag, B=D^dag"},
                    Case{CorrelatorKind::six_point, "6-point commuting"},
                    Case{CorrelatorKind::eight_point_commutator, "8-point commutator-type commuting"}}) {
        OtoSpec spec = canonical_spec(cs.kind, 2);
        double ref = predict(EnsembleKind::haar, cs.kind, 4, spec).to_complex().real();
        Estimate e = oto_ensemble_average(h, spec, samples).real();
        ok &= sigma_check(std::string(cs.name) + ", d=4", e, ref);
    }
    std::vector<double> ds, comm, noncomm;
    for (int n : {2, 3, 4}) {
        int d = 1 << n;
        PauliString b = PauliString::single(n, 0, 'Z');
        PauliString dop = PauliString::single(n, 1, 'Z');
        Ensemble hd = haar_ensemble(d, 7000 + d);
        ComplexEstimate c = eight_point_orbit_average(hd, Ordering::commutator, b, dop, true, 20000);
        ComplexEstimate nc = eight_point_orbit_average(hd, Ordering::non_commutator, b, dop, true, 4000);
        note(true, "d=" + std::to_string(d) + ": commutator-type " + fmt(c.value.real()) + " +- " + fmt(c.std_error) +
                       ", non-commutator-type " + fmt(nc.value.real()) + " +- " + fmt(nc.std_error));
        ds.push_back(d);
        comm.push_back(c.value.real());
        noncomm.push_back(nc.value.real());
    }
    double sc = slope(ds, comm);
    double sn = slope(ds, noncomm);
    ok &= note(std::abs(sc + 4) <= 0.5, "commutator-type log-log slope " + fmt(sc) + " in -4 +- 0.5");
    ok &= note(std::abs(sn + 2) <= 0.5, "non-commutator-type log-log slope " + fmt(sn) + " in -2 +- 0.5");
    return ok;
}

bool c8() {
    TimeAverage ta = time_averaged_frame_potential({0.0, 1.0, std::sqrt(2.0), M_PI}, 1, 2000, 200000);
    double ref = to_double(analytic_time_average(1, 4));
    note(true, "value at t_max/2: " + fmt(ta.half_time_value));
    return close_check("time average k=1, d=4", ta.estimate.value, ref, 0.05 * ref);
}

bool c9() {
    Rng rng(909, 0);
    double worst2 = 0, worst3 = 0, worst_catch = 0;
    for (int i = 0; i < 50; i++) {
        DenseUnitary u = haar_unitary(4, rng);
        for (int a = 0; a < 2; a++) {
            for (int dq = 0; dq < 2; dq++) {
                IoPartition part(2, {a}, {dq});
                IdentityCheck r2 = oto_renyi2_check(u, part);
                IdentityCheck r3 = renyi_k_oto(u, part, 3);
                worst2 = std::max(worst2, std::abs(r2.lhs - r2.rhs));
                worst3 = std::max(worst3, std::abs(r3.lhs - r3.rhs));
            }
        }
        // Random perturbation distribution over a few Paulis.
        PerturbationDistribution dist;
        double p_i = 0;
        double total = 0;
        int terms = 1 + int(rng.below(5));
        for (int t = 0; t < terms; t++) {
            PauliString p = pauli_from_index(2, rng.below(16));
            double w = rng.uniform();
            dist.push_back({p, w});
            total += w;
        }
        for (auto &[p, w] : dist) {
            w /= total;
            if (p.is_identity_up_to_phase()) {
                p_i += w;
            }
        }
        worst_catch = std::max(worst_catch, std::abs(catch_game(u, dist) - p_i));
    }
    bool ok = note(worst2 <= 1e-10, "Renyi-2 OTO identity, max deviation " + fmt(worst2));
    ok &= note(worst3 <= 1e-10, "Renyi-3 OTO identity, max deviation " + fmt(worst3));
    ok &= note(worst_catch <= 1e-10, "catch game vs p_I, max deviation " + fmt(worst_catch));
    return ok;
}

bool c10() {
    bool ok = true;
    for (int n = 1; n <= 3; n++) {
        int d = 1 << n;
        Matrix rho = Matrix::Zero(d, d);
        rho(0, 0) = 1;
        ok &= close_check("Pauli-X F(1)(|0..0>), n=" + std::to_string(n), generalized_F(pauli_x_ensemble(n), rho, 1).value,
                          1.0 / d, 1e-12);
    }
    Matrix pure = Matrix::Zero(2, 2);
    pure(0, 0) = 1;
    double ref = generalized_F_haar_reference(StateKind::pure, 2, 2);
    ok &= close_check("pure-state Haar reference k=2, d=2", ref, 1.0 / 3, 1e-15);
    ok &= sigma_check("Haar F(2)(pure), d=2", generalized_F(haar_ensemble(2, 1010), pure, 2, 20000), 1.0 / 3);
    Estimate w = thermal_W(gue_evolution_ensemble(2, 1.0, 1011), 0.0, 1.0, 1, 20000).estimate;
    Estimate f = frame_potential_mc(gue_evolution_ensemble(2, 1.0, 1012), 1, 20000);
    double se = std::hypot(w.std_error, f.std_error / 4);
    double dev = std::abs(w.value - f.value / 4);
    ok &= note(dev <= 5 * se, "thermal W(beta=0) " + fmt(w.value) + " vs F/d^2 " + fmt(f.value / 4) + " (" +
                                  fmt(dev / se) + " sigma, independent draws)");
    return ok;
}

bool c11() {
    bool ok = close_check("cardinality F=2 k=2 d=4", cardinality_bound(2, 2, 4), 128, 1e-12);
    ok &= close_check("complexity F=2 k=2 n=10 choices=180", complexity_bound(2, 2, 10, 180), 5.205654662276607, 1e-12);
    ok &= close_check("gate count |E|=128 g=4 n=2", gate_count_bound(128, 4, 2), 1.75, 1e-12);
    ok &= close_check("entropy F=1 k=1 n=3", entropy_bound(1, 1, 3), 6, 1e-12);
    ok &= close_check("depth F=2 k=2 n=4 g=3 q=2", depth_bound(2, 2, 4, 3, 2), 3.5971869985219715, 1e-12);
    ok &= close_check("epsilon F=2 k=2 d=4 eps=0.5 choices=10", epsilon_bound(2, 2, 4, 0.5, 10), 1.8900627286962421, 1e-12);
    bool threw = false;
    try {
        epsilon_bound(2, 2, 4, 1.5, 10);
    } catch (const std::invalid_argument &) {
        threw = true;
    }
    ok &= note(threw, "epsilon >= sqrt(2) rejected");
    // SYK: N Majoranas on N/2 qubits, tr(H^2) = J^2 d N / (2 q^2).
    double j = 0.5, big_n = 8, q = 4, t = 0.2;
    int k = 2;
    int64_t d = 16;
    double tr_h2 = j * j * d * big_n / (2 * q * q);
    EarlyTimeBound e = early_time_bound(tr_h2, k, d, t);
    ok &= close_check("early-time SYK form k (J t)^2 N / q^2", e.value, k * (j * t) * (j * t) * big_n / (q * q), 1e-15);
    ok &= note(e.valid, "early-time validity flag set (t^2 tr(H^2)/d = " + fmt(e.small_parameter) + ")");
    return ok;
}

struct Criterion {
    int id;
    const char *title;
    std::function<bool()> run;
};

}  // namespace

int main(int argc, char **argv) {
    int only = 0;
    for (int i = 1; i < argc; i++) {
        if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        }
    }
    std::vector<Criterion> all = {
        {1, "Haar frame potential d=4, k=1,2 (MC)", c1},
        {2, "Haar frame potential d=2 Catalan values k=3,4 (MC)", c2},
        {3, "design ladder by exact enumeration at n=1", c3},
        {4, "Weingarten closed forms and Q Q^-1 = I", c4},
        {5, "OTO-frame potential identity", c5},
        {6, "channel reconstruction from OTO averages, M orthogonality", c6},
        {7, "closed-form correlators and 8-point scaling", c7},
        {8, "time-average ergodicity gap", c8},
        {9, "Renyi-OTO identities and catch game", c9},
        {10, "generalized and thermal frame potentials", c10},
        {11, "bounds arithmetic", c11},
    };
    bool any_fail = false;
    bool ran = false;
    for (const auto &c : all) {
        if (only && c.id != only) {
            continue;
        }
        ran = true;
        std::cout << "criterion " << c.id << ": " << c.title << "\n";
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception &e) {
            std::cout << "    exception: " << e.what() << "\n";
        }
        std::cout << (ok ? "PASS" : "FAIL") << " " << c.id << " " << c.title << "\n" << std::flush;
        any_fail |= !ok;
    }
    if (!ran) {
        std::cerr << "no criterion " << only << "\n";
        return 2;
    }
    return any_fail ? 1 : 0;
}
