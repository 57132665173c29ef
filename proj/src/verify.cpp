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

#include <cmath>
#include <iomanip>
#include <sstream>

#include "designlab/cli.hpp"
#include "designlab/clifford.hpp"
#include "designlab/ensemble.hpp"
#include "designlab/framepot.hpp"
#include "designlab/oto.hpp"
#include "designlab/rng.hpp"
#include "designlab/scrambling.hpp"
#include "designlab/wg.hpp"

namespace designlab {

namespace {

struct Line {
    std::string name;
    double value = 0;
    double std_error = 0;
    double reference = 0;
    bool pass = false;
    int k = 0;
    int64_t d = 0;
};

Line sigma_line(std::string name, const Estimate &e, double ref, int k, int64_t d) {
    return {std::move(name), e.value, e.std_error, ref, e.within(ref, 5.0, 1e-10), k, d};
}

Line exact_line(std::string name, double value, double ref, int k, int64_t d, double tol = 1e-10) {
    return {std::move(name), value, 0.0, ref, std::abs(value - ref) <= tol, k, d};
}

}  // namespace

Report verify_suite(const RunConfig &c) {
    if (c.suite != "paper") {
        throw std::invalid_argument("unknown suite '" + c.suite + "' (paper)");
    }
    std::vector<Line> lines;
    uint64_t seed = c.seed;

    Ensemble h4 = haar_ensemble(4, seed);
    lines.push_back(sigma_line("Haar F(1), d=4, MC", frame_potential_mc(h4, 1, 20000), 1, 1, 4));
    lines.push_back(sigma_line("Haar F(2), d=4, MC", frame_potential_mc(h4, 2, 20000), 2, 2, 4));
    Ensemble h2 = haar_ensemble(2, seed);
    lines.push_back(sigma_line("Haar F(3), d=2 Catalan, MC", frame_potential_mc(h2, 3, 20000), 5, 3, 2));
    lines.push_back(sigma_line("Haar F(4), d=2 Catalan, MC", frame_potential_mc(h2, 4, 20000), 14, 4, 2));

    Ensemble pauli = pauli_ensemble(1);
    Ensemble cliff = clifford1_ensemble();
    lines.push_back(exact_line("Pauli F(1), n=1, exact", frame_potential_exact(pauli, 1).value, 1, 1, 2));
    lines.push_back(exact_line("Pauli F(2), n=1, exact (not a 2-design)", frame_potential_exact(pauli, 2).value, 4, 2, 2));
    lines.push_back(exact_line("Clifford F(2), n=1, exact", frame_potential_exact(cliff, 2).value, 2, 2, 2));
    lines.push_back(exact_line("Clifford F(3), n=1, exact", frame_potential_exact(cliff, 3).value, 5, 3, 2));
    {
        double f4 = frame_potential_exact(cliff, 4).value;
        lines.push_back({"Clifford F(4) > 14, n=1 (not a 4-design)", f4, 0.0, 14, f4 > 14, 4, 2});
    }
    lines.push_back(exact_line(
        "OTO-side frame potential, Clifford k=2", frame_potential_via_oto(cliff, 2).value,
        frame_potential_exact(cliff, 2).value, 2, 2));

    lines.push_back(exact_line("Wg([2], d=2)", to_double(weingarten(Partition({2}), 2)), -1.0 / 6, 2, 2, 0));
    lines.push_back(exact_line("Wg([1,1], d=2)", to_double(weingarten(Partition({1, 1}), 2)), 1.0 / 3, 2, 2, 0));

    {
        OtoSpec s = canonical_spec(CorrelatorKind::four_point, 1);
        double exact = haar_average_exact(s).to_complex().real();
        double closed = predict(EnsembleKind::haar, CorrelatorKind::four_point, 2, s).to_complex().real();
        lines.push_back(exact_line("4-point Haar, A=C^dag, B=D^dag, d=2", exact, closed, 2, 2));
    }
    for (auto kind : {CorrelatorKind::six_point, CorrelatorKind::eight_point_commutator}) {
        OtoSpec s = canonical_spec(kind, 2);
        double exact = haar_average_exact(s).to_complex().real();
        double closed = predict(EnsembleKind::haar, kind, 4, s).to_complex().real();
        lines.push_back(exact_line(correlator_kind_name(kind) + " closed form vs exact Weingarten, d=4", exact, closed, s.k(), 4));
    }
    {
        auto P = [](const char *t) { return PauliString::parse(t); };
        OtoSpec s({P("X"), P("Z")}, {P("Z"), P("X")}, Ordering::commutator);
        double v = oto_ensemble_average(cliff, s, 0).value.real();
        double closed = predict(EnsembleKind::clifford, CorrelatorKind::eight_point_commutator, 2, s).to_complex().real();
        lines.push_back(exact_line("8-point commutator-type, Clifford n=1, enumeration", v, closed, 2, 2));
        OtoSpec nest = canonical_spec(CorrelatorKind::nested, 1);
        double nv = nested_restricted_average(cliff, nest.a_ops, nest.b_ops.back(), 0).value.real();
        lines.push_back(exact_line("nested 8-point, Clifford n=1, restricted average", nv, 1.0 / 9, 2, 2));
    }

    {
        TimeAverage ta = time_averaged_frame_potential({0.0, 1.0, std::sqrt(2.0), M_PI}, 1, 2000, 200000);
        lines.push_back({"time average, 4 incommensurate levels, k=1", ta.estimate.value, ta.estimate.std_error, 4,
                         std::abs(ta.estimate.value - 4) <= 0.2, 1, 4});
    }
    {
        Matrix rho = Matrix::Zero(4, 4);
        rho(0, 0) = 1;
        lines.push_back(exact_line("Pauli-X generalized F(1) on |00>, n=2", generalized_F(pauli_x_ensemble(2), rho, 1).value, 0.25, 1, 4));
    }
    {
        Rng rng(seed, 1);
        DenseUnitary u = haar_unitary(4, rng);
        IdentityCheck r2 = oto_renyi2_check(u, IoPartition::parse("A=0;D=1", 2));
        lines.push_back(exact_line("Renyi-2 OTO identity, Haar n=2", r2.lhs, r2.rhs, 2, 4));
        IdentityCheck r3 = renyi_k_oto(u, IoPartition::parse("A=0;D=1", 2), 3);
        lines.push_back(exact_line("Renyi-3 OTO identity, Haar n=2", r3.lhs, r3.rhs, 3, 4, 1e-8));
        PerturbationDistribution p{{PauliString::identity(2), 0.7}, {PauliString::single(2, 0, 'X'), 0.3}};
        lines.push_back(exact_line("catch game probability = p_I", catch_game(u, p), 0.7, 1, 4));
    }
    lines.push_back(exact_line("cardinality bound F=2, k=2, d=4", cardinality_bound(2, 2, 4), 128, 2, 4));

    Report r;
    r.body["command"] = "verify";
    r.body["inputs"] = {{"suite", c.suite}, {"seed", seed}};
    r.body["reference_source"] = "closed-form oracle battery";
    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream t;
    size_t width = 0;
    for (const auto &l : lines) {
        width = std::max(width, l.name.size());
    }
    t << std::left << std::setw(int(width) + 2) << "identity" << std::setw(16) << "value" << std::setw(16) << "reference"
      << std::setw(12) << "std_error" << "status\n";
    bool all = true;
    for (const auto &l : lines) {
        rows.push_back({{"identity", l.name},
                        {"value", l.value},
                        {"reference", l.reference},
                        {"std_error", l.std_error},
                        {"status", l.pass ? "PASS" : "FAIL"}});
        r.rows.push_back({l.name, l.k, l.d, l.value, l.std_error, l.reference});
        t << std::left << std::setw(int(width) + 2) << l.name << std::setw(16) << std::setprecision(10) << l.value
          << std::setw(16) << l.reference << std::setw(12) << std::setprecision(3) << l.std_error
          << (l.pass ? "PASS" : "FAIL") << "\n";
        all = all && l.pass;
    }
    r.body["rows"] = rows;
    r.body["all_passed"] = all;
    r.table = t.str();
    if (c.check) {
        r.passed = all;
    }
    return r;
}

}  // namespace designlab
