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

#include "designlab/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "designlab/clifford.hpp"
#include "designlab/ensemble.hpp"
#include "designlab/framepot.hpp"
#include "designlab/io.hpp"
#include "designlab/oto.hpp"
#include "designlab/rng.hpp"
#include "designlab/scrambling.hpp"
#include "designlab/wg.hpp"

namespace designlab {

using nlohmann::json;

namespace {

json cjson(Complex z) { return json::array({z.real(), z.imag()}); }

json inputs_of(const RunConfig &c) {
    json j;
    j["n"] = c.n;
    j["d"] = c.d;
    j["k"] = c.k;
    j["seed"] = c.seed;
    return j;
}

std::optional<double> haar_fp(int k, int64_t d) {
    try {
        return to_double(haar_frame_potential_exact(k, d));
    } catch (const std::exception &) {
        return std::nullopt;
    }
}

Ensemble make_ensemble(const RunConfig &c) {
    if (!c.ensemble_file.empty()) {
        std::ifstream in(c.ensemble_file);
        if (!in) {
            throw std::invalid_argument("cannot open ensemble file " + c.ensemble_file);
        }
        return ensemble_from_json(json::parse(in)).with_seed(c.seed);
    }
    const std::string &e = c.ensemble;
    int d = int(c.d);
    if (e == "haar") {
        return haar_ensemble(d, c.seed);
    }
    if (e == "clifford") {
        return c.n == 1 ? clifford1_ensemble() : clifford_ensemble(c.n, c.seed);
    }
    if (e == "pauli") {
        return pauli_ensemble(c.n);
    }
    if (e == "pauli-x") {
        return pauli_x_ensemble(c.n);
    }
    if (e == "trivial") {
        return trivial_ensemble(c.n);
    }
    if (e == "gue") {
        return gue_evolution_ensemble(d, c.time, c.seed);
    }
    if (e == "brickwork") {
        return brickwork_ensemble(c.n, c.depth, c.seed);
    }
    throw std::invalid_argument("unknown ensemble '" + e + "' (haar, clifford, pauli, pauli-x, trivial, gue, brickwork)");
}

void add_check(Report &r, const RunConfig &c, double value, double se, double ref) {
    double dev = std::abs(value - ref);
    bool ok = dev <= c.tolerance_sigma * se + 1e-10;
    r.body["check"] = {{"tolerance_sigma", c.tolerance_sigma}, {"abs_deviation", dev}, {"passed", ok}};
    r.passed = r.passed.value_or(true) && ok;
}

Report framepot_report(const RunConfig &c) {
    Ensemble ens = make_ensemble(c);
    Estimate est;
    if (c.exact) {
        est = frame_potential_exact(ens, c.k);
    } else {
        est = frame_potential_mc(ens, c.k, c.samples);
    }
    Report r;
    r.body["command"] = "framepot";
    r.body["inputs"] = inputs_of(c);
    r.body["inputs"]["ensemble"] = ens.label();
    r.body["inputs"]["samples"] = c.samples;
    r.body["value"] = est.value;
    r.body["std_error"] = est.std_error;
    r.body["method"] = method_name(est.method);
    r.body["n_samples"] = est.n_samples;
    auto ref = haar_fp(c.k, c.d);
    r.body["haar_reference"] = ref ? json(*ref) : json(nullptr);
    r.body["reference_source"] = c.k <= c.d ? "Haar frame potential k! (k <= d)" : "Haar frame potential, d = 2 Catalan number";
    r.rows.push_back({"frame_potential", c.k, c.d, est.value, est.std_error, ref});
    if (c.check) {
        if (!ref) {
            throw std::invalid_argument("no Haar reference for this (k, d); --check unavailable");
        }
        add_check(r, c, est.value, est.std_error, *ref);
    }
    return r;
}

CorrelatorKind parse_kind(const std::string &s) {
    if (s == "2pt") return CorrelatorKind::two_point_mean;
    if (s == "2pt-square") return CorrelatorKind::two_point_square;
    if (s == "4pt") return CorrelatorKind::four_point;
    if (s == "6pt") return CorrelatorKind::six_point;
    if (s == "commutator8") return CorrelatorKind::eight_point_commutator;
    if (s == "nested") return CorrelatorKind::nested;
    throw std::invalid_argument("unknown --kind '" + s + "' (2pt, 2pt-square, 4pt, 6pt, commutator8, nested)");
}

std::vector<PauliString> parse_ops(const std::string &s) {
    std::vector<PauliString> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(PauliString::parse(item));
    }
    return out;
}

Report oto_report(const RunConfig &c) {
    CorrelatorKind kind = parse_kind(c.kind);
    OtoSpec spec;
    if (c.a_ops.empty() != c.b_ops.empty()) {
        throw std::invalid_argument("--a and --b must be given together");
    }
    if (c.a_ops.empty()) {
        spec = canonical_spec(kind, c.n);
    } else {
        Ordering ord = parse_ordering(c.ordering);
        if (kind == CorrelatorKind::eight_point_commutator) {
            ord = Ordering::commutator;
        } else if (kind == CorrelatorKind::nested) {
            ord = Ordering::nested;
        }
        spec = OtoSpec(parse_ops(c.a_ops), parse_ops(c.b_ops), ord);
    }
    if (spec.n() != c.n) {
        throw std::invalid_argument("operators act on " + std::to_string(spec.n()) + " qubits but n = " + std::to_string(c.n));
    }
    EnsembleKind ek;
    if (c.ensemble == "haar") {
        ek = EnsembleKind::haar;
    } else if (c.ensemble == "clifford") {
        ek = EnsembleKind::clifford;
    } else if (c.ensemble == "pauli") {
        ek = EnsembleKind::pauli;
    } else {
        throw std::invalid_argument("oto supports --ensemble haar, clifford or pauli");
    }
    Ensemble ens = make_ensemble(c);
    ComplexEstimate est;
    if (kind == CorrelatorKind::two_point_square) {
        Estimate e = oto_ensemble_mean_square(ens, spec, c.samples);
        est.value = e.value;
        est.std_error = e.std_error;
        est.n_samples = e.n_samples;
        est.method = e.method;
    } else if (kind == CorrelatorKind::nested) {
        est = nested_restricted_average(ens, spec.a_ops, spec.b_ops.back(), c.samples);
    } else {
        est = oto_ensemble_average(ens, spec, c.samples);
    }
    Report r;
    r.body["command"] = "oto";
    r.body["inputs"] = inputs_of(c);
    r.body["inputs"]["ensemble"] = ens.label();
    r.body["inputs"]["kind"] = correlator_kind_name(kind);
    r.body["inputs"]["k"] = spec.k();
    r.body["inputs"]["ordering"] = ordering_name(spec.ordering);
    r.body["inputs"]["samples"] = c.samples;
    json a = json::array(), b = json::array();
    for (int j = 0; j < spec.k(); j++) {
        a.push_back(spec.a_ops[j].signed_str());
        b.push_back(spec.b_ops[j].signed_str());
    }
    r.body["inputs"]["a"] = a;
    r.body["inputs"]["b"] = b;
    r.body["estimate"] = cjson(est.value);
    r.body["std_error"] = est.std_error;
    r.body["method"] = method_name(est.method);
    std::optional<double> ref;
    try {
        GaussianRational p = predict(ek, kind, c.d, spec);
        r.body["prediction"] = cjson(p.to_complex());
        r.body["prediction_exact"] = {to_string(p.re), to_string(p.im)};
        r.body["reference_source"] = "closed-form " + correlator_kind_name(kind) + " average";
        ref = p.to_complex().real();
        if (c.check) {
            add_check(r, c, std::abs(est.value - p.to_complex()), est.std_error, 0.0);
        }
    } catch (const std::invalid_argument &e) {
        r.body["prediction"] = nullptr;
        r.body["prediction_error"] = e.what();
        if (c.check) {
            throw;
        }
    }
    bool plain = kind != CorrelatorKind::nested && kind != CorrelatorKind::two_point_square;
    if (ek == EnsembleKind::haar && plain) {
        try {
            GaussianRational h = haar_average_exact(spec);
            r.body["haar_exact"] = cjson(h.to_complex());
            r.body["haar_exact_rational"] = {to_string(h.re), to_string(h.im)};
        } catch (const std::exception &) {
            r.body["haar_exact"] = nullptr;
        }
    }
    r.rows.push_back({"oto_" + c.kind, spec.k(), c.d, est.value.real(), est.std_error, ref});
    return r;
}

Report wg_report(const RunConfig &c) {
    if (c.d < 1) {
        throw std::invalid_argument("wg needs --d >= 1");
    }
    Report r;
    r.body["command"] = "wg";
    r.body["inputs"] = {{"d", c.d}};
    r.body["reference_source"] = "Weingarten function from symmetric-group characters";
    std::vector<Partition> mus;
    if (!c.cycle_type.empty()) {
        mus.push_back(Partition::parse(c.cycle_type));
    } else {
        mus = partitions(c.k);
    }
    json table = json::array();
    std::ostringstream text;
    for (const auto &mu : mus) {
        ExactRational w = weingarten(mu, c.d);
        table.push_back({{"cycle_type", mu.str()}, {"value", to_string(w)}, {"decimal", to_double(w)}});
        r.rows.push_back({"weingarten(" + mu.str() + ")", mu.size(), c.d, to_double(w), 0.0, std::nullopt});
        text << to_string(w) << "\n";
    }
    if (mus.size() == 1) {
        r.body["cycle_type"] = mus[0].str();
        r.body["value"] = table[0]["value"];
        r.body["decimal"] = table[0]["decimal"];
    } else {
        r.body["inputs"]["k"] = c.k;
        r.body["table"] = table;
    }
    r.table = text.str();
    return r;
}

Report bounds_report(const RunConfig &c) {
    if (!c.f) {
        throw std::invalid_argument("bounds needs --f");
    }
    double f = *c.f;
    Report r;
    r.body["command"] = "bounds";
    r.body["inputs"] = inputs_of(c);
    r.body["inputs"].erase("seed");
    r.body["inputs"]["f"] = f;
    json b;
    double card = cardinality_bound(f, c.k, c.d);
    b["cardinality"] = card;
    b["entropy_bits"] = entropy_bound(f, c.k, c.n);
    if (c.choices) {
        b["complexity"] = complexity_bound(f, c.k, c.n, *c.choices);
        r.body["inputs"]["choices"] = *c.choices;
    }
    if (c.gate_set) {
        b["gate_count"] = gate_count_bound(card, *c.gate_set, c.n);
        r.body["inputs"]["g"] = *c.gate_set;
        if (c.locality) {
            b["depth"] = depth_bound(f, c.k, c.n, *c.gate_set, *c.locality);
            r.body["inputs"]["q"] = *c.locality;
        }
    }
    if (c.epsilon && c.choices) {
        b["epsilon_complexity"] = epsilon_bound(f, c.k, c.d, *c.epsilon, *c.choices);
        r.body["inputs"]["epsilon"] = *c.epsilon;
    }
    if (c.tr_h2) {
        EarlyTimeBound e = early_time_bound(*c.tr_h2, c.k, c.d, c.time);
        b["early_time"] = {{"value", e.value}, {"small_parameter", e.small_parameter}, {"valid", e.valid}};
        r.body["inputs"]["tr_h2"] = *c.tr_h2;
        r.body["inputs"]["time"] = c.time;
    }
    r.body["bounds"] = b;
    r.body["reference_source"] = "frame-potential bounds on cardinality, complexity, entropy and depth";
    for (auto it = b.begin(); it != b.end(); ++it) {
        double v = it.value().is_object() ? it.value()["value"].get<double>() : it.value().get<double>();
        r.rows.push_back({"bound_" + it.key(), c.k, c.d, v, 0.0, std::nullopt});
    }
    return r;
}

DenseUnitary load_unitary(const RunConfig &c) {
    int d = int(c.d);
    if (c.unitary == "haar") {
        Rng rng(c.seed, 0);
        return haar_unitary(d, rng);
    }
    if (c.unitary == "identity") {
        return DenseUnitary(Matrix::Identity(d, d));
    }
    if (c.unitary == "swap") {
        if (c.n != 2) {
            throw std::invalid_argument("swap needs n = 2");
        }
        return permutation_operator(Permutation({1, 0}), 2);
    }
    std::ifstream in(c.unitary);
    if (!in) {
        throw std::invalid_argument("cannot open unitary file " + c.unitary + " (or use haar, identity, swap)");
    }
    DenseUnitary u(matrix_from_json(json::parse(in)), 1e-8);
    if (u.dim() != c.d) {
        throw std::invalid_argument("unitary dimension does not match --n");
    }
    return u;
}

Report scramble_report(const RunConfig &c) {
    if (c.k < 2) {
        throw std::invalid_argument("scramble needs --k >= 2");
    }
    DenseUnitary u = load_unitary(c);
    IoPartition part = IoPartition::parse(c.partition, c.n);
    IdentityCheck chk = renyi_k_oto(u, part, c.k);
    Report r;
    r.body["command"] = "scramble";
    r.body["inputs"] = inputs_of(c);
    r.body["inputs"]["unitary"] = c.unitary;
    r.body["inputs"]["partition"] = part.str();
    r.body["lhs"] = chk.lhs;
    r.body["rhs"] = chk.rhs;
    r.body["abs_deviation"] = std::abs(chk.lhs - chk.rhs);
    r.body["mutual_info_2"] = mutual_info_2(u, part);
    r.body["reference_source"] = "Pauli-averaged OTO vs Renyi entropy of the Choi state";
    r.rows.push_back({"renyi_oto_lhs", c.k, c.d, chk.lhs, 0.0, chk.rhs});
    if (c.check) {
        bool ok = std::abs(chk.lhs - chk.rhs) <= 1e-10;
        r.body["check"] = {{"abs_tolerance", 1e-10}, {"passed", ok}};
        r.passed = ok;
    }
    return r;
}

Report timeavg_report(const RunConfig &c) {
    std::vector<double> spectrum = c.spectrum;
    if (spectrum.empty()) {
        spectrum = {0.0, 1.0, std::sqrt(2.0), M_PI};
    }
    TimeAverage ta = time_averaged_frame_potential(spectrum, c.k, c.t_max, c.n_grid);
    int64_t d = int64_t(spectrum.size());
    double ref = to_double(analytic_time_average(c.k, d));
    Report r;
    r.body["command"] = "timeavg";
    r.body["inputs"] = {{"k", c.k}, {"d", d}, {"spectrum", spectrum}, {"t_max", c.t_max}, {"n_grid", c.n_grid}};
    r.body["value"] = ta.estimate.value;
    r.body["half_time_value"] = ta.half_time_value;
    r.body["convergence_diagnostic"] = ta.estimate.std_error;
    r.body["method"] = method_name(ta.estimate.method);
    r.body["analytic"] = ref;
    r.body["relative_deviation"] = std::abs(ta.estimate.value - ref) / ref;
    r.body["reference_source"] = "time average k! d^k for incommensurate spectra";
    r.rows.push_back({"time_average", c.k, d, ta.estimate.value, ta.estimate.std_error, ref});
    if (c.check) {
        bool ok = std::abs(ta.estimate.value - ref) <= c.rel_tolerance * ref;
        r.body["check"] = {{"rel_tolerance", c.rel_tolerance}, {"passed", ok}};
        r.passed = ok;
    }
    return r;
}

Report thermal_report(const RunConfig &c) {
    Ensemble h = gue_evolution_ensemble(int(c.d), c.time, c.seed);
    ThermalResult w = thermal_W(h, c.beta, c.time, c.k, c.samples);
    Report r;
    r.body["command"] = "thermal";
    r.body["inputs"] = inputs_of(c);
    r.body["inputs"]["beta"] = c.beta;
    r.body["inputs"]["time"] = c.time;
    r.body["inputs"]["samples"] = c.samples;
    r.body["inputs"]["ensemble"] = h.label();
    r.body["value"] = w.estimate.value;
    r.body["std_error"] = w.estimate.std_error;
    r.body["method"] = method_name(w.estimate.method);
    r.body["max_integrand"] = w.max_integrand;
    r.body["cardinality_lower_bound"] = w.estimate.value > 0 ? json(1.0 / w.estimate.value) : json(nullptr);
    std::optional<double> ref;
    if (c.beta == 0) {
        Estimate f = frame_potential_mc(h, c.k, c.samples);
        double dd = double(c.d);
        ref = f.value / (dd * dd);
        r.body["frame_potential_over_d2"] = *ref;
        r.body["reference_source"] = "thermal frame potential at beta = 0 is F / d^2";
        if (c.check) {
            add_check(r, c, w.estimate.value, w.estimate.std_error, *ref);
        }
    } else {
        r.body["reference_source"] = "thermal frame potential, Cauchy-Schwarz ceiling 1";
    }
    r.rows.push_back({"thermal_W", c.k, c.d, w.estimate.value, w.estimate.std_error, ref});
    return r;
}

std::string csv_num(double v) {
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    std::ostringstream s;
    s << std::setprecision(17) << v;
    return s.str();
}

}  // namespace

Report build_report(const RunConfig &c) {
    const std::string &s = c.subcommand;
    if (s == "framepot") return framepot_report(c);
    if (s == "oto") return oto_report(c);
    if (s == "wg") return wg_report(c);
    if (s == "bounds") return bounds_report(c);
    if (s == "scramble") return scramble_report(c);
    if (s == "timeavg") return timeavg_report(c);
    if (s == "thermal") return thermal_report(c);
    if (s == "verify") return verify_suite(c);
    throw std::invalid_argument("unknown subcommand '" + s + "'");
}

std::string render(const Report &report, const std::string &format) {
    if (format == "json") {
        return report.body.dump(2) + "\n";
    }
    if (format == "csv") {
        std::ostringstream s;
        s << kCsvHeader << "\n";
        for (const auto &row : report.rows) {
            s << row.estimator << "," << row.k << "," << row.d << "," << csv_num(row.value) << ","
              << csv_num(row.std_error) << ",";
            if (row.reference) {
                double dev = std::abs(row.value - *row.reference);
                double sig = row.std_error > 0 ? dev / row.std_error : (dev == 0 ? 0.0 : INFINITY);
                s << csv_num(*row.reference) << "," << csv_num(dev) << "," << csv_num(sig);
            } else {
                s << ",,";
            }
            s << "\n";
        }
        return s.str();
    }
    if (format == "table") {
        return report.table.empty() ? report.body.dump(2) + "\n" : report.table;
    }
    throw std::invalid_argument("unknown format '" + format + "' (json, csv, table)");
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
    try {
        RunConfig c = config;
        if (c.subcommand != "wg") {
            if (c.n < 1 || c.n > 12) {
                throw std::invalid_argument("n must be in 1..12");
            }
            if (c.d != (int64_t{1} << c.n)) {
                throw std::invalid_argument("d must equal 2^n");
            }
        }
        if (c.samples < 1) {
            throw std::invalid_argument("samples must be >= 1");
        }
        std::string format = c.format;
        if (format.empty()) {
            format = c.subcommand == "verify" ? "table" : "json";
        }
        if (format != "json" && format != "csv" && format != "table") {
            throw std::invalid_argument("unknown format '" + format + "' (json, csv, table)");
        }
        Report r = build_report(c);
        if (c.check && !r.passed) {
            throw std::invalid_argument("--check is not available for this subcommand");
        }
        std::string text = render(r, format);
        if (c.output_path.empty()) {
            out << text;
        } else {
            std::ofstream f(c.output_path);
            if (!f) {
                throw std::invalid_argument("cannot write " + c.output_path);
            }
            f << text;
        }
        if (c.check && !*r.passed) {
            err << "check failed\n";
            return 1;
        }
        return 0;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int main_entry(int argc, char **argv, std::ostream &out, std::ostream &err) {
    RunConfig c;
    std::optional<int> n_opt;
    std::optional<int64_t> d_opt;
    std::string output;
    CLI::App app{"designlab: unitary designs, frame potentials and OTO correlators"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", c.seed, "RNG seed");
    app.add_option("--output", output, "output path, or json/csv to pick the format");
    app.add_option("--format", c.format, "json | csv | table");
    app.add_flag("--check", c.check, "compare against the analytic reference");
    app.add_option("--tolerance-sigma", c.tolerance_sigma, "check band in standard errors");

    auto common = [&](CLI::App *s, bool ens) {
        s->add_option("--n", n_opt, "qubits");
        s->add_option("--d", d_opt, "dimension");
        s->add_option("--k", c.k, "moment order");
        s->add_option("--samples", c.samples, "Monte-Carlo samples or pairs");
        if (ens) {
            s->add_option("--ensemble", c.ensemble, "haar | clifford | pauli | pauli-x | trivial | gue | brickwork");
            s->add_option("--ensemble-file", c.ensemble_file, "discrete ensemble JSON");
            s->add_option("--depth", c.depth, "brickwork depth");
            s->add_option("--time", c.time, "evolution time");
        }
    };
    auto *fp = app.add_subcommand("framepot", "frame potential");
    common(fp, true);
    fp->add_flag("--exact", c.exact, "exact double sum over a discrete ensemble");

    auto *oto = app.add_subcommand("oto", "ensemble-averaged OTO correlators");
    common(oto, true);
    oto->add_option("--kind", c.kind, "2pt | 2pt-square | 4pt | 6pt | commutator8 | nested");
    oto->add_option("--a", c.a_ops, "comma-separated A operators");
    oto->add_option("--b", c.b_ops, "comma-separated B operators");
    oto->add_option("--ordering", c.ordering, "standard | commutator-type | non-commutator-type | nested");

    auto *wg = app.add_subcommand("wg", "Weingarten function");
    wg->add_option("--cycle-type", c.cycle_type, "partition, e.g. 2,1");
    wg->add_option("--d", d_opt, "dimension");
    wg->add_option("--k", c.k, "table of all cycle types of S_k");

    auto *bd = app.add_subcommand("bounds", "complexity bounds from a frame potential");
    common(bd, false);
    bd->add_option("--f", c.f, "frame potential");
    bd->add_option("--choices", c.choices, "decisions per step");
    bd->add_option("--g", c.gate_set, "gate-set size");
    bd->add_option("--q", c.locality, "gate locality");
    bd->add_option("--epsilon", c.epsilon, "tolerance");
    bd->add_option("--tr-h2", c.tr_h2, "ensemble-averaged tr(H^2)");
    bd->add_option("--time", c.time, "time for the early-time bound");

    auto *sc = app.add_subcommand("scramble", "Renyi/OTO scrambling diagnostics");
    common(sc, false);
    sc->add_option("--unitary", c.unitary, "JSON file, or haar | identity | swap");
    sc->add_option("--partition", c.partition, "e.g. A=0;D=1");

    auto *ta = app.add_subcommand("timeavg", "time-averaged frame potential");
    ta->add_option("--k", c.k, "moment order");
    ta->add_option("--spectrum", c.spectrum, "energies")->delimiter(',');
    ta->add_option("--t-max", c.t_max, "averaging window");
    ta->add_option("--n-grid", c.n_grid, "grid intervals");
    ta->add_option("--rel-tolerance", c.rel_tolerance, "relative check tolerance");

    auto *th = app.add_subcommand("thermal", "thermal frame potential of GUE evolution");
    common(th, false);
    th->add_option("--beta", c.beta, "inverse temperature");
    th->add_option("--time", c.time, "time");

    auto *vf = app.add_subcommand("verify", "oracle battery");
    vf->add_option("--suite", c.suite, "paper");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    c.subcommand = app.get_subcommands().front()->get_name();
    if (c.subcommand == "scramble" && sc->count("--k") == 0) {
        c.k = 2;
    }
    if (output == "json" || output == "csv") {
        c.format = output;
    } else {
        c.output_path = output;
    }
    try {
        if (c.subcommand == "wg") {
            c.d = d_opt.value_or(2);
            if (c.cycle_type.empty() && c.k < 1) {
                throw std::invalid_argument("wg needs --cycle-type or --k");
            }
        } else if (d_opt) {
            int64_t d = *d_opt;
            if (d < 2 || (d & (d - 1))) {
                throw std::invalid_argument("--d must be a power of two");
            }
            int n = 0;
            while ((int64_t{1} << n) < d) {
                n++;
            }
            if (n_opt && *n_opt != n) {
                throw std::invalid_argument("--n and --d disagree");
            }
            c.n = n;
            c.d = d;
        } else {
            c.n = n_opt.value_or(1);
            c.d = c.n >= 1 && c.n <= 12 ? int64_t{1} << c.n : 0;
        }
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return run(c, out, err);
}

}  // namespace designlab
