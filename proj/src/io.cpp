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

#include "designlab/io.hpp"

#include <stdexcept>

namespace designlab {

using nlohmann::json;

json matrix_to_json(const Matrix &m) {
    json rows = json::array();
    for (int64_t i = 0; i < m.rows(); i++) {
        json row = json::array();
        for (int64_t j = 0; j < m.cols(); j++) {
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json &j) {
    const json &rows = j.is_object() ? j.at("matrix") : j;
    if (!rows.is_array() || rows.empty()) {
        throw std::invalid_argument("matrix must be a non-empty array of rows");
    }
    int64_t n = int64_t(rows.size());
    check_dense_guard(n, "matrix_from_json");
    Matrix m(n, n);
    for (int64_t i = 0; i < n; i++) {
        if (!rows[i].is_array() || int64_t(rows[i].size()) != n) {
            throw std::invalid_argument("matrix must be square");
        }
        for (int64_t k = 0; k < n; k++) {
            const json &e = rows[i][k];
            if (e.is_number()) {
                m(i, k) = e.get<double>();
            } else if (e.is_array() && e.size() == 2) {
                m(i, k) = Complex(e[0].get<double>(), e[1].get<double>());
            } else {
                throw std::invalid_argument("matrix entries must be numbers or [re, im] pairs");
            }
        }
    }
    return m;
}

json tableau_to_json(const CliffordTableau &c) {
    return {{"n", c.n()}, {"symplectic", c.symplectic()}, {"phases", c.phases()}};
}

CliffordTableau tableau_from_json(const json &j) {
    int n = j.at("n").get<int>();
    auto s = j.at("symplectic").get<std::vector<std::vector<uint8_t>>>();
    auto p = j.at("phases").get<std::vector<uint8_t>>();
    if (int(s.size()) != 2 * n) {
        throw std::invalid_argument("tableau symplectic matrix must be 2n x 2n");
    }
    return CliffordTableau::from_symplectic(s, p);
}

json ensemble_to_json(const Ensemble &e) {
    json out;
    out["label"] = e.label();
    out["seed"] = e.seed();
    if (!e.is_discrete()) {
        const SamplerSpec &s = e.sampler_spec();
        out["kind"] = "sampler";
        out["d"] = s.d;
        if (s.depth) {
            out["depth"] = s.depth;
        }
        if (s.time != 0) {
            out["time"] = s.time;
        }
        out["elements"] = json::array();
        return out;
    }
    out["kind"] = "discrete";
    json els = json::array();
    for (const auto &w : e.elements()) {
        json el;
        el["weight"] = w.weight;
        if (auto p = std::get_if<PauliString>(&w.element)) {
            if (p->phase == 0) {
                el["pauli"] = p->str();
            } else {
                el["matrix"] = matrix_to_json(pauli_to_dense(*p));
            }
        } else if (auto c = std::get_if<CliffordTableau>(&w.element)) {
            el["tableau"] = tableau_to_json(*c);
        } else {
            el["matrix"] = matrix_to_json(to_dense(w.element).matrix());
        }
        els.push_back(std::move(el));
    }
    out["elements"] = std::move(els);
    return out;
}

Ensemble ensemble_from_json(const json &j) {
    std::string kind = j.at("kind").get<std::string>();
    std::string label = j.value("label", std::string("custom"));
    uint64_t seed = j.value("seed", uint64_t{0});
    if (kind == "sampler") {
        SamplerSpec spec{label, j.at("d").get<int>(), j.value("depth", 0), j.value("time", 0.0)};
        return make_sampler(spec, seed);
    }
    if (kind != "discrete") {
        throw std::invalid_argument("ensemble kind must be 'discrete' or 'sampler'");
    }
    std::vector<WeightedElement> els;
    for (const auto &el : j.at("elements")) {
        double w = el.at("weight").get<double>();
        if (el.contains("pauli")) {
            els.push_back({w, PauliString::parse(el["pauli"].get<std::string>())});
        } else if (el.contains("tableau")) {
            els.push_back({w, tableau_from_json(el["tableau"])});
        } else {
            els.push_back({w, DenseUnitary(matrix_from_json(el.at("matrix")))});
        }
    }
    Ensemble e = Ensemble::discrete(label, std::move(els));
    return e.with_seed(seed);
}

}  // namespace designlab
