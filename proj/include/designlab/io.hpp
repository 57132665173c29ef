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

#ifndef DESIGNLAB_IO_HPP
#define DESIGNLAB_IO_HPP

#include "designlab/clifford.hpp"
#include "designlab/dense.hpp"
#include "designlab/ensemble.hpp"
#include "json.hpp"

namespace designlab {

// Row-major [[[re, im], ...], ...].
nlohmann::json matrix_to_json(const Matrix &m);
Matrix matrix_from_json(const nlohmann::json &j);

// {"n": n, "symplectic": [[bits]], "phases": [bits]}.
nlohmann::json tableau_to_json(const CliffordTableau &c);
CliffordTableau tableau_from_json(const nlohmann::json &j);

// {"kind": "discrete"|"sampler", "label": ..., "elements": [...], "seed": ...}.
// Discrete elements carry one of "matrix", "pauli" or "tableau"; samplers
// carry "d" and, where relevant, "depth" or "time".
nlohmann::json ensemble_to_json(const Ensemble &e);
Ensemble ensemble_from_json(const nlohmann::json &j);

}  // namespace designlab

#endif
