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

#ifndef DESIGNLAB_CLI_HPP
#define DESIGNLAB_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace designlab {

struct RunConfig {
    std::string subcommand;
    int n = 1;
    // 2^n except for wg, where it is any positive integer.
    int64_t d = 2;
    int k = 1;
    std::string ensemble = "haar";
    std::string ensemble_file;
    int depth = 4;
    int64_t samples = 10000;
    uint64_t seed = 1;
    double beta = 0;
    double time = 1;
    bool exact = false;
    bool check = false;
    double tolerance_sigma = 5;
    // json | csv | table; empty picks the subcommand default.
    std::string format;
    std::string output_path;

    // oto
    std::string kind = "4pt";
    std::string a_ops;
    std::string b_ops;
    std::string ordering = "standard";

    // wg
    std::string cycle_type;

    // bounds
    std::optional<double> f;
    std::optional<double> choices;
    std::optional<double> gate_set;
    std::optional<int> locality;
    std::optional<double> epsilon;
    std::optional<double> tr_h2;

    // scramble
    std::string unitary = "haar";
    std::string partition = "A=0;D=1";

    // timeavg
    std::vector<double> spectrum;
    double t_max = 2000;
    int64_t n_grid = 200000;
    double rel_tolerance = 0.05;

    // verify
    std::string suite = "paper";
};

struct CsvRow {
    std::string estimator;
    int k = 0;
    int64_t d = 0;
    double value = 0;
    double std_error = 0;
    std::optional<double> reference;
};

struct Report {
    nlohmann::json body;
    std::vector<CsvRow> rows;
    // Set only when a check was evaluated.
    std::optional<bool> passed;
    // Plain-text rendering used by the table format.
    std::string table;
};

inline const char *kCsvHeader = "estimator,k,d,value,std_error,reference,abs_deviation,sigmas";

Report build_report(const RunConfig &config);
// Oracle battery behind "verify".
Report verify_suite(const RunConfig &config);
std::string render(const Report &report, const std::string &format);

// 0 ok, 1 failed check, 2 configuration error.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);
int main_entry(int argc, char **argv, std::ostream &out, std::ostream &err);

}  // namespace designlab

#endif
