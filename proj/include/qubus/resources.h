// Copyright 2026 The Qubus Authors
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

#ifndef QUBUS_RESOURCES_H
#define QUBUS_RESOURCES_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qubus {

enum class FormulaKind {
    UzzNaive,
    UzzStepwise,
    UzzCarryover,
    UzzLimited,
    UzzFixedRange,
    InitGeneral,
    InitLimited,
    InitFixedRange,
    CtrlUzz,
    CtrlUzzAxis,
    CtrlLocals,
    PEAGeneral,
    PEALimited,
    QFT,
    TotalGeneral,
    TotalLimited,
    TotalGeneralPrecision,
    TotalLimitedPrecision,
    NMR,
    QubusNN,
};

struct FormulaParams {
    int n = 2;
    std::optional<int> p;
    std::optional<int> k;
    std::optional<double> delta;
};

struct CountFormula {
    FormulaKind kind;
    FormulaParams params;
};

std::string formula_name(FormulaKind kind);
FormulaKind parse_formula(const std::string &name);

/// Level-spacing ratio used for the initialization length.
inline constexpr double kDefaultSpacingRatio = 0.1;

/// S = ratio * pi / delta.
double init_steps(double delta, double spacing_ratio = kDefaultSpacingRatio);

/// Closed-form evaluation. Throws DomainError when a parameter is missing or out of range.
double formula_count(const CountFormula &f);

enum class TotalCase { General, Limited };

/// P + S I + (6k - 5) for the given k and delta.
double total_ops(TotalCase c, int n, std::optional<int> p, int k, double delta);

/// Smallest N at which the nearest-neighbour qubus total beats the NMR total.
int crossover_n();

/// ceil(log2(2 pi / delta)).
int precision_bits(double delta);

/// Largest N with total_ops <= budget; nullopt when even N = 2 exceeds it. The limited case
/// defaults to nearest-neighbour coupling (p = 1).
std::optional<int> max_n_for_budget(TotalCase c, double budget, double delta, std::optional<int> p = std::nullopt);

struct ReportRow {
    std::string kase;
    int n = 0;
    std::optional<int> p;
    std::optional<int> k;
    std::optional<double> delta;
    double formula = 0;
    std::optional<int64_t> compiled;
    /// (compiled - formula) / formula when compiled is present.
    std::optional<double> gap;
};

struct ResourceReport {
    std::vector<ReportRow> rows;
    int mismatches() const;
};

struct VerifyOptions {
    int n_min = 2;
    int n_max = 12;
    int k_min = 1;
    int k_max = 10;
    /// Controlled-evolution rows compile every power of the step, so they use a smaller range.
    int pea_k_max = 3;
    int pea_n_max = 4;
};

/// Formula-versus-compiler audit over dense inputs.
ResourceReport verify_counts(const VerifyOptions &opts = {});

/// Formula-only rows comparing the architectures.
ResourceReport comparison_table(int n_min, int n_max, int k, double delta);

std::string report_csv(const ResourceReport &r);
nlohmann::json report_json(const ResourceReport &r);

}  // namespace qubus

#endif
