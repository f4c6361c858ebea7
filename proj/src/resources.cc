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

#include "qubus/resources.h"

#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "qubus/bcs_model.h"
#include "qubus/controlled.h"
#include "qubus/phase_estimation.h"
#include "qubus/qft.h"
#include "qubus/trotter.h"
#include "qubus/uzz.h"

namespace qubus {

namespace {

const std::vector<std::pair<FormulaKind, std::string>> &formula_names() {
    static const std::vector<std::pair<FormulaKind, std::string>> names = {
        {FormulaKind::UzzNaive, "uzz-naive"},
        {FormulaKind::UzzStepwise, "uzz-stepwise"},
        {FormulaKind::UzzCarryover, "uzz-carryover"},
        {FormulaKind::UzzLimited, "uzz-limited"},
        {FormulaKind::UzzFixedRange, "uzz-fixed-range"},
        {FormulaKind::InitGeneral, "init-general"},
        {FormulaKind::InitLimited, "init-limited"},
        {FormulaKind::InitFixedRange, "init-fixed-range"},
        {FormulaKind::CtrlUzz, "ctrl-uzz"},
        {FormulaKind::CtrlUzzAxis, "ctrl-uzz-axis"},
        {FormulaKind::CtrlLocals, "ctrl-locals"},
        {FormulaKind::PEAGeneral, "pea-general"},
        {FormulaKind::PEALimited, "pea-limited"},
        {FormulaKind::QFT, "qft"},
        {FormulaKind::TotalGeneral, "total-general"},
        {FormulaKind::TotalLimited, "total-limited"},
        {FormulaKind::TotalGeneralPrecision, "total-general-precision"},
        {FormulaKind::TotalLimitedPrecision, "total-limited-precision"},
        {FormulaKind::NMR, "nmr"},
        {FormulaKind::QubusNN, "qubus-nn"},
    };
    return names;
}

int need_p(const FormulaParams &q) {
    if (!q.p || *q.p < 1 || *q.p > q.n - 1) {
        throw DomainError("range p must satisfy 1 <= p <= N-1");
    }
    return *q.p;
}

int need_k(const FormulaParams &q) {
    if (!q.k || *q.k < 1) {
        throw DomainError("k must be at least 1");
    }
    return *q.k;
}

double need_delta(const FormulaParams &q) {
    if (!q.delta || !(*q.delta > 0.0 && *q.delta < 1.0)) {
        throw DomainError("delta must lie in (0, 1)");
    }
    return *q.delta;
}

bool uses_n(FormulaKind kind) {
    return kind != FormulaKind::QFT;
}

RMatrix dense_couplings(int n) {
    RMatrix v = RMatrix::Zero(n, n);
    for (int m = 0; m < n; m++) {
        for (int l = m + 1; l < n; l++) {
            v(m, l) = v(l, m) = 0.3 + 0.05 * m + 0.02 * l;
        }
    }
    return v;
}

RMatrix product_couplings(int n) {
    RMatrix v = RMatrix::Zero(n, n);
    for (int m = 0; m < n; m++) {
        for (int l = m + 1; l < n; l++) {
            v(m, l) = v(l, m) = (0.5 + 0.1 * m) * (0.8 - 0.03 * l);
        }
    }
    return v;
}

RMatrix banded_couplings(int n, int p) {
    RMatrix v = dense_couplings(n);
    for (int m = 0; m < n; m++) {
        for (int l = 0; l < n; l++) {
            if (std::abs(m - l) > p) {
                v(m, l) = 0.0;
            }
        }
    }
    return v;
}

BCSModel test_model(const RMatrix &v) {
    const int n = static_cast<int>(v.rows());
    RVector eps(n);
    for (int i = 0; i < n; i++) {
        eps(i) = 1.0 + 0.1 * i;
    }
    return BCSModel(n, n / 2, eps, CouplingMatrix(v), 1.0);
}

void add_row(ResourceReport &r, FormulaKind kind, FormulaParams q, std::optional<int64_t> compiled) {
    ReportRow row;
    row.kase = formula_name(kind);
    row.n = q.n;
    row.p = q.p;
    row.k = q.k;
    row.delta = q.delta;
    row.formula = formula_count({kind, q});
    row.compiled = compiled;
    if (compiled) {
        row.gap = (static_cast<double>(*compiled) - row.formula) / row.formula;
    }
    r.rows.push_back(row);
}

std::string fmt(double x) {
    std::ostringstream out;
    out << std::setprecision(15) << x;
    return out.str();
}

}  // namespace

std::string formula_name(FormulaKind kind) {
    for (const auto &[k, name] : formula_names()) {
        if (k == kind) {
            return name;
        }
    }
    throw std::logic_error("unnamed formula kind");
}

FormulaKind parse_formula(const std::string &name) {
    for (const auto &[k, n] : formula_names()) {
        if (n == name) {
            return k;
        }
    }
    throw std::invalid_argument("unknown formula: " + name);
}

double init_steps(double delta, double spacing_ratio) {
    return spacing_ratio * kPi / delta;
}

double formula_count(const CountFormula &f) {
    const FormulaParams &q = f.params;
    if (uses_n(f.kind) && q.n < 2) {
        throw DomainError("N must be at least 2");
    }
    const double n = q.n;
    auto pea_reps = [&] { return std::ldexp(1.0, need_k(q)) - 1.0; };
    switch (f.kind) {
        case FormulaKind::UzzNaive:
            return 2 * n * n - 2 * n;
        case FormulaKind::UzzStepwise:
            return n * n + n - 2;
        case FormulaKind::UzzCarryover:
            return n * n - n + 2;
        case FormulaKind::UzzLimited:
            return 4 * n - 4;
        case FormulaKind::UzzFixedRange: {
            const double p = need_p(q);
            return 2 * p * n - p * p - p + 2;
        }
        case FormulaKind::InitGeneral:
            return 2 * n * n + 3 * n + 4;
        case FormulaKind::InitLimited:
            return 13 * n - 8;
        case FormulaKind::InitFixedRange: {
            const double p = need_p(q);
            return 4 * p * n + 5 * n - 2 * p * p - 2 * p + 4;
        }
        case FormulaKind::CtrlUzz:
            return 2 * (n * n + 7 * n - 8);
        case FormulaKind::CtrlUzzAxis:
            return 2 * (n * n + 8 * n - 8);
        case FormulaKind::CtrlLocals:
            return 8 * n + 4;
        case FormulaKind::PEAGeneral:
            return pea_reps() * (6 * n * n + 64 * n - 40);
        case FormulaKind::PEALimited: {
            const double p = need_p(q);
            return pea_reps() * (12 * n * p - 6 * p * p - 6 * p + 70 * n - 40);
        }
        case FormulaKind::QFT:
            return 6.0 * need_k(q) - 5;
        case FormulaKind::TotalGeneral:
            return total_ops(TotalCase::General, q.n, q.p, need_k(q), need_delta(q));
        case FormulaKind::TotalLimited:
            return total_ops(TotalCase::Limited, q.n, need_p(q), need_k(q), need_delta(q));
        case FormulaKind::TotalGeneralPrecision:
            return init_steps(need_delta(q)) * (122 * n * n + 1283 * n - 796);
        case FormulaKind::TotalLimitedPrecision: {
            const double p = need_p(q);
            return init_steps(need_delta(q)) * (244 * n * p - 122 * p * p - 122 * p + 1405 * n - 796);
        }
        case FormulaKind::NMR:
            return 6.0 * std::pow(n, 4) / need_delta(q);
        case FormulaKind::QubusNN:
            return init_steps(need_delta(q)) * (1649 * n - 1040);
    }
    throw std::logic_error("unhandled formula kind");
}

double total_ops(TotalCase c, int n, std::optional<int> p, int k, double delta) {
    FormulaParams q{n, p, k, delta};
    need_k(q);
    const double s = init_steps(need_delta(q));
    const double qft = formula_count({FormulaKind::QFT, q});
    if (c == TotalCase::General) {
        return formula_count({FormulaKind::PEAGeneral, q}) + s * formula_count({FormulaKind::InitGeneral, q}) + qft;
    }
    need_p(q);
    return formula_count({FormulaKind::PEALimited, q}) + s * formula_count({FormulaKind::InitFixedRange, q}) + qft;
}

int crossover_n() {
    constexpr double delta = 0.01;
    for (int n = 2;; n++) {
        FormulaParams q{n, std::nullopt, std::nullopt, delta};
        if (formula_count({FormulaKind::QubusNN, q}) < formula_count({FormulaKind::NMR, q})) {
            return n;
        }
    }
}

int precision_bits(double delta) {
    if (!(delta > 0.0)) {
        throw DomainError("delta must be positive");
    }
    return std::max(1, static_cast<int>(std::ceil(std::log2(2.0 * kPi / delta) - 1e-12)));
}

std::optional<int> max_n_for_budget(TotalCase c, double budget, double delta, std::optional<int> p) {
    if (!(budget > 0.0)) {
        throw DomainError("budget must be positive");
    }
    const int k = precision_bits(delta);
    if (c == TotalCase::Limited && !p) {
        p = 1;
    }
    std::optional<int> best;
    for (int n = 2; n < 1000000; n++) {
        std::optional<int> pn = p;
        if (pn && *pn > n - 1) {
            pn = n - 1;
        }
        if (total_ops(c, n, pn, k, delta) > budget) {
            break;
        }
        best = n;
    }
    return best;
}

int ResourceReport::mismatches() const {
    int bad = 0;
    for (const auto &r : rows) {
        if (r.compiled && static_cast<double>(*r.compiled) != r.formula) {
            bad++;
        }
    }
    return bad;
}

ResourceReport verify_counts(const VerifyOptions &opts) {
    ResourceReport r;
    for (int n = opts.n_min; n <= opts.n_max; n++) {
        const CouplingMatrix dense(dense_couplings(n));
        const CouplingMatrix product(product_couplings(n));
        const FormulaParams q{n, std::nullopt, std::nullopt, std::nullopt};
        add_row(r, FormulaKind::UzzNaive, q, count_ops(build_uzz(dense, strategy::Naive{})).bus);
        add_row(r, FormulaKind::UzzStepwise, q, count_ops(build_uzz(dense, strategy::Stepwise{})).bus);
        add_row(r, FormulaKind::UzzCarryover, q, count_ops(build_uzz(dense, strategy::Carryover{})).bus);
        add_row(r, FormulaKind::UzzLimited, q, count_ops(build_uzz(product, strategy::Limited{})).bus);
        for (int p = 1; p <= n - 1; p++) {
            const FormulaParams qp{n, p, std::nullopt, std::nullopt};
            const CouplingMatrix banded(banded_couplings(n, p));
            add_row(r, FormulaKind::UzzFixedRange, qp, count_ops(build_uzz(banded, strategy::FixedRange{p})).bus);
            const BCSModel m = test_model(banded_couplings(n, p));
            add_row(r, FormulaKind::InitFixedRange, qp,
                    count_ops(build_adiabatic_init(m, 1, 0.1, Ramp::Linear, strategy::FixedRange{p})).total);
        }
        add_row(r, FormulaKind::InitGeneral, q,
                count_ops(build_adiabatic_init(test_model(dense_couplings(n)), 1, 0.1)).total);
        add_row(r, FormulaKind::InitLimited, q,
                count_ops(build_adiabatic_init(test_model(product_couplings(n)), 1, 0.1, Ramp::Linear,
                                               strategy::Limited{}))
                    .total);
        add_row(r, FormulaKind::CtrlUzz, q, count_ops(make_controlled(dense, n, Axis::Z)).total);
        add_row(r, FormulaKind::CtrlUzzAxis, q, count_ops(make_controlled(dense, n, Axis::X)).total);
        std::vector<Mat2> us;
        for (int i = 0; i < n; i++) {
            us.push_back(gates::z_phase(0.1 * (i + 1)));
        }
        add_row(r, FormulaKind::CtrlLocals, q, count_ops(make_controlled_locals(us, n)).total);
        for (int k = opts.k_min; k <= std::min(opts.pea_k_max, kMaxPeaQubits - n); k++) {
            if (n > opts.pea_n_max) {
                break;
            }
            PEAConfig cfg;
            cfg.k = k;
            cfg.tau = 1e-3;
            cfg.trotter_substeps = 1;
            const FormulaParams qk{n, std::nullopt, k, std::nullopt};
            add_row(r, FormulaKind::PEAGeneral, qk,
                    build_pea(test_model(dense_couplings(n)), cfg).controlled_evolution_ops());
        }
    }
    for (int k = opts.k_min; k <= opts.k_max; k++) {
        add_row(r, FormulaKind::QFT, {2, std::nullopt, k, std::nullopt}, count_ops(build_qft(k)).total);
    }
    return r;
}

ResourceReport comparison_table(int n_min, int n_max, int k, double delta) {
    ResourceReport r;
    for (int n = std::max(2, n_min); n <= n_max; n++) {
        add_row(r, FormulaKind::TotalGeneral, {n, std::nullopt, k, delta}, std::nullopt);
        add_row(r, FormulaKind::TotalLimited, {n, 1, k, delta}, std::nullopt);
        add_row(r, FormulaKind::TotalGeneralPrecision, {n, std::nullopt, k, delta}, std::nullopt);
        add_row(r, FormulaKind::TotalLimitedPrecision, {n, 1, k, delta}, std::nullopt);
        add_row(r, FormulaKind::NMR, {n, std::nullopt, std::nullopt, delta}, std::nullopt);
        add_row(r, FormulaKind::QubusNN, {n, std::nullopt, std::nullopt, delta}, std::nullopt);
    }
    return r;
}

std::string report_csv(const ResourceReport &r) {
    std::ostringstream out;
    out << "case,N,p,k,delta,formula,compiled,gap\n";
    for (const auto &row : r.rows) {
        out << row.kase << "," << row.n << "," << (row.p ? std::to_string(*row.p) : "") << ","
            << (row.k ? std::to_string(*row.k) : "") << "," << (row.delta ? fmt(*row.delta) : "") << ","
            << fmt(row.formula) << "," << (row.compiled ? std::to_string(*row.compiled) : "") << ","
            << (row.gap ? fmt(*row.gap) : "") << "\n";
    }
    return out.str();
}

nlohmann::json report_json(const ResourceReport &r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &row : r.rows) {
        nlohmann::json j = {{"case", row.kase}, {"N", row.n}, {"formula", row.formula}};
        j["p"] = row.p ? nlohmann::json(*row.p) : nlohmann::json(nullptr);
        j["k"] = row.k ? nlohmann::json(*row.k) : nlohmann::json(nullptr);
        j["delta"] = row.delta ? nlohmann::json(*row.delta) : nlohmann::json(nullptr);
        j["compiled"] = row.compiled ? nlohmann::json(*row.compiled) : nlohmann::json(nullptr);
        j["gap"] = row.gap ? nlohmann::json(*row.gap) : nlohmann::json(nullptr);
        rows.push_back(j);
    }
    return {{"rows", rows}, {"mismatches", r.mismatches()}};
}

}  // namespace qubus
