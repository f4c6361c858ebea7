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

#include "qubus/uzz.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace qubus {

namespace {

// A star step: anchor attached first on one quadrature, partners on the other,
// anchor detached before the partners. Each anchor/partner pair picks up the
// phase exp(i * 2 * sigma * a_anchor * a_partner * Z Z) with sigma = +1 for a
// position-quadrature anchor and -1 for a momentum-quadrature anchor.
double orientation(Quadrature anchor) {
    return anchor == Quadrature::Position ? 1.0 : -1.0;
}

double fresh_anchor_amplitude(double max_partner_product, const ScheduleOptions &opts) {
    // partner amplitude = product / anchor amplitude
    if (max_partner_product > opts.max_beta) {
        return max_partner_product / opts.max_beta;
    }
    return 1.0;
}

void emit_star(
    GateSequence &seq, int anchor, Quadrature q, double anchor_amp, const std::vector<std::pair<int, double>> &partners) {
    seq.attach(anchor, q, anchor_amp);
    for (auto [j, a] : partners) {
        seq.attach(j, other(q), a);
    }
    seq.attach(anchor, q, -anchor_amp);
    for (auto [j, a] : partners) {
        seq.attach(j, other(q), -a);
    }
}

/// Partner amplitudes realising coefficient V/2 for every listed partner.
std::vector<std::pair<int, double>> partner_amplitudes(
    const CouplingMatrix &v, int anchor, Quadrature q, double anchor_amp, const std::vector<int> &partners) {
    std::vector<std::pair<int, double>> out;
    for (int j : partners) {
        out.emplace_back(j, orientation(q) * v(anchor, j) / (4.0 * anchor_amp));
    }
    return out;
}

GateSequence build_naive(const CouplingMatrix &v, const ScheduleOptions &opts) {
    const int n = v.n();
    GateSequence seq(n, "naive");
    for (int m = 0; m < n; m++) {
        for (int l = m + 1; l < n; l++) {
            if (!v.is_zero(m, l)) {
                seq.append(build_cphase(n, m, l, v(m, l) / 2.0, opts));
            }
        }
    }
    return seq;
}

GateSequence build_stepwise(const CouplingMatrix &v, const ScheduleOptions &opts) {
    const int n = v.n();
    GateSequence seq(n, "stepwise");
    for (int a = 1; a < n; a++) {
        std::vector<int> partners;
        double mx = 0;
        for (int j = 0; j < a; j++) {
            if (!v.is_zero(a, j)) {
                partners.push_back(j);
                mx = std::max(mx, std::abs(v(a, j)) / 4.0);
            }
        }
        if (partners.empty()) {
            continue;
        }
        double amp = fresh_anchor_amplitude(mx, opts);
        emit_star(seq, a, Quadrature::Position, amp, partner_amplitudes(v, a, Quadrature::Position, amp, partners));
        seq.barrier("step " + std::to_string(a));
    }
    return seq;
}

GateSequence build_limited(const CouplingMatrix &v, RVector row, RVector col) {
    const int n = v.n();
    if (row.size() == 0 && col.size() == 0) {
        auto d = decompose_limited(v);
        row = d.row;
        col = d.col;
    } else {
        if (row.size() != n || col.size() != n) {
            throw InfeasibleStrategy("limited constants must have one entry per qubit");
        }
        for (int m = 0; m < n; m++) {
            for (int l = m + 1; l < n; l++) {
                double expect = row(m) * col(l);
                double scale = std::max(1.0, std::abs(v(m, l)));
                if (std::abs(expect - v(m, l)) > 1e-12 * scale) {
                    throw NotProductForm(m, l, expect, v(m, l));
                }
            }
        }
    }
    GateSequence seq(n, "limited");
    if (n < 2) {
        return seq;
    }
    double max_row = row.head(n - 1).cwiseAbs().maxCoeff();
    double max_col = col.tail(n - 1).cwiseAbs().maxCoeff();
    if (max_row == 0 || max_col == 0) {
        return seq;
    }
    const double c = std::sqrt(max_col / max_row);
    auto p_amp = [&](int j) { return col(j) / (2.0 * c); };
    auto q_amp = [&](int i) { return row(i) * c / 2.0; };
    auto put = [&](int qubit, Quadrature q, double amp) {
        if (amp != 0.0) {
            seq.attach(qubit, q, amp);
        }
    };
    for (int j = 1; j < n; j++) {
        put(j, Quadrature::Position, p_amp(j));
    }
    put(0, Quadrature::Momentum, q_amp(0));
    for (int j = 1; j < n - 1; j++) {
        put(j, Quadrature::Position, -p_amp(j));
        put(j, Quadrature::Momentum, q_amp(j));
    }
    put(n - 1, Quadrature::Position, -p_amp(n - 1));
    for (int i = 0; i < n - 1; i++) {
        put(i, Quadrature::Momentum, -q_amp(i));
    }
    return seq;
}

void check_fixed_range(const CouplingMatrix &v, int p) {
    const int n = v.n();
    if (p < 1 || p > n - 1) {
        throw InfeasibleStrategy(
            "fixed-range p=" + std::to_string(p) + " must satisfy 1 <= p <= N-1 = " + std::to_string(n - 1));
    }
    for (int m = 0; m < n; m++) {
        for (int l = m + p + 1; l < n; l++) {
            if (!v.is_zero(m, l)) {
                std::ostringstream msg;
                msg << "fixed-range p=" << p << " violated: V(" << m << "," << l << ") = " << v(m, l)
                    << " lies beyond the range";
                throw InfeasibleStrategy(msg.str());
            }
        }
    }
}

}  // namespace

std::string strategy_name(const Strategy &s) {
    return std::visit(
        [](const auto &st) -> std::string {
            using T = std::decay_t<decltype(st)>;
            if constexpr (std::is_same_v<T, strategy::Naive>) {
                return "naive";
            } else if constexpr (std::is_same_v<T, strategy::Stepwise>) {
                return "stepwise";
            } else if constexpr (std::is_same_v<T, strategy::Carryover>) {
                return "carryover";
            } else if constexpr (std::is_same_v<T, strategy::Limited>) {
                return "limited";
            } else {
                return "fixed-range";
            }
        },
        s);
}

Strategy parse_strategy(const std::string &name, std::optional<int> p) {
    if (name == "naive") {
        return strategy::Naive{};
    }
    if (name == "stepwise") {
        return strategy::Stepwise{};
    }
    if (name == "carryover") {
        return strategy::Carryover{};
    }
    if (name == "limited") {
        return strategy::Limited{};
    }
    if (name == "fixed-range") {
        if (!p) {
            throw std::invalid_argument("fixed-range strategy needs a range p");
        }
        return strategy::FixedRange{*p};
    }
    throw std::invalid_argument("unknown strategy '" + name + "'");
}

GateSequence build_cphase(int num_qubits, int q1, int q2, double theta, const ScheduleOptions &opts) {
    if (q1 == q2) {
        throw std::invalid_argument("C-Phase needs two distinct qubits");
    }
    // D(i b2 Z2) D(b1 Z1) D(-i b2 Z2) D(-b1 Z1) = exp(2 i b1 b2 Z1 Z2), rightmost first.
    double b1 = 1.0;
    double b2 = theta / 2.0;
    if (std::abs(b2) > opts.max_beta) {
        b1 = std::abs(theta) / (2.0 * opts.max_beta);
        if (b1 > opts.max_beta) {
            b1 = std::sqrt(std::abs(theta) / 2.0);
        }
        b2 = theta / (2.0 * b1);
    }
    GateSequence seq(num_qubits, "cphase");
    seq.attach(q1, Quadrature::Position, -b1);
    seq.attach(q2, Quadrature::Momentum, -b2);
    seq.attach(q1, Quadrature::Position, b1);
    seq.attach(q2, Quadrature::Momentum, b2);
    return seq;
}

NotProductForm::NotProductForm(int m_, int l_, double expected_, double actual_)
    : InfeasibleStrategy([&] {
          std::ostringstream msg;
          msg << "NotProductForm: V(" << m_ << "," << l_ << ") = " << actual_
              << " but the product structure fixed by the other entries requires " << expected_;
          return msg.str();
      }()),
      m(m_),
      l(l_),
      expected(expected_),
      actual(actual_) {
}

LimitedDecomposition decompose_limited(const CouplingMatrix &v, double tol) {
    const int n = v.n();
    LimitedDecomposition d{RVector::Zero(n), RVector::Zero(n)};
    // Bipartite graph: row nodes m (0..n-2), column nodes l (1..n-1), edges on nonzero V_ml.
    std::vector<bool> row_set(n, false), col_set(n, false);
    for (int start = 0; start < n - 1; start++) {
        if (row_set[start]) {
            continue;
        }
        bool has_edge = false;
        for (int l = start + 1; l < n; l++) {
            has_edge |= !v.is_zero(start, l);
        }
        if (!has_edge) {
            continue;
        }
        d.row(start) = 1.0;
        row_set[start] = true;
        std::vector<std::pair<bool, int>> stack{{true, start}};
        while (!stack.empty()) {
            auto [is_row, idx] = stack.back();
            stack.pop_back();
            if (is_row) {
                for (int l = idx + 1; l < n; l++) {
                    if (!v.is_zero(idx, l) && !col_set[l]) {
                        d.col(l) = v(idx, l) / d.row(idx);
                        col_set[l] = true;
                        stack.push_back({false, l});
                    }
                }
            } else {
                for (int m = 0; m < idx; m++) {
                    if (!v.is_zero(m, idx) && !row_set[m]) {
                        d.row(m) = v(m, idx) / d.col(idx);
                        row_set[m] = true;
                        stack.push_back({true, m});
                    }
                }
            }
        }
    }
    for (int m = 0; m < n; m++) {
        for (int l = m + 1; l < n; l++) {
            double expect = d.row(m) * d.col(l);
            double scale = std::max(1.0, std::abs(v(m, l)));
            if (std::abs(expect - v(m, l)) > tol * scale) {
                throw NotProductForm(m, l, expect, v(m, l));
            }
        }
    }
    return d;
}

CarryoverPlan solve_carryover(const CouplingMatrix &v, const ScheduleOptions &opts) {
    const int n = v.n();
    CarryoverPlan plan;
    plan.n = n;
    std::set<int> remaining;
    for (int q = 0; q < n; q++) {
        remaining.insert(q);
    }
    auto interacts_within_remaining = [&](int q) {
        for (int j : remaining) {
            if (j != q && !v.is_zero(q, j)) {
                return true;
            }
        }
        return false;
    };

    int anchor = -1;
    Quadrature quad = Quadrature::Position;
    double amp = 1.0;
    bool fresh = true;
    while (true) {
        if (anchor < 0) {
            auto it = std::find_if(remaining.begin(), remaining.end(), interacts_within_remaining);
            if (it == remaining.end()) {
                break;
            }
            anchor = *it;
            remaining.erase(it);
            quad = Quadrature::Position;
            fresh = true;
            double mx = 0;
            for (int j : remaining) {
                mx = std::max(mx, std::abs(v(anchor, j)) / 4.0);
            }
            amp = fresh_anchor_amplitude(mx, opts);
        }

        std::vector<int> partners;
        for (int j : remaining) {
            if (!v.is_zero(anchor, j)) {
                partners.push_back(j);
            }
        }
        CarryoverStep step{anchor, quad, amp, fresh, partner_amplitudes(v, anchor, quad, amp, partners), -1};
        if (partners.empty()) {
            // The carried anchor has nothing left to couple to: detach it and restart.
            plan.steps.push_back(step);
            if (std::any_of(remaining.begin(), remaining.end(), interacts_within_remaining)) {
                plan.restarts++;
                plan.diagnostics.push_back(
                    "qubit " + std::to_string(anchor) +
                    " has no coupling to any remaining qubit; restarting the chain with a fresh anchor");
            }
            anchor = -1;
            continue;
        }
        if (partners.front() != *remaining.begin()) {
            plan.diagnostics.push_back(
                "skipping qubit " + std::to_string(*remaining.begin()) + " in the step anchored on qubit " +
                std::to_string(anchor) + " (zero coupling)");
        }
        step.carried = partners.front();
        double carried_amp = step.partners.front().second;
        plan.steps.push_back(step);
        remaining.erase(step.carried);
        anchor = step.carried;
        quad = other(quad);
        amp = carried_amp;
        fresh = false;
    }
    return plan;
}

GateSequence emit_carryover(const CarryoverPlan &plan) {
    GateSequence seq(plan.n, "carryover");
    for (size_t s = 0; s < plan.steps.size(); s++) {
        const auto &st = plan.steps[s];
        if (st.fresh_anchor) {
            seq.attach(st.anchor, st.anchor_quadrature, st.anchor_amplitude);
        }
        for (auto [j, a] : st.partners) {
            seq.attach(j, other(st.anchor_quadrature), a);
        }
        seq.attach(st.anchor, st.anchor_quadrature, -st.anchor_amplitude);
        for (auto [j, a] : st.partners) {
            if (j != st.carried) {
                seq.attach(j, other(st.anchor_quadrature), -a);
            }
        }
        seq.barrier("step " + std::to_string(s + 1));
    }
    return seq;
}

int64_t dense_bus_count(const Strategy &s, int n) {
    const int64_t N = n;
    return std::visit(
        [N](const auto &st) -> int64_t {
            using T = std::decay_t<decltype(st)>;
            if (N < 2) {
                return 0;
            }
            if constexpr (std::is_same_v<T, strategy::Naive>) {
                return 2 * N * N - 2 * N;
            } else if constexpr (std::is_same_v<T, strategy::Stepwise>) {
                return N * N + N - 2;
            } else if constexpr (std::is_same_v<T, strategy::Carryover>) {
                return N * N - N + 2;
            } else if constexpr (std::is_same_v<T, strategy::Limited>) {
                return 4 * N - 4;
            } else {
                const int64_t p = st.p;
                return 2 * p * N - p * p - p + 2;
            }
        },
        s);
}

GateSequence build_uzz(const CouplingMatrix &v, const Strategy &s, const ScheduleOptions &opts) {
    GateSequence seq = std::visit(
        [&](const auto &st) -> GateSequence {
            using T = std::decay_t<decltype(st)>;
            if constexpr (std::is_same_v<T, strategy::Naive>) {
                return build_naive(v, opts);
            } else if constexpr (std::is_same_v<T, strategy::Stepwise>) {
                return build_stepwise(v, opts);
            } else if constexpr (std::is_same_v<T, strategy::Carryover>) {
                return emit_carryover(solve_carryover(v, opts));
            } else if constexpr (std::is_same_v<T, strategy::Limited>) {
                return build_limited(v, st.row, st.col);
            } else {
                check_fixed_range(v, st.p);
                GateSequence out = emit_carryover(solve_carryover(v, opts));
                out.set_strategy("fixed-range");
                out.set_metadata("p", st.p);
                return out;
            }
        },
        s);
    seq.set_metadata("formula_bus", dense_bus_count(s, v.n()));
    seq.set_metadata("bus", count_ops(seq).bus);
    return seq;
}

Mat2 axis_change(Axis axis) {
    switch (axis) {
        case Axis::Z:
            return gates::identity();
        case Axis::X:
            return gates::hadamard();
        case Axis::Y:
            return gates::phase_s() * gates::hadamard();
    }
    return gates::identity();
}

GateSequence conjugate_to_axis(const GateSequence &seq, Axis axis, std::vector<int> qubits) {
    if (qubits.empty()) {
        for (int q = 0; q < seq.num_qubits(); q++) {
            qubits.push_back(q);
        }
    }
    const Mat2 g = axis_change(axis);
    const std::string name = axis == Axis::X ? "x" : axis == Axis::Y ? "y" : "z";
    GateSequence out(seq.num_qubits(), seq.strategy());
    for (const auto &[k, val] : seq.metadata()) {
        out.set_metadata(k, val);
    }
    for (int q : qubits) {
        out.local(q, g.adjoint(), "to-" + name + "-basis");
    }
    out.append(seq);
    for (int q : qubits) {
        out.local(q, g, "from-" + name + "-basis");
    }
    return out;
}

GateSequence build_u0(const RVector &eps, double tau) {
    const int n = static_cast<int>(eps.size());
    GateSequence seq(n, "u0");
    for (int m = 0; m < n; m++) {
        seq.local(m, gates::z_phase(tau * eps(m) / 2.0), "u0");
    }
    return seq;
}

}  // namespace qubus
