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

#ifndef QUBUS_UZZ_H
#define QUBUS_UZZ_H

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qubus/gate_sequence.h"

namespace qubus {

namespace strategy {
struct Naive {};
struct Stepwise {};
struct Carryover {};
/// Couplings of the product form V_ml = row[m] * col[l] for m < l. Empty vectors mean
/// "decompose the coupling matrix on demand".
struct Limited {
    RVector row;
    RVector col;
};
struct FixedRange {
    int p;
};
}  // namespace strategy

using Strategy =
    std::variant<strategy::Naive, strategy::Stepwise, strategy::Carryover, strategy::Limited, strategy::FixedRange>;

std::string strategy_name(const Strategy &s);
/// Accepts naive | stepwise | carryover | limited | fixed-range; p is required for fixed-range.
Strategy parse_strategy(const std::string &name, std::optional<int> p = std::nullopt);

struct ScheduleOptions {
    /// Largest |beta| a freshly chosen anchor may force on its partners before the
    /// anchor amplitude is scaled up.
    double max_beta = 8.0;
};

/// exp(i theta Z_q1 Z_q2) from four bus operations.
GateSequence build_cphase(int num_qubits, int q1, int q2, double theta, const ScheduleOptions &opts = {});

/// exp(i sum_{m<l} V_ml/2 Z_m Z_l) scheduled with the given strategy.
GateSequence build_uzz(const CouplingMatrix &v, const Strategy &s, const ScheduleOptions &opts = {});

/// Closed-form bus-operation count of a strategy on a dense coupling matrix.
int64_t dense_bus_count(const Strategy &s, int n);

struct CarryoverStep {
    int anchor;
    Quadrature anchor_quadrature;
    double anchor_amplitude;
    /// False when the anchor was left on the bus by the previous step.
    bool fresh_anchor;
    /// (qubit, amplitude on the other quadrature)
    std::vector<std::pair<int, double>> partners;
    /// Partner that stays attached and anchors the next step, or -1.
    int carried = -1;
};

struct CarryoverPlan {
    int n = 0;
    std::vector<CarryoverStep> steps;
    /// Number of times the chain had to be restarted with a fresh anchor.
    int restarts = 0;
    std::vector<std::string> diagnostics;
};

/// Plans the carry-over schedule: one qubit stays attached between steps, qubits
/// with no coupling to the current anchor are skipped and picked up later.
CarryoverPlan solve_carryover(const CouplingMatrix &v, const ScheduleOptions &opts = {});

GateSequence emit_carryover(const CarryoverPlan &plan);

class NotProductForm : public InfeasibleStrategy {
   public:
    NotProductForm(int m, int l, double expected, double actual);
    int m;
    int l;
    double expected;
    double actual;
};

struct LimitedDecomposition {
    /// row[m] defined for m < n-1, col[l] for l > 0; unused entries are zero.
    RVector row;
    RVector col;
};

/// Finds row/col constants with V_ml = row[m] col[l] on the upper triangle, or throws
/// NotProductForm naming the first entry that cannot be reproduced.
LimitedDecomposition decompose_limited(const CouplingMatrix &v, double tol = 1e-12);

enum class Axis { Z, X, Y };

/// Conjugates a Z-diagonal sequence by per-qubit basis changes so that Z_m Z_l
/// becomes X_m X_l (or Y_m Y_l). Adds two locals per listed qubit (all qubits if empty).
GateSequence conjugate_to_axis(const GateSequence &seq, Axis axis, std::vector<int> qubits = {});

/// Local that maps Z to the requested axis: G Z G^dagger = X or Y.
Mat2 axis_change(Axis axis);

/// exp(i tau sum_m eps_m/2 Z_m) as one local per qubit.
GateSequence build_u0(const RVector &eps, double tau);

}  // namespace qubus

#endif
