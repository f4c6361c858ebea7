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

#include "qubus/trotter.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qubus/controlled.h"
#include "qubus/executor.h"

namespace qubus {

namespace {

void check_order(int order) {
    if (order != 1 && order != 2) {
        throw std::invalid_argument("Trotter order must be 1 or 2");
    }
}

struct StepBuilder {
    const BCSModel &m;
    std::optional<int> ancilla;
    const Strategy &strategy;
    const ScheduleOptions &opts;
    int width;
    std::vector<int> system;

    StepBuilder(const BCSModel &model, std::optional<int> anc, const Strategy &s, const ScheduleOptions &o)
        : m(model), ancilla(anc), strategy(s), opts(o) {
        width = m.n_modes;
        if (ancilla) {
            if (*ancilla < m.n_modes) {
                throw std::invalid_argument("ancilla must lie outside the system register");
            }
            width = *ancilla + 1;
        }
        system.resize(m.n_modes);
        std::iota(system.begin(), system.end(), 0);
    }

    GateSequence widen(const GateSequence &seq) const {
        if (seq.num_qubits() == width) {
            return seq;
        }
        return seq.remapped(width, system);
    }

    /// exp(-i tau sum eps/2 Z).
    GateSequence u0(double tau) const {
        if (!ancilla) {
            return widen(build_u0(m.eps, -tau));
        }
        std::vector<Mat2> us;
        for (int q = 0; q < m.n_modes; q++) {
            us.push_back(gates::z_phase(-tau * m.eps(q) / 2.0));
        }
        return make_controlled_locals(us, *ancilla);
    }

    /// exp(-i tau scale sum V/2 PP) for P = X or Y.
    GateSequence coupling(double tau, Axis axis, double scale) const {
        CouplingMatrix v = m.v.scaled(-tau * scale);
        if (!ancilla) {
            return widen(conjugate_to_axis(build_uzz(v, strategy, opts), axis));
        }
        return make_controlled(v, *ancilla, axis);
    }
};

}  // namespace

GateSequence build_trotter_step(const BCSModel &m, double tau, int order, std::optional<int> ancilla,
                                const Strategy &strategy, const ScheduleOptions &opts) {
    check_order(order);
    m.validate();
    if (m.n_modes < 2) {
        throw std::invalid_argument("Trotter step needs at least two modes");
    }
    StepBuilder b(m, ancilla, strategy, opts);
    GateSequence seq(b.width, ancilla ? "controlled-trotter" : "trotter");
    if (order == 1) {
        seq.append(b.coupling(tau, Axis::Y, m.r));
        seq.append(b.coupling(tau, Axis::X, 1.0));
        seq.append(b.u0(tau));
    } else {
        seq.append(b.u0(tau / 2));
        seq.append(b.coupling(tau / 2, Axis::X, 1.0));
        seq.append(b.coupling(tau, Axis::Y, m.r));
        seq.append(b.coupling(tau / 2, Axis::X, 1.0));
        seq.append(b.u0(tau / 2));
    }
    return seq;
}

int64_t controlled_step_count(int n) {
    return 6 * int64_t{n} * n + 64 * int64_t{n} - 40;
}

Ramp parse_ramp(const std::string &name) {
    if (name == "linear") {
        return Ramp::Linear;
    }
    if (name == "cosine") {
        return Ramp::Cosine;
    }
    throw std::invalid_argument("unknown ramp: " + name);
}

double ramp_value(Ramp ramp, int j, int steps) {
    const double x = static_cast<double>(j) / steps;
    return ramp == Ramp::Linear ? x : (1.0 - std::cos(kPi * x)) / 2.0;
}

GateSequence build_adiabatic_init(const BCSModel &m, int steps, double tau, Ramp ramp, const Strategy &strategy,
                                  const ScheduleOptions &opts) {
    if (steps < 1) {
        throw std::invalid_argument("adiabatic initialization needs at least one step");
    }
    m.validate();
    StepBuilder b(m, std::nullopt, strategy, opts);
    GateSequence seq(m.n_modes, "adiabatic");
    for (int j = 1; j <= steps; j++) {
        const double c = ramp_value(ramp, j, steps);
        seq.append(b.coupling(tau, Axis::Y, c * m.r));
        seq.append(b.coupling(tau, Axis::X, c));
        seq.append(b.u0(tau));
    }
    return seq;
}

int64_t adiabatic_step_count(double delta, double spacing_ratio) {
    if (!(delta > 0) || !(spacing_ratio > 0)) {
        throw std::invalid_argument("delta and spacing ratio must be positive");
    }
    return std::max<int64_t>(1, std::llround(spacing_ratio * kPi / delta));
}

uint64_t adiabatic_initial_basis(const BCSModel &m) {
    std::vector<int> order(m.n_modes);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return m.eps(a) > m.eps(b); });
    uint64_t basis = 0;
    for (int i = 0; i < m.n_excitations; i++) {
        basis = flip_bit(basis, order[i], m.n_modes);
    }
    return basis;
}

CMatrix dense_trotter_step(const BCSModel &m, double tau, int order) {
    check_order(order);
    const int n = m.n_modes;
    const int64_t dim = int64_t{1} << n;
    CMatrix h0 = CMatrix::Zero(dim, dim);
    CMatrix hxx = CMatrix::Zero(dim, dim);
    CMatrix hyy = CMatrix::Zero(dim, dim);
    for (int q = 0; q < n; q++) {
        h0 += m.eps(q) / 2.0 * embed(gates::pauli_z(), q, n);
        for (int l = q + 1; l < n; l++) {
            hxx += m.v(q, l) / 2.0 * embed(gates::pauli_x(), q, n) * embed(gates::pauli_x(), l, n);
            hyy += m.r * m.v(q, l) / 2.0 * embed(gates::pauli_y(), q, n) * embed(gates::pauli_y(), l, n);
        }
    }
    auto ev = [](const CMatrix &h, double t) { return expi_hermitian(h, -t); };
    if (order == 1) {
        return ev(h0, tau) * ev(hxx, tau) * ev(hyy, tau);
    }
    return ev(h0, tau / 2) * ev(hxx, tau / 2) * ev(hyy, tau) * ev(hxx, tau / 2) * ev(h0, tau / 2);
}

double trotter_error(const BCSModel &m, double t, int steps, int order, const Strategy &strategy) {
    if (steps < 1) {
        throw std::invalid_argument("steps must be positive");
    }
    CMatrix step = effective_unitary(build_trotter_step(m, t / steps, order, std::nullopt, strategy));
    CMatrix total = CMatrix::Identity(step.rows(), step.cols());
    for (int s = 0; s < steps; s++) {
        total = step * total;
    }
    return spectral_distance_up_to_global_phase(total, exact_evolution(m, t));
}

}  // namespace qubus
