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

#include "qubus/gate_sequence.h"

#include <cmath>

namespace qubus {

GateSequence::GateSequence(int num_qubits, std::string strategy)
    : num_qubits_(num_qubits), strategy_(std::move(strategy)) {
    if (num_qubits <= 0) {
        throw std::invalid_argument("a sequence needs at least one qubit");
    }
}

void GateSequence::check_qubit(int qubit) const {
    if (qubit < 0 || qubit >= num_qubits_) {
        throw std::out_of_range(
            "instruction qubit " + std::to_string(qubit) + " outside register of " + std::to_string(num_qubits_));
    }
}

void GateSequence::displace(int qubit, Complex beta) {
    check_qubit(qubit);
    if (!std::isfinite(beta.real()) || !std::isfinite(beta.imag())) {
        throw std::invalid_argument("displacement amplitude must be finite");
    }
    instructions_.push_back(Displace{qubit, beta});
}

void GateSequence::local(int qubit, const Mat2 &u, std::string label) {
    check_qubit(qubit);
    if (!is_unitary(u, 1e-12)) {
        throw std::invalid_argument("local '" + label + "' is not unitary within 1e-12");
    }
    instructions_.push_back(Local{qubit, u, std::move(label)});
}

void GateSequence::barrier(std::string label) {
    instructions_.push_back(Barrier{std::move(label)});
}

void GateSequence::append(const GateSequence &other) {
    if (other.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("cannot append sequences over different registers");
    }
    instructions_.insert(instructions_.end(), other.instructions_.begin(), other.instructions_.end());
}

GateSequence GateSequence::remapped(int num_qubits, const std::vector<int> &mapping) const {
    if (static_cast<int>(mapping.size()) != num_qubits_) {
        throw std::invalid_argument("qubit mapping must cover every qubit of the sequence");
    }
    GateSequence out(num_qubits, strategy_);
    out.metadata_ = metadata_;
    for (const auto &inst : instructions_) {
        std::visit(
            [&](const auto &op) {
                using T = std::decay_t<decltype(op)>;
                if constexpr (std::is_same_v<T, Displace>) {
                    out.displace(mapping[op.qubit], op.beta);
                } else if constexpr (std::is_same_v<T, Local>) {
                    out.local(mapping[op.qubit], op.u, op.label);
                } else {
                    out.barrier(op.label);
                }
            },
            inst);
    }
    return out;
}

GateSequence GateSequence::inverse() const {
    GateSequence out(num_qubits_, strategy_);
    for (auto it = instructions_.rbegin(); it != instructions_.rend(); ++it) {
        if (const auto *d = std::get_if<Displace>(&*it)) {
            out.displace(d->qubit, -d->beta);
        } else if (const auto *l = std::get_if<Local>(&*it)) {
            out.local(l->qubit, l->u.adjoint(), l->label);
        } else {
            out.barrier(std::get<Barrier>(*it).label);
        }
    }
    return out;
}

OpCounts count_ops(const GateSequence &seq) {
    OpCounts c;
    for (const auto &inst : seq.instructions()) {
        if (std::holds_alternative<Displace>(inst)) {
            c.bus++;
        } else if (std::holds_alternative<Local>(inst)) {
            c.local++;
        }
    }
    c.total = c.bus + c.local;
    return c;
}

std::vector<DisplacementOp> displacement_ops(const GateSequence &seq) {
    std::vector<DisplacementOp> ops;
    for (const auto &inst : seq.instructions()) {
        if (const auto *d = std::get_if<Displace>(&inst)) {
            ops.push_back({d->qubit, d->beta});
        } else if (const auto *l = std::get_if<Local>(&inst)) {
            throw std::invalid_argument("sequence contains local '" + l->label + "'; only displacements allowed");
        }
    }
    return ops;
}

DiagonalEffect diagonal_fast_path(const GateSequence &seq) {
    auto ops = displacement_ops(seq);
    return diagonal_fast_path(ops, seq.num_qubits());
}

CouplingMatrix::CouplingMatrix(int n) : v_(RMatrix::Zero(n, n)) {
    if (n <= 0) {
        throw std::invalid_argument("coupling matrix needs n >= 1");
    }
}

CouplingMatrix::CouplingMatrix(const RMatrix &v, double tol) : v_(v) {
    if (v.rows() != v.cols() || v.rows() == 0) {
        throw std::invalid_argument("coupling matrix must be square and non-empty");
    }
    if (!v.allFinite()) {
        throw std::invalid_argument("coupling matrix has non-finite entries");
    }
    for (int m = 0; m < n(); m++) {
        if (std::abs(v(m, m)) > tol) {
            throw std::invalid_argument("coupling matrix diagonal must be zero (absorb V_mm into eps_m)");
        }
        v_(m, m) = 0;
        for (int l = m + 1; l < n(); l++) {
            if (std::abs(v(m, l) - v(l, m)) > tol) {
                throw std::invalid_argument(
                    "coupling matrix is not symmetric at (" + std::to_string(m) + "," + std::to_string(l) + ")");
            }
        }
    }
}

void CouplingMatrix::set(int m, int l, double value) {
    if (m == l) {
        throw std::invalid_argument("diagonal couplings are not allowed");
    }
    v_(m, l) = value;
    v_(l, m) = value;
}

CouplingMatrix CouplingMatrix::scaled(double factor) const {
    CouplingMatrix out(n());
    out.v_ = v_ * factor;
    return out;
}

bool CouplingMatrix::is_zero(int m, int l) const {
    return std::abs(v_(m, l)) <= kCouplingZero;
}

}  // namespace qubus
