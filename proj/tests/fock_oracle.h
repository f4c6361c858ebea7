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

#ifndef QUBUS_TESTS_FOCK_ORACLE_H
#define QUBUS_TESTS_FOCK_ORACLE_H

#include <cmath>

#include "qubus/gate_sequence.h"
#include "qubus/hybrid_state.h"
#include "qubus/linalg.h"

namespace qubus::oracle {

/// Register plus bus in a truncated number basis; amps(level, basis).
class FockState {
   public:
    FockState(int num_qubits, int dim) : n_(num_qubits), amps_(CMatrix::Zero(dim, int64_t{1} << num_qubits)) {}

    static FockState vacuum(int num_qubits, int dim, uint64_t basis) {
        FockState f(num_qubits, dim);
        f.amps_(0, static_cast<int64_t>(basis)) = 1.0;
        return f;
    }

    /// Expands every coherent branch in the number basis.
    static FockState from_hybrid(const HybridState &s, int dim) {
        FockState f(s.num_qubits(), dim);
        for (const auto &b : s.branches()) {
            Complex c = b.coeff * std::exp(-std::norm(b.bus_alpha) / 2.0);
            for (int level = 0; level < dim; level++) {
                if (level > 0) {
                    c *= b.bus_alpha / std::sqrt(static_cast<double>(level));
                }
                f.amps_(level, static_cast<int64_t>(b.basis)) += c;
            }
        }
        return f;
    }

    int dim() const {
        return static_cast<int>(amps_.rows());
    }

    void displace(int qubit, Complex beta) {
        const int64_t cols = amps_.cols();
        for (int sign : {1, -1}) {
            std::vector<int64_t> idx;
            for (int64_t b = 0; b < cols; b++) {
                if (z_sign(b, qubit, n_) == sign) {
                    idx.push_back(b);
                }
            }
            CMatrix block(dim(), static_cast<int64_t>(idx.size()));
            for (size_t i = 0; i < idx.size(); i++) {
                block.col(i) = amps_.col(idx[i]);
            }
            apply_displacement(block, static_cast<double>(sign) * beta);
            for (size_t i = 0; i < idx.size(); i++) {
                amps_.col(idx[i]) = block.col(i);
            }
        }
    }

    void local(int qubit, const Mat2 &u) {
        for (int64_t b = 0; b < amps_.cols(); b++) {
            if (bit_of(b, qubit, n_) != 0) {
                continue;
            }
            const int64_t c = flip_bit(b, qubit, n_);
            CVector c0 = amps_.col(b);
            CVector c1 = amps_.col(c);
            amps_.col(b) = u(0, 0) * c0 + u(0, 1) * c1;
            amps_.col(c) = u(1, 0) * c0 + u(1, 1) * c1;
        }
    }

    void run(const GateSequence &seq) {
        for (const auto &ins : seq.instructions()) {
            if (const auto *d = std::get_if<Displace>(&ins)) {
                displace(d->qubit, d->beta);
            } else if (const auto *l = std::get_if<Local>(&ins)) {
                local(l->qubit, l->u);
            }
        }
    }

    Complex inner(const FockState &other) const {
        return (amps_.conjugate().cwiseProduct(other.amps_)).sum();
    }

    double norm() const {
        return amps_.norm();
    }

    /// Probability in the highest `levels` number states.
    double tail_mass(int levels) const {
        return amps_.bottomRows(std::min(levels, dim())).squaredNorm();
    }

   private:
    /// exp(g a^dagger - g^* a) on every column, by sub-stepped Taylor series.
    static void apply_displacement(CMatrix &v, Complex g) {
        const int dim = static_cast<int>(v.rows());
        RVector sq(dim - 1);
        for (int m = 0; m < dim - 1; m++) {
            sq(m) = std::sqrt(static_cast<double>(m + 1));
        }
        const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(g) / 0.25)));
        const Complex h = g / static_cast<double>(steps);
        for (int s = 0; s < steps; s++) {
            CMatrix sum = v;
            CMatrix term = v;
            for (int j = 1; j < 80; j++) {
                CMatrix next = CMatrix::Zero(dim, v.cols());
                next.bottomRows(dim - 1) += h * (sq.cast<Complex>().asDiagonal() * term.topRows(dim - 1));
                next.topRows(dim - 1) -= std::conj(h) * (sq.cast<Complex>().asDiagonal() * term.bottomRows(dim - 1));
                term = next / static_cast<double>(j);
                sum += term;
                if (term.norm() < 1e-18 * std::max(1.0, sum.norm())) {
                    break;
                }
            }
            v = sum;
        }
    }

    int n_;
    CMatrix amps_;
};

/// Runs the sequence from a basis input, doubling the truncation until the top levels are empty.
inline FockState run_adaptive(const GateSequence &seq, uint64_t basis, int start_dim = 64) {
    for (int dim = start_dim;; dim *= 2) {
        FockState f = FockState::vacuum(seq.num_qubits(), dim, basis);
        f.run(seq);
        if (f.tail_mass(20) < 1e-12 || dim >= 2048) {
            return f;
        }
    }
}

}  // namespace qubus::oracle

#endif
