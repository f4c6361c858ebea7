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

#include "qubus/qft.h"

#include <cmath>

namespace qubus {

GateSequence build_qft(int k, QftMode mode) {
    if (k < 1 || k > 30) {
        throw std::invalid_argument("QFT size must be in 1..30");
    }
    const double dir = mode.direction == QftMode::Direction::Forward ? 1.0 : -1.0;
    GateSequence seq(k, "qft");
    // Controlled rotation between qubits j < l (0-based) has angle phi = 2 pi / 2^(l-j+1);
    // it equals e^{i phi/4} exp(-i phi/4 Z_j) exp(-i phi/4 Z_l) exp(i phi/4 Z_j Z_l).
    auto phi = [&](int j, int l) { return dir * 2.0 * kPi / std::ldexp(1.0, l - j + 1); };
    // ZZ coefficient phi/4 factorises as 2 a_j b_l; the sign of a_j accounts for which
    // window opens first.
    const double kappa = 0.5 * std::sqrt(kPi * std::ldexp(1.0, k - 2));
    auto b_amp = [&](int l) { return kappa * std::ldexp(1.0, -l); };
    auto a_amp = [&](int j) {
        double mag = dir * kPi * std::ldexp(1.0, j) / (8.0 * kappa);
        return j == 0 ? mag : -mag;
    };

    seq.local(0, gates::hadamard(), "H");
    if (k == 1) {
        return seq;
    }
    seq.attach(0, Quadrature::Position, a_amp(0));
    for (int l = 1; l < k; l++) {
        seq.attach(l, Quadrature::Momentum, b_amp(l));
    }
    seq.attach(0, Quadrature::Position, -a_amp(0));
    for (int l = 1; l < k; l++) {
        seq.attach(l, Quadrature::Momentum, -b_amp(l));
        double pre = 0;
        for (int j = 0; j < l; j++) {
            pre += phi(j, l) / 4.0;
        }
        seq.local(l, gates::z_phase(-pre), "corr");
        seq.local(l, gates::hadamard(), "H");
        if (l < k - 1) {
            seq.attach(l, Quadrature::Position, a_amp(l));
        }
    }
    for (int l = 1; l < k - 1; l++) {
        seq.attach(l, Quadrature::Position, -a_amp(l));
    }
    if (mode.completion == QftMode::Completion::FullUnitary) {
        for (int j = 0; j < k - 1; j++) {
            double post = 0;
            for (int l = j + 1; l < k; l++) {
                post += phi(j, l) / 4.0;
            }
            seq.local(j, gates::z_phase(-post), "post-corr");
        }
    }
    return seq;
}

CMatrix dft_matrix(int k, QftMode::Direction direction) {
    const int64_t dim = int64_t{1} << k;
    const double sign = direction == QftMode::Direction::Forward ? 1.0 : -1.0;
    CMatrix f(dim, dim);
    for (int64_t x = 0; x < dim; x++) {
        for (int64_t y = 0; y < dim; y++) {
            f(y, x) = std::exp(kI * (sign * 2.0 * kPi * static_cast<double>((x * y) % dim) / dim)) /
                      std::sqrt(static_cast<double>(dim));
        }
    }
    return f;
}

}  // namespace qubus
