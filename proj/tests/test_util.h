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

#ifndef QUBUS_TESTS_TEST_UTIL_H
#define QUBUS_TESTS_TEST_UTIL_H

#include <cmath>
#include <random>

#include "qubus/gate_sequence.h"
#include "qubus/linalg.h"

namespace qubus::testutil {

using Rng = std::mt19937_64;

inline double uniform(Rng &rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Haar-ish 2x2 unitary from Euler angles and a phase.
inline Mat2 random_unitary(Rng &rng) {
    const double a = uniform(rng, 0, 2 * kPi);
    const double b = uniform(rng, 0, 2 * kPi);
    const double c = uniform(rng, 0, 2 * kPi);
    const double t = std::acos(std::sqrt(uniform(rng, 0, 1)));
    Mat2 u;
    u << std::exp(kI * a) * std::cos(t), std::exp(kI * b) * std::sin(t), -std::exp(kI * (c - b)) * std::sin(t),
        std::exp(kI * (c - a)) * std::cos(t);
    return u;
}

inline CVector random_state(Rng &rng, int64_t dim) {
    std::normal_distribution<double> g;
    CVector v(dim);
    for (int64_t i = 0; i < dim; i++) {
        v(i) = Complex(g(rng), g(rng));
    }
    return v / v.norm();
}

/// Couplings drawn from [-1, -0.1] u [0.1, 1] so no pair is skipped.
inline CouplingMatrix random_dense_couplings(Rng &rng, int n) {
    CouplingMatrix v(n);
    for (int m = 0; m < n; m++) {
        for (int l = m + 1; l < n; l++) {
            double x = uniform(rng, 0.1, 1.0);
            v.set(m, l, uniform(rng, 0, 1) < 0.5 ? -x : x);
        }
    }
    return v;
}

inline CouplingMatrix random_banded_couplings(Rng &rng, int n, int p) {
    CouplingMatrix v = random_dense_couplings(rng, n);
    for (int m = 0; m < n; m++) {
        for (int l = m + p + 1; l < n; l++) {
            v.set(m, l, 0.0);
        }
    }
    return v;
}

/// diag(exp(i sum_{m<l} V_ml/2 s_m s_l)) with s = +1 for |0>.
inline CMatrix zz_target(const CouplingMatrix &v) {
    const int n = v.n();
    const int64_t dim = int64_t{1} << n;
    CMatrix t = CMatrix::Zero(dim, dim);
    for (int64_t b = 0; b < dim; b++) {
        double phase = 0;
        for (int m = 0; m < n; m++) {
            for (int l = m + 1; l < n; l++) {
                const int sm = ((b >> (n - 1 - m)) & 1) ? -1 : 1;
                const int sl = ((b >> (n - 1 - l)) & 1) ? -1 : 1;
                phase += v(m, l) / 2.0 * sm * sl;
            }
        }
        t(b, b) = std::exp(kI * phase);
    }
    return t;
}

inline CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int64_t i = 0; i < a.rows(); i++) {
        for (int64_t j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// |0><0| x I + |1><1| x u with the control as the last (least significant) qubit.
inline CMatrix controlled_last(const CMatrix &u) {
    const int64_t d = u.rows();
    CMatrix out = CMatrix::Zero(2 * d, 2 * d);
    for (int64_t a = 0; a < d; a++) {
        out(2 * a, 2 * a) = 1.0;
        for (int64_t b = 0; b < d; b++) {
            out(2 * a + 1, 2 * b + 1) = u(a, b);
        }
    }
    return out;
}

/// Dense exp(i t h) by Taylor series with scaling and squaring; independent of the library.
inline CMatrix expm_i(const CMatrix &h, double t) {
    CMatrix a = kI * t * h;
    int squarings = 0;
    double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    while (norm > 0.25) {
        a /= 2.0;
        norm /= 2.0;
        squarings++;
    }
    CMatrix sum = CMatrix::Identity(h.rows(), h.cols());
    CMatrix term = sum;
    for (int j = 1; j < 30; j++) {
        term = term * a / static_cast<double>(j);
        sum += term;
    }
    for (int s = 0; s < squarings; s++) {
        sum = sum * sum;
    }
    return sum;
}

}  // namespace qubus::testutil

#endif
