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

#ifndef QUBUS_GATE_SEQUENCE_H
#define QUBUS_GATE_SEQUENCE_H

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qubus/hybrid_state.h"
#include "qubus/linalg.h"

namespace qubus {

struct Displace {
    int qubit;
    Complex beta;
};

struct Local {
    int qubit;
    Mat2 u;
    std::string label;
};

/// Structural marker only; never executed or counted.
struct Barrier {
    std::string label;
};

using Instruction = std::variant<Displace, Local, Barrier>;

struct OpCounts {
    int64_t bus = 0;
    int64_t local = 0;
    int64_t total = 0;

    bool operator==(const OpCounts &) const = default;
};

/// Which phase-space axis of the bus a qubit is attached to.
enum class Quadrature { Position, Momentum };

inline Complex quadrature_beta(Quadrature q, double amplitude) {
    return q == Quadrature::Position ? Complex{amplitude, 0.0} : Complex{0.0, amplitude};
}
inline Quadrature other(Quadrature q) {
    return q == Quadrature::Position ? Quadrature::Momentum : Quadrature::Position;
}

/// Ordered list of bus displacements and local unitaries over a fixed register.
class GateSequence {
   public:
    explicit GateSequence(int num_qubits, std::string strategy = "");

    int num_qubits() const {
        return num_qubits_;
    }
    const std::vector<Instruction> &instructions() const {
        return instructions_;
    }
    const std::string &strategy() const {
        return strategy_;
    }
    void set_strategy(std::string s) {
        strategy_ = std::move(s);
    }
    /// Free-form integer annotations, e.g. the closed-form count the builder targeted.
    const std::map<std::string, int64_t> &metadata() const {
        return metadata_;
    }
    void set_metadata(const std::string &key, int64_t value) {
        metadata_[key] = value;
    }

    void displace(int qubit, Complex beta);
    void attach(int qubit, Quadrature q, double amplitude) {
        displace(qubit, quadrature_beta(q, amplitude));
    }
    void local(int qubit, const Mat2 &u, std::string label);
    void barrier(std::string label);
    void append(const GateSequence &other);

    /// Copy into a larger register, sending qubit i to mapping[i].
    GateSequence remapped(int num_qubits, const std::vector<int> &mapping) const;

    /// Exact inverse: reversed order, negated displacements, adjoint locals.
    GateSequence inverse() const;

   private:
    void check_qubit(int qubit) const;

    int num_qubits_;
    std::vector<Instruction> instructions_;
    std::string strategy_;
    std::map<std::string, int64_t> metadata_;
};

OpCounts count_ops(const GateSequence &seq);

/// Extracts the displacement list; throws if the sequence contains a local unitary.
std::vector<DisplacementOp> displacement_ops(const GateSequence &seq);

DiagonalEffect diagonal_fast_path(const GateSequence &seq);

/// Symmetric real coupling matrix with zero diagonal.
class CouplingMatrix {
   public:
    explicit CouplingMatrix(int n);
    explicit CouplingMatrix(const RMatrix &v, double tol = 1e-12);

    int n() const {
        return static_cast<int>(v_.rows());
    }
    double operator()(int m, int l) const {
        return v_(m, l);
    }
    void set(int m, int l, double value);
    const RMatrix &matrix() const {
        return v_;
    }
    CouplingMatrix scaled(double factor) const;
    bool is_zero(int m, int l) const;

   private:
    RMatrix v_;
};

/// Couplings below this magnitude are treated as absent by the schedulers.
inline constexpr double kCouplingZero = 1e-14;

}  // namespace qubus

#endif
