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

#include "qubus/executor.h"

#include <cmath>
#include <sstream>

namespace qubus {

HybridState execute(const GateSequence &seq, HybridState input, ExecutionReport *report) {
    if (seq.num_qubits() != input.num_qubits()) {
        throw std::invalid_argument("sequence and state have different qubit counts");
    }
    std::vector<Complex> attached(seq.num_qubits(), Complex{0.0, 0.0});
    const auto &ins = seq.instructions();
    for (size_t i = 0; i < ins.size(); i++) {
        if (const auto *d = std::get_if<Displace>(&ins[i])) {
            input.apply_displacement(d->qubit, d->beta);
            attached[d->qubit] += d->beta;
        } else if (const auto *l = std::get_if<Local>(&ins[i])) {
            if (report != nullptr && std::abs(attached[l->qubit]) > 1e-12) {
                std::ostringstream msg;
                msg << "instruction " << i << ": local '" << l->label << "' on qubit " << l->qubit
                    << " while it is coupled to the bus";
                report->diagnostics.push_back(msg.str());
            }
            input.apply_local(l->qubit, l->u);
        }
    }
    return input;
}

CMatrix effective_unitary(const GateSequence &seq, double tol) {
    const int n = seq.num_qubits();
    if (n > kMaxEffectiveUnitaryQubits) {
        throw std::invalid_argument("effective_unitary supports at most 10 qubits");
    }
    const int64_t dim = int64_t{1} << n;
    CMatrix u(dim, dim);
    Complex alpha0{0.0, 0.0};
    for (int64_t j = 0; j < dim; j++) {
        HybridState out = execute(seq, HybridState::basis_state(n, static_cast<uint64_t>(j)));
        Complex alpha = out.common_alpha(tol);
        if (j == 0) {
            alpha0 = alpha;
        } else if (std::abs(alpha - alpha0) > tol) {
            throw EntangledBus("bus amplitude depends on the register input");
        }
        u.col(j) = out.raw_qubit_vector(tol);
    }
    return u;
}

}  // namespace qubus
