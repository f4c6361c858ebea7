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

#include "qubus/sequence_json.h"

namespace qubus {

namespace {

nlohmann::json complex_json(Complex c) {
    return nlohmann::json::array({c.real(), c.imag()});
}

Complex parse_complex(const nlohmann::json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw SequenceFormatError("complex numbers are [re, im] pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

int parse_qubit(const nlohmann::json &ins, int n) {
    int q = ins.at("q").get<int>();
    if (q < 0 || q >= n) {
        throw SequenceFormatError("qubit index out of range: " + std::to_string(q));
    }
    return q;
}

}  // namespace

nlohmann::json sequence_to_json(const GateSequence &seq) {
    nlohmann::json ins = nlohmann::json::array();
    for (const auto &i : seq.instructions()) {
        if (const auto *d = std::get_if<Displace>(&i)) {
            ins.push_back({{"op", "disp"}, {"q", d->qubit}, {"beta", complex_json(d->beta)}});
        } else if (const auto *l = std::get_if<Local>(&i)) {
            nlohmann::json u = nlohmann::json::array();
            for (int r = 0; r < 2; r++) {
                u.push_back({complex_json(l->u(r, 0)), complex_json(l->u(r, 1))});
            }
            ins.push_back({{"op", "local"}, {"q", l->qubit}, {"u", u}, {"label", l->label}});
        } else {
            ins.push_back({{"op", "barrier"}, {"label", std::get<Barrier>(i).label}});
        }
    }
    OpCounts c = count_ops(seq);
    return {
        {"version", 1},
        {"num_qubits", seq.num_qubits()},
        {"strategy", seq.strategy()},
        {"instructions", ins},
        {"counts", {{"bus", c.bus}, {"local", c.local}}},
    };
}

GateSequence sequence_from_json(const nlohmann::json &j) {
    try {
        if (j.at("version").get<int>() != 1) {
            throw SequenceFormatError("unsupported sequence version");
        }
        const int n = j.at("num_qubits").get<int>();
        if (n < 1) {
            throw SequenceFormatError("num_qubits must be positive");
        }
        GateSequence seq(n, j.value("strategy", std::string{}));
        for (const auto &ins : j.at("instructions")) {
            const auto op = ins.at("op").get<std::string>();
            if (op == "disp") {
                seq.displace(parse_qubit(ins, n), parse_complex(ins.at("beta")));
            } else if (op == "local") {
                const auto &u = ins.at("u");
                if (!u.is_array() || u.size() != 2 || u[0].size() != 2 || u[1].size() != 2) {
                    throw SequenceFormatError("local unitaries are 2x2");
                }
                Mat2 m;
                for (int r = 0; r < 2; r++) {
                    for (int c = 0; c < 2; c++) {
                        m(r, c) = parse_complex(u[r][c]);
                    }
                }
                seq.local(parse_qubit(ins, n), m, ins.value("label", std::string{}));
            } else if (op == "barrier") {
                seq.barrier(ins.value("label", std::string{}));
            } else {
                throw SequenceFormatError("unknown op: " + op);
            }
        }
        OpCounts c = count_ops(seq);
        const auto &declared = j.at("counts");
        if (declared.at("bus").get<int64_t>() != c.bus || declared.at("local").get<int64_t>() != c.local) {
            throw SequenceFormatError("declared counts do not match the instruction list");
        }
        return seq;
    } catch (const nlohmann::json::exception &e) {
        throw SequenceFormatError(std::string("malformed sequence JSON: ") + e.what());
    }
}

}  // namespace qubus
