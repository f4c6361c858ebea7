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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qubus/bcs_model.h"
#include "qubus/executor.h"
#include "qubus/phase_estimation.h"
#include "qubus/qft.h"
#include "qubus/resources.h"
#include "qubus/sequence_json.h"
#include "qubus/trotter.h"
#include "qubus/uzz.h"

using namespace qubus;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitVerifyFail = 3;
constexpr int kExitUnresolved = 4;

nlohmann::json read_json(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return nlohmann::json::parse(in);
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot write " + path);
        }
        out << text;
    }
    std::filesystem::rename(tmp, target);
}

std::string dump(const nlohmann::json &j) {
    return j.dump(2) + "\n";
}

CMatrix uzz_target(const CouplingMatrix &v) {
    const int n = v.n();
    const int64_t dim = int64_t{1} << n;
    CMatrix t = CMatrix::Zero(dim, dim);
    for (int64_t b = 0; b < dim; b++) {
        double phase = 0;
        for (int m = 0; m < n; m++) {
            for (int l = m + 1; l < n; l++) {
                phase += v(m, l) / 2.0 * z_sign(b, m, n) * z_sign(b, l, n);
            }
        }
        t(b, b) = std::exp(kI * phase);
    }
    return t;
}

struct Options {
    std::string model;
    std::string sequence;
    std::string strategy = "carryover";
    std::optional<int> p;
    std::string target = "uzz";
    int k = 6;
    std::optional<double> tau;
    int order = 2;
    std::optional<int> substeps;
    int steps = 1;
    std::string ramp = "linear";
    std::optional<double> delta;
    int64_t shots = 0;
    uint64_t seed = 1;
    std::string format = "json";
    std::string out;
    double tol = 1e-9;
    std::string method = "both";
    std::optional<int> sector;
    std::string init = "exact";
    int adiabatic_steps = 100;
    double adiabatic_tau = 0.1;
    bool full_sim = false;
    int n_min = 2;
    int n_max = 12;
    double budget = 6e6;
    bool verify_counts = false;
    std::string spectrum_out;
};

PEAConfig pea_config(const Options &o) {
    PEAConfig cfg;
    cfg.k = o.k;
    cfg.tau = o.tau;
    cfg.trotter_order = o.order;
    cfg.trotter_substeps = o.substeps;
    cfg.shots = o.shots;
    cfg.seed = o.seed;
    cfg.full_simulation = o.full_sim;
    if (o.init == "adiabatic") {
        cfg.init = PeaInit::AdiabaticSequence;
        cfg.adiabatic = {o.adiabatic_steps, o.adiabatic_tau, parse_ramp(o.ramp)};
    } else if (o.init != "exact") {
        throw std::invalid_argument("init must be exact or adiabatic");
    }
    return cfg;
}

int cmd_compile(const Options &o) {
    GateSequence seq(1);
    if (o.target == "qft") {
        seq = build_qft(o.k);
    } else {
        const BCSModel m = BCSModel::from_json(read_json(o.model));
        const Strategy s = parse_strategy(o.strategy, o.p);
        if (o.target == "uzz") {
            seq = build_uzz(m.v, s);
        } else if (o.target == "trotter") {
            seq = build_trotter_step(m, o.tau.value_or(0.1), o.order, std::nullopt, s);
        } else if (o.target == "controlled-trotter") {
            seq = build_trotter_step(m, o.tau.value_or(0.1), o.order, m.n_modes);
        } else if (o.target == "adiabatic") {
            seq = build_adiabatic_init(m, o.steps, o.tau.value_or(0.1), parse_ramp(o.ramp), s);
        } else {
            throw std::invalid_argument("unknown target: " + o.target);
        }
    }
    write_output(o.out, dump(sequence_to_json(seq)));
    const OpCounts c = count_ops(seq);
    std::cerr << "compiled " << seq.strategy() << ": bus " << c.bus << ", local " << c.local << ", total " << c.total
              << "\n";
    return kExitOk;
}

int cmd_verify(const Options &o) {
    const GateSequence seq = sequence_from_json(read_json(o.sequence));
    CMatrix target;
    if (o.target == "identity") {
        target = CMatrix::Identity(int64_t{1} << seq.num_qubits(), int64_t{1} << seq.num_qubits());
    } else if (o.target == "qft") {
        const int k = seq.num_qubits();
        CMatrix f = dft_matrix(k, QftMode::Direction::Forward);
        CMatrix rev = CMatrix::Zero(f.rows(), f.cols());
        for (int64_t x = 0; x < f.rows(); x++) {
            rev(reverse_bits(x, k), x) = 1.0;
        }
        target = rev * f;
    } else {
        const BCSModel m = BCSModel::from_json(read_json(o.model));
        if (o.target == "uzz") {
            target = uzz_target(m.v);
        } else if (o.target == "trotter") {
            target = dense_trotter_step(m, o.tau.value_or(0.1), o.order);
        } else {
            throw std::invalid_argument("unknown target: " + o.target);
        }
    }
    if (target.rows() != (int64_t{1} << seq.num_qubits())) {
        throw std::invalid_argument("sequence width does not match the target");
    }
    double deviation = 0;
    bool ok = true;
    try {
        deviation = distance_up_to_global_phase(effective_unitary(seq), target);
        ok = deviation < o.tol;
    } catch (const EntangledBus &e) {
        std::cout << "FAIL bus left entangled: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    std::cout << (ok ? "PASS" : "FAIL") << " max deviation " << std::scientific << std::setprecision(3) << deviation
              << " tolerance " << o.tol << "\n";
    return ok ? kExitOk : kExitVerifyFail;
}

int cmd_gap(const Options &o) {
    const BCSModel m = BCSModel::from_json(read_json(o.model));
    if (o.method != "exact" && o.method != "pea" && o.method != "both") {
        throw std::invalid_argument("method must be exact, pea or both");
    }
    std::optional<int> sector = o.sector;
    if (!sector && m.r == 1.0) {
        sector = m.n_excitations;
    }
    nlohmann::json j = nlohmann::json::object();
    if (sector) {
        j["sector"] = *sector;
    }
    if (o.method != "pea") {
        const SpectrumResult s = exact_spectrum(m, sector);
        j["exact_gap"] = energy_gap(m, sector);
        if (!o.spectrum_out.empty()) {
            write_output(o.spectrum_out, spectrum_csv(s));
        }
    }
    int code = kExitOk;
    if (o.method != "exact") {
        const PEAResult r = run_pea(m, pea_config(o));
        nlohmann::json pea = {{"k", r.k}, {"tau", r.tau}, {"substeps", r.substeps}, {"resolution", r.resolution}};
        nlohmann::json peaks = nlohmann::json::array();
        for (const auto &pk : r.phases) {
            peaks.push_back({{"phase", pk.phase}, {"weight", pk.weight}});
        }
        pea["phases"] = peaks;
        if (r.gap) {
            pea["gap"] = *r.gap;
            pea["gap_uncertainty"] = r.resolution / r.tau;
        } else {
            pea["gap"] = nullptr;
            std::cerr << "unresolved: phase estimation found a single peak\n";
            code = kExitUnresolved;
        }
        j["pea"] = pea;
    }
    write_output(o.out, dump(j));
    return code;
}

int cmd_pea(const Options &o) {
    const BCSModel m = BCSModel::from_json(read_json(o.model));
    const PEAResult r = run_pea(m, pea_config(o));
    write_output(o.out, dump(pea_result_json(r)));
    return kExitOk;
}

int cmd_count(const Options &o) {
    const double delta = o.delta.value_or(2.0 * kPi / 1024.0);
    const int k = precision_bits(delta);
    ResourceReport report = comparison_table(o.n_min, o.n_max, k, delta);
    if (o.verify_counts) {
        VerifyOptions vo;
        vo.n_min = o.n_min;
        vo.n_max = std::min(o.n_max, 12);
        const ResourceReport audit = verify_counts(vo);
        report.rows.insert(report.rows.end(), audit.rows.begin(), audit.rows.end());
    }
    const int cross = crossover_n();
    const auto nn = max_n_for_budget(TotalCase::Limited, o.budget, delta);
    const auto general = max_n_for_budget(TotalCase::General, o.budget, delta);
    auto opt_str = [](std::optional<int> v) { return v ? std::to_string(*v) : std::string("none"); };
    if (o.format == "csv") {
        std::string text = report_csv(report);
        text += "crossover," + std::to_string(cross) + "\n";
        text += "maxN," + opt_str(nn) + "\n";
        text += "maxN_general," + opt_str(general) + "\n";
        if (o.verify_counts) {
            text += "mismatches," + std::to_string(report.mismatches()) + "\n";
        }
        write_output(o.out, text);
    } else if (o.format == "json") {
        nlohmann::json j = report_json(report);
        j["crossover"] = cross;
        j["maxN"] = nn ? nlohmann::json(*nn) : nlohmann::json(nullptr);
        j["maxN_general"] = general ? nlohmann::json(*general) : nlohmann::json(nullptr);
        j["budget"] = o.budget;
        j["delta"] = delta;
        write_output(o.out, dump(j));
    } else {
        throw std::invalid_argument("format must be json or csv");
    }
    return o.verify_counts && report.mismatches() > 0 ? kExitVerifyFail : kExitOk;
}

void add_model(CLI::App *c, Options &o, bool required = true) {
    auto *opt = c->add_option("--model", o.model, "Model JSON {N, n, eps, V, r}");
    if (required) {
        opt->required();
    }
}

void add_pea_flags(CLI::App *c, Options &o) {
    c->add_option("--k", o.k, "Ancilla qubits")->check(CLI::Range(1, 10));
    c->add_option("--tau", o.tau, "Base time interval (automatic when omitted)");
    c->add_option("--order", o.order, "Trotter order")->check(CLI::IsMember({1, 2}));
    c->add_option("--substeps", o.substeps, "Trotter steps per interval (automatic when omitted)");
    c->add_option("--shots", o.shots, "Sampled measurement shots");
    c->add_option("--seed", o.seed, "Sampling seed");
    c->add_option("--init", o.init, "exact or adiabatic");
    c->add_option("--adiabatic-steps", o.adiabatic_steps, "Ramp steps for adiabatic init");
    c->add_option("--adiabatic-tau", o.adiabatic_tau, "Ramp step length for adiabatic init");
    c->add_option("--ramp", o.ramp, "linear or cosine");
    c->add_flag("--full-sim", o.full_sim, "Simulate every instruction on the hybrid register");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qubus: gate compiler and simulator for qubit-bus architectures"};
    app.require_subcommand(1);
    Options o;

    auto *compile = app.add_subcommand("compile", "Compile a gate sequence to JSON");
    add_model(compile, o, false);
    compile->add_option("--strategy", o.strategy, "naive|stepwise|carryover|limited|fixed-range");
    compile->add_option("--p", o.p, "Coupling range for fixed-range");
    compile->add_option("--target", o.target, "uzz|trotter|controlled-trotter|adiabatic|qft");
    compile->add_option("--k", o.k, "QFT size");
    compile->add_option("--tau", o.tau, "Step length");
    compile->add_option("--order", o.order, "Trotter order")->check(CLI::IsMember({1, 2}));
    compile->add_option("--steps", o.steps, "Adiabatic steps");
    compile->add_option("--ramp", o.ramp, "linear or cosine");
    compile->add_option("--out", o.out, "Output file (stdout when omitted)");

    auto *verify = app.add_subcommand("verify", "Check a compiled sequence against its target unitary");
    verify->add_option("--sequence", o.sequence, "Sequence JSON")->required();
    add_model(verify, o, false);
    verify->add_option("--target", o.target, "uzz|trotter|qft|identity");
    verify->add_option("--tau", o.tau, "Step length for trotter targets");
    verify->add_option("--order", o.order, "Trotter order")->check(CLI::IsMember({1, 2}));
    verify->add_option("--tol", o.tol, "Tolerance on the largest entry deviation");

    auto *gap = app.add_subcommand("gap", "Exact and phase-estimated energy gap");
    add_model(gap, o);
    gap->add_option("--method", o.method, "exact|pea|both");
    gap->add_option("--sector", o.sector, "Excitation sector (defaults to the model's n when r = 1)");
    gap->add_option("--spectrum-out", o.spectrum_out, "Write the spectrum as CSV");
    gap->add_option("--out", o.out, "Output file");
    add_pea_flags(gap, o);

    auto *pea = app.add_subcommand("pea", "Run phase estimation and print the outcome distribution");
    add_model(pea, o);
    pea->add_option("--out", o.out, "Output file");
    add_pea_flags(pea, o);

    auto *count = app.add_subcommand("count", "Operation-count tables");
    count->add_option("--delta", o.delta, "Target precision (default 2 pi / 2^10)");
    count->add_option("--n-min", o.n_min, "Smallest N");
    count->add_option("--n-max", o.n_max, "Largest N");
    count->add_option("--budget", o.budget, "Operation budget for the largest-N rows");
    count->add_flag("--verify-counts", o.verify_counts, "Compare formulas against compiled sequences");
    count->add_option("--format", o.format, "csv or json");
    count->add_option("--out", o.out, "Output file");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*compile) {
            return cmd_compile(o);
        }
        if (*verify) {
            return cmd_verify(o);
        }
        if (*gap) {
            return cmd_gap(o);
        }
        if (*pea) {
            return cmd_pea(o);
        }
        return cmd_count(o);
    } catch (const InfeasibleStrategy &e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const UnresolvedPeaks &e) {
        std::cerr << "unresolved: " << e.what() << "\n";
        return kExitUnresolved;
    } catch (const VerificationFailure &e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitVerifyFail;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
