// Copyright 2026 The meanking Authors
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
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "meanking/designs.h"
#include "meanking/errors.h"
#include "meanking/json_io.h"
#include "meanking/mub.h"
#include "meanking/protocol.h"
#include "meanking/realization.h"
#include "meanking/reconstruction.h"

using namespace meanking;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CliConfig {
    std::string kind;
    std::string scenario = "affine";
    std::string king;
    std::uint32_t order = 2;
    int k = 3;
    std::uint32_t q = 2;
    std::size_t parallel_class = 0;
    std::uint64_t seed = 0;
    std::size_t trials = 1;
    std::string in;
    std::string out;
    std::string format = "json";
    bool check = false;
    bool parallel = false;
};

void add_shared(CLI::App *cmd, CliConfig &cfg) {
    cmd->add_option("--out", cfg.out, "Write output to PATH instead of stdout");
    cmd->add_option("--seed", cfg.seed, "Seed for all randomness (default 0)");
    cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json"}));
}

void add_scenario(CLI::App *cmd, CliConfig &cfg) {
    cmd->add_option("--scenario", cfg.scenario, "affine | hadamard | hadamard8 | function | mub-point")
        ->check(CLI::IsMember({"affine", "hadamard", "hadamard8", "function", "mub-point"}));
    cmd->add_option("--order", cfg.order, "Order n of the affine plane")->check(CLI::PositiveNumber);
    cmd->add_option("--k", cfg.k, "Sylvester exponent: Hadamard order 2^k")->check(CLI::Range(2, 6));
}

void emit(const CliConfig &cfg, const std::string &text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) {
        throw UsageError("cannot write " + cfg.out);
    }
    f << text;
}

Json read_json(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw UsageError("cannot read " + path);
    }
    try {
        return Json::parse(f);
    } catch (const nlohmann::json::parse_error &e) {
        throw UsageError(path + ": " + e.what());
    }
}

Scenario build_scenario(const CliConfig &cfg) {
    Scenario s = [&] {
        if (cfg.scenario == "affine") {
            return affine_scenario(cfg.order);
        }
        if (cfg.scenario == "hadamard") {
            return hadamard_scenario(cfg.k);
        }
        if (cfg.scenario == "hadamard8") {
            return hadamard8_scenario();
        }
        if (cfg.scenario == "function") {
            return function_scenario(cfg.order);
        }
        return mub_point_scenario(cfg.order);
    }();
    if (!cfg.king.empty()) {
        auto kind = king_kind_from_string(cfg.king);
        if (!kind) {
            throw UsageError("unknown King model " + cfg.king);
        }
        s = with_king(std::move(s), *kind);
    }
    return s;
}

std::optional<std::uint32_t> plane_order_of(const CliConfig &cfg) {
    if (cfg.scenario == "affine" || cfg.scenario == "function" || cfg.scenario == "mub-point") {
        return cfg.order;
    }
    return std::nullopt;
}

int cmd_design(const CliConfig &cfg) {
    if (cfg.kind == "affine-plane") {
        auto plane = affine_plane(cfg.order);
        emit(cfg, design_to_json(plane.design, plane.resolution, cfg.order).dump(2) + "\n");
        return kExitOk;
    }
    if (cfg.kind == "hadamard") {
        auto d = hadamard_design(sylvester_hadamard(cfg.k));
        emit(cfg, design_to_json(d.design, d.resolution).dump(2) + "\n");
        return kExitOk;
    }
    DesignDocument doc = design_from_json(read_json(cfg.in));
    Resolution res = doc.resolution ? *doc.resolution : find_resolution(doc.design);
    AffineResolvableReport report = affine_resolvable_check(doc.design, res);
    std::ostringstream out;
    out << "parameters " << to_string(doc.design.parameters()) << "\n";
    out << "resolvable: " << res.classes.size() << " parallel classes\n";
    out << "affine: nonparallel blocks meet in " << report.intersection << " points\n";
    out << "m = k^2/v: " << (report.intersection_relation ? "holds" : "fails") << "\n";
    out << "lambda(v-k) = k(k-1): " << (report.lambda_relation ? "holds" : "fails") << "\n";
    out << "r = k + lambda: " << (report.replication_relation ? "holds" : "fails") << "\n";
    out << "b = v + r - 1: " << (report.block_count_relation ? "holds" : "fails") << "\n";
    emit(cfg, out.str());
    return report.all_relations_hold() ? kExitOk : kExitFailed;
}

int cmd_mub(const CliConfig &cfg) {
    MubFamily family = mub_build(cfg.q);
    if (!cfg.check) {
        emit(cfg, mub_to_json(family).dump(2) + "\n");
        return kExitOk;
    }
    MubReport report = verify_mub(family);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", report.max_deviation());
    std::ostringstream out;
    out << "q = " << family.dimension << ", " << family.bases.size() << " bases\n";
    out << "max orthonormality deviation " << report.max_orthonormality_deviation << "\n";
    out << "max unbiasedness deviation " << report.max_unbiasedness_deviation << "\n";
    out << "worst bases " << report.worst_pair.first << ", " << report.worst_pair.second << "\n";
    if (report.max_deviation() < 1e-12) {
        out << "max deviation < 1e-12 (" << buf << ")\n";
    } else {
        out << "max deviation " << buf << "\n";
    }
    emit(cfg, out.str());
    return report.passed ? kExitOk : kExitFailed;
}

int cmd_realize(const CliConfig &cfg) {
    if (!cfg.in.empty()) {
        Realization real = realization_from_json(read_json(cfg.in));
        RealizationReport report = verify_realization(real);
        std::ostringstream out;
        out << "realization of " << to_string(real.design.parameters()) << " in dimension " << real.dimension << "\n";
        out << "max Gram deviation " << report.max_deviation << ", max norm deviation " << report.max_norm_deviation
            << "\n";
        out << (report.passed ? "valid" : "invalid") << "\n";
        emit(cfg, out.str());
        return report.passed ? kExitOk : kExitFailed;
    }
    Scenario s = build_scenario(cfg);
    emit(cfg, realization_to_json(s.realization, plane_order_of(cfg)).dump(2) + "\n");
    return kExitOk;
}

int cmd_basis(const CliConfig &cfg) {
    if (!cfg.in.empty()) {
        ReconstructionBasis basis = basis_from_json(read_json(cfg.in));
        double dev = max_gram_deviation(basis.vectors);
        bool ok = dev < kTolerance && basis.vectors.size() == basis.dimension;
        std::ostringstream out;
        out << basis.vectors.size() << " vectors in dimension " << basis.dimension << "\n";
        out << "max Gram deviation " << dev << "\n" << (ok ? "orthonormal basis" : "not an orthonormal basis") << "\n";
        emit(cfg, out.str());
        return ok ? kExitOk : kExitFailed;
    }
    Scenario s = build_scenario(cfg);
    if (cfg.scenario != "function") {
        if (cfg.parallel_class >= s.realization.resolution.classes.size()) {
            throw UsageError("--class out of range");
        }
        s.basis = psi_point_basis(s.realization, cfg.parallel_class);
    }
    emit(cfg, basis_to_json(s.basis).dump(2) + "\n");
    return kExitOk;
}

int cmd_verify(const CliConfig &cfg) {
    Scenario s = build_scenario(cfg);
    ExhaustiveReport report = verify_exhaustive(s, cfg.parallel);
    std::ostringstream out;
    out << "scenario " << s.name << " (" << to_string(s.king) << " King, "
        << to_string(s.realization.design.parameters()) << ")\n";
    out << report.king_choices << " measurements, " << report.king_branches << " King outcomes, " << report.branches
        << " branches\n";
    out << "max probability sum deviation " << report.max_probability_sum_deviation << "\n";
    out << report.failures.size() << " failures\n";
    for (const auto &f : report.failures) {
        out << "FAIL " << f.model.label() << " block " << f.king_block << " alice " << f.alice_index << " predicted "
            << f.predicted_block << ": " << f.reason << "\n";
    }
    if (report.passed()) {
        out << "success probability = 1\n";
    }
    emit(cfg, out.str());
    return report.passed() ? kExitOk : kExitFailed;
}

int cmd_simulate(const CliConfig &cfg) {
    Scenario s = build_scenario(cfg);
    std::ostringstream out;
    bool all = true;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        Transcript tr = run_random_game(s, cfg.seed + t);
        all = all && tr.success;
        out << transcript_to_json(tr).dump() << "\n";
    }
    emit(cfg, out.str());
    return all ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Mean King retrodiction: designs, MUBs, realizations and protocol checks"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto *design = app.add_subcommand("design", "Construct or verify a resolvable design");
    design->require_subcommand(1);
    auto *plane = design->add_subcommand("affine-plane", "AG(2, n)");
    plane->add_option("--order", cfg.order, "Prime power n")->required();
    add_shared(plane, cfg);
    auto *had = design->add_subcommand("hadamard", "Sylvester Hadamard design of order 2^k");
    had->add_option("--k", cfg.k, "Exponent")->required()->check(CLI::Range(2, 6));
    add_shared(had, cfg);
    auto *dverify = design->add_subcommand("verify", "Check a design JSON file");
    dverify->add_option("--in", cfg.in, "Design JSON")->required();
    add_shared(dverify, cfg);

    auto *mub = app.add_subcommand("mub", "Complete MUB family in dimension q");
    mub->add_option("--q", cfg.q, "Dimension")->required();
    mub->add_flag("--check", cfg.check, "Print the worst deviation instead of the vectors");
    add_shared(mub, cfg);

    auto *realize = app.add_subcommand("realize", "Emit or check a design realization");
    add_scenario(realize, cfg);
    realize->add_option("--in", cfg.in, "Realization JSON to check");
    add_shared(realize, cfg);

    auto *basis = app.add_subcommand("basis", "Emit or check Alice's reconstruction basis");
    add_scenario(basis, cfg);
    basis->add_option("--class", cfg.parallel_class, "Parallel class C of the point basis");
    basis->add_option("--in", cfg.in, "Basis JSON to check");
    add_shared(basis, cfg);

    auto *verify = app.add_subcommand("verify", "Exhaustive protocol verification");
    add_scenario(verify, cfg);
    verify->add_option("--king", cfg.king, "abstract | mub-factor | qubit-local");
    verify->add_flag("--parallel", cfg.parallel, "One thread per King measurement");
    add_shared(verify, cfg);

    auto *simulate = app.add_subcommand("simulate", "Seeded games as JSON lines");
    add_scenario(simulate, cfg);
    simulate->add_option("--king", cfg.king, "abstract | mub-factor | qubit-local");
    simulate->add_option("--trials", cfg.trials, "Number of games")->check(CLI::PositiveNumber);
    add_shared(simulate, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (design->parsed()) {
            cfg.kind = plane->parsed() ? "affine-plane" : had->parsed() ? "hadamard" : "verify";
            return cmd_design(cfg);
        }
        if (mub->parsed()) {
            return cmd_mub(cfg);
        }
        if (realize->parsed()) {
            return cmd_realize(cfg);
        }
        if (basis->parsed()) {
            return cmd_basis(cfg);
        }
        if (verify->parsed()) {
            return cmd_verify(cfg);
        }
        return cmd_simulate(cfg);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const VerificationError &e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitFailed;
    } catch (const IntegrityError &e) {
        std::cerr << "integrity failure: " << e.what() << "\n";
        return kExitFailed;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailed;
    }
}
