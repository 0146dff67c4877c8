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

#include "meanking/protocol.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <stdexcept>

#include "meanking/designs.h"
#include "meanking/errors.h"
#include "meanking/functions.h"

namespace meanking {

namespace {

std::array<ComplexVec, 2> qubit_basis_vectors(QubitBasis basis) {
    const double h = 1.0 / std::sqrt(2.0);
    const Complex i{0, 1};
    switch (basis) {
        case QubitBasis::kStandard:
            return {ComplexVec{1.0, 0.0}, ComplexVec{0.0, 1.0}};
        case QubitBasis::kHadamard:
            return {ComplexVec{h, h}, ComplexVec{h, -h}};
        case QubitBasis::kComplementary:
            return {ComplexVec{h, h * i}, ComplexVec{h, -h * i}};
    }
    throw std::logic_error("unknown qubit basis");
}

// (|u><u| on one qubit) applied to a three-qubit state.
ComplexVec project_qubit(const ComplexVec &state, int qubit, const ComplexVec &u) {
    const std::size_t bit = std::size_t{1} << (3 - qubit);
    ComplexVec out(state.size());
    for (std::size_t x = 0; x < state.size(); ++x) {
        if (x & bit) {
            continue;
        }
        Complex c = std::conj(u[0]) * state[x] + std::conj(u[1]) * state[x | bit];
        out[x] = u[0] * c;
        out[x | bit] = u[1] * c;
    }
    return out;
}

// (|v><v| (x) I) on C^n (x) C^n.
ComplexVec project_first_factor(const ComplexVec &state, const ComplexVec &v) {
    const std::size_t n = v.size();
    ComplexVec out(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        Complex c = 0;
        for (std::size_t k = 0; k < n; ++k) {
            c += std::conj(v[k]) * state[k * n + j];
        }
        for (std::size_t i = 0; i < n; ++i) {
            out[i * n + j] = v[i] * c;
        }
    }
    return out;
}

void check_distribution(double total, const std::string &what) {
    if (std::abs(total - 1.0) > kTolerance) {
        throw IntegrityError(what + " probabilities sum to " + std::to_string(total));
    }
}

Transcript play(const Scenario &scenario, const KingModel &model, std::uint64_t seed, Rng &rng,
                std::optional<std::size_t> forced_outcome) {
    Transcript t;
    t.seed = seed;
    t.model = model;
    t.prepared = prepare(scenario.realization, scenario.preparation_class);
    t.king_class = revealed_class(scenario, model);

    KingBranch king;
    if (forced_outcome) {
        auto branches = king_branches(scenario, t.prepared, model);
        if (*forced_outcome >= branches.size() || branches[*forced_outcome].probability <= kTolerance) {
            throw std::invalid_argument("forced King outcome " + std::to_string(*forced_outcome) +
                                        " has zero probability");
        }
        king = branches[*forced_outcome];
    } else {
        king = king_measure(scenario, t.prepared, model, rng);
    }
    t.king_outcome = king.outcome;
    t.king_block = king.block;
    t.post_state = king.post_state;

    AliceBranch alice = alice_measure(t.post_state, scenario.basis, rng);
    t.alice_index = alice.index;
    t.predicted_block = predict(scenario, alice.index, t.king_class);
    t.success = t.predicted_block == t.king_block;
    return t;
}

ExhaustiveReport explore_choice(const Scenario &scenario, const ComplexVec &prepared, const KingModel &model) {
    ExhaustiveReport report;
    report.king_choices = 1;
    std::size_t revealed = revealed_class(scenario, model);
    auto branches = king_branches(scenario, prepared, model);
    double king_total = 0;
    for (const auto &king : branches) {
        king_total += king.probability;
        if (king.probability <= kTolerance) {
            continue;
        }
        ++report.king_branches;
        // Re-derive the full distribution so the sum check sees pruned mass too.
        double alice_total = 0;
        for (const auto &psi : scenario.basis.vectors) {
            alice_total += std::norm(inner_product(psi, king.post_state));
        }
        report.max_probability_sum_deviation =
            std::max(report.max_probability_sum_deviation, std::abs(alice_total - 1.0));
        for (const auto &alice : alice_branches(king.post_state, scenario.basis)) {
            ++report.branches;
            report.reachable.insert({king.block, alice.index});
            std::size_t predicted = predict(scenario, alice.index, revealed);
            std::string reason;
            if (predicted != king.block) {
                reason = "prediction differs from the King's block";
            } else if (scenario.basis.index == BasisIndex::kPoint &&
                       !scenario.realization.design.contains(king.block, alice.index)) {
                reason = "observed point is not on the King's block";
            }
            if (!reason.empty()) {
                report.failures.push_back({model, king.block, alice.index, predicted, reason});
            }
        }
    }
    report.max_probability_sum_deviation =
        std::max(report.max_probability_sum_deviation, std::abs(king_total - 1.0));
    return report;
}

void merge_into(ExhaustiveReport &total, ExhaustiveReport part) {
    total.king_choices += part.king_choices;
    total.king_branches += part.king_branches;
    total.branches += part.branches;
    total.max_probability_sum_deviation =
        std::max(total.max_probability_sum_deviation, part.max_probability_sum_deviation);
    total.reachable.insert(part.reachable.begin(), part.reachable.end());
    for (auto &f : part.failures) {
        total.failures.push_back(std::move(f));
    }
}

}  // namespace

char to_char(QubitBasis basis) {
    switch (basis) {
        case QubitBasis::kStandard:
            return 's';
        case QubitBasis::kHadamard:
            return 'h';
        case QubitBasis::kComplementary:
            return 'u';
    }
    return '?';
}

std::optional<QubitBasis> qubit_basis_from_char(char c) {
    switch (c) {
        case 's':
            return QubitBasis::kStandard;
        case 'h':
            return QubitBasis::kHadamard;
        case 'u':
            return QubitBasis::kComplementary;
        default:
            return std::nullopt;
    }
}

std::string to_string(KingKind kind) {
    switch (kind) {
        case KingKind::kAbstract:
            return "abstract";
        case KingKind::kMubFactor:
            return "mub-factor";
        case KingKind::kQubitLocal:
            return "qubit-local";
    }
    return "unknown";
}

std::optional<KingKind> king_kind_from_string(const std::string &name) {
    for (auto kind : {KingKind::kAbstract, KingKind::kMubFactor, KingKind::kQubitLocal}) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    return std::nullopt;
}

KingModel KingModel::abstract_class(std::size_t class_index) {
    return KingModel{KingKind::kAbstract, class_index, 1, QubitBasis::kStandard};
}

KingModel KingModel::mub_factor(std::size_t basis_index) {
    return KingModel{KingKind::kMubFactor, basis_index, 1, QubitBasis::kStandard};
}

KingModel KingModel::qubit_local(int qubit, QubitBasis basis) {
    if (qubit < 1 || qubit > 3) {
        throw std::invalid_argument("qubit index must be 1, 2 or 3");
    }
    return KingModel{KingKind::kQubitLocal, 0, qubit, basis};
}

std::string KingModel::label() const {
    switch (kind) {
        case KingKind::kAbstract:
            return "abstract(" + std::to_string(index) + ")";
        case KingKind::kMubFactor:
            return "mub-factor(" + std::to_string(index) + ")";
        case KingKind::kQubitLocal:
            return "qubit-local(" + std::to_string(qubit) + "," + std::string(1, to_char(basis)) + ")";
    }
    return "unknown";
}

std::size_t qubit_local_class(int qubit, QubitBasis basis) {
    if (qubit < 1 || qubit > 3) {
        throw std::invalid_argument("qubit index must be 1, 2 or 3");
    }
    switch (basis) {
        case QubitBasis::kStandard:
            return static_cast<std::size_t>(qubit - 1);
        case QubitBasis::kHadamard:
            return 3;
        case QubitBasis::kComplementary:
            return static_cast<std::size_t>(3 + qubit);
    }
    throw std::logic_error("unknown qubit basis");
}

std::vector<KingModel> king_choices(const Scenario &scenario) {
    std::vector<KingModel> out;
    switch (scenario.king) {
        case KingKind::kAbstract:
            for (std::size_t c = 0; c < scenario.realization.resolution.classes.size(); ++c) {
                out.push_back(KingModel::abstract_class(c));
            }
            break;
        case KingKind::kMubFactor:
            if (!scenario.mubs) {
                throw std::invalid_argument("mub-factor King needs a MUB family");
            }
            for (std::size_t a = 0; a < scenario.mubs->bases.size(); ++a) {
                out.push_back(KingModel::mub_factor(a));
            }
            break;
        case KingKind::kQubitLocal:
            for (int q = 1; q <= 3; ++q) {
                for (auto b : {QubitBasis::kStandard, QubitBasis::kHadamard, QubitBasis::kComplementary}) {
                    out.push_back(KingModel::qubit_local(q, b));
                }
            }
            break;
    }
    return out;
}

std::size_t revealed_class(const Scenario &scenario, const KingModel &model) {
    std::size_t classes = scenario.realization.resolution.classes.size();
    std::size_t c = model.kind == KingKind::kQubitLocal ? qubit_local_class(model.qubit, model.basis) : model.index;
    if (c >= classes) {
        throw std::invalid_argument("King measurement " + model.label() + " names class " + std::to_string(c) +
                                    " of " + std::to_string(classes));
    }
    return c;
}

ComplexVec prepare(const Realization &realization, std::size_t class_index) {
    ComplexVec phi = class_state(realization, class_index);
    if (std::abs(phi.norm() - 1.0) > kTolerance) {
        throw IntegrityError("prepared state has norm " + std::to_string(phi.norm()));
    }
    return phi;
}

std::vector<KingBranch> king_branches(const Scenario &scenario, const ComplexVec &state, const KingModel &model) {
    const Realization &real = scenario.realization;
    if (state.size() != real.dimension) {
        throw std::invalid_argument("state dimension does not match the realization");
    }
    const std::size_t revealed = revealed_class(scenario, model);
    const auto &cls = real.resolution.classes[revealed];
    std::vector<KingBranch> out;

    auto finish = [&](KingBranch &branch, const ComplexVec &unnormalized) {
        if (branch.probability <= kTolerance) {
            branch.block = kNoBlock;
            return;
        }
        branch.post_state = Complex(1.0 / std::sqrt(branch.probability)) * unnormalized;
        for (std::size_t b : cls) {
            if (std::abs(inner_product(real.vector_of(b), branch.post_state)) > 1.0 - kTolerance) {
                branch.block = b;
                return;
            }
        }
        throw IntegrityError(model.label() + " outcome " + std::to_string(branch.outcome) +
                             " collapsed to a state matching no block of class " + std::to_string(revealed));
    };

    switch (model.kind) {
        case KingKind::kAbstract: {
            std::vector<double> weights;
            double total = 0;
            for (std::size_t b : cls) {
                weights.push_back(std::norm(inner_product(real.vector_of(b), state)));
                total += weights.back();
            }
            if (total <= kTolerance) {
                throw IntegrityError("state is orthogonal to every block of class " + std::to_string(revealed));
            }
            for (std::size_t i = 0; i < cls.size(); ++i) {
                KingBranch branch{i, weights[i] / total, kNoBlock, {}};
                if (branch.probability > kTolerance) {
                    branch.block = cls[i];
                    branch.post_state = real.vector_of(cls[i]);
                }
                out.push_back(std::move(branch));
            }
            break;
        }
        case KingKind::kMubFactor: {
            if (!scenario.mubs || model.index >= scenario.mubs->bases.size()) {
                throw std::invalid_argument("mub-factor King needs basis " + std::to_string(model.index));
            }
            const auto &basis = scenario.mubs->bases[model.index];
            if (basis.empty() || basis.front().size() * basis.front().size() != state.size()) {
                throw std::invalid_argument("MUB family does not act on the state's first factor");
            }
            for (std::size_t b = 0; b < basis.size(); ++b) {
                ComplexVec projected = project_first_factor(state, basis[b]);
                KingBranch branch{b, projected.norm() * projected.norm(), kNoBlock, {}};
                finish(branch, projected);
                out.push_back(std::move(branch));
            }
            break;
        }
        case KingKind::kQubitLocal: {
            if (state.size() != 8) {
                throw std::invalid_argument("qubit-local King needs a three-qubit state");
            }
            auto vectors = qubit_basis_vectors(model.basis);
            for (std::size_t bit = 0; bit < 2; ++bit) {
                ComplexVec projected = project_qubit(state, model.qubit, vectors[bit]);
                KingBranch branch{bit, projected.norm() * projected.norm(), kNoBlock, {}};
                finish(branch, projected);
                out.push_back(std::move(branch));
            }
            break;
        }
    }
    double total = 0;
    for (const auto &b : out) {
        total += b.probability;
    }
    check_distribution(total, "King outcome");
    return out;
}

std::vector<AliceBranch> alice_branches(const ComplexVec &state, const ReconstructionBasis &basis) {
    if (state.size() != basis.dimension) {
        throw std::invalid_argument("state dimension does not match Alice's basis");
    }
    std::vector<AliceBranch> out;
    double total = 0;
    for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
        double p = std::norm(inner_product(basis.vectors[i], state));
        total += p;
        if (p > kTolerance) {
            out.push_back({i, p});
        }
    }
    check_distribution(total, "Alice outcome");
    return out;
}

std::size_t predict(const Scenario &scenario, std::size_t observed, std::size_t revealed) {
    const auto &res = scenario.realization.resolution;
    if (scenario.basis.index == BasisIndex::kPoint) {
        return res.block_containing(scenario.realization.design, revealed, observed);
    }
    const CollisionFunction &f = scenario.basis.functions.at(observed);
    return res.classes.at(revealed).at(f(revealed) - 1);
}

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t Rng::below(std::size_t n) {
    return std::min(n - 1, static_cast<std::size_t>(uniform() * static_cast<double>(n)));
}

std::size_t Rng::pick(const std::vector<double> &weights) {
    double total = 0;
    for (double w : weights) {
        total += w;
    }
    double target = uniform() * total;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0) {
            continue;
        }
        last_positive = i;
        if (target < weights[i]) {
            return i;
        }
        target -= weights[i];
    }
    return last_positive;
}

KingBranch king_measure(const Scenario &scenario, const ComplexVec &state, const KingModel &model, Rng &rng) {
    auto branches = king_branches(scenario, state, model);
    std::vector<double> weights;
    for (const auto &b : branches) {
        weights.push_back(b.probability > kTolerance ? b.probability : 0.0);
    }
    return branches[rng.pick(weights)];
}

AliceBranch alice_measure(const ComplexVec &state, const ReconstructionBasis &basis, Rng &rng) {
    auto branches = alice_branches(state, basis);
    std::vector<double> weights;
    for (const auto &b : branches) {
        weights.push_back(b.probability);
    }
    return branches[rng.pick(weights)];
}

Transcript run_game(const Scenario &scenario, const KingModel &model, std::uint64_t seed,
                    std::optional<std::size_t> forced_outcome) {
    Rng rng(seed);
    return play(scenario, model, seed, rng, forced_outcome);
}

Transcript run_random_game(const Scenario &scenario, std::uint64_t seed) {
    Rng rng(seed);
    auto choices = king_choices(scenario);
    KingModel model = choices[rng.below(choices.size())];
    return play(scenario, model, seed, rng, std::nullopt);
}

ExhaustiveReport verify_exhaustive(const Scenario &scenario, bool parallel) {
    const ComplexVec prepared = prepare(scenario.realization, scenario.preparation_class);
    auto choices = king_choices(scenario);
    ExhaustiveReport total;
    if (parallel) {
        std::vector<std::future<ExhaustiveReport>> parts;
        for (const auto &model : choices) {
            parts.push_back(std::async(std::launch::async, [&scenario, &prepared, model] {
                return explore_choice(scenario, prepared, model);
            }));
        }
        for (auto &part : parts) {
            merge_into(total, part.get());
        }
    } else {
        for (const auto &model : choices) {
            merge_into(total, explore_choice(scenario, prepared, model));
        }
    }
    return total;
}

Scenario function_scenario(std::uint32_t n) {
    auto plane = affine_plane(n);
    MubFamily mubs = mub_build(n);
    auto functions = functions_from_plane(plane.design, plane.resolution);
    ReconstructionBasis basis = psi_function_basis(mubs, functions);
    Realization real = mub_realization(plane.design, plane.resolution, mubs);
    return Scenario{"function", std::move(real), std::move(basis), KingKind::kMubFactor, std::move(mubs), 0};
}

Scenario affine_scenario(std::uint32_t n) {
    auto plane = affine_plane(n);
    Realization real = incidence_realization(plane.design, plane.resolution);
    ReconstructionBasis basis = psi_point_basis(real, 0);
    return Scenario{"affine", std::move(real), std::move(basis), KingKind::kAbstract, std::nullopt, 0};
}

Scenario hadamard_scenario(int k) {
    auto design = hadamard_design(sylvester_hadamard(k));
    Realization real = incidence_realization(design.design, design.resolution);
    ReconstructionBasis basis = psi_point_basis(real, 0);
    return Scenario{"hadamard", std::move(real), std::move(basis), KingKind::kAbstract, std::nullopt, 0};
}

Scenario hadamard8_scenario() {
    Realization real = hadamard8_realization();
    ReconstructionBasis basis = psi_point_basis(real, 0);
    return Scenario{"hadamard8", std::move(real), std::move(basis), KingKind::kQubitLocal, std::nullopt, 0};
}

Scenario mub_point_scenario(std::uint32_t n) {
    auto plane = affine_plane(n);
    MubFamily mubs = mub_build(n);
    Realization real = mub_realization(plane.design, plane.resolution, mubs);
    ReconstructionBasis basis = psi_point_basis(real, 0);
    return Scenario{"mub-point", std::move(real), std::move(basis), KingKind::kMubFactor, std::move(mubs), 0};
}

Scenario with_king(Scenario scenario, KingKind king) {
    scenario.king = king;
    return scenario;
}

}  // namespace meanking
