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

#ifndef MEANKING_PROTOCOL_H
#define MEANKING_PROTOCOL_H

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "meanking/complex_vec.h"
#include "meanking/mub.h"
#include "meanking/realization.h"
#include "meanking/reconstruction.h"

namespace meanking {

enum class KingKind {
    /// Collapse straight onto a block of a chosen parallel class.
    kAbstract,
    /// Measure the first factor of C^n (x) C^n in one basis of a MUB family.
    kMubFactor,
    /// Measure one of three qubits in the standard, Hadamard or y basis.
    kQubitLocal,
};

enum class QubitBasis { kStandard, kHadamard, kComplementary };

char to_char(QubitBasis basis);  // 's', 'h', 'u'
std::optional<QubitBasis> qubit_basis_from_char(char c);
std::string to_string(KingKind kind);
std::optional<KingKind> king_kind_from_string(const std::string &name);

/// One concrete measurement the King can choose.
struct KingModel {
    KingKind kind = KingKind::kAbstract;
    /// Parallel class (abstract) or basis index (mub-factor).
    std::size_t index = 0;
    /// 1..3, qubit 1 being the most significant amplitude bit (qubit-local).
    int qubit = 1;
    QubitBasis basis = QubitBasis::kStandard;

    static KingModel abstract_class(std::size_t class_index);
    static KingModel mub_factor(std::size_t basis_index);
    static KingModel qubit_local(int qubit, QubitBasis basis);

    std::string label() const;
    bool operator==(const KingModel &) const = default;
};

/// Everything one game needs: the realization the King's outcomes refer to,
/// Alice's basis, which kind of King plays, and the MUB family when the King
/// measures a tensor factor.
struct Scenario {
    std::string name;
    Realization realization;
    ReconstructionBasis basis;
    KingKind king = KingKind::kAbstract;
    std::optional<MubFamily> mubs;
    std::size_t preparation_class = 0;
};

inline constexpr std::size_t kNoBlock = std::numeric_limits<std::size_t>::max();

struct KingBranch {
    std::size_t outcome = 0;
    double probability = 0;
    /// kNoBlock and an empty post_state when probability <= kTolerance.
    std::size_t block = kNoBlock;
    ComplexVec post_state;
};

struct AliceBranch {
    std::size_t index = 0;
    double probability = 0;
};

/// Table 2 for the three-qubit realization: standard basis on qubit k gives
/// class k - 1, any Hadamard measurement class 3, y basis on qubit k class
/// 3 + k (0-based classes of hadamard_design(sylvester_hadamard(3))).
std::size_t qubit_local_class(int qubit, QubitBasis basis);

std::vector<KingModel> king_choices(const Scenario &scenario);

/// The parallel class the King announces after using `model`.
std::size_t revealed_class(const Scenario &scenario, const KingModel &model);

/// (1/sqrt|C|) sum_{B in C} |B>; throws IntegrityError unless it has unit norm.
ComplexVec prepare(const Realization &realization, std::size_t class_index);

/// Every outcome of the King's measurement with its Born probability.
/// Throws IntegrityError if the probabilities do not sum to one or a
/// collapsed state matches no block vector of the revealed class.
std::vector<KingBranch> king_branches(const Scenario &scenario, const ComplexVec &state, const KingModel &model);

/// Alice's outcomes with probability > kTolerance. Throws IntegrityError if
/// the full distribution does not sum to one within kTolerance.
std::vector<AliceBranch> alice_branches(const ComplexVec &state, const ReconstructionBasis &basis);

/// Point basis: the block of the revealed class containing the point.
/// Function basis: block f(a) - 1 of class a = revealed class.
std::size_t predict(const Scenario &scenario, std::size_t observed, std::size_t revealed);

/// Deterministic generator; the uniform variate uses the top 53 bits of a
/// mt19937_64 draw so results do not depend on the standard library.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {
    }
    double uniform();
    std::size_t below(std::size_t n);
    /// Index drawn proportionally to `weights` (need not be normalized).
    std::size_t pick(const std::vector<double> &weights);

   private:
    std::mt19937_64 engine_;
};

KingBranch king_measure(const Scenario &scenario, const ComplexVec &state, const KingModel &model, Rng &rng);
AliceBranch alice_measure(const ComplexVec &state, const ReconstructionBasis &basis, Rng &rng);

struct Transcript {
    std::uint64_t seed = 0;
    KingModel model;
    ComplexVec prepared;
    std::size_t king_class = 0;
    std::size_t king_outcome = 0;
    std::size_t king_block = 0;
    ComplexVec post_state;
    std::size_t alice_index = 0;
    std::size_t predicted_block = 0;
    bool success = false;
};

/// One game with a fixed King measurement. `forced_outcome` pins the King's
/// result; it must have nonzero probability (std::invalid_argument otherwise).
Transcript run_game(const Scenario &scenario, const KingModel &model, std::uint64_t seed,
                    std::optional<std::size_t> forced_outcome = std::nullopt);

/// One game where the King's measurement is also drawn from the seed.
Transcript run_random_game(const Scenario &scenario, std::uint64_t seed);

struct BranchFailure {
    KingModel model;
    std::size_t king_block = 0;
    std::size_t alice_index = 0;
    std::size_t predicted_block = 0;
    std::string reason;
};

struct ExhaustiveReport {
    std::size_t king_choices = 0;
    std::size_t king_branches = 0;
    /// (King branch, Alice outcome) leaves.
    std::size_t branches = 0;
    std::vector<BranchFailure> failures;
    double max_probability_sum_deviation = 0;
    /// Every (King block, Alice index) pair seen.
    std::set<std::pair<std::size_t, std::size_t>> reachable;

    bool passed() const {
        return failures.empty();
    }
};

/// Walks every King measurement, every King outcome and every Alice outcome
/// with probability > kTolerance and checks the prediction. With `parallel`
/// the King's choices are evaluated on separate threads; the report is
/// identical either way.
ExhaustiveReport verify_exhaustive(const Scenario &scenario, bool parallel = false);

/// Affine plane of order n with a MUB family; Alice measures the function
/// basis and the King measures a tensor factor.
Scenario function_scenario(std::uint32_t n);
/// Incidence realization of AG(2, n), point basis, abstract King.
Scenario affine_scenario(std::uint32_t n);
/// Incidence realization of the Sylvester design of order 2^k, abstract King.
Scenario hadamard_scenario(int k);
/// Three-qubit realization, point basis, qubit-local King.
Scenario hadamard8_scenario();
/// MUB realization of AG(2, n) with the point basis and a mub-factor King.
Scenario mub_point_scenario(std::uint32_t n);

/// Same scenario with a different King.
Scenario with_king(Scenario scenario, KingKind king);

}  // namespace meanking

#endif
