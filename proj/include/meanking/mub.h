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

#ifndef MEANKING_MUB_H
#define MEANKING_MUB_H

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "meanking/complex_vec.h"

namespace meanking {

/// q + 1 orthonormal bases of C^q; bases[a][b] is v_{a,b}.
struct MubFamily {
    std::size_t dimension = 0;
    std::vector<std::vector<ComplexVec>> bases;
};

/// Largest dimension mub_build accepts.
inline constexpr std::uint32_t kMaxMubDimension = 81;

/// q = 2: computational, sigma_x and sigma_y eigenbases ("+" vector first).
/// Odd prime power q: basis 0 is computational and basis a in 1..q has
///   v_{a,b}[x] = q^{-1/2} exp(2 pi i tr(alpha x^2 + beta x) / p)
/// with alpha = element(a mod q), beta = element(b), x running over the field
/// in index order.
/// Throws std::invalid_argument for anything else (even q > 2, non prime
/// powers, q > kMaxMubDimension).
MubFamily mub_build(std::uint32_t q);

struct MubReport {
    bool passed = false;
    /// max |<v_{a,b}|v_{a,b'}> - delta_{b,b'}|
    double max_orthonormality_deviation = 0;
    /// max | |<v_{a,b}|v_{a',b'}>|^2 - 1/q | over a != a'
    double max_unbiasedness_deviation = 0;
    /// Basis pair (a, a') holding the worst deviation (a == a' for an
    /// orthonormality failure).
    std::pair<std::size_t, std::size_t> worst_pair{0, 0};

    double max_deviation() const {
        return std::max(max_orthonormality_deviation, max_unbiasedness_deviation);
    }
};

MubReport verify_mub(const MubFamily &family, double tolerance = kTolerance);

/// (1/sqrt(q)) sum_b v_b (x) conj(v_b) for one orthonormal basis {v_b}.
ComplexVec entangled_state_from_basis(const std::vector<ComplexVec> &basis);

}  // namespace meanking

#endif
