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

#ifndef MEANKING_REALIZATION_H
#define MEANKING_REALIZATION_H

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "meanking/complex_vec.h"
#include "meanking/designs.h"
#include "meanking/mub.h"

namespace meanking {

/// One unit vector |B> per block of a resolvable design, aligned with the
/// design's block order. A valid realization satisfies
///   <B|C> = delta_{B,C}   for parallel B, C
///   <B|C> = k / v         otherwise
/// as exact complex values (not only in modulus).
struct Realization {
    IncidenceDesign design;
    Resolution resolution;
    std::size_t dimension = 0;
    std::vector<ComplexVec> vectors;

    const ComplexVec &vector_of(std::size_t block) const {
        return vectors.at(block);
    }
};

struct RealizationReport {
    bool passed = false;
    double max_deviation = 0;
    /// Block pair with the largest deviation.
    std::pair<std::size_t, std::size_t> worst_pair{0, 0};
    double max_norm_deviation = 0;
};

/// |B> = k^{-1/2} times the incidence vector of B, in C^v.
/// Throws VerificationError if the design is not affine resolvable.
Realization incidence_realization(const IncidenceDesign &design, const Resolution &resolution);

/// |l_{a,b}> = v_{a,b} (x) conj(v_{a,b}) in C^{n^2}, where l_{a,b} is block b
/// of parallel class a. Throws std::invalid_argument when the family's
/// dimension or basis count does not match the plane.
Realization mub_realization(const IncidenceDesign &plane, const Resolution &resolution, const MubFamily &mubs);

/// The 14 three-qubit vectors realizing hadamard_design(sylvester_hadamard(3))
/// in C^8; amplitude index 4 q1 + 2 q2 + q3 for |q1 q2 q3>.
Realization hadamard8_realization();

RealizationReport verify_realization(const Realization &realization, double tolerance = kTolerance);

/// (1/sqrt|C|) sum_{B in C} |B>.
ComplexVec class_state(const Realization &realization, std::size_t class_index);

}  // namespace meanking

#endif
