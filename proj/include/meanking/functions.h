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

#ifndef MEANKING_FUNCTIONS_H
#define MEANKING_FUNCTIONS_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "meanking/designs.h"

namespace meanking {

/// Where a plane-derived function came from: the line at position `line`
/// (0-based) of parallel class `parallel_class` (1..n).
struct FunctionOrigin {
    std::size_t parallel_class = 0;
    std::size_t line = 0;

    bool operator==(const FunctionOrigin &) const = default;
};

/// A function {0, ..., n} -> {1, ..., n}, stored as its value table.
class CollisionFunction {
   public:
    /// Throws std::invalid_argument unless values has n + 1 >= 2 entries, all
    /// in 1..n.
    explicit CollisionFunction(std::vector<std::uint32_t> values, std::optional<FunctionOrigin> origin = {});

    /// n, the size of the codomain.
    std::size_t order() const {
        return values_.size() - 1;
    }
    std::uint32_t operator()(std::size_t input) const {
        return values_.at(input);
    }
    const std::vector<std::uint32_t> &values() const {
        return values_;
    }
    const std::optional<FunctionOrigin> &origin() const {
        return origin_;
    }

    bool operator==(const CollisionFunction &other) const {
        return values_ == other.values_;
    }

   private:
    std::vector<std::uint32_t> values_;
    std::optional<FunctionOrigin> origin_;
};

/// The n^2 functions f_{i,l} of an affine plane of order n:
/// f(0) = i and f(a) = y + 1 where l meets the vertical line x = a - 1 in
/// (a - 1, y). Ordered by (class, line).
///
/// Requires the point labelling of affine_plane(): class 0 of the resolution
/// must be the vertical lines {x n + y : y}, listed by x. Throws
/// VerificationError otherwise, or if the design is not an affine plane.
std::vector<CollisionFunction> functions_from_plane(const IncidenceDesign &plane, const Resolution &resolution);

/// {x : f(x) == g(x)}. Throws std::invalid_argument on domain mismatch.
std::vector<std::size_t> collision_set(const CollisionFunction &f, const CollisionFunction &g);

/// Every function {0..n} -> {1..n}, in lexicographic order of value tables.
std::vector<CollisionFunction> all_functions(std::size_t n);

}  // namespace meanking

#endif
