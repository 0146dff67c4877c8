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

#ifndef MEANKING_DESIGNS_H
#define MEANKING_DESIGNS_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace meanking {

/// Sorted, duplicate-free point indices in 0..v-1.
using Block = std::vector<std::size_t>;

struct DesignParameters {
    std::size_t v = 0;
    std::size_t b = 0;
    std::size_t r = 0;
    std::size_t k = 0;
    std::size_t lambda = 0;

    bool operator==(const DesignParameters &) const = default;
};

std::string to_string(const DesignParameters &params);

/// A (v, b, r, k, lambda) design. Instances only exist after verification,
/// so the parameters are always consistent with the blocks.
class IncidenceDesign {
   public:
    std::size_t point_count() const {
        return params_.v;
    }
    const std::vector<Block> &blocks() const {
        return blocks_;
    }
    const Block &block(std::size_t index) const {
        return blocks_.at(index);
    }
    const DesignParameters &parameters() const {
        return params_;
    }
    bool contains(std::size_t block_index, std::size_t point) const;

   private:
    friend IncidenceDesign verify_design(std::size_t v, std::vector<Block> blocks);
    IncidenceDesign(std::vector<Block> blocks, DesignParameters params)
        : blocks_(std::move(blocks)), params_(params) {
    }
    std::vector<Block> blocks_;
    DesignParameters params_;
};

/// Partition of block indices into parallel classes.
struct Resolution {
    std::vector<std::vector<std::size_t>> classes;

    /// Class holding `block_index`; throws std::out_of_range if absent.
    std::size_t class_of(std::size_t block_index) const;
    /// The block of `class_index` containing `point`.
    std::size_t block_containing(const IncidenceDesign &design, std::size_t class_index, std::size_t point) const;
    bool parallel(std::size_t block_a, std::size_t block_b) const {
        return class_of(block_a) == class_of(block_b);
    }
};

struct ResolvableDesign {
    IncidenceDesign design;
    Resolution resolution;
};

struct AffineResolvableReport {
    /// Common size of the intersection of two nonparallel blocks.
    std::size_t intersection = 0;
    bool intersection_relation = false;  // m * v == k^2
    bool lambda_relation = false;        // lambda (v - k) == k (k - 1)
    bool replication_relation = false;   // r == k + lambda
    bool block_count_relation = false;   // b == v + r - 1

    bool all_relations_hold() const {
        return intersection_relation && lambda_relation && replication_relation && block_count_relation;
    }
};

using SignMatrix = std::vector<std::vector<int>>;

/// Checks uniform block size, replication and pair coverage, and the
/// identities r (k - 1) = (v - 1) lambda and b k = v r.
/// Throws std::invalid_argument for malformed input (empty, out-of-range or
/// repeated points, blocks of size < 2) and VerificationError naming the
/// offending block, point or pair otherwise.
IncidenceDesign verify_design(std::size_t v, std::vector<Block> blocks);

/// Validates a caller-supplied partition into parallel classes.
/// Throws VerificationError if it is not a resolution of `design`.
Resolution check_resolution(const IncidenceDesign &design, std::vector<std::vector<std::size_t>> classes);

/// Deterministic backtracking search (lowest block index first).
/// Throws VerificationError if the design has no resolution.
Resolution find_resolution(const IncidenceDesign &design);

/// AG(2, q). Point (x, y) is index x * q + y where x, y are field element
/// indices. Class 0 holds the vertical lines x = c; class i >= 1 holds the
/// lines y = s x + t with slope s = element(i - 1), ordered by t.
ResolvableDesign affine_plane(std::uint32_t q);

/// H_2^{(x) k}, entry (i, j) = (-1)^{popcount(i & j)}. Requires 1 <= k <= 6.
SignMatrix sylvester_hadamard(int k);

bool is_hadamard(const SignMatrix &h);

/// Design read off the sign patterns of the non-constant rows of a Hadamard
/// matrix of order n >= 4 (columns are first normalized so row 0 is all +1).
/// Blocks are ordered row by row, plus-block before minus-block, and each
/// row's pair forms one parallel class.
ResolvableDesign hadamard_design(const SignMatrix &h);

/// Throws VerificationError if two nonparallel blocks meet in a number of
/// points different from the first nonparallel pair.
AffineResolvableReport affine_resolvable_check(const IncidenceDesign &design, const Resolution &resolution);

/// The unique block disjoint from `block_index` that contains `point`.
/// Throws std::invalid_argument if the point lies on the block.
std::size_t parallel_block_through(const IncidenceDesign &design, const Resolution &resolution,
                                   std::size_t block_index, std::size_t point);

/// Parameters of the design of d-flats in AG(m, q).
DesignParameters affine_space_parameters(int m, int d, std::uint32_t q);

}  // namespace meanking

#endif
