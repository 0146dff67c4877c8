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

#ifndef MEANKING_RECONSTRUCTION_H
#define MEANKING_RECONSTRUCTION_H

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "meanking/complex_vec.h"
#include "meanking/functions.h"
#include "meanking/mub.h"
#include "meanking/realization.h"

namespace meanking {

enum class BasisIndex { kPoint, kFunction };

/// Alice's measurement basis. Point-indexed bases label vector p by design
/// point p; function-indexed bases label vector i by functions[i].
struct ReconstructionBasis {
    std::size_t dimension = 0;
    BasisIndex index = BasisIndex::kPoint;
    std::vector<ComplexVec> vectors;
    std::vector<CollisionFunction> functions;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<std::size_t> parallel_class;
};

/// (1/sqrt(n)) sum_j e_j (x) e_j.
ComplexVec maximally_entangled_state(std::size_t n);

/// psi_f = -phi + (1/sqrt(n)) sum_a v_{a, f(a)} (x) conj(v_{a, f(a)}),
/// with f's values 1-based and the family's vectors 0-based.
ComplexVec psi_function_vector(const MubFamily &mubs, const CollisionFunction &f);

/// Throws std::invalid_argument if the family or function count do not fit
/// (n + 1 bases, n^2 functions on {0..n}) and VerificationError naming the
/// first pair whose collision set does not have exactly one element.
ReconstructionBasis psi_function_basis(const MubFamily &mubs, std::span<const CollisionFunction> functions);

struct InnerProductCheck {
    Complex computed;
    /// (|collision set| - 1) / n
    double predicted = 0;
    std::size_t collisions = 0;
    bool agrees = false;
};

/// Computes <psi_f|psi_g> numerically and compares it to (|Delta| - 1) / n.
/// Holds for every pair of functions, not only one-collision pairs.
InnerProductCheck inner_product_formula_check(const MubFamily &mubs, const CollisionFunction &f,
                                              const CollisionFunction &g);

struct PointBasisCoefficients {
    double alpha = 0;
    double beta = 0;
};

/// alpha = (r - 1) sqrt(k) / v, beta = 1 / sqrt(k).
PointBasisCoefficients point_basis_coefficients(const DesignParameters &params);

/// psi_p = -alpha sum_{B in C} |B> + beta sum_{B : p in B} |B>, for every
/// point p, without any orthonormality check.
std::vector<ComplexVec> psi_point_vectors(const Realization &realization, std::size_t class_index, double alpha,
                                          double beta);

/// Point-indexed basis for parallel class `class_index`. Throws
/// VerificationError if the design is not affine or the result is not
/// orthonormal within kTolerance.
ReconstructionBasis psi_point_basis(const Realization &realization, std::size_t class_index);

/// |<basis_i|B>| for every basis element i and block B.
struct SupportTable {
    std::vector<std::vector<double>> overlap;
    /// Nonzero overlaps must all equal this value: 1/sqrt(k) for point bases,
    /// 1/sqrt(n) for function bases.
    double expected_magnitude = 0;
    /// Largest | |<basis_i|B>| - expected | over supported pairs.
    double max_support_deviation = 0;
    /// Largest |<basis_i|B>| over unsupported pairs.
    double max_leak = 0;
};

/// Point basis: <psi_p|B> != 0 iff p in B. Function basis (realization from
/// mub_realization): <psi_f|l_{a,b}> != 0 iff f(a) = b + 1, where l_{a,b} is
/// block b of class a. Throws VerificationError on the first violation.
SupportTable extraction_support(const ReconstructionBasis &basis, const Realization &realization,
                                double tolerance = kTolerance);

}  // namespace meanking

#endif
