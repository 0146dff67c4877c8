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

#include "meanking/reconstruction.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "meanking/errors.h"

namespace meanking {

namespace {

std::string values_str(const CollisionFunction &f) {
    std::string out;
    for (auto x : f.values()) {
        out += std::to_string(x);
    }
    return out;
}

void require_fits(const MubFamily &mubs, const CollisionFunction &f) {
    if (f.order() != mubs.dimension || mubs.bases.size() != mubs.dimension + 1) {
        throw std::invalid_argument("function on {0.." + std::to_string(f.order()) + "} does not fit a family of " +
                                    std::to_string(mubs.bases.size()) + " bases in dimension " +
                                    std::to_string(mubs.dimension));
    }
}

}  // namespace

ComplexVec maximally_entangled_state(std::size_t n) {
    ComplexVec out(n * n);
    const double amplitude = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        out[j * n + j] = amplitude;
    }
    return out;
}

ComplexVec psi_function_vector(const MubFamily &mubs, const CollisionFunction &f) {
    require_fits(mubs, f);
    const std::size_t n = mubs.dimension;
    ComplexVec gamma(n * n);
    for (std::size_t a = 0; a <= n; ++a) {
        const ComplexVec &v = mubs.bases[a][f(a) - 1];
        gamma += tensor(v, conjugate(v));
    }
    return Complex(1.0 / std::sqrt(static_cast<double>(n))) * gamma - maximally_entangled_state(n);
}

ReconstructionBasis psi_function_basis(const MubFamily &mubs, std::span<const CollisionFunction> functions) {
    const std::size_t n = mubs.dimension;
    if (functions.size() != n * n) {
        throw std::invalid_argument("need " + std::to_string(n * n) + " functions, got " +
                                    std::to_string(functions.size()));
    }
    for (const auto &f : functions) {
        require_fits(mubs, f);
    }
    for (std::size_t i = 0; i < functions.size(); ++i) {
        for (std::size_t j = i + 1; j < functions.size(); ++j) {
            std::size_t c = collision_set(functions[i], functions[j]).size();
            if (c != 1) {
                throw VerificationError("functions " + std::to_string(i) + " (" + values_str(functions[i]) + ") and " +
                                        std::to_string(j) + " (" + values_str(functions[j]) + ") collide in " +
                                        std::to_string(c) + " inputs, expected exactly 1");
            }
        }
    }
    ReconstructionBasis basis;
    basis.dimension = n * n;
    basis.index = BasisIndex::kFunction;
    basis.functions.assign(functions.begin(), functions.end());
    for (const auto &f : functions) {
        basis.vectors.push_back(psi_function_vector(mubs, f));
    }
    double deviation = max_gram_deviation(basis.vectors);
    if (deviation >= kTolerance) {
        throw VerificationError("function basis is not orthonormal (Gram deviation " + std::to_string(deviation) +
                                ")");
    }
    return basis;
}

InnerProductCheck inner_product_formula_check(const MubFamily &mubs, const CollisionFunction &f,
                                              const CollisionFunction &g) {
    InnerProductCheck out;
    out.collisions = collision_set(f, g).size();
    out.predicted = (static_cast<double>(out.collisions) - 1.0) / static_cast<double>(mubs.dimension);
    out.computed = inner_product(psi_function_vector(mubs, f), psi_function_vector(mubs, g));
    out.agrees = std::abs(out.computed - Complex(out.predicted)) < kTolerance;
    return out;
}

PointBasisCoefficients point_basis_coefficients(const DesignParameters &params) {
    const double k = static_cast<double>(params.k);
    const double v = static_cast<double>(params.v);
    return {static_cast<double>(params.r - 1) * std::sqrt(k) / v, 1.0 / std::sqrt(k)};
}

std::vector<ComplexVec> psi_point_vectors(const Realization &realization, std::size_t class_index, double alpha,
                                          double beta) {
    const auto &design = realization.design;
    ComplexVec class_sum(realization.dimension);
    for (std::size_t b : realization.resolution.classes.at(class_index)) {
        class_sum += realization.vector_of(b);
    }
    std::vector<ComplexVec> out;
    for (std::size_t p = 0; p < design.point_count(); ++p) {
        ComplexVec through(realization.dimension);
        for (std::size_t b = 0; b < design.blocks().size(); ++b) {
            if (design.contains(b, p)) {
                through += realization.vector_of(b);
            }
        }
        out.push_back(Complex(-alpha) * class_sum + Complex(beta) * through);
    }
    return out;
}

ReconstructionBasis psi_point_basis(const Realization &realization, std::size_t class_index) {
    affine_resolvable_check(realization.design, realization.resolution);
    if (class_index >= realization.resolution.classes.size()) {
        throw std::invalid_argument("parallel class " + std::to_string(class_index) + " out of range");
    }
    auto coefficients = point_basis_coefficients(realization.design.parameters());
    ReconstructionBasis basis;
    basis.dimension = realization.dimension;
    basis.index = BasisIndex::kPoint;
    basis.vectors = psi_point_vectors(realization, class_index, coefficients.alpha, coefficients.beta);
    basis.alpha = coefficients.alpha;
    basis.beta = coefficients.beta;
    basis.parallel_class = class_index;
    if (basis.vectors.size() != basis.dimension) {
        throw VerificationError("realization dimension " + std::to_string(basis.dimension) + " differs from v = " +
                                std::to_string(basis.vectors.size()));
    }
    double deviation = max_gram_deviation(basis.vectors);
    if (deviation >= kTolerance) {
        throw VerificationError("point basis is not orthonormal (Gram deviation " + std::to_string(deviation) + ")");
    }
    return basis;
}

SupportTable extraction_support(const ReconstructionBasis &basis, const Realization &realization, double tolerance) {
    if (basis.dimension != realization.dimension) {
        throw std::invalid_argument("basis and realization live in different dimensions");
    }
    const auto &design = realization.design;
    const std::size_t blocks = design.blocks().size();

    // supported(i, b): whether basis element i may see block b.
    std::vector<std::vector<bool>> supported(basis.vectors.size(), std::vector<bool>(blocks, false));
    SupportTable table;
    if (basis.index == BasisIndex::kPoint) {
        table.expected_magnitude = 1.0 / std::sqrt(static_cast<double>(design.parameters().k));
        for (std::size_t p = 0; p < basis.vectors.size(); ++p) {
            for (std::size_t b = 0; b < blocks; ++b) {
                supported[p][b] = design.contains(b, p);
            }
        }
    } else {
        const std::size_t n = basis.functions.empty() ? 0 : basis.functions.front().order();
        table.expected_magnitude = 1.0 / std::sqrt(static_cast<double>(n));
        const auto &classes = realization.resolution.classes;
        if (classes.size() != n + 1) {
            throw std::invalid_argument("function basis needs a realization with n + 1 parallel classes");
        }
        for (std::size_t i = 0; i < basis.functions.size(); ++i) {
            for (std::size_t a = 0; a <= n; ++a) {
                for (std::size_t b = 0; b < classes[a].size(); ++b) {
                    supported[i][classes[a][b]] = basis.functions[i](a) == b + 1;
                }
            }
        }
    }

    table.overlap.assign(basis.vectors.size(), std::vector<double>(blocks, 0.0));
    for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
        for (std::size_t b = 0; b < blocks; ++b) {
            double magnitude = std::abs(inner_product(basis.vectors[i], realization.vector_of(b)));
            table.overlap[i][b] = magnitude;
            bool nonzero = magnitude > tolerance;
            if (nonzero != supported[i][b]) {
                throw VerificationError("support violation: basis element " + std::to_string(i) + " and block " +
                                        std::to_string(b) + " have overlap " + std::to_string(magnitude) +
                                        (supported[i][b] ? " but should overlap" : " but should be orthogonal"));
            }
            if (supported[i][b]) {
                table.max_support_deviation =
                    std::max(table.max_support_deviation, std::abs(magnitude - table.expected_magnitude));
            } else {
                table.max_leak = std::max(table.max_leak, magnitude);
            }
        }
    }
    if (table.max_support_deviation > tolerance) {
        throw VerificationError("supported overlaps deviate from " + std::to_string(table.expected_magnitude) +
                                " by " + std::to_string(table.max_support_deviation));
    }
    return table;
}

}  // namespace meanking
