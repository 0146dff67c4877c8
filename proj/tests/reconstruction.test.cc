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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "meanking/errors.h"

using namespace meanking;

namespace {

std::vector<Realization> point_realizations() {
    std::vector<Realization> out;
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
        auto plane = affine_plane(q);
        out.push_back(incidence_realization(plane.design, plane.resolution));
    }
    for (std::uint32_t q : {2u, 3u, 5u}) {
        auto plane = affine_plane(q);
        out.push_back(mub_realization(plane.design, plane.resolution, mub_build(q)));
    }
    for (int k : {2, 3, 4}) {
        auto d = hadamard_design(sylvester_hadamard(k));
        out.push_back(incidence_realization(d.design, d.resolution));
    }
    out.push_back(hadamard8_realization());
    return out;
}

CollisionFunction random_function(std::mt19937_64 &rng, std::uint32_t n) {
    std::vector<std::uint32_t> values(n + 1);
    for (auto &x : values) {
        x = 1 + static_cast<std::uint32_t>(rng() % n);
    }
    return CollisionFunction(values);
}

}  // namespace

TEST(reconstruction, maximally_entangled_state) {
    auto phi = maximally_entangled_state(3);
    for (std::size_t i = 0; i < 9; ++i) {
        EXPECT_NEAR(phi[i].real(), i % 4 == 0 ? 1 / std::sqrt(3.0) : 0.0, 1e-15);
    }
}

TEST(reconstruction, qubit_probability_table) {
    auto mubs = mub_build(2);
    auto plane = affine_plane(2);
    auto fs = functions_from_plane(plane.design, plane.resolution);
    auto basis = psi_function_basis(mubs, fs);
    const auto &v = mubs.bases[2][0];
    ComplexVec block = tensor(v, conjugate(v));
    std::vector<double> expected{0.5, 0, 0, 0.5};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(std::norm(inner_product(block, basis.vectors[i])), expected[i], 1e-12);
    }
}

TEST(reconstruction, function_basis_orthonormal) {
    for (std::uint32_t n : {2u, 3u, 5u, 7u, 9u}) {
        auto plane = affine_plane(n);
        auto fs = functions_from_plane(plane.design, plane.resolution);
        auto basis = psi_function_basis(mub_build(n), fs);
        EXPECT_EQ(basis.vectors.size(), n * n);
        EXPECT_EQ(basis.index, BasisIndex::kFunction);
        EXPECT_LT(max_gram_deviation(basis.vectors), 1e-9) << n;
    }
}

TEST(reconstruction, function_basis_rejects_bad_sets) {
    auto mubs = mub_build(2);
    auto plane = affine_plane(2);
    auto fs = functions_from_plane(plane.design, plane.resolution);
    EXPECT_THROW(psi_function_basis(mubs, std::span(fs).first(3)), std::invalid_argument);
    fs[3] = CollisionFunction({1, 1, 2});
    try {
        psi_function_basis(mubs, fs);
        FAIL();
    } catch (const VerificationError &e) {
        EXPECT_NE(std::string(e.what()).find("functions 0"), std::string::npos) << e.what();
    }
}

TEST(reconstruction, inner_product_formula_examples) {
    auto mubs = mub_build(2);
    CollisionFunction f({1, 1, 1});
    auto self = inner_product_formula_check(mubs, f, f);
    EXPECT_NEAR(self.computed.real(), 1, 1e-12);
    EXPECT_EQ(self.collisions, 3u);
    auto apart = inner_product_formula_check(mubs, f, CollisionFunction({2, 2, 2}));
    EXPECT_NEAR(apart.computed.real(), -0.5, 1e-12);
    EXPECT_TRUE(apart.agrees);
    auto one = inner_product_formula_check(mubs, f, CollisionFunction({1, 2, 2}));
    EXPECT_NEAR(std::abs(one.computed), 0, 1e-12);
}

TEST(reconstruction, inner_product_formula_exhaustive_small) {
    for (std::uint32_t n : {2u, 3u}) {
        auto mubs = mub_build(n);
        auto fs = all_functions(n);
        for (const auto &f : fs) {
            for (const auto &g : fs) {
                auto check = inner_product_formula_check(mubs, f, g);
                ASSERT_TRUE(check.agrees) << n;
            }
        }
    }
}

TEST(reconstruction, inner_product_formula_random_pairs) {
    std::mt19937_64 rng(77);
    for (std::uint32_t n : {2u, 3u, 5u}) {
        auto mubs = mub_build(n);
        for (int t = 0; t < 200; ++t) {
            auto f = random_function(rng, n);
            auto g = random_function(rng, n);
            auto check = inner_product_formula_check(mubs, f, g);
            EXPECT_TRUE(check.agrees) << n;
            EXPECT_NEAR(std::abs(check.computed - Complex(check.predicted)), 0, 1e-9);
        }
    }
}

TEST(reconstruction, point_basis_coefficients) {
    auto c = point_basis_coefficients({8, 14, 7, 4, 3});
    EXPECT_DOUBLE_EQ(c.alpha, 1.5);
    EXPECT_DOUBLE_EQ(c.beta, 0.5);
    auto basis = psi_point_basis(hadamard8_realization(), 0);
    EXPECT_EQ(*basis.alpha, 1.5);
    EXPECT_EQ(*basis.beta, 0.5);
}

TEST(reconstruction, point_bases_orthonormal_for_every_class) {
    for (const auto &real : point_realizations()) {
        const auto &p = real.design.parameters();
        auto reference = psi_point_basis(real, 0);
        for (std::size_t c = 0; c < real.resolution.classes.size(); ++c) {
            auto basis = psi_point_basis(real, c);
            ASSERT_EQ(basis.vectors.size(), p.v);
            EXPECT_LT(max_gram_deviation(basis.vectors), 1e-9);
            EXPECT_NEAR(*basis.alpha, (p.r - 1.0) * std::sqrt(double(p.k)) / double(p.v), 1e-15);
            EXPECT_NEAR(*basis.beta, 1 / std::sqrt(double(p.k)), 1e-15);
            for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
                EXPECT_LT(max_abs_difference(basis.vectors[i], reference.vectors[i]), 1e-9);
            }
        }
    }
}

TEST(reconstruction, point_basis_is_complete) {
    for (const auto &real : point_realizations()) {
        auto basis = psi_point_basis(real, 0);
        for (const auto &block : real.vectors) {
            double total = 0;
            for (const auto &psi : basis.vectors) {
                total += std::norm(inner_product(psi, block));
            }
            EXPECT_NEAR(total, 1, 1e-9);
        }
    }
}

TEST(reconstruction, point_support_pattern) {
    for (const auto &real : point_realizations()) {
        const auto &p = real.design.parameters();
        auto basis = psi_point_basis(real, 0);
        auto table = extraction_support(basis, real);
        EXPECT_LT(table.max_leak, 1e-9);
        EXPECT_NEAR(table.expected_magnitude, 1 / std::sqrt(double(p.k)), 1e-15);
        for (std::size_t b = 0; b < real.vectors.size(); ++b) {
            std::size_t nonzero = 0;
            double total = 0;
            for (std::size_t q = 0; q < p.v; ++q) {
                double prob = table.overlap[q][b] * table.overlap[q][b];
                if (table.overlap[q][b] > 1e-9) {
                    ++nonzero;
                    EXPECT_NEAR(prob, 1.0 / p.k, 1e-9);
                }
                total += prob;
            }
            EXPECT_EQ(nonzero, p.k);
            EXPECT_NEAR(total, 1, 1e-9);
        }
    }
}

TEST(reconstruction, supported_overlap_is_not_sqrt_k_over_v) {
    // Each block is a unit vector spread evenly over k basis elements, so the
    // supported overlap is 1/sqrt(k); sqrt(k)/v would leave probability
    // k^2/v^2 < 1 in total.
    auto real = hadamard8_realization();
    auto table = extraction_support(psi_point_basis(real, 0), real);
    EXPECT_NEAR(table.overlap[0][0], 0.5, 1e-12);
    EXPECT_GT(std::abs(table.overlap[0][0] - std::sqrt(4.0) / 8.0), 0.2);
}

TEST(reconstruction, function_support_pattern) {
    for (std::uint32_t n : {2u, 3u, 5u}) {
        auto plane = affine_plane(n);
        auto mubs = mub_build(n);
        auto fs = functions_from_plane(plane.design, plane.resolution);
        auto basis = psi_function_basis(mubs, fs);
        auto real = mub_realization(plane.design, plane.resolution, mubs);
        auto table = extraction_support(basis, real);
        EXPECT_NEAR(table.expected_magnitude, 1 / std::sqrt(double(n)), 1e-15);
        EXPECT_LT(table.max_support_deviation, 1e-9);
        EXPECT_LT(table.max_leak, 1e-9);
    }
}

TEST(reconstruction, support_violation_is_reported) {
    auto real = hadamard8_realization();
    auto basis = psi_point_basis(real, 0);
    std::swap(basis.vectors[0], basis.vectors[1]);
    EXPECT_THROW(extraction_support(basis, real), VerificationError);
}

TEST(reconstruction, plus_root_is_orthonormal_but_breaks_support) {
    for (const auto &real : point_realizations()) {
        const auto &p = real.design.parameters();
        double k = double(p.k);
        double v = double(p.v);
        double alpha_plus = (p.r + 1.0) * std::sqrt(k) / v;
        auto vectors = psi_point_vectors(real, 0, alpha_plus, 1 / std::sqrt(k));
        EXPECT_LT(max_gram_deviation(vectors), 1e-9);
        ReconstructionBasis basis{real.dimension, BasisIndex::kPoint, vectors, {}, alpha_plus, 1 / std::sqrt(k), 0};
        EXPECT_THROW(extraction_support(basis, real), VerificationError);
        // Off-support overlap is -2 sqrt(k)/v.
        for (std::size_t b = 0; b < real.vectors.size(); ++b) {
            for (std::size_t q = 0; q < p.v; ++q) {
                if (!real.design.contains(b, q)) {
                    EXPECT_NEAR(std::abs(inner_product(vectors[q], real.vector_of(b))), 2 * std::sqrt(k) / v, 1e-9);
                }
            }
        }
    }
}

TEST(reconstruction, sparse_candidate_basis_breaks_support) {
    // An orthonormal basis built from pairs (|x> +- |y>)/sqrt2 is not the
    // point basis: it sees blocks the point is not on.
    const double s = 1 / std::sqrt(2.0);
    auto pair = [&](std::size_t x, std::size_t y, double sign) {
        ComplexVec v(8);
        v[x] = s;
        v[y] = sign * s;
        return v;
    };
    std::vector<ComplexVec> sparse(8);
    sparse[0] = pair(0b000, 0b001, 1);
    sparse[4] = pair(0b000, 0b001, -1);
    sparse[1] = pair(0b110, 0b100, 1);
    sparse[5] = pair(0b110, 0b100, -1);
    sparse[2] = pair(0b011, 0b010, 1);
    sparse[6] = pair(0b011, 0b010, -1);
    sparse[3] = pair(0b101, 0b111, 1);
    sparse[7] = pair(0b101, 0b111, -1);
    EXPECT_LT(max_gram_deviation(sparse), 1e-12);
    auto real = hadamard8_realization();
    ReconstructionBasis basis{8, BasisIndex::kPoint, sparse, {}, 1.5, 0.5, 0};
    EXPECT_THROW(extraction_support(basis, real), VerificationError);
    // Point 1 is not on B5- = {2,4,5,7}, yet overlaps it.
    EXPECT_FALSE(real.design.contains(9, 0));
    EXPECT_NEAR(std::abs(inner_product(sparse[0], real.vector_of(9))), 1 / std::sqrt(8.0), 1e-12);
    // And the formula's own vector for point 1 differs from the sparse one.
    auto formula = psi_point_basis(real, 0);
    EXPECT_GT(max_abs_difference(formula.vectors[0], sparse[0]), 0.1);
}

TEST(reconstruction, mub_point_basis_is_a_function_basis) {
    for (std::uint32_t n : {2u, 3u, 5u}) {
        auto plane = affine_plane(n);
        auto mubs = mub_build(n);
        auto real = mub_realization(plane.design, plane.resolution, mubs);
        auto points = psi_point_basis(real, 0);
        // g_p(a) = 1 + position within class a of the line through p.
        std::vector<CollisionFunction> gs;
        for (std::size_t p = 0; p < n * n; ++p) {
            std::vector<std::uint32_t> values;
            for (std::size_t a = 0; a <= n; ++a) {
                values.push_back(
                    1 + static_cast<std::uint32_t>(
                            std::find(plane.resolution.classes[a].begin(), plane.resolution.classes[a].end(),
                                      real.resolution.block_containing(plane.design, a, p)) -
                            plane.resolution.classes[a].begin()));
            }
            gs.emplace_back(values);
        }
        auto functions = psi_function_basis(mubs, gs);
        for (std::size_t p = 0; p < n * n; ++p) {
            EXPECT_LT(max_abs_difference(points.vectors[p], functions.vectors[p]), 1e-9) << n;
        }
    }
}
