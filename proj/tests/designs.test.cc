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

#include "meanking/designs.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "meanking/errors.h"

using namespace meanking;

namespace {

std::set<Block> block_set(const IncidenceDesign &d) {
    return {d.blocks().begin(), d.blocks().end()};
}

std::vector<ResolvableDesign> constructed_designs() {
    std::vector<ResolvableDesign> out;
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        out.push_back(affine_plane(q));
    }
    for (int k : {2, 3, 4}) {
        out.push_back(hadamard_design(sylvester_hadamard(k)));
    }
    return out;
}

void expect_partitions(const IncidenceDesign &design, const Resolution &res) {
    for (const auto &cls : res.classes) {
        std::vector<int> hits(design.point_count(), 0);
        for (std::size_t b : cls) {
            for (std::size_t p : design.block(b)) {
                ++hits[p];
            }
        }
        for (int h : hits) {
            EXPECT_EQ(h, 1);
        }
    }
}

}  // namespace

TEST(designs, example_plane_from_one_indexed_blocks) {
    std::vector<Block> blocks{{1, 2}, {3, 4}, {1, 3}, {2, 4}, {1, 4}, {2, 3}};
    for (auto &b : blocks) {
        for (auto &p : b) {
            --p;
        }
    }
    auto d = verify_design(4, blocks);
    EXPECT_EQ(d.parameters(), (DesignParameters{4, 6, 3, 2, 1}));
    auto res = find_resolution(d);
    EXPECT_EQ(res.classes, (std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}, {4, 5}}));
}

TEST(designs, degenerate_complete_design) {
    auto d = verify_design(2, {{0, 1}});
    EXPECT_EQ(d.parameters(), (DesignParameters{2, 1, 1, 2, 1}));
}

TEST(designs, verify_reports_the_failure) {
    try {
        verify_design(4, {{0, 1}, {2, 3}, {0, 2}});
        FAIL();
    } catch (const VerificationError &e) {
        EXPECT_NE(std::string(e.what()).find("replication"), std::string::npos) << e.what();
    }
    try {
        verify_design(4, {{0, 1}, {2, 3, 1}});
        FAIL();
    } catch (const VerificationError &e) {
        EXPECT_NE(std::string(e.what()).find("block size"), std::string::npos) << e.what();
    }
    // Uniform k and r, non-uniform pair coverage.
    try {
        verify_design(4, {{0, 1}, {2, 3}, {0, 1}, {2, 3}});
        FAIL();
    } catch (const VerificationError &e) {
        EXPECT_NE(std::string(e.what()).find("pair"), std::string::npos) << e.what();
    }
    EXPECT_THROW(verify_design(4, {{0, 4}}), std::invalid_argument);
    EXPECT_THROW(verify_design(4, {}), std::invalid_argument);
    EXPECT_THROW(verify_design(4, {{0, 0}}), std::invalid_argument);
}

TEST(designs, fano_plane_is_not_resolvable) {
    auto fano = verify_design(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
    EXPECT_EQ(fano.parameters(), (DesignParameters{7, 7, 3, 3, 1}));
    try {
        find_resolution(fano);
        FAIL();
    } catch (const VerificationError &e) {
        EXPECT_NE(std::string(e.what()).find("not resolvable"), std::string::npos);
    }
}

TEST(designs, affine_plane_order_two_matches_example) {
    auto plane = affine_plane(2);
    EXPECT_EQ(plane.design.parameters(), (DesignParameters{4, 6, 3, 2, 1}));
    // Vertical lines first: (1,1),(1,2) and (2,1),(2,2) in 1-indexed labels.
    ASSERT_EQ(plane.resolution.classes.size(), 3u);
    EXPECT_EQ(plane.design.block(plane.resolution.classes[0][0]), (Block{0, 1}));
    EXPECT_EQ(plane.design.block(plane.resolution.classes[0][1]), (Block{2, 3}));
}

TEST(designs, affine_plane_parameters) {
    EXPECT_EQ(affine_plane(3).design.parameters(), (DesignParameters{9, 12, 4, 3, 1}));
    EXPECT_EQ(affine_plane(4).design.parameters(), (DesignParameters{16, 20, 5, 4, 1}));
    EXPECT_THROW(affine_plane(6), std::invalid_argument);
}

TEST(designs, affine_plane_incidence_exhaustive) {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        auto plane = affine_plane(q);
        const auto &res = plane.resolution;
        ASSERT_EQ(res.classes.size(), q + 1);
        for (std::size_t x = 0; x < q; ++x) {
            Block vertical(q);
            std::iota(vertical.begin(), vertical.end(), x * q);
            EXPECT_EQ(plane.design.block(res.classes[0][x]), vertical);
        }
        const auto &blocks = plane.design.blocks();
        for (std::size_t a = 0; a < blocks.size(); ++a) {
            for (std::size_t b = a + 1; b < blocks.size(); ++b) {
                std::vector<std::size_t> common;
                std::set_intersection(blocks[a].begin(), blocks[a].end(), blocks[b].begin(), blocks[b].end(),
                                      std::back_inserter(common));
                EXPECT_EQ(common.size(), res.parallel(a, b) ? 0u : 1u) << "q=" << q;
            }
        }
        expect_partitions(plane.design, res);
    }
}

TEST(designs, sylvester_matrices) {
    EXPECT_EQ(sylvester_hadamard(1), (SignMatrix{{1, 1}, {1, -1}}));
    SignMatrix h8{
        {1, 1, 1, 1, 1, 1, 1, 1},     {1, -1, 1, -1, 1, -1, 1, -1}, {1, 1, -1, -1, 1, 1, -1, -1},
        {1, -1, -1, 1, 1, -1, -1, 1}, {1, 1, 1, 1, -1, -1, -1, -1}, {1, -1, 1, -1, -1, 1, -1, 1},
        {1, 1, -1, -1, -1, -1, 1, 1}, {1, -1, -1, 1, -1, 1, 1, -1},
    };
    EXPECT_EQ(sylvester_hadamard(3), h8);
    for (int k = 1; k <= 6; ++k) {
        auto h = sylvester_hadamard(k);
        std::size_t n = h.size();
        ASSERT_EQ(n, std::size_t{1} << k);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                int dot = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    dot += h[i][c] * h[j][c];
                }
                EXPECT_EQ(dot, i == j ? static_cast<int>(n) : 0);
            }
        }
        EXPECT_TRUE(is_hadamard(h));
    }
    EXPECT_THROW(sylvester_hadamard(0), std::invalid_argument);
    EXPECT_THROW(sylvester_hadamard(7), std::invalid_argument);
    EXPECT_FALSE(is_hadamard({{1, 1}, {1, 1}}));
}

TEST(designs, hadamard8_blocks_match_printed_list) {
    std::vector<Block> printed{{1, 3, 5, 7}, {2, 4, 6, 8}, {1, 2, 5, 6}, {3, 4, 7, 8}, {1, 4, 5, 8},
                               {2, 3, 6, 7}, {1, 2, 3, 4}, {5, 6, 7, 8}, {1, 3, 6, 8}, {2, 4, 5, 7},
                               {1, 2, 7, 8}, {3, 4, 5, 6}, {1, 4, 6, 7}, {2, 3, 5, 8}};
    for (auto &b : printed) {
        for (auto &p : b) {
            --p;
        }
    }
    auto d = hadamard_design(sylvester_hadamard(3));
    EXPECT_EQ(d.design.blocks(), printed);
    EXPECT_EQ(d.design.parameters(), (DesignParameters{8, 14, 7, 4, 3}));
    for (std::size_t i = 0; i < 7; ++i) {
        EXPECT_EQ(d.resolution.classes[i], (std::vector<std::size_t>{2 * i, 2 * i + 1}));
    }
    auto report = affine_resolvable_check(d.design, d.resolution);
    EXPECT_EQ(report.intersection, 2u);
    EXPECT_TRUE(report.all_relations_hold());
    // The search finds the same classes.
    EXPECT_EQ(find_resolution(d.design).classes, d.resolution.classes);
}

TEST(designs, hadamard_design_errors) {
    EXPECT_THROW(hadamard_design({{1, 1}, {1, 1}}), VerificationError);
    EXPECT_THROW(hadamard_design(sylvester_hadamard(1)), std::invalid_argument);
}

TEST(designs, hadamard_design_normalizes_columns) {
    auto h = sylvester_hadamard(3);
    for (auto &row : h) {
        row[2] = -row[2];
    }
    auto d = hadamard_design(h);
    EXPECT_EQ(d.design.parameters(), (DesignParameters{8, 14, 7, 4, 3}));
}

TEST(designs, h4_is_the_affine_plane_of_order_two) {
    auto h4 = hadamard_design(sylvester_hadamard(2)).design;
    auto plane = affine_plane(2).design;
    EXPECT_EQ(h4.parameters(), (DesignParameters{4, 6, 3, 2, 1}));
    std::vector<std::size_t> perm{0, 1, 2, 3};
    bool isomorphic = false;
    do {
        std::set<Block> mapped;
        for (const auto &b : h4.blocks()) {
            Block m;
            for (auto p : b) {
                m.push_back(perm[p]);
            }
            std::sort(m.begin(), m.end());
            mapped.insert(m);
        }
        isomorphic = isomorphic || mapped == block_set(plane);
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_TRUE(isomorphic);
}

TEST(designs, hadamard_relations) {
    for (int k : {2, 3, 4}) {
        auto d = hadamard_design(sylvester_hadamard(k));
        std::size_t n = std::size_t{1} << k;
        EXPECT_EQ(d.design.parameters(), (DesignParameters{n, 2 * n - 2, n - 1, n / 2, n / 2 - 1}));
        auto report = affine_resolvable_check(d.design, d.resolution);
        EXPECT_TRUE(report.all_relations_hold());
        EXPECT_EQ(report.intersection, n / 4);
    }
}

TEST(designs, affine_plane_report) {
    auto plane = affine_plane(3);
    auto report = affine_resolvable_check(plane.design, plane.resolution);
    EXPECT_EQ(report.intersection, 1u);
    EXPECT_TRUE(report.all_relations_hold());
}

TEST(designs, no_resolvable_design_with_six_points_and_triples) {
    // A resolution of a (6,10,5,3,2) design pairs each triple with its
    // complement. No choice of five complementary pairs covers every point
    // pair exactly twice.
    std::vector<Block> triples;
    for (std::size_t a = 1; a < 6; ++a) {
        for (std::size_t b = a + 1; b < 6; ++b) {
            triples.push_back({0, a, b});
        }
    }
    auto complement = [](const Block &t) {
        Block c;
        for (std::size_t p = 0; p < 6; ++p) {
            if (!std::binary_search(t.begin(), t.end(), p)) {
                c.push_back(p);
            }
        }
        return c;
    };
    std::size_t designs_found = 0;
    for (unsigned mask = 0; mask < (1u << 10); ++mask) {
        if (std::popcount(mask) != 5) {
            continue;
        }
        std::vector<Block> blocks;
        for (std::size_t i = 0; i < 10; ++i) {
            if (mask & (1u << i)) {
                blocks.push_back(triples[i]);
                blocks.push_back(complement(triples[i]));
            }
        }
        try {
            verify_design(6, blocks);
            ++designs_found;
        } catch (const VerificationError &) {
        }
    }
    EXPECT_EQ(designs_found, 0u);
}

static ResolvableDesign complete_pair_design() {
    std::vector<Block> pairs;
    for (std::size_t a = 0; a < 6; ++a) {
        for (std::size_t b = a + 1; b < 6; ++b) {
            pairs.push_back({a, b});
        }
    }
    auto d = verify_design(6, pairs);
    auto res = find_resolution(d);
    return {d, res};
}

TEST(designs, resolvable_but_not_affine) {
    auto rd = complete_pair_design();
    EXPECT_EQ(rd.design.parameters(), (DesignParameters{6, 15, 5, 2, 1}));
    EXPECT_EQ(rd.resolution.classes.size(), 5u);
    expect_partitions(rd.design, rd.resolution);
    try {
        affine_resolvable_check(rd.design, rd.resolution);
        FAIL();
    } catch (const VerificationError &e) {
        EXPECT_NE(std::string(e.what()).find("not affine"), std::string::npos);
    }
}

TEST(designs, check_resolution_rejects_bad_classes) {
    auto plane = affine_plane(2);
    EXPECT_THROW(check_resolution(plane.design, {{0, 2}, {1, 3}, {4, 5}}), VerificationError);
    EXPECT_THROW(check_resolution(plane.design, {{0, 1}, {2, 3}}), VerificationError);
    EXPECT_THROW(check_resolution(plane.design, {{0, 1}, {2, 3}, {4, 5, 0}}), VerificationError);
    EXPECT_THROW(check_resolution(plane.design, {{0, 1}, {2, 3}, {4, 9}}), VerificationError);
}

TEST(designs, parallel_block_through_examples) {
    auto h8 = hadamard_design(sylvester_hadamard(3));
    // B4+ = {1,2,3,4}, p = 5 (1-indexed) -> B4- = {5,6,7,8}.
    EXPECT_EQ(parallel_block_through(h8.design, h8.resolution, 6, 4), 7u);
    auto plane = affine_plane(2);
    EXPECT_EQ(parallel_block_through(plane.design, plane.resolution, 0, 2), 1u);
    EXPECT_THROW(parallel_block_through(plane.design, plane.resolution, 0, 0), std::invalid_argument);
}

TEST(designs, parallel_block_through_exhaustive) {
    for (const auto &rd : constructed_designs()) {
        const auto &d = rd.design;
        for (std::size_t b = 0; b < d.blocks().size(); ++b) {
            for (std::size_t p = 0; p < d.point_count(); ++p) {
                if (d.contains(b, p)) {
                    continue;
                }
                std::vector<std::size_t> candidates;
                for (std::size_t c = 0; c < d.blocks().size(); ++c) {
                    std::vector<std::size_t> common;
                    std::set_intersection(d.block(b).begin(), d.block(b).end(), d.block(c).begin(), d.block(c).end(),
                                          std::back_inserter(common));
                    if (d.contains(c, p) && common.empty()) {
                        candidates.push_back(c);
                    }
                }
                ASSERT_EQ(candidates.size(), 1u);
                EXPECT_EQ(parallel_block_through(d, rd.resolution, b, p), candidates[0]);
            }
        }
    }
}

TEST(designs, parameter_identities_for_all_constructions) {
    for (const auto &rd : constructed_designs()) {
        const auto &p = rd.design.parameters();
        EXPECT_EQ(p.b * p.k, p.v * p.r);
        EXPECT_EQ(p.lambda * (p.v - 1), p.r * (p.k - 1));
        expect_partitions(rd.design, rd.resolution);
        auto found = find_resolution(rd.design);
        EXPECT_EQ(found.classes.size(), p.r);
        expect_partitions(rd.design, found);
    }
}

TEST(designs, affine_space_parameters) {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        EXPECT_EQ(affine_space_parameters(2, 1, q), (DesignParameters{q * q, q * q + q, q + 1, q, 1}));
    }
    EXPECT_EQ(affine_space_parameters(3, 1, 2), (DesignParameters{8, 28, 7, 2, 1}));
    EXPECT_EQ(affine_space_parameters(3, 2, 2), (DesignParameters{8, 14, 7, 4, 3}));
    EXPECT_THROW(affine_space_parameters(2, 2, 2), std::invalid_argument);
    EXPECT_THROW(affine_space_parameters(2, 0, 2), std::invalid_argument);
    EXPECT_THROW(affine_space_parameters(2, 1, 6), std::invalid_argument);
}

TEST(designs, parameters_to_string) {
    EXPECT_EQ(to_string(DesignParameters{8, 14, 7, 4, 3}), "(8,14,7,4,3)");
}
