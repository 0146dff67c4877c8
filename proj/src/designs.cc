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

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "meanking/algebra.h"
#include "meanking/errors.h"

namespace meanking {

namespace {

std::string block_str(const Block &block) {
    std::string out = "{";
    for (std::size_t i = 0; i < block.size(); ++i) {
        out += (i ? "," : "") + std::to_string(block[i]);
    }
    return out + "}";
}

std::size_t intersection_size(const Block &a, const Block &b) {
    std::size_t count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

}  // namespace

std::string to_string(const DesignParameters &params) {
    return "(" + std::to_string(params.v) + "," + std::to_string(params.b) + "," + std::to_string(params.r) + "," +
           std::to_string(params.k) + "," + std::to_string(params.lambda) + ")";
}

bool IncidenceDesign::contains(std::size_t block_index, std::size_t point) const {
    const Block &b = blocks_.at(block_index);
    return std::binary_search(b.begin(), b.end(), point);
}

std::size_t Resolution::class_of(std::size_t block_index) const {
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (std::find(classes[c].begin(), classes[c].end(), block_index) != classes[c].end()) {
            return c;
        }
    }
    throw std::out_of_range("block " + std::to_string(block_index) + " is in no parallel class");
}

std::size_t Resolution::block_containing(const IncidenceDesign &design, std::size_t class_index,
                                         std::size_t point) const {
    for (std::size_t b : classes.at(class_index)) {
        if (design.contains(b, point)) {
            return b;
        }
    }
    throw VerificationError("parallel class " + std::to_string(class_index) + " does not cover point " +
                            std::to_string(point));
}

IncidenceDesign verify_design(std::size_t v, std::vector<Block> blocks) {
    if (v < 2) {
        throw std::invalid_argument("a design needs at least two points");
    }
    if (blocks.empty()) {
        throw std::invalid_argument("a design needs at least one block");
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        Block &b = blocks[i];
        std::sort(b.begin(), b.end());
        if (std::adjacent_find(b.begin(), b.end()) != b.end()) {
            throw std::invalid_argument("block " + std::to_string(i) + " repeats a point");
        }
        if (!b.empty() && b.back() >= v) {
            throw std::invalid_argument("block " + std::to_string(i) + " contains point " + std::to_string(b.back()) +
                                        " outside 0.." + std::to_string(v - 1));
        }
        if (b.size() < 2) {
            throw std::invalid_argument("block " + std::to_string(i) + " has fewer than two points");
        }
    }

    std::size_t k = blocks[0].size();
    for (std::size_t i = 1; i < blocks.size(); ++i) {
        if (blocks[i].size() != k) {
            throw VerificationError("non-uniform block size: block " + std::to_string(i) + " " +
                                    block_str(blocks[i]) + " has " + std::to_string(blocks[i].size()) +
                                    " points, block 0 has " + std::to_string(k));
        }
    }

    std::vector<std::size_t> replication(v, 0);
    std::vector<std::size_t> pairs(v * v, 0);
    for (const Block &b : blocks) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            ++replication[b[i]];
            for (std::size_t j = i + 1; j < b.size(); ++j) {
                ++pairs[b[i] * v + b[j]];
            }
        }
    }
    std::size_t r = replication[0];
    for (std::size_t p = 1; p < v; ++p) {
        if (replication[p] != r) {
            throw VerificationError("non-uniform replication: point " + std::to_string(p) + " lies in " +
                                    std::to_string(replication[p]) + " blocks, point 0 lies in " +
                                    std::to_string(r));
        }
    }
    std::size_t lambda = pairs[0 * v + 1];
    for (std::size_t p = 0; p < v; ++p) {
        for (std::size_t q = p + 1; q < v; ++q) {
            if (pairs[p * v + q] != lambda) {
                throw VerificationError("non-uniform pair coverage: pair {" + std::to_string(p) + "," +
                                        std::to_string(q) + "} lies in " + std::to_string(pairs[p * v + q]) +
                                        " blocks, pair {0,1} lies in " + std::to_string(lambda));
            }
        }
    }
    std::size_t b = blocks.size();
    if (r * (k - 1) != (v - 1) * lambda || b * k != v * r) {
        throw VerificationError("parameter identities fail for " +
                                to_string(DesignParameters{v, b, r, k, lambda}));
    }
    return IncidenceDesign(std::move(blocks), DesignParameters{v, b, r, k, lambda});
}

Resolution check_resolution(const IncidenceDesign &design, std::vector<std::vector<std::size_t>> classes) {
    std::size_t v = design.point_count();
    std::vector<int> seen(design.blocks().size(), 0);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        std::vector<int> covered(v, 0);
        for (std::size_t b : classes[c]) {
            if (b >= seen.size()) {
                throw VerificationError("class " + std::to_string(c) + " names unknown block " + std::to_string(b));
            }
            if (seen[b]++) {
                throw VerificationError("block " + std::to_string(b) + " appears in more than one class");
            }
            for (std::size_t p : design.block(b)) {
                if (covered[p]++) {
                    throw VerificationError("class " + std::to_string(c) + " covers point " + std::to_string(p) +
                                            " twice");
                }
            }
        }
        for (std::size_t p = 0; p < v; ++p) {
            if (!covered[p]) {
                throw VerificationError("class " + std::to_string(c) + " misses point " + std::to_string(p));
            }
        }
    }
    for (std::size_t b = 0; b < seen.size(); ++b) {
        if (!seen[b]) {
            throw VerificationError("block " + std::to_string(b) + " is in no class");
        }
    }
    return Resolution{std::move(classes)};
}

Resolution find_resolution(const IncidenceDesign &design) {
    const auto &params = design.parameters();
    std::size_t v = params.v;
    if (v % params.k != 0) {
        throw VerificationError("not resolvable: v=" + std::to_string(v) + " is not divisible by k=" +
                                std::to_string(params.k));
    }
    const auto &blocks = design.blocks();
    std::vector<std::vector<std::size_t>> through(v);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (std::size_t p : blocks[b]) {
            through[p].push_back(b);
        }
    }

    std::vector<bool> used(blocks.size(), false);
    std::vector<bool> covered(v, false);
    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::size_t> current;
    std::size_t covered_count = 0;

    auto place = [&](std::size_t b, bool on) {
        used[b] = on;
        for (std::size_t p : blocks[b]) {
            covered[p] = on;
        }
        if (on) {
            covered_count += blocks[b].size();
            current.push_back(b);
        } else {
            covered_count -= blocks[b].size();
            current.pop_back();
        }
    };
    auto disjoint_from_cover = [&](std::size_t b) {
        return std::none_of(blocks[b].begin(), blocks[b].end(), [&](std::size_t p) { return covered[p]; });
    };

    std::function<bool()> start_class;
    std::function<bool()> fill_class = [&]() -> bool {
        if (covered_count == v) {
            classes.push_back(current);
            auto saved = std::move(current);
            current.clear();
            std::fill(covered.begin(), covered.end(), false);
            covered_count = 0;
            if (start_class()) {
                return true;
            }
            current = std::move(saved);
            classes.pop_back();
            for (std::size_t b : current) {
                for (std::size_t p : blocks[b]) {
                    covered[p] = true;
                }
            }
            covered_count = v;
            return false;
        }
        std::size_t p = 0;
        while (covered[p]) {
            ++p;
        }
        for (std::size_t b : through[p]) {
            if (!used[b] && disjoint_from_cover(b)) {
                place(b, true);
                if (fill_class()) {
                    return true;
                }
                place(b, false);
            }
        }
        return false;
    };
    start_class = [&]() -> bool {
        auto first = std::find(used.begin(), used.end(), false);
        if (first == used.end()) {
            return true;
        }
        place(static_cast<std::size_t>(first - used.begin()), true);
        if (fill_class()) {
            return true;
        }
        place(static_cast<std::size_t>(first - used.begin()), false);
        return false;
    };

    if (!start_class()) {
        throw VerificationError("not resolvable: no partition of the blocks into parallel classes exists");
    }
    return Resolution{std::move(classes)};
}

ResolvableDesign affine_plane(std::uint32_t q) {
    FiniteField field = FiniteField::of_order(q);
    auto elements = field.elements();
    std::vector<Block> blocks;
    std::vector<std::vector<std::size_t>> classes;

    std::vector<std::size_t> vertical;
    for (std::uint32_t x = 0; x < q; ++x) {
        Block line;
        for (std::uint32_t y = 0; y < q; ++y) {
            line.push_back(std::size_t{x} * q + y);
        }
        vertical.push_back(blocks.size());
        blocks.push_back(std::move(line));
    }
    classes.push_back(std::move(vertical));

    for (const auto &slope : elements) {
        std::vector<std::size_t> cls;
        for (const auto &intercept : elements) {
            Block line;
            for (const auto &x : elements) {
                line.push_back(std::size_t{x.index()} * q + (slope * x + intercept).index());
            }
            std::sort(line.begin(), line.end());
            cls.push_back(blocks.size());
            blocks.push_back(std::move(line));
        }
        classes.push_back(std::move(cls));
    }

    IncidenceDesign design = verify_design(std::size_t{q} * q, std::move(blocks));
    Resolution resolution = check_resolution(design, std::move(classes));
    return {std::move(design), std::move(resolution)};
}

SignMatrix sylvester_hadamard(int k) {
    if (k < 1 || k > 6) {
        throw std::invalid_argument("Sylvester order exponent must be in 1..6");
    }
    std::size_t n = std::size_t{1} << k;
    SignMatrix h(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            h[i][j] = std::popcount(i & j) % 2 ? -1 : 1;
        }
    }
    return h;
}

bool is_hadamard(const SignMatrix &h) {
    std::size_t n = h.size();
    if (n == 0) {
        return false;
    }
    for (const auto &row : h) {
        if (row.size() != n) {
            return false;
        }
        for (int x : row) {
            if (x != 1 && x != -1) {
                return false;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            long dot = 0;
            for (std::size_t c = 0; c < n; ++c) {
                dot += h[i][c] * h[j][c];
            }
            if (dot != (i == j ? static_cast<long>(n) : 0)) {
                return false;
            }
        }
    }
    return true;
}

ResolvableDesign hadamard_design(const SignMatrix &h) {
    if (!is_hadamard(h)) {
        throw VerificationError("matrix is not a Hadamard matrix (H H^t != n I)");
    }
    std::size_t n = h.size();
    if (n < 4) {
        throw std::invalid_argument("Hadamard designs need order n >= 4");
    }
    std::vector<Block> blocks;
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t row = 1; row < n; ++row) {
        Block plus;
        Block minus;
        for (std::size_t col = 0; col < n; ++col) {
            int normalized_sign = h[row][col] * h[0][col];
            (normalized_sign > 0 ? plus : minus).push_back(col);
        }
        classes.push_back({blocks.size(), blocks.size() + 1});
        blocks.push_back(std::move(plus));
        blocks.push_back(std::move(minus));
    }
    IncidenceDesign design = verify_design(n, std::move(blocks));
    Resolution resolution = check_resolution(design, std::move(classes));
    return {std::move(design), std::move(resolution)};
}

AffineResolvableReport affine_resolvable_check(const IncidenceDesign &design, const Resolution &resolution) {
    const auto &blocks = design.blocks();
    std::vector<std::size_t> class_index(blocks.size());
    for (std::size_t c = 0; c < resolution.classes.size(); ++c) {
        for (std::size_t b : resolution.classes[c]) {
            class_index.at(b) = c;
        }
    }
    std::optional<std::size_t> m;
    std::size_t first_a = 0;
    std::size_t first_b = 0;
    for (std::size_t a = 0; a < blocks.size(); ++a) {
        for (std::size_t b = a + 1; b < blocks.size(); ++b) {
            if (class_index[a] == class_index[b]) {
                continue;
            }
            std::size_t meet = intersection_size(blocks[a], blocks[b]);
            if (!m) {
                m = meet;
                first_a = a;
                first_b = b;
            } else if (meet != *m) {
                throw VerificationError("not affine: blocks " + std::to_string(a) + " and " + std::to_string(b) +
                                        " meet in " + std::to_string(meet) + " points, blocks " +
                                        std::to_string(first_a) + " and " + std::to_string(first_b) + " in " +
                                        std::to_string(*m));
            }
        }
    }
    const auto &p = design.parameters();
    AffineResolvableReport report;
    report.intersection = m.value_or(0);
    report.intersection_relation = report.intersection * p.v == p.k * p.k;
    report.lambda_relation = p.lambda * (p.v - p.k) == p.k * (p.k - 1);
    report.replication_relation = p.r == p.k + p.lambda;
    report.block_count_relation = p.b == p.v + p.r - 1;
    return report;
}

std::size_t parallel_block_through(const IncidenceDesign &design, const Resolution &resolution,
                                   std::size_t block_index, std::size_t point) {
    if (point >= design.point_count()) {
        throw std::invalid_argument("point " + std::to_string(point) + " out of range");
    }
    if (design.contains(block_index, point)) {
        throw std::invalid_argument("point " + std::to_string(point) + " lies on block " +
                                    std::to_string(block_index));
    }
    return resolution.block_containing(design, resolution.class_of(block_index), point);
}

DesignParameters affine_space_parameters(int m, int d, std::uint32_t q) {
    if (d < 1 || d >= m) {
        throw std::invalid_argument("affine space parameters need 1 <= d < m");
    }
    if (!prime_power_decomposition(q)) {
        throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    }
    auto power = [&](int e) {
        std::uint64_t out = 1;
        for (int i = 0; i < e; ++i) {
            if (__builtin_mul_overflow(out, std::uint64_t{q}, &out)) {
                throw std::overflow_error("affine space parameters overflow");
            }
        }
        return out;
    };
    std::uint64_t flats = gaussian_binomial(m, d, q);
    std::uint64_t b;
    if (__builtin_mul_overflow(power(m - d), flats, &b)) {
        throw std::overflow_error("affine space parameters overflow");
    }
    return DesignParameters{power(m), b, flats, power(d), gaussian_binomial(m - 1, d - 1, q)};
}

}  // namespace meanking
