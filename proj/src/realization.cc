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

#include "meanking/realization.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace meanking {

Realization incidence_realization(const IncidenceDesign &design, const Resolution &resolution) {
    affine_resolvable_check(design, resolution);
    const auto &params = design.parameters();
    const double amplitude = 1.0 / std::sqrt(static_cast<double>(params.k));
    Realization out{design, resolution, params.v, {}};
    for (const Block &block : design.blocks()) {
        ComplexVec v(params.v);
        for (std::size_t p : block) {
            v[p] = amplitude;
        }
        out.vectors.push_back(std::move(v));
    }
    return out;
}

Realization mub_realization(const IncidenceDesign &plane, const Resolution &resolution, const MubFamily &mubs) {
    const auto &params = plane.parameters();
    const std::size_t n = params.k;
    if (params.v != n * n || params.lambda != 1) {
        throw std::invalid_argument("mub_realization needs an affine plane, got " + to_string(params));
    }
    if (mubs.dimension != n || mubs.bases.size() != resolution.classes.size()) {
        throw std::invalid_argument("MUB family of dimension " + std::to_string(mubs.dimension) + " with " +
                                    std::to_string(mubs.bases.size()) + " bases does not fit a plane of order " +
                                    std::to_string(n) + " with " + std::to_string(resolution.classes.size()) +
                                    " classes");
    }
    Realization out{plane, resolution, n * n, std::vector<ComplexVec>(params.b)};
    for (std::size_t a = 0; a < resolution.classes.size(); ++a) {
        const auto &cls = resolution.classes[a];
        if (cls.size() != n) {
            throw std::invalid_argument("parallel class " + std::to_string(a) + " does not hold n lines");
        }
        for (std::size_t b = 0; b < n; ++b) {
            const ComplexVec &v = mubs.bases[a][b];
            out.vectors[cls[b]] = tensor(v, conjugate(v));
        }
    }
    return out;
}

Realization hadamard8_realization() {
    auto [design, resolution] = hadamard_design(sylvester_hadamard(3));
    const double s = 1.0 / std::sqrt(2.0);
    const double t = 1.0 / (2.0 * std::sqrt(2.0));
    const Complex i{0, 1};

    auto sparse = [&](std::size_t x, std::size_t y) {
        ComplexVec v(8);
        v[x] = s;
        v[y] = s;
        return v;
    };
    auto dense = [&](std::array<Complex, 8> amplitudes) {
        ComplexVec v(8);
        for (std::size_t k = 0; k < 8; ++k) {
            v[k] = t * amplitudes[k];
        }
        return v;
    };

    std::vector<ComplexVec> vectors{
        // B1+, B1-
        sparse(0b000, 0b011),
        sparse(0b101, 0b110),
        // B2+, B2-
        sparse(0b000, 0b101),
        sparse(0b011, 0b110),
        // B3+, B3-
        sparse(0b000, 0b110),
        sparse(0b011, 0b101),
        // B4+, B4-
        dense({1, 1, 1, 1, 1, 1, 1, 1}),
        dense({1, -1, -1, 1, -1, 1, 1, -1}),
        // B5+, B5-
        dense({1, -i, -i, 1, i, 1, 1, i}),
        dense({1, i, i, 1, -i, 1, 1, -i}),
        // B6+, B6-
        dense({1, -i, i, 1, -i, 1, 1, i}),
        dense({1, i, -i, 1, i, 1, 1, -i}),
        // B7+, B7-
        dense({1, i, -i, 1, -i, 1, 1, i}),
        dense({1, -i, i, 1, i, 1, 1, -i}),
    };
    return Realization{std::move(design), std::move(resolution), 8, std::move(vectors)};
}

RealizationReport verify_realization(const Realization &realization, double tolerance) {
    RealizationReport report;
    const auto &params = realization.design.parameters();
    const std::size_t b = realization.design.blocks().size();
    if (realization.vectors.size() != b) {
        report.max_deviation = INFINITY;
        return report;
    }
    for (const auto &v : realization.vectors) {
        if (v.size() != realization.dimension) {
            report.max_deviation = INFINITY;
            return report;
        }
        report.max_norm_deviation = std::max(report.max_norm_deviation, std::abs(v.norm() - 1.0));
    }
    std::vector<std::size_t> class_index(b);
    for (std::size_t c = 0; c < realization.resolution.classes.size(); ++c) {
        for (std::size_t blk : realization.resolution.classes[c]) {
            class_index.at(blk) = c;
        }
    }
    const double angle = static_cast<double>(params.k) / static_cast<double>(params.v);
    double worst = -1;
    for (std::size_t x = 0; x < b; ++x) {
        for (std::size_t y = x; y < b; ++y) {
            Complex expected = class_index[x] != class_index[y] ? angle : (x == y ? 1.0 : 0.0);
            double deviation = std::abs(inner_product(realization.vectors[x], realization.vectors[y]) - expected);
            if (deviation > worst) {
                worst = deviation;
                report.worst_pair = {x, y};
            }
        }
    }
    report.max_deviation = std::max(worst, 0.0);
    report.passed = report.max_deviation < tolerance && report.max_norm_deviation < tolerance;
    return report;
}

ComplexVec class_state(const Realization &realization, std::size_t class_index) {
    const auto &cls = realization.resolution.classes.at(class_index);
    ComplexVec out(realization.dimension);
    for (std::size_t b : cls) {
        out += realization.vector_of(b);
    }
    return Complex(1.0 / std::sqrt(static_cast<double>(cls.size()))) * out;
}

}  // namespace meanking
