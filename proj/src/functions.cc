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

#include "meanking/functions.h"

#include <stdexcept>
#include <string>

#include "meanking/errors.h"

namespace meanking {

CollisionFunction::CollisionFunction(std::vector<std::uint32_t> values, std::optional<FunctionOrigin> origin)
    : values_(std::move(values)), origin_(origin) {
    if (values_.size() < 2) {
        throw std::invalid_argument("collision functions need a domain {0..n} with n >= 1");
    }
    std::size_t n = values_.size() - 1;
    for (std::size_t a = 0; a < values_.size(); ++a) {
        if (values_[a] < 1 || values_[a] > n) {
            throw std::invalid_argument("f(" + std::to_string(a) + ") = " + std::to_string(values_[a]) +
                                        " is outside 1.." + std::to_string(n));
        }
    }
}

std::vector<CollisionFunction> functions_from_plane(const IncidenceDesign &plane, const Resolution &resolution) {
    const auto &params = plane.parameters();
    const std::size_t n = params.k;
    if (params != DesignParameters{n * n, n * n + n, n + 1, n, 1}) {
        throw VerificationError("design " + to_string(params) + " is not an affine plane");
    }
    if (resolution.classes.size() != n + 1) {
        throw VerificationError("resolution has " + std::to_string(resolution.classes.size()) + " classes, expected " +
                                std::to_string(n + 1));
    }
    const auto &vertical = resolution.classes[0];
    for (std::size_t x = 0; x < n; ++x) {
        Block expected;
        for (std::size_t y = 0; y < n; ++y) {
            expected.push_back(x * n + y);
        }
        if (x >= vertical.size() || plane.block(vertical[x]) != expected) {
            throw VerificationError("class 0 is not the vertical lines x = const in order (line " + std::to_string(x) +
                                    ")");
        }
    }

    std::vector<CollisionFunction> out;
    for (std::size_t i = 1; i <= n; ++i) {
        const auto &cls = resolution.classes[i];
        for (std::size_t t = 0; t < cls.size(); ++t) {
            std::vector<std::uint32_t> values(n + 1, 0);
            values[0] = static_cast<std::uint32_t>(i);
            for (std::size_t point : plane.block(cls[t])) {
                std::size_t a = point / n + 1;
                if (values[a] != 0) {
                    throw VerificationError("line meets a vertical line twice");
                }
                values[a] = static_cast<std::uint32_t>(point % n + 1);
            }
            out.emplace_back(std::move(values), FunctionOrigin{i, t});
        }
    }
    return out;
}

std::vector<std::size_t> collision_set(const CollisionFunction &f, const CollisionFunction &g) {
    if (f.values().size() != g.values().size()) {
        throw std::invalid_argument("collision set of functions with different domains");
    }
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < f.values().size(); ++x) {
        if (f(x) == g(x)) {
            out.push_back(x);
        }
    }
    return out;
}

std::vector<CollisionFunction> all_functions(std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("all_functions needs n >= 1");
    }
    std::vector<CollisionFunction> out;
    std::vector<std::uint32_t> values(n + 1, 1);
    while (true) {
        out.emplace_back(values);
        std::size_t pos = n + 1;
        while (pos > 0 && values[pos - 1] == n) {
            values[pos - 1] = 1;
            --pos;
        }
        if (pos == 0) {
            break;
        }
        ++values[pos - 1];
    }
    return out;
}

}  // namespace meanking
