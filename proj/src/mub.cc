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

#include "meanking/mub.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "meanking/algebra.h"

namespace meanking {

namespace {

std::vector<ComplexVec> computational_basis(std::size_t q) {
    std::vector<ComplexVec> basis;
    for (std::size_t b = 0; b < q; ++b) {
        basis.push_back(ComplexVec::basis_vector(q, b));
    }
    return basis;
}

MubFamily qubit_family() {
    const double h = 1.0 / std::sqrt(2.0);
    const Complex i{0, 1};
    MubFamily family{2, {}};
    family.bases.push_back(computational_basis(2));
    family.bases.push_back({ComplexVec{h, h}, ComplexVec{h, -h}});
    family.bases.push_back({ComplexVec{h, h * i}, ComplexVec{h, -h * i}});
    return family;
}

}  // namespace

MubFamily mub_build(std::uint32_t q) {
    auto pm = prime_power_decomposition(q);
    if (!pm) {
        throw std::invalid_argument("no MUB construction for dimension " + std::to_string(q) +
                                    ": not a prime power");
    }
    if (q > kMaxMubDimension) {
        throw std::invalid_argument("dimension " + std::to_string(q) + " exceeds the supported maximum " +
                                    std::to_string(kMaxMubDimension));
    }
    if (q == 2) {
        return qubit_family();
    }
    if (pm->first == 2) {
        throw std::invalid_argument("unsupported even prime power " + std::to_string(q) +
                                    ": only q = 2 and odd prime powers are constructed");
    }

    FiniteField field = FiniteField::of_order(q);
    auto elements = field.elements();
    const std::uint32_t p = field.characteristic();
    const double amplitude = 1.0 / std::sqrt(static_cast<double>(q));
    std::vector<Complex> roots(p);
    for (std::uint32_t t = 0; t < p; ++t) {
        roots[t] = std::polar(1.0, 2.0 * std::numbers::pi * t / p);
    }

    MubFamily family{q, {}};
    family.bases.push_back(computational_basis(q));
    for (std::uint32_t a = 1; a <= q; ++a) {
        const FieldElement alpha = field.element(a % q);
        std::vector<ComplexVec> basis;
        for (const auto &beta : elements) {
            ComplexVec v(q);
            for (const auto &x : elements) {
                std::uint32_t phase = field.trace(alpha * x * x + beta * x);
                v[x.index()] = amplitude * roots[phase];
            }
            basis.push_back(std::move(v));
        }
        family.bases.push_back(std::move(basis));
    }
    return family;
}

MubReport verify_mub(const MubFamily &family, double tolerance) {
    MubReport report;
    const double q = static_cast<double>(family.dimension);
    double worst = -1;
    auto consider = [&](double deviation, std::size_t a, std::size_t a2, double &slot) {
        slot = std::max(slot, deviation);
        if (deviation > worst) {
            worst = deviation;
            report.worst_pair = {a, a2};
        }
    };
    bool shape_ok = family.bases.size() == family.dimension + 1;
    for (const auto &basis : family.bases) {
        shape_ok = shape_ok && basis.size() == family.dimension;
        for (const auto &v : basis) {
            shape_ok = shape_ok && v.size() == family.dimension;
        }
    }
    if (!shape_ok) {
        report.passed = false;
        report.max_orthonormality_deviation = INFINITY;
        return report;
    }
    for (std::size_t a = 0; a < family.bases.size(); ++a) {
        for (std::size_t a2 = a; a2 < family.bases.size(); ++a2) {
            for (std::size_t b = 0; b < family.dimension; ++b) {
                for (std::size_t b2 = 0; b2 < family.dimension; ++b2) {
                    Complex ip = inner_product(family.bases[a][b], family.bases[a2][b2]);
                    if (a == a2) {
                        consider(std::abs(ip - Complex(b == b2 ? 1.0 : 0.0)), a, a2,
                                 report.max_orthonormality_deviation);
                    } else {
                        consider(std::abs(std::norm(ip) - 1.0 / q), a, a2, report.max_unbiasedness_deviation);
                    }
                }
            }
        }
    }
    report.passed = report.max_deviation() < tolerance;
    return report;
}

ComplexVec entangled_state_from_basis(const std::vector<ComplexVec> &basis) {
    if (basis.empty()) {
        throw std::invalid_argument("empty basis");
    }
    std::size_t n = basis.front().size();
    ComplexVec out(n * n);
    for (const auto &v : basis) {
        out += tensor(v, conjugate(v));
    }
    return Complex(1.0 / std::sqrt(static_cast<double>(basis.size()))) * out;
}

}  // namespace meanking
