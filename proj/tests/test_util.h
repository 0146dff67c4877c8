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

#ifndef MEANKING_TESTS_TEST_UTIL_H
#define MEANKING_TESTS_TEST_UTIL_H

#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "meanking/complex_vec.h"

namespace meanking::test_util {

/// Every prime power up to `limit`.
inline std::vector<std::uint32_t> prime_powers_up_to(std::uint32_t limit) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t q = 2; q <= limit; ++q) {
        std::uint32_t p = 2;
        while (q % p != 0) {
            ++p;
        }
        std::uint32_t r = q;
        while (r % p == 0) {
            r /= p;
        }
        if (r == 1) {
            out.push_back(q);
        }
    }
    return out;
}

inline ComplexVec random_vec(std::mt19937_64 &rng, std::size_t dim) {
    std::normal_distribution<double> d;
    ComplexVec v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        v[i] = Complex(d(rng), d(rng));
    }
    return v;
}

/// Entries with small integer real and imaginary parts: products are exact.
inline ComplexVec random_gaussian_integer_vec(std::mt19937_64 &rng, std::size_t dim) {
    ComplexVec v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        v[i] = Complex(static_cast<double>(rng() % 7) - 3, static_cast<double>(rng() % 7) - 3);
    }
    return v;
}

}  // namespace meanking::test_util

namespace meanking {

inline void PrintTo(const ComplexVec &v, std::ostream *os) {
    *os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        *os << (i ? ", " : "") << v[i];
    }
    *os << "]";
}

}  // namespace meanking

#endif
