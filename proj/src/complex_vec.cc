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

#include "meanking/complex_vec.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace meanking {

ComplexVec ComplexVec::basis_vector(std::size_t dimension, std::size_t index) {
    if (index >= dimension) {
        throw std::out_of_range("basis vector index out of range");
    }
    ComplexVec v(dimension);
    v[index] = 1.0;
    return v;
}

double ComplexVec::norm() const {
    double total = 0;
    for (const auto &z : entries_) {
        total += std::norm(z);
    }
    return std::sqrt(total);
}

bool ComplexVec::all_finite() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Complex &z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

ComplexVec &ComplexVec::operator+=(const ComplexVec &other) {
    if (other.size() != size()) {
        throw std::invalid_argument("vector dimension mismatch in addition");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += other.entries_[i];
    }
    return *this;
}

ComplexVec &ComplexVec::operator-=(const ComplexVec &other) {
    if (other.size() != size()) {
        throw std::invalid_argument("vector dimension mismatch in subtraction");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= other.entries_[i];
    }
    return *this;
}

ComplexVec &ComplexVec::operator*=(Complex scale) {
    for (auto &z : entries_) {
        z *= scale;
    }
    return *this;
}

Complex inner_product(const ComplexVec &bra, const ComplexVec &ket) {
    if (bra.size() != ket.size()) {
        throw std::invalid_argument("inner product of vectors with dimensions " + std::to_string(bra.size()) +
                                    " and " + std::to_string(ket.size()));
    }
    // Written out so the compiler does not route through the NaN-aware
    // complex multiply.
    double re = 0;
    double im = 0;
    for (std::size_t i = 0; i < bra.size(); ++i) {
        const double a = bra[i].real();
        const double b = bra[i].imag();
        const double c = ket[i].real();
        const double d = ket[i].imag();
        re += a * c + b * d;
        im += a * d - b * c;
    }
    return {re, im};
}

ComplexVec conjugate(const ComplexVec &v) {
    ComplexVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = std::conj(v[i]);
    }
    return out;
}

ComplexVec tensor(const ComplexVec &a, const ComplexVec &b) {
    ComplexVec out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i * b.size() + j] = a[i] * b[j];
        }
    }
    return out;
}

ComplexVec normalized(const ComplexVec &v) {
    double n = v.norm();
    if (n == 0) {
        throw std::domain_error("cannot normalize the zero vector");
    }
    return Complex(1.0 / n) * v;
}

double max_abs_difference(const ComplexVec &a, const ComplexVec &b) {
    if (a.size() != b.size()) {
        return std::numeric_limits<double>::infinity();
    }
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

bool approx_equal(const ComplexVec &a, const ComplexVec &b, double tolerance) {
    return max_abs_difference(a, b) <= tolerance;
}

double max_gram_deviation(std::span<const ComplexVec> vectors) {
    double worst = 0;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        for (std::size_t j = i; j < vectors.size(); ++j) {
            Complex expected = i == j ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(inner_product(vectors[i], vectors[j]) - expected));
        }
    }
    return worst;
}

}  // namespace meanking
