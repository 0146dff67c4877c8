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

#ifndef MEANKING_COMPLEX_VEC_H
#define MEANKING_COMPLEX_VEC_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace meanking {

using Complex = std::complex<double>;

/// Absolute tolerance used for every floating point equality in the library.
inline constexpr double kTolerance = 1e-9;

/// Dense amplitude vector in the computational basis.
class ComplexVec {
   public:
    ComplexVec() = default;
    explicit ComplexVec(std::size_t dimension) : entries_(dimension) {
    }
    explicit ComplexVec(std::vector<Complex> entries) : entries_(std::move(entries)) {
    }
    ComplexVec(std::initializer_list<Complex> entries) : entries_(entries) {
    }

    static ComplexVec basis_vector(std::size_t dimension, std::size_t index);

    std::size_t size() const {
        return entries_.size();
    }
    Complex &operator[](std::size_t i) {
        return entries_[i];
    }
    const Complex &operator[](std::size_t i) const {
        return entries_[i];
    }
    std::span<const Complex> entries() const {
        return entries_;
    }
    auto begin() const {
        return entries_.begin();
    }
    auto end() const {
        return entries_.end();
    }

    double norm() const;
    bool all_finite() const;

    ComplexVec &operator+=(const ComplexVec &other);
    ComplexVec &operator-=(const ComplexVec &other);
    ComplexVec &operator*=(Complex scale);

    friend ComplexVec operator+(ComplexVec a, const ComplexVec &b) {
        return a += b;
    }
    friend ComplexVec operator-(ComplexVec a, const ComplexVec &b) {
        return a -= b;
    }
    friend ComplexVec operator*(Complex scale, ComplexVec v) {
        return v *= scale;
    }

    bool operator==(const ComplexVec &other) const = default;

   private:
    std::vector<Complex> entries_;
};

/// <bra|ket>, conjugate-linear in the first argument.
/// Throws std::invalid_argument on dimension mismatch.
Complex inner_product(const ComplexVec &bra, const ComplexVec &ket);

ComplexVec conjugate(const ComplexVec &v);

/// Kronecker product; entry i * dim(b) + j is a[i] * b[j].
ComplexVec tensor(const ComplexVec &a, const ComplexVec &b);

ComplexVec normalized(const ComplexVec &v);

/// Largest entrywise modulus of a - b (infinity on dimension mismatch).
double max_abs_difference(const ComplexVec &a, const ComplexVec &b);

bool approx_equal(const ComplexVec &a, const ComplexVec &b, double tolerance = kTolerance);

/// max over (i, j) of |<v_i|v_j> - delta_ij|.
double max_gram_deviation(std::span<const ComplexVec> vectors);

}  // namespace meanking

#endif
