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

#ifndef MEANKING_ALGEBRA_H
#define MEANKING_ALGEBRA_H

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace meanking {

/// Largest field order the library will build tables for.
inline constexpr std::uint32_t kMaxFieldOrder = 256;

bool is_prime(std::uint64_t n);

/// Splits q = p^m. Returns nullopt when q is not a prime power (or q < 2).
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power_decomposition(std::uint64_t q);

/// Polynomials over GF(p) are coefficient lists, lowest degree first.
using Polynomial = std::vector<std::uint32_t>;

/// Exhaustive trial division by every monic polynomial of degree <= deg/2.
/// `poly` must have a nonzero leading coefficient.
bool is_irreducible(std::uint32_t p, const Polynomial &poly);

namespace detail {
struct FieldTables;
}

class FiniteField;

/// An element of GF(p^m). Elements are encoded by the integer whose base-p
/// digits are the polynomial coefficients (constant term least significant),
/// so enumerating indices 0..q-1 enumerates the coefficient vectors in
/// lexicographic order.
class FieldElement {
   public:
    std::uint32_t index() const {
        return index_;
    }
    bool is_zero() const {
        return index_ == 0;
    }
    Polynomial coefficients() const;
    FiniteField field() const;

    FieldElement operator+(const FieldElement &other) const;
    FieldElement operator-(const FieldElement &other) const;
    FieldElement operator*(const FieldElement &other) const;
    FieldElement operator/(const FieldElement &other) const;
    FieldElement operator-() const;
    /// Throws std::domain_error for zero.
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t exponent) const;

    bool operator==(const FieldElement &other) const;

   private:
    friend class FiniteField;
    FieldElement(std::shared_ptr<const detail::FieldTables> tables, std::uint32_t index)
        : tables_(std::move(tables)), index_(index) {
    }
    void require_same_field(const FieldElement &other) const;

    std::shared_ptr<const detail::FieldTables> tables_;
    std::uint32_t index_;
};

/// GF(p^m) with the lexicographically smallest monic irreducible modulus.
/// Copies share the same immutable arithmetic tables.
class FiniteField {
   public:
    /// Throws std::invalid_argument if p is not prime, m == 0, or p^m exceeds
    /// kMaxFieldOrder.
    static FiniteField create(std::uint32_t p, std::uint32_t m);
    /// Same as create() after splitting q into p^m.
    static FiniteField of_order(std::uint32_t q);

    std::uint32_t characteristic() const;
    std::uint32_t degree() const;
    std::uint32_t order() const;
    /// Monic, lowest degree first, length degree() + 1.
    const Polynomial &modulus() const;

    FieldElement element(std::uint32_t index) const;
    FieldElement from_coefficients(const Polynomial &coefficients) const;
    FieldElement zero() const {
        return element(0);
    }
    FieldElement one() const {
        return element(1);
    }
    /// All q elements in index order.
    std::vector<FieldElement> elements() const;

    /// Absolute trace to GF(p): x + x^p + ... + x^(p^(m-1)).
    std::uint32_t trace(const FieldElement &x) const;

    bool operator==(const FiniteField &other) const;

   private:
    friend class FieldElement;
    explicit FiniteField(std::shared_ptr<const detail::FieldTables> tables) : tables_(std::move(tables)) {
    }
    std::shared_ptr<const detail::FieldTables> tables_;
};

/// Number of d-dimensional subspaces of GF(q)^m. Throws std::invalid_argument
/// when d is outside [0, m] or q < 2, std::overflow_error if the value does
/// not fit in 64 bits.
std::uint64_t gaussian_binomial(int m, int d, std::uint64_t q);

}  // namespace meanking

#endif
