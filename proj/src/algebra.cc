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

#include "meanking/algebra.h"

#include <stdexcept>
#include <string>

namespace meanking {

namespace detail {

struct FieldTables {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t q = 0;
    Polynomial modulus;
    std::vector<std::uint32_t> add;  // q * q
    std::vector<std::uint32_t> mul;  // q * q
    std::vector<std::uint32_t> neg;
    std::vector<std::uint32_t> inv;  // inv[0] unused
    std::vector<std::uint32_t> trace;
};

}  // namespace detail

namespace {

Polynomial trimmed(Polynomial poly) {
    while (!poly.empty() && poly.back() == 0) {
        poly.pop_back();
    }
    return poly;
}

std::uint32_t inverse_mod_prime(std::uint32_t a, std::uint32_t p) {
    for (std::uint32_t b = 1; b < p; ++b) {
        if (a * b % p == 1) {
            return b;
        }
    }
    throw std::domain_error("no inverse mod p");
}

// Remainder of `dividend` modulo `divisor` over GF(p). Divisor must be trimmed.
Polynomial poly_mod(Polynomial dividend, const Polynomial &divisor, std::uint32_t p) {
    std::size_t dd = divisor.size() - 1;
    std::uint32_t lead_inv = inverse_mod_prime(divisor.back(), p);
    for (std::size_t i = dividend.size(); i-- > dd;) {
        std::uint32_t c = dividend[i] * lead_inv % p;
        if (c == 0) {
            continue;
        }
        for (std::size_t j = 0; j <= dd; ++j) {
            std::uint32_t sub = c * divisor[j] % p;
            std::size_t k = i - dd + j;
            dividend[k] = (dividend[k] + p - sub) % p;
        }
    }
    dividend.resize(std::min(dividend.size(), dd));
    return dividend;
}

Polynomial digits_of(std::uint32_t index, std::uint32_t p, std::uint32_t m) {
    Polynomial out(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        out[i] = index % p;
        index /= p;
    }
    return out;
}

std::uint32_t index_of(const Polynomial &coefficients, std::uint32_t p) {
    std::uint32_t index = 0;
    for (std::size_t i = coefficients.size(); i-- > 0;) {
        index = index * p + coefficients[i];
    }
    return index;
}

Polynomial mul_mod(const Polynomial &a, const Polynomial &b, const Polynomial &modulus, std::uint32_t p) {
    Polynomial product(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            product[i + j] = (product[i + j] + a[i] * b[j]) % p;
        }
    }
    Polynomial reduced = poly_mod(std::move(product), modulus, p);
    reduced.resize(modulus.size() - 1, 0);
    return reduced;
}

Polynomial smallest_irreducible(std::uint32_t p, std::uint32_t m) {
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        count *= p;
    }
    for (std::uint32_t low = 0; low < count; ++low) {
        Polynomial candidate = digits_of(low, p, m);
        candidate.push_back(1);
        if (is_irreducible(p, candidate)) {
            return candidate;
        }
    }
    throw std::logic_error("no monic irreducible polynomial of degree " + std::to_string(m));
}

std::shared_ptr<const detail::FieldTables> build_tables(std::uint32_t p, std::uint32_t m) {
    auto t = std::make_shared<detail::FieldTables>();
    t->p = p;
    t->m = m;
    t->q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        t->q *= p;
    }
    t->modulus = smallest_irreducible(p, m);
    std::uint32_t q = t->q;

    std::vector<Polynomial> digits(q);
    for (std::uint32_t i = 0; i < q; ++i) {
        digits[i] = digits_of(i, p, m);
    }
    t->add.resize(std::size_t{q} * q);
    t->mul.resize(std::size_t{q} * q);
    t->neg.resize(q);
    t->inv.assign(q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
        Polynomial negated(m);
        for (std::uint32_t i = 0; i < m; ++i) {
            negated[i] = (p - digits[a][i]) % p;
        }
        t->neg[a] = index_of(negated, p);
        for (std::uint32_t b = 0; b < q; ++b) {
            Polynomial sum(m);
            for (std::uint32_t i = 0; i < m; ++i) {
                sum[i] = (digits[a][i] + digits[b][i]) % p;
            }
            t->add[a * q + b] = index_of(sum, p);
            t->mul[a * q + b] = index_of(mul_mod(digits[a], digits[b], t->modulus, p), p);
        }
    }
    for (std::uint32_t a = 1; a < q; ++a) {
        for (std::uint32_t b = 1; b < q; ++b) {
            if (t->mul[a * q + b] == 1) {
                t->inv[a] = b;
                break;
            }
        }
        if (t->inv[a] == 0) {
            throw std::logic_error("modulus is not irreducible: element without inverse");
        }
    }
    t->trace.resize(q);
    for (std::uint32_t a = 0; a < q; ++a) {
        std::uint32_t frob = a;
        std::uint32_t acc = a;
        for (std::uint32_t i = 1; i < m; ++i) {
            std::uint32_t power = 1;
            for (std::uint32_t j = 0; j < p; ++j) {
                power = t->mul[power * q + frob];
            }
            frob = power;
            acc = t->add[acc * q + frob];
        }
        if (acc >= p) {
            throw std::logic_error("trace left the prime subfield");
        }
        t->trace[a] = acc;
    }
    return t;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power_decomposition(std::uint64_t q) {
    if (q < 2) {
        return std::nullopt;
    }
    std::uint64_t p = 2;
    while (q % p != 0) {
        ++p;
    }
    std::uint32_t m = 0;
    while (q % p == 0) {
        q /= p;
        ++m;
    }
    if (q != 1 || p > UINT32_MAX) {
        return std::nullopt;
    }
    return std::pair{static_cast<std::uint32_t>(p), m};
}

bool is_irreducible(std::uint32_t p, const Polynomial &poly) {
    Polynomial f = trimmed(poly);
    if (f.size() < 2) {
        return false;
    }
    std::size_t degree = f.size() - 1;
    for (std::size_t d = 1; d <= degree / 2; ++d) {
        std::uint32_t count = 1;
        for (std::size_t i = 0; i < d; ++i) {
            count *= p;
        }
        for (std::uint32_t low = 0; low < count; ++low) {
            Polynomial divisor = digits_of(low, p, static_cast<std::uint32_t>(d));
            divisor.push_back(1);
            if (trimmed(poly_mod(f, divisor, p)).empty()) {
                return false;
            }
        }
    }
    return true;
}

// FiniteField

FiniteField FiniteField::create(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) {
        throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    }
    if (m == 0) {
        throw std::invalid_argument("field extension degree must be at least 1");
    }
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxFieldOrder) {
            throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(m) +
                                        " exceeds the supported maximum " + std::to_string(kMaxFieldOrder));
        }
    }
    return FiniteField(build_tables(p, m));
}

FiniteField FiniteField::of_order(std::uint32_t q) {
    auto pm = prime_power_decomposition(q);
    if (!pm) {
        throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    }
    return create(pm->first, pm->second);
}

std::uint32_t FiniteField::characteristic() const {
    return tables_->p;
}
std::uint32_t FiniteField::degree() const {
    return tables_->m;
}
std::uint32_t FiniteField::order() const {
    return tables_->q;
}
const Polynomial &FiniteField::modulus() const {
    return tables_->modulus;
}

FieldElement FiniteField::element(std::uint32_t index) const {
    if (index >= tables_->q) {
        throw std::out_of_range("field element index " + std::to_string(index) + " out of range");
    }
    return FieldElement(tables_, index);
}

FieldElement FiniteField::from_coefficients(const Polynomial &coefficients) const {
    Polynomial c = trimmed(coefficients);
    if (c.size() > tables_->m) {
        c = poly_mod(c, tables_->modulus, tables_->p);
    }
    for (auto &x : c) {
        x %= tables_->p;
    }
    return element(index_of(c, tables_->p));
}

std::vector<FieldElement> FiniteField::elements() const {
    std::vector<FieldElement> out;
    out.reserve(tables_->q);
    for (std::uint32_t i = 0; i < tables_->q; ++i) {
        out.push_back(FieldElement(tables_, i));
    }
    return out;
}

std::uint32_t FiniteField::trace(const FieldElement &x) const {
    FieldElement(tables_, 0).require_same_field(x);
    return tables_->trace[x.index()];
}

bool FiniteField::operator==(const FiniteField &other) const {
    return tables_ == other.tables_ || (tables_->p == other.tables_->p && tables_->modulus == other.tables_->modulus);
}

// FieldElement

FiniteField FieldElement::field() const {
    return FiniteField(tables_);
}

Polynomial FieldElement::coefficients() const {
    return digits_of(index_, tables_->p, tables_->m);
}

void FieldElement::require_same_field(const FieldElement &other) const {
    if (tables_ != other.tables_ && (tables_->p != other.tables_->p || tables_->modulus != other.tables_->modulus)) {
        throw std::invalid_argument("field elements belong to different fields");
    }
}

FieldElement FieldElement::operator+(const FieldElement &other) const {
    require_same_field(other);
    return FieldElement(tables_, tables_->add[index_ * tables_->q + other.index_]);
}

FieldElement FieldElement::operator-(const FieldElement &other) const {
    return *this + (-other);
}

FieldElement FieldElement::operator*(const FieldElement &other) const {
    require_same_field(other);
    return FieldElement(tables_, tables_->mul[index_ * tables_->q + other.index_]);
}

FieldElement FieldElement::operator/(const FieldElement &other) const {
    return *this * other.inverse();
}

FieldElement FieldElement::operator-() const {
    return FieldElement(tables_, tables_->neg[index_]);
}

FieldElement FieldElement::inverse() const {
    if (index_ == 0) {
        throw std::domain_error("inverse of zero field element");
    }
    return FieldElement(tables_, tables_->inv[index_]);
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
    FieldElement result(tables_, 1);
    FieldElement base = *this;
    while (exponent != 0) {
        if (exponent & 1) {
            result = result * base;
        }
        base = base * base;
        exponent >>= 1;
    }
    return result;
}

bool FieldElement::operator==(const FieldElement &other) const {
    require_same_field(other);
    return index_ == other.index_;
}

std::uint64_t gaussian_binomial(int m, int d, std::uint64_t q) {
    if (m < 0 || d < 0 || d > m) {
        throw std::invalid_argument("gaussian_binomial requires 0 <= d <= m");
    }
    if (q < 2) {
        throw std::invalid_argument("gaussian_binomial requires q >= 2");
    }
    // Pascal-type recurrence [n, j] = [n-1, j-1] + q^j [n-1, j]; stays in integers.
    std::vector<std::uint64_t> row(d + 1, 0);
    row[0] = 1;
    for (int n = 1; n <= m; ++n) {
        for (int j = std::min(n, d); j >= 1; --j) {
            std::uint64_t qj = 1;
            for (int i = 0; i < j; ++i) {
                if (__builtin_mul_overflow(qj, q, &qj)) {
                    throw std::overflow_error("gaussian_binomial overflow");
                }
            }
            std::uint64_t term;
            if (__builtin_mul_overflow(qj, row[j], &term) || __builtin_add_overflow(term, row[j - 1], &row[j])) {
                throw std::overflow_error("gaussian_binomial overflow");
            }
        }
    }
    return row[d];
}

}  // namespace meanking
