// Copyright 2026 The ffsums Authors
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

#ifndef FFSUMS_FIELD_HPP
#define FFSUMS_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ffsums/errors.hpp"

namespace ffsums {

// Largest field order the library will construct. Large enough for every
// sweep in the test suite; guards the O(q^2) brute-force loops.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t n);

// Smallest prime factor of n >= 2 (trial division).
std::uint64_t smallest_prime_factor(std::uint64_t n);

class FiniteField;

// An element of a specific FiniteField. Canonically represented by its
// code: the coefficient vector of the residue class read as a base-p
// numeral, constant term least significant. Codes run 0..q-1 and give the
// fixed enumeration order used for every "least element" tie-break.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const FiniteField* field, std::uint32_t code)
      : field_(field), code_(code) {}

  std::uint32_t code() const { return code_; }
  const FiniteField& field() const { return *field_; }

  // Coefficient vector c_0..c_{r-1}, every entry reduced mod p.
  std::vector<std::uint32_t> rep() const;

  bool is_zero() const { return code_ == 0; }

  friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator/(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x);
  friend bool operator==(const FieldElement& x, const FieldElement& y);
  friend bool operator!=(const FieldElement& x, const FieldElement& y);
  // Enumeration order (code order); only meaningful within one field.
  friend bool operator<(const FieldElement& x, const FieldElement& y) {
    return x.code_ < y.code_;
  }

 private:
  const FiniteField* field_ = nullptr;
  std::uint32_t code_ = 0;
};

FieldElement pow(const FieldElement& x, std::uint64_t k);
FieldElement inv(const FieldElement& x);

// Tr(x) = x + x^p + ... + x^{p^{r-1}}, read off as an integer in [0, p).
std::uint64_t absolute_trace(const FieldElement& x);

// The finite field F_q = F_p[t]/(m(t)) with q = p^r, fully determined by
// (p, r): the modulus is the lexicographically least monic irreducible of
// degree r (coefficients compared high-degree-first), so two constructions
// with equal (p, r) are interchangeable. Immutable after construction and
// safe to share across threads.
class FiniteField {
 public:
  // Builds F_{p^r}. Throws NotPrimeError, RangeError, TooLargeError.
  static std::shared_ptr<const FiniteField> make(std::uint64_t p,
                                                 std::uint32_t r);
  // Convenience: factors q and delegates to make(p, r). Throws RangeError
  // if q is not a prime power.
  static std::shared_ptr<const FiniteField> make_order(std::uint64_t q);

  std::uint64_t characteristic() const { return p_; }
  std::uint32_t degree() const { return r_; }
  std::uint64_t order() const { return q_; }

  // Monic modulus, constant term first, length r+1. For r = 1 this is the
  // identity polynomial t, i.e. {0, 1}.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement element(std::uint64_t code) const;
  FieldElement from_coeffs(const std::vector<std::uint64_t>& coeffs) const;
  // Embedding of an ordinary integer via repeated addition of 1; lands in
  // the prime subfield.
  FieldElement from_integer(std::int64_t n) const;
  FieldElement zero() const { return FieldElement(this, 0); }
  FieldElement one() const { return FieldElement(this, q_ > 1 ? 1 : 0); }

  // All q elements in canonical order: codes ascending, zero first.
  std::vector<FieldElement> enumerate() const;

  // Least element of multiplicative order exactly q-1.
  FieldElement multiplicative_generator() const {
    return FieldElement(this, generator_);
  }

  // Code-level arithmetic. All inputs must be < q.
  std::uint32_t add_code(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub_code(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_code(std::uint32_t a) const;
  std::uint32_t mul_code(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv_code(std::uint32_t a) const;  // throws DivisionByZeroError
  std::uint32_t pow_code(std::uint32_t a, std::uint64_t k) const;  // 0^0 = 1
  std::uint64_t trace_code(std::uint32_t a) const;

  bool is_square_code(std::uint32_t a) const;
  // Least square root when one exists (both roots differ by sign; the
  // smaller code is returned). nullopt for quadratic non-residues.
  std::optional<std::uint32_t> sqrt_code(std::uint32_t a) const;

  // True when other is the very same field or an equivalent construction
  // (same p, r, modulus).
  bool same_field(const FiniteField& other) const;

 private:
  FiniteField(std::uint64_t p, std::uint32_t r, std::uint64_t q,
              std::vector<std::uint32_t> modulus);

  std::uint32_t mul_direct(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow_direct(std::uint32_t a, std::uint64_t k) const;
  std::uint32_t find_generator() const;
  void build_tables();

  std::uint64_t p_;
  std::uint32_t r_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t generator_ = 0;

  // Discrete-log tables, built at construction for q <= kTableLimit. An
  // internal optimization only; observable behavior is identical with or
  // without them.
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 16;
  std::vector<std::uint32_t> exp_;    // exp_[k] = generator^k, k in [0, q-1)
  std::vector<std::uint32_t> log_;    // inverse of exp_; log_[0] unused
  std::vector<std::uint32_t> trace_;  // trace_[code]
};

void require_same_field(const FieldElement& x, const FieldElement& y);

}  // namespace ffsums

#endif  // FFSUMS_FIELD_HPP
