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

#ifndef FFSUMS_POWER_SUMS_HPP
#define FFSUMS_POWER_SUMS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ffsums/element_set.hpp"
#include "ffsums/field.hpp"

namespace ffsums {

// The image {x^d : x in F_q} together with the least preimage of each
// member. Its size is always 1 + (q-1)/delta for delta = gcd(d, q-1).
struct PowerImage {
  const FiniteField* field;
  std::uint64_t d;
  std::uint64_t delta;
  ElementSet elements;
  // Indexed by element code; kNoPreimage for codes outside the image.
  std::vector<std::uint32_t> least_preimage;

  static constexpr std::uint32_t kNoPreimage = 0xffffffffu;
};

PowerImage power_image(const FiniteField& field, std::uint64_t d);

// gcd(d, q-1); the d-th and delta-th power images coincide.
std::uint64_t gcd_reduce_exponent(const FiniteField& field, std::uint64_t d);

// {a x^d + b y^d : x, y in F_q}, computed from the two power images rather
// than from raw pairs. Throws ZeroCoefficientError.
ElementSet sum_of_two_powers_set(const FiniteField& field, std::uint64_t d,
                                 std::uint32_t a, std::uint32_t b);

enum class WitnessMethod { kBrute, kConstructiveWeber, kConstructiveCauchy };

struct CoverageWitness {
  std::uint32_t c;
  std::uint32_t x;
  std::uint32_t y;
};

// Whether every c is a x^d + b y^d, with either a witness per c or the list
// of unrepresented elements. Witness choice is deterministic: least x, then
// least y, in enumeration order.
struct CoverageReport {
  const FiniteField* field;
  std::uint64_t d;
  std::uint32_t a;
  std::uint32_t b;
  bool covered;
  std::vector<CoverageWitness> witnesses;     // sorted by c; empty if !covered
  std::vector<std::uint32_t> unrepresented;   // sorted; empty if covered
  WitnessMethod method;
};

// with_witnesses = false skips the per-c witness scan (the covered flag and
// unrepresented list are still exact); sweeps use that mode.
CoverageReport coverage_report(const FiniteField& field, std::uint64_t d,
                               std::uint32_t a, std::uint32_t b,
                               bool with_witnesses = true);

// x^2 + y^2 = c by Weber's case analysis (characteristic 2 via Frobenius,
// -1 a square via the displayed identity, otherwise the consecutive
// square/nonsquare pair in the prime subfield). Total: never fails, and the
// identity is re-verified before returning.
std::pair<FieldElement, FieldElement> weber_two_squares(
    const FiniteField& field, const FieldElement& c);

// a x^2 + b y^2 = c through the pigeonhole intersection of {a x^2} and
// {c - b y^2}; the least common element decides the witness. Throws
// CharacteristicTwoError and ZeroCoefficientError.
std::pair<FieldElement, FieldElement> cauchy_two_squares(
    const FiniteField& field, const FieldElement& a, const FieldElement& b,
    const FieldElement& c);

struct ThreeTermWitness {
  FieldElement x, y, z;  // all nonzero, a x^e + b y^e + c z^e = 0
  FieldElement u, v;     // the divided form: a u^e + b v^e = -c
};

// Least all-nonzero solution of a x^e + b y^e + c z^e = 0, if one exists,
// by exhaustive scan with early exit. Throws ZeroCoefficientError.
std::optional<ThreeTermWitness> three_term_diagonal_witness(
    const FiniteField& field, std::uint64_t e, const FieldElement& a,
    const FieldElement& b, const FieldElement& c);

}  // namespace ffsums

#endif  // FFSUMS_POWER_SUMS_HPP
