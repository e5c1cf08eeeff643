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

#ifndef FFSUMS_HARMONIC_HPP
#define FFSUMS_HARMONIC_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "ffsums/element_set.hpp"
#include "ffsums/field.hpp"
#include "ffsums/poly.hpp"
#include "ffsums/rational.hpp"

namespace ffsums {

using Complex = std::complex<double>;

// The additive character chi_a(x) = exp(2*pi*i * Tr(a x) / p). Labels run
// over the field, so the character group is indexed by element codes; the
// label 0 gives the principal character.
struct AdditiveCharacter {
  const FiniteField* field;
  std::uint32_t label;

  bool principal() const { return label == 0; }
};

Complex character_value(const AdditiveCharacter& chi, const FieldElement& x);

// A function on the character group, indexed by character label code.
struct SpectrumFunction {
  const FiniteField* field;
  std::vector<Complex> values;
};

// f-hat(chi_a) = sum_g f(g) chi_a(g), for every label a. The input vector
// is indexed by element code. Sums use pairwise accumulation.
SpectrumFunction fourier_transform(const FiniteField& field,
                                   const std::vector<Complex>& f);

// f(x) = (1/q) sum_chi f-hat(chi) chi(-x); inverse of fourier_transform.
std::vector<Complex> fourier_invert(const SpectrumFunction& spectrum);

struct PlancherelCheck {
  Complex lhs;  // <f1-hat, f2-hat>
  Complex rhs;  // q <f1, f2>
  double abs_error;
};

PlancherelCheck plancherel_check(const FiniteField& field,
                                 const std::vector<Complex>& f1,
                                 const std::vector<Complex>& f2);

// sum_g chi(P(g)); computable for any character.
Complex weil_sum(const DensePolynomial& p, const AdditiveCharacter& chi);

struct WeilBoundCheck {
  Complex sum;
  double modulus;
  double bound;  // (d-1) sqrt(q)
  double slack;
  bool holds;    // modulus <= bound + 1e-9
};

// Checks |sum_g chi(P(g))| <= (d-1) sqrt(q). Requires a nontrivial
// character (PrincipalCharacterError), 1 <= deg P < q (DegreeOutOfRange)
// and gcd(deg P, q) = 1 (DegreeNotCoprime).
WeilBoundCheck verify_weil_bound(const DensePolynomial& p,
                                 const AdditiveCharacter& chi);

// The mean-zero shift a_g : x -> 1_A(x+g) - mu(A), valued in exact
// rationals with denominator q.
struct CenteredShift {
  const ElementSet* set;
  std::uint32_t g;

  Rational value(std::uint32_t x) const {
    const FiniteField& f = set->field();
    const std::int64_t q = static_cast<std::int64_t>(f.order());
    const std::int64_t member = set->contains(f.add_code(x, g)) ? 1 : 0;
    return Rational(member * q - static_cast<std::int64_t>(set->size()), q);
  }
};

// Everything the averaging argument looks at, in exact rationals:
//   S = (1/q) sum_{g}      mu(A cap (B + P(g)))
//   T = (1/q) sum_{g != 0} mu(A cap (B + P(g)))
// with S = T + mu(A cap B)/q, and deviation = |S - mu(A) mu(B)|.
struct AveragedIntersection {
  Rational s;
  Rational t;
  Rational mu_a;
  Rational mu_b;
  Rational mu_product;
  Rational deviation;
};

AveragedIntersection averaged_intersection_deviation(const FiniteField& field,
                                                     const ElementSet& a,
                                                     const ElementSet& b,
                                                     const DensePolynomial& p);

// Deviation of P(x) = x^p + x on an extension field (degree >= 2 required):
// the polynomial whose degree is divisible by the characteristic and for
// which the averaged deviation need not decay.
AveragedIntersection counterexample_char_divides(const FiniteField& field,
                                                 const ElementSet& a,
                                                 const ElementSet& b);

// ((q^{d-1} - (q-1)^{d-1}) / q^{d-1})^{2^{-(d-1)}} for d >= 2
// (DegreeTooSmallError below that). Evaluated as d-1 repeated square roots
// so that the d = 2 value is bit-identical to error_fn_fourier.
double error_fn_elementary(std::uint64_t q, std::uint64_t d);

// (d - 1) / sqrt(q) for d >= 1.
double error_fn_fourier(std::uint64_t q, std::uint64_t d);

// Exact decision of deviation <= E(q,d) for the elementary error function,
// via a certified fixed-point lower bound on E with an exact big-integer
// fallback for small d.
bool deviation_within_elementary_bound(const Rational& deviation,
                                       std::uint64_t q, std::uint64_t d);

// Exact decision of deviation <= (d-1)/sqrt(q): integer comparison of
// squares.
bool deviation_within_fourier_bound(const Rational& deviation,
                                    std::uint64_t q, std::uint64_t d);

// Exact strict comparison error_fn_fourier(q,d) < error_fn_elementary(q,d)
// by cross-powering both sides to integer exponents. Requires d >= 2 and
// d <= 16 (RangeError beyond; the cross powers explode).
bool fourier_bound_strictly_smaller(std::uint64_t q, std::uint64_t d);

struct LemmaCheck {
  AveragedIntersection avg;
  double bound;
  double slack;   // bound - deviation, in doubles, for reporting
  bool holds;     // exact decision
};

// Averaging bound for P = c x^d with 1 < d < char (DegreeOutOfRangeError)
// and c != 0 (ZeroCoefficientError), against the elementary error function.
LemmaCheck verify_lemma8(const FiniteField& field, const ElementSet& a,
                         const ElementSet& b, std::uint32_t c,
                         std::uint64_t d);

// Averaging bound for arbitrary P with deg P >= 1 (DegreeOutOfRangeError)
// coprime to q (DegreeNotCoprimeError), against (d-1)/sqrt(q).
LemmaCheck verify_lemma12(const FiniteField& field, const ElementSet& a,
                          const ElementSet& b, const DensePolynomial& p);

}  // namespace ffsums

#endif  // FFSUMS_HARMONIC_HPP
