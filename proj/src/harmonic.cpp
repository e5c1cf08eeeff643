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

#include "ffsums/harmonic.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <numbers>
#include <numeric>

namespace ffsums {

namespace {

using boost::multiprecision::cpp_int;
using u128 = unsigned __int128;

// Pairwise summation keeps the rounding error logarithmic in the number of
// unit-modulus terms.
Complex pairwise_sum(const Complex* data, std::size_t n) {
  if (n <= 32) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) acc += data[i];
    return acc;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

Complex pairwise_sum(const std::vector<Complex>& v) {
  return pairwise_sum(v.data(), v.size());
}

// The p-th roots of unity exp(2*pi*i*k/p), k = 0..p-1.
std::vector<Complex> unit_roots(std::uint64_t p) {
  std::vector<Complex> roots(p);
  for (std::uint64_t k = 0; k < p; ++k) {
    roots[k] = std::polar(
        1.0, 2.0 * std::numbers::pi * static_cast<double>(k) /
                 static_cast<double>(p));
  }
  roots[0] = Complex{1.0, 0.0};
  return roots;
}

void require_sized(const FiniteField& field, const std::vector<Complex>& f) {
  if (f.size() != field.order()) {
    throw RangeError("function vector must have one value per element");
  }
}

std::uint64_t isqrt_u128(u128 n) {
  if (n == 0) return 0;
  // Seed from floating point, then correct; the loop body runs a few times.
  long double approx = sqrtl(static_cast<long double>(n));
  u128 x = static_cast<u128>(approx);
  while (x > 0 && x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return static_cast<std::uint64_t>(x);
}

// Upper bound on a*b in Q0.64 fixed point.
std::uint64_t mul_up(std::uint64_t a, std::uint64_t b) {
  const u128 prod = static_cast<u128>(a) * b;
  const u128 up = (prod + ((static_cast<u128>(1) << 64) - 1)) >> 64;
  return static_cast<std::uint64_t>(up);
}

// Certified lower bound, in Q0.64 fixed point, of
// (1 - ((q-1)/q)^{d-1})^{2^{-(d-1)}}.
std::uint64_t elementary_bound_lower_q64(std::uint64_t q, std::uint64_t d) {
  // Upper bound of (q-1)/q.
  const u128 scaled = (static_cast<u128>(q - 1) << 64) + q - 1;
  std::uint64_t base = static_cast<std::uint64_t>(scaled / q);
  // Upper bound of ((q-1)/q)^{d-1} by square-and-multiply with upward
  // rounding.
  std::uint64_t acc = 0;  // sentinel: 0 means "one" until first multiply
  std::uint64_t e = d - 1;
  bool acc_set = false;
  while (e > 0) {
    if (e & 1) {
      acc = acc_set ? mul_up(acc, base) : base;
      acc_set = true;
    }
    e >>= 1;
    if (e > 0) base = mul_up(base, base);
  }
  const std::uint64_t pow_up = acc_set ? acc : 0;
  // Lower bound of the ratio 1 - pow.
  std::uint64_t value = static_cast<std::uint64_t>(
      ((static_cast<u128>(1) << 64) - pow_up));
  // d-1 floor square roots keep it a lower bound.
  for (std::uint64_t i = 0; i + 1 < d; ++i) {
    value = isqrt_u128(static_cast<u128>(value) << 64);
  }
  return value;
}

DensePolynomial monomial_checked(const FiniteField& field, std::uint32_t c,
                                 std::uint64_t d) {
  if (c == 0) throw ZeroCoefficientError("leading coefficient must be nonzero");
  return DensePolynomial::monomial(&field, c, static_cast<std::uint32_t>(d));
}

}  // namespace

Complex character_value(const AdditiveCharacter& chi, const FieldElement& x) {
  if (!chi.field->same_field(x.field())) {
    throw FieldMismatchError("character and argument from different fields");
  }
  const FiniteField& f = *chi.field;
  const std::uint64_t t = f.trace_code(f.mul_code(chi.label, x.code()));
  if (t == 0) return Complex{1.0, 0.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(t) /
                             static_cast<double>(f.characteristic()));
}

SpectrumFunction fourier_transform(const FiniteField& field,
                                   const std::vector<Complex>& f) {
  require_sized(field, f);
  const std::uint64_t q = field.order();
  const std::vector<Complex> roots = unit_roots(field.characteristic());
  SpectrumFunction out{&field, std::vector<Complex>(q)};
  std::vector<Complex> terms(q);
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t g = 0; g < q; ++g) {
      const std::uint64_t t = field.trace_code(
          field.mul_code(static_cast<std::uint32_t>(a),
                         static_cast<std::uint32_t>(g)));
      terms[g] = f[g] * roots[t];
    }
    out.values[a] = pairwise_sum(terms);
  }
  return out;
}

std::vector<Complex> fourier_invert(const SpectrumFunction& spectrum) {
  const FiniteField& field = *spectrum.field;
  require_sized(field, spectrum.values);
  const std::uint64_t q = field.order();
  const std::vector<Complex> roots = unit_roots(field.characteristic());
  std::vector<Complex> out(q);
  std::vector<Complex> terms(q);
  for (std::uint64_t x = 0; x < q; ++x) {
    for (std::uint64_t a = 0; a < q; ++a) {
      // chi_a(-x) = conj(chi_a(x))
      const std::uint64_t t = field.trace_code(
          field.mul_code(static_cast<std::uint32_t>(a),
                         static_cast<std::uint32_t>(x)));
      terms[a] = spectrum.values[a] * std::conj(roots[t]);
    }
    out[x] = pairwise_sum(terms) / static_cast<double>(q);
  }
  return out;
}

PlancherelCheck plancherel_check(const FiniteField& field,
                                 const std::vector<Complex>& f1,
                                 const std::vector<Complex>& f2) {
  require_sized(field, f1);
  require_sized(field, f2);
  const std::uint64_t q = field.order();
  const SpectrumFunction s1 = fourier_transform(field, f1);
  const SpectrumFunction s2 = fourier_transform(field, f2);
  std::vector<Complex> terms(q);
  for (std::uint64_t a = 0; a < q; ++a) {
    terms[a] = s1.values[a] * std::conj(s2.values[a]);
  }
  const Complex lhs = pairwise_sum(terms) / static_cast<double>(q);
  for (std::uint64_t g = 0; g < q; ++g) {
    terms[g] = f1[g] * std::conj(f2[g]);
  }
  const Complex rhs = pairwise_sum(terms);  // q * (1/q) * sum
  return PlancherelCheck{lhs, rhs, std::abs(lhs - rhs)};
}

Complex weil_sum(const DensePolynomial& p, const AdditiveCharacter& chi) {
  const FiniteField& field = p.field();
  if (!field.same_field(*chi.field)) {
    throw FieldMismatchError("polynomial and character fields differ");
  }
  const std::uint64_t q = field.order();
  const std::vector<Complex> roots = unit_roots(field.characteristic());
  std::vector<Complex> terms(q);
  for (std::uint64_t g = 0; g < q; ++g) {
    const std::uint32_t v = p.eval(static_cast<std::uint32_t>(g));
    terms[g] = roots[field.trace_code(field.mul_code(chi.label, v))];
  }
  return pairwise_sum(terms);
}

WeilBoundCheck verify_weil_bound(const DensePolynomial& p,
                                 const AdditiveCharacter& chi) {
  if (chi.principal()) {
    throw PrincipalCharacterError(
        "bound verification needs a nontrivial character");
  }
  const FiniteField& field = p.field();
  const std::uint64_t q = field.order();
  const int deg = p.degree();
  if (deg < 1 || static_cast<std::uint64_t>(deg) >= q) {
    throw DegreeOutOfRangeError("need 1 <= deg P < q");
  }
  if (std::gcd(static_cast<std::uint64_t>(deg), q) != 1) {
    throw DegreeNotCoprimeError("deg P must be coprime to q");
  }
  const Complex sum = weil_sum(p, chi);
  const double modulus = std::abs(sum);
  const double bound = static_cast<double>(deg - 1) *
                       std::sqrt(static_cast<double>(q));
  return WeilBoundCheck{sum, modulus, bound, bound - modulus,
                        modulus <= bound + 1e-9};
}

AveragedIntersection averaged_intersection_deviation(const FiniteField& field,
                                                     const ElementSet& a,
                                                     const ElementSet& b,
                                                     const DensePolynomial& p) {
  const std::uint64_t q = field.order();
  std::uint64_t total = 0;       // sum over all g of |A cap (B + P(g))|
  std::uint64_t total_nonzero = 0;
  for (std::uint64_t g = 0; g < q; ++g) {
    const std::uint32_t shift = p.eval(static_cast<std::uint32_t>(g));
    std::uint64_t count = 0;
    for (const std::uint32_t x : b.members()) {
      if (a.contains(field.add_code(x, shift))) ++count;
    }
    total += count;
    if (g != 0) total_nonzero += count;
  }
  const std::int64_t qq = static_cast<std::int64_t>(q) *
                          static_cast<std::int64_t>(q);
  AveragedIntersection out;
  out.s = Rational(static_cast<std::int64_t>(total), qq);
  out.t = Rational(static_cast<std::int64_t>(total_nonzero), qq);
  out.mu_a = Rational(static_cast<std::int64_t>(a.size()),
                      static_cast<std::int64_t>(q));
  out.mu_b = Rational(static_cast<std::int64_t>(b.size()),
                      static_cast<std::int64_t>(q));
  out.mu_product = out.mu_a * out.mu_b;
  out.deviation = (out.s - out.mu_product).abs();
  return out;
}

AveragedIntersection counterexample_char_divides(const FiniteField& field,
                                                 const ElementSet& a,
                                                 const ElementSet& b) {
  if (field.degree() < 2) {
    throw RangeError("x^p + x is only probed on extension fields");
  }
  std::vector<std::uint32_t> coeffs(field.characteristic() + 1, 0);
  coeffs[1] = 1;
  coeffs[field.characteristic()] = 1;
  const DensePolynomial p(&field, std::move(coeffs));
  return averaged_intersection_deviation(field, a, b, p);
}

double error_fn_elementary(std::uint64_t q, std::uint64_t d) {
  if (d < 2) throw DegreeTooSmallError("elementary error function needs d >= 2");
  if (q < 2) throw RangeError("need q >= 2");
  double ratio;
  const double bits = static_cast<double>(d - 1) *
                      std::log2(static_cast<double>(q));
  if (bits <= 62.0) {
    std::uint64_t qe = 1, q1e = 1;
    for (std::uint64_t i = 0; i + 1 < d; ++i) {
      qe *= q;
      q1e *= q - 1;
    }
    ratio = static_cast<double>(qe - q1e) / static_cast<double>(qe);
  } else {
    ratio = -std::expm1(static_cast<double>(d - 1) *
                        std::log1p(-1.0 / static_cast<double>(q)));
  }
  double value = ratio;
  for (std::uint64_t i = 0; i + 1 < d; ++i) value = std::sqrt(value);
  return value;
}

double error_fn_fourier(std::uint64_t q, std::uint64_t d) {
  if (d < 1) throw DegreeTooSmallError("fourier error function needs d >= 1");
  if (q < 2) throw RangeError("need q >= 2");
  return static_cast<double>(d - 1) * std::sqrt(1.0 / static_cast<double>(q));
}

bool deviation_within_elementary_bound(const Rational& deviation,
                                       std::uint64_t q, std::uint64_t d) {
  if (d < 2) throw DegreeTooSmallError("elementary error function needs d >= 2");
  const Rational dev = deviation.abs();
  if (dev.is_zero()) return true;
  if (dev > Rational(1)) return false;
  // Certified comparison against a lower bound of the error function.
  const std::uint64_t lower = elementary_bound_lower_q64(q, d);
  const u128 lhs = static_cast<u128>(dev.num()) << 64;
  const u128 rhs = static_cast<u128>(lower) * static_cast<u128>(dev.den());
  if (lhs <= rhs) return true;
  // Exact fallback: dev^{2^{d-1}} <= (q^{d-1} - (q-1)^{d-1}) / q^{d-1}.
  if (d <= 9) {
    const std::uint64_t e = std::uint64_t{1} << (d - 1);
    cpp_int num = boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(d - 1)) -
                  boost::multiprecision::pow(cpp_int(q - 1), static_cast<unsigned>(d - 1));
    cpp_int den = boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(d - 1));
    cpp_int dn = boost::multiprecision::pow(cpp_int(dev.num()), static_cast<unsigned>(e));
    cpp_int dd = boost::multiprecision::pow(cpp_int(dev.den()), static_cast<unsigned>(e));
    return dn * den <= num * dd;
  }
  return false;
}

bool deviation_within_fourier_bound(const Rational& deviation,
                                    std::uint64_t q, std::uint64_t d) {
  if (d < 1) throw DegreeTooSmallError("fourier error function needs d >= 1");
  const Rational dev = deviation.abs();
  if (dev.is_zero()) return true;
  // dev <= (d-1)/sqrt(q)  <=>  dev^2 q <= (d-1)^2.
  const cpp_int lhs = cpp_int(dev.num()) * dev.num() * q;
  const cpp_int rhs = cpp_int(d - 1) * (d - 1) * dev.den() * dev.den();
  return lhs <= rhs;
}

bool fourier_bound_strictly_smaller(std::uint64_t q, std::uint64_t d) {
  if (d < 2) throw DegreeTooSmallError("comparison needs d >= 2");
  if (d > 16) throw RangeError("exact comparison supported for d <= 16");
  if (q < 2) throw RangeError("need q >= 2");
  // Raise both to the power 2^{d-1}:
  //   ((d-1)/sqrt(q))^{2^{d-1}} = (d-1)^{2^{d-1}} / q^{2^{d-2}}
  //   (elementary)^{2^{d-1}}    = (q^{d-1} - (q-1)^{d-1}) / q^{d-1}
  const unsigned e = 1u << (d - 1);
  const cpp_int lhs = boost::multiprecision::pow(cpp_int(d - 1), e) *
                      boost::multiprecision::pow(cpp_int(q),
                                                 static_cast<unsigned>(d - 1));
  const cpp_int rhs =
      (boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(d - 1)) -
       boost::multiprecision::pow(cpp_int(q - 1),
                                  static_cast<unsigned>(d - 1))) *
      boost::multiprecision::pow(cpp_int(q), e / 2);
  return lhs < rhs;
}

LemmaCheck verify_lemma8(const FiniteField& field, const ElementSet& a,
                         const ElementSet& b, std::uint32_t c,
                         std::uint64_t d) {
  if (d <= 1 || d >= field.characteristic()) {
    throw DegreeOutOfRangeError("need 1 < d < char");
  }
  const DensePolynomial p = monomial_checked(field, c, d);
  AveragedIntersection avg = averaged_intersection_deviation(field, a, b, p);
  const double bound = error_fn_elementary(field.order(), d);
  const bool holds =
      deviation_within_elementary_bound(avg.deviation, field.order(), d);
  const double slack = bound - avg.deviation.to_double();
  return LemmaCheck{std::move(avg), bound, slack, holds};
}

LemmaCheck verify_lemma12(const FiniteField& field, const ElementSet& a,
                          const ElementSet& b, const DensePolynomial& p) {
  const int deg = p.degree();
  if (deg < 1) throw DegreeOutOfRangeError("need deg P >= 1");
  const std::uint64_t d = static_cast<std::uint64_t>(deg);
  if (std::gcd(d, field.order()) != 1) {
    throw DegreeNotCoprimeError("deg P must be coprime to q");
  }
  AveragedIntersection avg = averaged_intersection_deviation(field, a, b, p);
  const double bound = error_fn_fourier(field.order(), d);
  const bool holds =
      deviation_within_fourier_bound(avg.deviation, field.order(), d);
  const double slack = bound - avg.deviation.to_double();
  return LemmaCheck{std::move(avg), bound, slack, holds};
}

}  // namespace ffsums
