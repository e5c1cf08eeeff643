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

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"

using namespace ffsums;

namespace {

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t cap) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= cap; ++q) {
    const std::uint64_t p = smallest_prime_factor(q);
    std::uint64_t m = q;
    while (m % p == 0) m /= p;
    if (m == 1) out.push_back(q);
  }
  return out;
}

std::vector<Complex> indicator(const ElementSet& s) {
  std::vector<Complex> f(s.field().order(), Complex{0.0, 0.0});
  for (const std::uint32_t c : s.members()) f[c] = Complex{1.0, 0.0};
  return f;
}

ElementSet random_subset(const FiniteField& f, std::mt19937_64& rng) {
  ElementSet s(&f);
  for (std::uint64_t c = 0; c < f.order(); ++c) {
    if (rng() & 1) s.insert(static_cast<std::uint32_t>(c));
  }
  return s;
}

std::vector<Complex> random_function(const FiniteField& f,
                                     std::mt19937_64& rng) {
  std::vector<Complex> out(f.order());
  for (auto& v : out) {
    v = Complex(static_cast<double>(rng() % 4096) / 2048.0 - 1.0,
                static_cast<double>(rng() % 4096) / 2048.0 - 1.0);
  }
  return out;
}

// The Fourier route to the averaged intersection: the principal term
// mu(A) mu(B) plus (1/q^3) sum over nontrivial chi of
// 1_A-hat(conj chi) 1_B-hat(chi) sum_g chi(P(g)).
double fourier_side_average(const FiniteField& f, const ElementSet& a,
                            const ElementSet& b, const DensePolynomial& p) {
  const std::uint64_t q = f.order();
  const SpectrumFunction sa = fourier_transform(f, indicator(a));
  const SpectrumFunction sb = fourier_transform(f, indicator(b));
  Complex acc{0.0, 0.0};
  for (std::uint64_t label = 1; label < q; ++label) {
    const AdditiveCharacter chi{&f, static_cast<std::uint32_t>(label)};
    const std::uint32_t conj_label =
        f.neg_code(static_cast<std::uint32_t>(label));
    acc += sa.values[conj_label] * sb.values[label] * weil_sum(p, chi);
  }
  const double qd = static_cast<double>(q);
  const double principal = (static_cast<double>(a.size()) / qd) *
                           (static_cast<double>(b.size()) / qd);
  return principal + (acc / (qd * qd * qd)).real();
}

}  // namespace

TEST_CASE("character values") {
  const auto f5 = FiniteField::make(5, 1);
  const AdditiveCharacter principal{f5.get(), 0};
  for (std::uint64_t x = 0; x < 5; ++x) {
    CHECK(std::abs(character_value(principal, f5->element(x)) -
                   Complex{1.0, 0.0}) < 1e-15);
  }
  const AdditiveCharacter chi1{f5.get(), 1};
  CHECK(std::abs(character_value(chi1, f5->element(0)) - Complex{1.0, 0.0}) <
        1e-15);
  const Complex expected = std::polar(1.0, 2.0 * std::numbers::pi / 5.0);
  CHECK(std::abs(character_value(chi1, f5->element(1)) - expected) < 1e-15);
}

TEST_CASE("characters are homomorphisms valued in p-th roots of unity") {
  for (const std::uint64_t q : prime_powers_up_to(64)) {
    const auto f = FiniteField::make_order(q);
    const std::uint64_t p = f->characteristic();
    for (std::uint64_t label = 0; label < q; ++label) {
      const AdditiveCharacter chi{f.get(), static_cast<std::uint32_t>(label)};
      for (std::uint64_t x = 0; x < q; ++x) {
        const Complex vx = character_value(chi, f->element(x));
        CHECK(std::abs(std::abs(vx) - 1.0) < 1e-12);
        CHECK(std::abs(std::pow(vx, static_cast<double>(p)) -
                       Complex{1.0, 0.0}) < 1e-10);
        const Complex vneg = character_value(chi, -f->element(x));
        CHECK(std::abs(vneg - std::conj(vx)) < 1e-12);
        for (std::uint64_t y = 0; y < q; ++y) {
          const Complex vy = character_value(chi, f->element(y));
          const Complex vxy =
              character_value(chi, f->element(x) + f->element(y));
          CHECK(std::abs(vxy - vx * vy) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("character orthogonality, q <= 64") {
  for (const std::uint64_t q : prime_powers_up_to(64)) {
    const auto f = FiniteField::make_order(q);
    for (std::uint64_t a = 0; a < q; ++a) {
      for (std::uint64_t b = 0; b < q; ++b) {
        const AdditiveCharacter chia{f.get(), static_cast<std::uint32_t>(a)};
        const AdditiveCharacter chib{f.get(), static_cast<std::uint32_t>(b)};
        Complex acc{0.0, 0.0};
        for (std::uint64_t x = 0; x < q; ++x) {
          acc += character_value(chia, f->element(x)) *
                 std::conj(character_value(chib, f->element(x)));
        }
        acc /= static_cast<double>(q);
        const Complex expected =
            a == b ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
        CHECK(std::abs(acc - expected) < 1e-9);
      }
    }
  }
}

TEST_CASE("fourier transform examples") {
  const auto f7 = FiniteField::make(7, 1);
  // Indicator of {0} transforms to the all-ones spectrum.
  ElementSet zero_only(f7.get());
  zero_only.insert(0);
  const SpectrumFunction sz = fourier_transform(*f7, indicator(zero_only));
  for (const Complex& v : sz.values) {
    CHECK(std::abs(v - Complex{1.0, 0.0}) < 1e-12);
  }
  // 1_A-hat at the principal character is |A|.
  ElementSet a(f7.get());
  a.insert(1);
  a.insert(3);
  a.insert(4);
  const SpectrumFunction sa = fourier_transform(*f7, indicator(a));
  CHECK(std::abs(sa.values[0] - Complex{3.0, 0.0}) < 1e-12);
  // chi_b as a function transforms to q at label -b, 0 elsewhere.
  for (std::uint64_t b = 0; b < 7; ++b) {
    const AdditiveCharacter chib{f7.get(), static_cast<std::uint32_t>(b)};
    std::vector<Complex> chib_values(7);
    for (std::uint64_t x = 0; x < 7; ++x) {
      chib_values[x] = character_value(chib, f7->element(x));
    }
    const SpectrumFunction sc = fourier_transform(*f7, chib_values);
    for (std::uint64_t label = 0; label < 7; ++label) {
      const Complex expected =
          label == f7->neg_code(static_cast<std::uint32_t>(b))
              ? Complex{7.0, 0.0}
              : Complex{0.0, 0.0};
      CHECK(std::abs(sc.values[label] - expected) < 1e-9);
    }
  }
}

TEST_CASE("fourier inversion round trips") {
  std::mt19937_64 rng(41);
  // The spectrum (q, 0, ..., 0) inverts to the constant 1.
  const auto f9 = FiniteField::make(3, 2);
  SpectrumFunction flat{f9.get(), std::vector<Complex>(9, Complex{0.0, 0.0})};
  flat.values[0] = Complex{9.0, 0.0};
  for (const Complex& v : fourier_invert(flat)) {
    CHECK(std::abs(v - Complex{1.0, 0.0}) < 1e-12);
  }
  // The zero spectrum inverts to zero.
  SpectrumFunction zero{f9.get(), std::vector<Complex>(9, Complex{0.0, 0.0})};
  for (const Complex& v : fourier_invert(zero)) {
    CHECK(std::abs(v) == 0.0);
  }
  // Random round trips, including q = 27 from the worked example.
  for (const std::uint64_t q : {std::uint64_t{8}, std::uint64_t{27},
                                std::uint64_t{49}}) {
    const auto f = FiniteField::make_order(q);
    for (int trial = 0; trial < 10; ++trial) {
      const std::vector<Complex> fn = random_function(*f, rng);
      const std::vector<Complex> back =
          fourier_invert(fourier_transform(*f, fn));
      for (std::uint64_t x = 0; x < q; ++x) {
        CHECK(std::abs(back[x] - fn[x]) < 1e-9);
      }
    }
  }
}

TEST_CASE("plancherel identity") {
  const auto f49 = FiniteField::make(7, 2);
  std::mt19937_64 rng(43);
  // Zero functions give (0, 0, 0).
  const std::vector<Complex> zero(49, Complex{0.0, 0.0});
  const PlancherelCheck z = plancherel_check(*f49, zero, zero);
  CHECK(z.abs_error == 0.0);
  CHECK(std::abs(z.lhs) == 0.0);
  // Indicator sets: <1_A-hat, 1_A-hat> = q mu(A).
  ElementSet a(f49.get());
  for (std::uint64_t c = 0; c < 49; c += 3) {
    a.insert(static_cast<std::uint32_t>(c));
  }
  const PlancherelCheck pa =
      plancherel_check(*f49, indicator(a), indicator(a));
  CHECK(std::abs(pa.lhs - Complex{static_cast<double>(a.size()), 0.0}) <
        1e-9);
  CHECK(pa.abs_error < 1e-9);
  // Random pairs.
  for (int trial = 0; trial < 10; ++trial) {
    const PlancherelCheck pc = plancherel_check(
        *f49, random_function(*f49, rng), random_function(*f49, rng));
    CHECK(pc.abs_error < 1e-9);
  }
}

TEST_CASE("weil sums: linear vanishes, Gauss sum has modulus sqrt(q)") {
  const auto f7 = FiniteField::make(7, 1);
  const AdditiveCharacter chi1{f7.get(), 1};
  const DensePolynomial linear(f7.get(), {0, 1});
  CHECK(std::abs(weil_sum(linear, chi1)) < 1e-9);

  const DensePolynomial square = DensePolynomial::monomial(f7.get(), 1, 2);
  CHECK(std::abs(std::abs(weil_sum(square, chi1)) - std::sqrt(7.0)) < 1e-9);
  const WeilBoundCheck chk = verify_weil_bound(square, chi1);
  CHECK(chk.holds);
  CHECK(chk.bound == doctest::Approx(std::sqrt(7.0)));

  const auto f8 = FiniteField::make(2, 3);
  const DensePolynomial cube = DensePolynomial::monomial(f8.get(), 1, 3);
  for (std::uint64_t label = 1; label < 8; ++label) {
    const AdditiveCharacter chi{f8.get(), static_cast<std::uint32_t>(label)};
    const WeilBoundCheck c8 = verify_weil_bound(cube, chi);
    CHECK(c8.modulus <= 2.0 * std::sqrt(8.0) + 1e-9);
    CHECK(c8.holds);
  }
}

TEST_CASE("weil bound preconditions") {
  const auto f7 = FiniteField::make(7, 1);
  const DensePolynomial square = DensePolynomial::monomial(f7.get(), 1, 2);
  CHECK_THROWS_AS(verify_weil_bound(square, AdditiveCharacter{f7.get(), 0}),
                  PrincipalCharacterError);
  const AdditiveCharacter chi1{f7.get(), 1};
  const DensePolynomial septic = DensePolynomial::monomial(f7.get(), 1, 7);
  CHECK_THROWS_AS(verify_weil_bound(septic, chi1), DegreeOutOfRangeError);
  const auto f8 = FiniteField::make(2, 3);
  const DensePolynomial even = DensePolynomial::monomial(f8.get(), 1, 2);
  CHECK_THROWS_AS(verify_weil_bound(even, AdditiveCharacter{f8.get(), 1}),
                  DegreeNotCoprimeError);
  const DensePolynomial constant(f7.get(), {3});
  CHECK_THROWS_AS(verify_weil_bound(constant, chi1), DegreeOutOfRangeError);
}

TEST_CASE("weil bound sampled across fields, q <= 128") {
  std::mt19937_64 rng(47);
  for (const std::uint64_t q : prime_powers_up_to(128)) {
    const auto f = FiniteField::make_order(q);
    for (std::uint64_t d = 2; d <= 5 && d < q; ++d) {
      if (std::gcd(d, q) != 1) continue;
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<std::uint32_t> coeffs(d + 1);
        for (std::uint64_t i = 0; i < d; ++i) {
          coeffs[i] = static_cast<std::uint32_t>(rng() % q);
        }
        coeffs[d] = 1;
        const DensePolynomial p(f.get(), std::move(coeffs));
        const std::uint32_t label =
            static_cast<std::uint32_t>(1 + rng() % (q - 1));
        const WeilBoundCheck chk =
            verify_weil_bound(p, AdditiveCharacter{f.get(), label});
        CHECK(chk.holds);
      }
    }
  }
}

TEST_CASE("iterated differencing: linear coefficient and permutation") {
  std::mt19937_64 rng(53);
  for (const std::uint64_t q : prime_powers_up_to(81)) {
    const auto f = FiniteField::make_order(q);
    for (std::uint64_t d = 2; d <= 5; ++d) {
      if (d >= f->characteristic()) continue;
      for (int trial = 0; trial < 8; ++trial) {
        const std::uint32_t c =
            static_cast<std::uint32_t>(1 + rng() % (q - 1));
        std::vector<std::uint32_t> hs(d - 1);
        for (auto& h : hs) {
          h = static_cast<std::uint32_t>(1 + rng() % (q - 1));
        }
        const DensePolynomial p = DensePolynomial::monomial(
            f.get(), c, static_cast<std::uint32_t>(d));
        const DensePolynomial iter = iterated_difference(p, hs);
        REQUIRE(iter.degree() == 1);
        // d! c prod(h_i), exactly.
        std::uint32_t expected = c;
        for (std::uint64_t k = 2; k <= d; ++k) {
          expected = f->mul_code(
              expected, f->from_integer(static_cast<std::int64_t>(k)).code());
        }
        for (const std::uint32_t h : hs) expected = f->mul_code(expected, h);
        CHECK(iter.coeff(1) == expected);
        // g -> P(g; h_1..h_{d-1}) permutes the field.
        std::vector<std::uint8_t> seen(q, 0);
        for (std::uint64_t g = 0; g < q; ++g) {
          seen[iter.eval(static_cast<std::uint32_t>(g))] = 1;
        }
        std::uint64_t hits = 0;
        for (const std::uint8_t s : seen) hits += s;
        CHECK(hits == q);
      }
    }
  }
}

TEST_CASE("differencing with a zero step collapses") {
  const auto f11 = FiniteField::make(11, 1);
  const DensePolynomial p = DensePolynomial::monomial(f11.get(), 5, 4);
  // One h_i = 0 anywhere gives the zero polynomial at the end.
  const DensePolynomial out = iterated_difference(p, {3, 0, 2});
  CHECK(out.is_zero());
}

TEST_CASE("centered shifts have exact mean zero") {
  const auto f9 = FiniteField::make(3, 2);
  std::mt19937_64 rng(59);
  const ElementSet a = random_subset(*f9, rng);
  for (std::uint64_t g = 0; g < 9; ++g) {
    const CenteredShift shift{&a, static_cast<std::uint32_t>(g)};
    Rational total;
    for (std::uint64_t x = 0; x < 9; ++x) {
      total = total + shift.value(static_cast<std::uint32_t>(x));
    }
    CHECK(total.is_zero());
  }
  // (1/q) sum_g a_g(x) = 0 for every x.
  for (std::uint64_t x = 0; x < 9; ++x) {
    Rational total;
    for (std::uint64_t g = 0; g < 9; ++g) {
      const CenteredShift shift{&a, static_cast<std::uint32_t>(g)};
      total = total + shift.value(static_cast<std::uint32_t>(x));
    }
    CHECK(total.is_zero());
  }
}

TEST_CASE("averaged intersection: frozen example and edge cases") {
  const auto f7 = FiniteField::make(7, 1);
  // A = {0,1}, B = {3}, P = x^2: the seven shifts contribute hits at g = 2
  // and g = 5 only, so S = 2/49 and the deviation vanishes.
  ElementSet a(f7.get());
  a.insert(0);
  a.insert(1);
  ElementSet b(f7.get());
  b.insert(3);
  const DensePolynomial p = DensePolynomial::monomial(f7.get(), 1, 2);
  const AveragedIntersection avg =
      averaged_intersection_deviation(*f7, a, b, p);
  CHECK(avg.s == Rational(2, 49));
  CHECK(avg.deviation == Rational(0));
  CHECK(avg.mu_product == Rational(2, 49));

  // Full sets: every intersection has full measure.
  const ElementSet full = ElementSet::full(f7.get());
  const AveragedIntersection favg =
      averaged_intersection_deviation(*f7, full, full, p);
  CHECK(favg.deviation == Rational(0));
  CHECK(favg.s == Rational(1));

  // Empty A: everything vanishes.
  const ElementSet empty(f7.get());
  const AveragedIntersection eavg =
      averaged_intersection_deviation(*f7, empty, full, p);
  CHECK(eavg.s == Rational(0));
  CHECK(eavg.deviation == Rational(0));
}

TEST_CASE("S = T + mu(A cap B)/q and the Fourier route agrees") {
  std::mt19937_64 rng(61);
  for (const std::uint64_t q : {std::uint64_t{7}, std::uint64_t{9},
                                std::uint64_t{11}, std::uint64_t{16}}) {
    const auto f = FiniteField::make_order(q);
    for (int trial = 0; trial < 5; ++trial) {
      const ElementSet a = random_subset(*f, rng);
      const ElementSet b = random_subset(*f, rng);
      std::vector<std::uint32_t> coeffs(4);
      for (auto& c : coeffs) c = static_cast<std::uint32_t>(rng() % q);
      if (coeffs.back() == 0) coeffs.back() = 1;
      const DensePolynomial p(f.get(), std::move(coeffs));
      const AveragedIntersection avg =
          averaged_intersection_deviation(*f, a, b, p);
      // Exact bookkeeping identity.
      std::uint64_t cap = 0;
      for (const std::uint32_t x : a.members()) {
        if (b.contains(x)) ++cap;
      }
      const Rational mu_cap(static_cast<std::int64_t>(cap),
                            static_cast<std::int64_t>(q));
      CHECK(avg.s == avg.t + mu_cap / Rational(static_cast<std::int64_t>(q)));
      // Independent Fourier evaluation of the same average.
      CHECK(std::abs(avg.s.to_double() - fourier_side_average(*f, a, b, p)) <
            1e-9);
    }
  }
}

TEST_CASE("counterexample with char dividing the degree") {
  // F_4, P = x^2 + x, A = B = image of P: the intersection never moves, so
  // the deviation is mu(A) - mu(A)^2 = 1/4 whatever q is.
  const auto f4 = FiniteField::make(2, 2);
  ElementSet img4(f4.get());
  std::vector<std::uint32_t> coeffs{0, 1, 1};
  const DensePolynomial p4(f4.get(), std::move(coeffs));
  for (std::uint64_t x = 0; x < 4; ++x) {
    img4.insert(p4.eval(static_cast<std::uint32_t>(x)));
  }
  CHECK(img4.members() == std::vector<std::uint32_t>{0, 1});
  const AveragedIntersection a4 = counterexample_char_divides(*f4, img4, img4);
  CHECK(a4.deviation == Rational(1, 4));

  // F_9, P = x^3 + x is the absolute trace; its image is the prime subfield.
  const auto f9 = FiniteField::make(3, 2);
  ElementSet img9(f9.get());
  std::vector<std::uint32_t> c9{0, 1, 0, 1};
  const DensePolynomial p9(f9.get(), std::move(c9));
  for (std::uint64_t x = 0; x < 9; ++x) {
    img9.insert(p9.eval(static_cast<std::uint32_t>(x)));
  }
  CHECK(img9.members() == std::vector<std::uint32_t>{0, 1, 2});
  const AveragedIntersection a9 = counterexample_char_divides(*f9, img9, img9);
  CHECK(a9.deviation == Rational(2, 9));

  // A the whole field: deviation 0 regardless.
  const AveragedIntersection afull = counterexample_char_divides(
      *f9, ElementSet::full(f9.get()), img9);
  CHECK(afull.deviation == Rational(0));

  CHECK_THROWS_AS(counterexample_char_divides(*FiniteField::make(5, 1),
                                              img9, img9),
                  RangeError);
}

TEST_CASE("error function values") {
  CHECK(error_fn_elementary(4, 2) == 0.5);
  CHECK(error_fn_fourier(25, 3) == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(error_fn_fourier(7, 1) == 0.0);
  const double e93 = error_fn_elementary(9, 3);
  CHECK(e93 == doctest::Approx(std::pow(17.0 / 81.0, 0.25)).epsilon(1e-12));
  CHECK_THROWS_AS(error_fn_elementary(9, 1), DegreeTooSmallError);
  CHECK_THROWS_AS(error_fn_fourier(9, 0), DegreeTooSmallError);
  // Monotone decrease in q for fixed d.
  for (const std::uint64_t d : {std::uint64_t{2}, std::uint64_t{3},
                                std::uint64_t{5}}) {
    double prev = 1.0;
    for (const std::uint64_t q : prime_powers_up_to(512)) {
      const double e = error_fn_elementary(q, d);
      CHECK(e < prev + 1e-15);
      prev = e;
    }
  }
}

TEST_CASE("the two error functions agree bitwise at d = 2") {
  for (const std::uint64_t q : prime_powers_up_to(512)) {
    CHECK(error_fn_elementary(q, 2) == error_fn_fourier(q, 2));
  }
}

TEST_CASE("exact dominance comparison matches the analytic crossover") {
  // d = 3 crosses at q = 9, d = 4 at q = 16, d = 5 at q = 23.
  CHECK(!fourier_bound_strictly_smaller(4, 3));
  CHECK(!fourier_bound_strictly_smaller(8, 3));
  CHECK(fourier_bound_strictly_smaller(9, 3));
  CHECK(fourier_bound_strictly_smaller(512, 3));
  CHECK(!fourier_bound_strictly_smaller(13, 4));
  CHECK(fourier_bound_strictly_smaller(16, 4));
  CHECK(!fourier_bound_strictly_smaller(19, 5));
  CHECK(fourier_bound_strictly_smaller(23, 5));
  // Double-precision evaluation agrees with the exact decision.
  for (const std::uint64_t q : prime_powers_up_to(128)) {
    for (std::uint64_t d = 3; d <= 8; ++d) {
      const bool exact = fourier_bound_strictly_smaller(q, d);
      const double diff = error_fn_elementary(q, d) - error_fn_fourier(q, d);
      if (std::abs(diff) > 1e-9) CHECK(exact == (diff > 0));
    }
  }
}

TEST_CASE("lemma 8: slack stays nonnegative") {
  std::mt19937_64 rng(67);
  // F_5, d = 2, A = B = the squares.
  const auto f5 = FiniteField::make(5, 1);
  ElementSet squares(f5.get());
  for (std::uint64_t x = 0; x < 5; ++x) {
    squares.insert(f5->mul_code(static_cast<std::uint32_t>(x),
                                static_cast<std::uint32_t>(x)));
  }
  const LemmaCheck c5 = verify_lemma8(*f5, squares, squares, 1, 2);
  CHECK(c5.holds);
  CHECK(c5.slack >= 0.0);

  // F_11, d = 3, random sets, c = 2.
  const auto f11 = FiniteField::make(11, 1);
  for (int trial = 0; trial < 20; ++trial) {
    const ElementSet a = random_subset(*f11, rng);
    const ElementSet b = random_subset(*f11, rng);
    const LemmaCheck chk = verify_lemma8(*f11, a, b, 2, 3);
    CHECK(chk.holds);
  }

  // Full set: deviation 0 <= bound.
  const LemmaCheck cf = verify_lemma8(*f11, ElementSet::full(f11.get()),
                                      ElementSet::full(f11.get()), 1, 2);
  CHECK(cf.avg.deviation == Rational(0));
  CHECK(cf.holds);

  CHECK_THROWS_AS(verify_lemma8(*f11, squares, squares, 1, 1),
                  DegreeOutOfRangeError);
  CHECK_THROWS_AS(verify_lemma8(*f11, squares, squares, 1, 11),
                  DegreeOutOfRangeError);
  CHECK_THROWS_AS(verify_lemma8(*f11, squares, squares, 0, 2),
                  ZeroCoefficientError);
}

TEST_CASE("lemma 12: general polynomials, degree coprime to q") {
  std::mt19937_64 rng(71);
  const auto f8 = FiniteField::make(2, 3);
  // P = x^3 + x has degree 3, coprime to 8.
  const DensePolynomial p8(f8.get(), {0, 1, 0, 1});
  for (int trial = 0; trial < 20; ++trial) {
    const ElementSet a = random_subset(*f8, rng);
    const ElementSet b = random_subset(*f8, rng);
    const LemmaCheck chk = verify_lemma12(*f8, a, b, p8);
    CHECK(chk.holds);
  }
  // Linear polynomials average out exactly.
  const auto f7 = FiniteField::make(7, 1);
  const DensePolynomial lin(f7.get(), {4, 2});
  const ElementSet a = random_subset(*f7, rng);
  const ElementSet b = random_subset(*f7, rng);
  const LemmaCheck lchk = verify_lemma12(*f7, a, b, lin);
  CHECK(lchk.avg.deviation == Rational(0));
  CHECK(lchk.holds);
  // Empty sets: deviation 0.
  const ElementSet empty(f7.get());
  const LemmaCheck echk = verify_lemma12(*f7, empty, empty, lin);
  CHECK(echk.avg.deviation == Rational(0));
  // Degree divisible by q's characteristic power: rejected.
  const auto f4 = FiniteField::make(2, 2);
  const DensePolynomial even = DensePolynomial::monomial(f4.get(), 1, 2);
  CHECK_THROWS_AS(verify_lemma12(*f4, empty, empty, even),
                  DegreeNotCoprimeError);
  const DensePolynomial constant(f7.get(), {3});
  CHECK_THROWS_AS(verify_lemma12(*f7, a, b, constant), DegreeOutOfRangeError);
}

TEST_CASE("certified bound decisions accept true deviations") {
  // Deviations exactly at machine-representable fractions stay certified.
  CHECK(deviation_within_elementary_bound(Rational(0), 9, 3));
  CHECK(deviation_within_elementary_bound(Rational(1, 3), 9, 2));  // = bound
  CHECK(!deviation_within_elementary_bound(Rational(1, 2), 9, 2));
  CHECK(deviation_within_fourier_bound(Rational(1, 3), 9, 2));    // < 1/3? no:
  // (1/3)^2 * 9 = 1 = (2-1)^2, equality holds.
  CHECK(!deviation_within_fourier_bound(Rational(1, 2), 9, 2));
}
