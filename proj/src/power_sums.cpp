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

#include "ffsums/power_sums.hpp"

#include <numeric>

namespace ffsums {

namespace {

void require_nonzero_coefficient(std::uint32_t code, const char* name) {
  if (code == 0) {
    throw ZeroCoefficientError(std::string("coefficient ") + name +
                               " must be nonzero");
  }
}

}  // namespace

PowerImage power_image(const FiniteField& field, std::uint64_t d) {
  if (d < 1) throw RangeError("exponent must be at least 1");
  PowerImage img{&field, d, std::gcd(d, field.order() - 1),
                 ElementSet(&field),
                 std::vector<std::uint32_t>(field.order(),
                                            PowerImage::kNoPreimage)};
  for (std::uint64_t x = 0; x < field.order(); ++x) {
    const std::uint32_t v =
        field.pow_code(static_cast<std::uint32_t>(x), d);
    if (img.least_preimage[v] == PowerImage::kNoPreimage) {
      img.least_preimage[v] = static_cast<std::uint32_t>(x);
      img.elements.insert(v);
    }
  }
  return img;
}

std::uint64_t gcd_reduce_exponent(const FiniteField& field, std::uint64_t d) {
  if (d < 1) throw RangeError("exponent must be at least 1");
  return std::gcd(d, field.order() - 1);
}

ElementSet sum_of_two_powers_set(const FiniteField& field, std::uint64_t d,
                                 std::uint32_t a, std::uint32_t b) {
  require_nonzero_coefficient(a, "a");
  require_nonzero_coefficient(b, "b");
  const PowerImage img = power_image(field, d);
  ElementSet out(&field);
  std::size_t remaining = field.order();
  for (const std::uint32_t u : img.elements.members()) {
    const std::uint32_t au = field.mul_code(a, u);
    for (const std::uint32_t v : img.elements.members()) {
      const std::uint32_t s = field.add_code(au, field.mul_code(b, v));
      if (!out.contains(s)) {
        out.insert(s);
        if (--remaining == 0) return out;
      }
    }
  }
  return out;
}

CoverageReport coverage_report(const FiniteField& field, std::uint64_t d,
                               std::uint32_t a, std::uint32_t b,
                               bool with_witnesses) {
  require_nonzero_coefficient(a, "a");
  require_nonzero_coefficient(b, "b");
  const std::uint64_t q = field.order();
  const PowerImage img = power_image(field, d);

  CoverageReport report{&field, d,     a, b, false, {}, {},
                        WitnessMethod::kBrute};

  // Reachability first, from the two scaled images.
  std::vector<std::uint8_t> hit(q, 0);
  std::size_t remaining = q;
  for (const std::uint32_t u : img.elements.members()) {
    const std::uint32_t au = field.mul_code(a, u);
    for (const std::uint32_t v : img.elements.members()) {
      const std::uint32_t s = field.add_code(au, field.mul_code(b, v));
      if (!hit[s]) {
        hit[s] = 1;
        if (--remaining == 0) break;
      }
    }
    if (remaining == 0) break;
  }
  report.covered = remaining == 0;
  if (!report.covered) {
    for (std::uint64_t c = 0; c < q; ++c) {
      if (!hit[c]) report.unrepresented.push_back(static_cast<std::uint32_t>(c));
    }
    return report;
  }
  if (!with_witnesses) return report;

  // Per-c witness with the least x, then the least y. Scanning x in
  // enumeration order and asking whether (c - a x^d)/b lies in the image
  // gives exactly that pair.
  const std::uint32_t b_inv = field.inv_code(b);
  std::vector<std::uint32_t> powers(q);
  for (std::uint64_t x = 0; x < q; ++x) {
    powers[x] = field.pow_code(static_cast<std::uint32_t>(x), d);
  }
  report.witnesses.reserve(q);
  for (std::uint64_t c = 0; c < q; ++c) {
    for (std::uint64_t x = 0; x < q; ++x) {
      const std::uint32_t rest = field.sub_code(
          static_cast<std::uint32_t>(c), field.mul_code(a, powers[x]));
      const std::uint32_t target = field.mul_code(rest, b_inv);
      const std::uint32_t y = img.least_preimage[target];
      if (y != PowerImage::kNoPreimage) {
        report.witnesses.push_back({static_cast<std::uint32_t>(c),
                                    static_cast<std::uint32_t>(x), y});
        break;
      }
    }
  }
  return report;
}

std::pair<FieldElement, FieldElement> weber_two_squares(
    const FiniteField& field, const FieldElement& c) {
  if (!field.same_field(c.field())) {
    throw FieldMismatchError("element from a different field");
  }
  const std::uint64_t q = field.order();
  std::uint32_t x, y;
  if (field.characteristic() == 2) {
    // c = (c^{2^{r-1}})^2 + 0^2.
    x = field.pow_code(c.code(), q / 2);
    y = 0;
  } else if (field.is_square_code(c.code())) {
    x = *field.sqrt_code(c.code());
    y = 0;
  } else if (field.is_square_code(field.neg_code(1))) {
    // c = (c + 1/4)^2 + (g (c - 1/4))^2 with g^2 = -1.
    const std::uint32_t g = *field.sqrt_code(field.neg_code(1));
    const std::uint32_t quarter = field.inv_code(field.from_integer(4).code());
    x = field.add_code(c.code(), quarter);
    y = field.mul_code(g, field.sub_code(c.code(), quarter));
  } else {
    // Walk the prime subfield from the square 1 toward the nonsquare -1
    // until a square a is followed by a nonsquare a+1; then c/(a+1) is a
    // square h^2 and c = (hg)^2 + h^2 with g^2 = a.
    const std::uint64_t p = field.characteristic();
    std::uint32_t a = 1;
    for (std::uint64_t k = 1; k + 1 < p; ++k) {
      const std::uint32_t cur = static_cast<std::uint32_t>(k);
      const std::uint32_t next = static_cast<std::uint32_t>(k + 1);
      if (field.is_square_code(cur) && !field.is_square_code(next)) {
        a = cur;
        break;
      }
    }
    const std::uint32_t g = *field.sqrt_code(a);
    const std::uint32_t a_plus_1 = field.add_code(a, 1);
    const std::uint32_t h =
        *field.sqrt_code(field.mul_code(c.code(), field.inv_code(a_plus_1)));
    x = field.mul_code(h, g);
    y = h;
  }
  const std::uint32_t check =
      field.add_code(field.mul_code(x, x), field.mul_code(y, y));
  if (check != c.code()) {
    throw Error("internal check failed: x^2 + y^2 != c");
  }
  return {FieldElement(&field, x), FieldElement(&field, y)};
}

std::pair<FieldElement, FieldElement> cauchy_two_squares(
    const FiniteField& field, const FieldElement& a, const FieldElement& b,
    const FieldElement& c) {
  if (field.characteristic() == 2) {
    throw CharacteristicTwoError(
        "pigeonhole argument needs odd characteristic");
  }
  require_nonzero_coefficient(a.code(), "a");
  require_nonzero_coefficient(b.code(), "b");
  const std::uint64_t q = field.order();

  // {a x^2} and {c - b y^2}, each of size (q+1)/2, must intersect.
  std::vector<std::uint32_t> first_x(q, PowerImage::kNoPreimage);
  std::vector<std::uint32_t> first_y(q, PowerImage::kNoPreimage);
  for (std::uint64_t t = 0; t < q; ++t) {
    const std::uint32_t tc = static_cast<std::uint32_t>(t);
    const std::uint32_t sq = field.mul_code(tc, tc);
    const std::uint32_t lhs = field.mul_code(a.code(), sq);
    if (first_x[lhs] == PowerImage::kNoPreimage) first_x[lhs] = tc;
    const std::uint32_t rhs =
        field.sub_code(c.code(), field.mul_code(b.code(), sq));
    if (first_y[rhs] == PowerImage::kNoPreimage) first_y[rhs] = tc;
  }
  for (std::uint64_t z = 0; z < q; ++z) {
    if (first_x[z] != PowerImage::kNoPreimage &&
        first_y[z] != PowerImage::kNoPreimage) {
      const std::uint32_t x = first_x[z];
      const std::uint32_t y = first_y[z];
      const std::uint32_t check =
          field.add_code(field.mul_code(a.code(), field.mul_code(x, x)),
                         field.mul_code(b.code(), field.mul_code(y, y)));
      if (check != c.code()) {
        throw Error("internal check failed: a x^2 + b y^2 != c");
      }
      return {FieldElement(&field, x), FieldElement(&field, y)};
    }
  }
  throw Error("pigeonhole intersection unexpectedly empty");
}

std::optional<ThreeTermWitness> three_term_diagonal_witness(
    const FiniteField& field, std::uint64_t e, const FieldElement& a,
    const FieldElement& b, const FieldElement& c) {
  require_nonzero_coefficient(a.code(), "a");
  require_nonzero_coefficient(b.code(), "b");
  require_nonzero_coefficient(c.code(), "c");
  const std::uint64_t q = field.order();
  std::vector<std::uint32_t> powers(q);
  for (std::uint64_t t = 0; t < q; ++t) {
    powers[t] = field.pow_code(static_cast<std::uint32_t>(t), e);
  }
  for (std::uint64_t x = 1; x < q; ++x) {
    const std::uint32_t ax = field.mul_code(a.code(), powers[x]);
    for (std::uint64_t y = 1; y < q; ++y) {
      const std::uint32_t axy = field.add_code(ax, field.mul_code(b.code(),
                                                                  powers[y]));
      for (std::uint64_t z = 1; z < q; ++z) {
        const std::uint32_t s =
            field.add_code(axy, field.mul_code(c.code(), powers[z]));
        if (s == 0) {
          const FieldElement ex(&field, static_cast<std::uint32_t>(x));
          const FieldElement ey(&field, static_cast<std::uint32_t>(y));
          const FieldElement ez(&field, static_cast<std::uint32_t>(z));
          // Dividing by z^e turns the witness into a representation of -c.
          const FieldElement u = ex / ez;
          const FieldElement v = ey / ez;
          const FieldElement want = -c;
          if (a * pow(u, e) + b * pow(v, e) != want) {
            throw Error("internal check failed: division trick");
          }
          return ThreeTermWitness{ex, ey, ez, u, v};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace ffsums
