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

#include "ffsums/field.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace ffsums {

namespace {

// Extension degrees stay small: p^r <= 2^20 with r >= 2 forces r <= 20.
constexpr std::uint32_t kMaxDegree = 32;

void decode(std::uint32_t code, std::uint64_t p, std::uint32_t r,
            std::uint32_t* digits) {
  for (std::uint32_t i = 0; i < r; ++i) {
    digits[i] = static_cast<std::uint32_t>(code % p);
    code = static_cast<std::uint32_t>(code / p);
  }
}

std::uint32_t encode(const std::uint32_t* digits, std::uint64_t p,
                     std::uint32_t r) {
  std::uint64_t code = 0;
  for (std::uint32_t i = r; i-- > 0;) code = code * p + digits[i];
  return static_cast<std::uint32_t>(code);
}

// Remainder of a mod b over F_p, both constant-first with b monic.
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a,
                                    const std::vector<std::uint32_t>& b,
                                    std::uint64_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t j = 0; j <= db; ++j) {
        std::uint64_t v = a[shift + j] + (p - b[j] % p) % p * lead % p;
        a[shift + j] = static_cast<std::uint32_t>(v % p);
      }
    }
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// Irreducibility over F_p by trial division against every monic polynomial
// of degree 1..deg/2. Plenty fast at desk scale.
bool is_irreducible(const std::vector<std::uint32_t>& m, std::uint64_t p) {
  const std::size_t deg = m.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // Divisor candidates t^d + c_{d-1} t^{d-1} + ... + c_0, all c tuples.
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= p;
    std::vector<std::uint32_t> g(d + 1, 0);
    g[d] = 1;
    for (std::uint64_t n = 0; n < total; ++n) {
      std::uint64_t v = n;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      if (poly_mod(m, g, p).empty()) return false;
    }
  }
  return true;
}

std::uint64_t checked_pow_order(std::uint64_t p, std::uint32_t r) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    if (q > kMaxFieldOrder / p) {
      throw TooLargeError("p^r exceeds the supported ceiling 2^20");
    }
    q *= p;
  }
  return q;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

FiniteField::FiniteField(std::uint64_t p, std::uint32_t r, std::uint64_t q,
                         std::vector<std::uint32_t> modulus)
    : p_(p), r_(r), q_(q), modulus_(std::move(modulus)) {}

std::shared_ptr<const FiniteField> FiniteField::make(std::uint64_t p,
                                                     std::uint32_t r) {
  if (!is_prime(p)) {
    throw NotPrimeError("characteristic " + std::to_string(p) +
                        " is not prime");
  }
  if (r < 1 || r > kMaxDegree) {
    throw RangeError("extension degree must satisfy 1 <= r <= 32");
  }
  const std::uint64_t q = checked_pow_order(p, r);

  std::vector<std::uint32_t> modulus;
  if (r == 1) {
    modulus = {0, 1};  // the polynomial t
  } else {
    // Least monic irreducible of degree r, non-leading coefficients read as
    // a base-p numeral with the high-degree digit most significant.
    for (std::uint64_t n = 0;; ++n) {
      std::vector<std::uint32_t> cand(r + 1, 0);
      cand[r] = 1;
      std::uint64_t v = n;
      for (std::uint32_t i = 0; i < r; ++i) {
        cand[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      if (is_irreducible(cand, p)) {
        modulus = std::move(cand);
        break;
      }
    }
  }

  auto field = std::shared_ptr<FiniteField>(
      new FiniteField(p, r, q, std::move(modulus)));
  field->generator_ = field->find_generator();
  if (q <= kTableLimit) field->build_tables();
  return field;
}

std::shared_ptr<const FiniteField> FiniteField::make_order(std::uint64_t q) {
  if (q < 2) throw RangeError("field order must be at least 2");
  const std::uint64_t p = smallest_prime_factor(q);
  std::uint32_t r = 0;
  std::uint64_t m = q;
  while (m % p == 0) {
    m /= p;
    ++r;
  }
  if (m != 1) {
    throw RangeError(std::to_string(q) + " is not a prime power");
  }
  return make(p, r);
}

FieldElement FiniteField::element(std::uint64_t code) const {
  if (code >= q_) throw RangeError("element code out of range");
  return FieldElement(this, static_cast<std::uint32_t>(code));
}

FieldElement FiniteField::from_coeffs(
    const std::vector<std::uint64_t>& coeffs) const {
  if (coeffs.size() > r_) throw RangeError("too many coefficients");
  std::uint64_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    code = code * p_ + coeffs[i] % p_;
  }
  return FieldElement(this, static_cast<std::uint32_t>(code));
}

FieldElement FiniteField::from_integer(std::int64_t n) const {
  std::int64_t m = n % static_cast<std::int64_t>(p_);
  if (m < 0) m += static_cast<std::int64_t>(p_);
  return FieldElement(this, static_cast<std::uint32_t>(m));
}

std::vector<FieldElement> FiniteField::enumerate() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (std::uint64_t c = 0; c < q_; ++c) {
    out.emplace_back(this, static_cast<std::uint32_t>(c));
  }
  return out;
}

std::uint32_t FiniteField::add_code(std::uint32_t a, std::uint32_t b) const {
  if (r_ == 1) {
    std::uint64_t s = std::uint64_t{a} + b;
    if (s >= p_) s -= p_;
    return static_cast<std::uint32_t>(s);
  }
  std::array<std::uint32_t, kMaxDegree> da, db;
  decode(a, p_, r_, da.data());
  decode(b, p_, r_, db.data());
  for (std::uint32_t i = 0; i < r_; ++i) {
    std::uint64_t s = std::uint64_t{da[i]} + db[i];
    if (s >= p_) s -= p_;
    da[i] = static_cast<std::uint32_t>(s);
  }
  return encode(da.data(), p_, r_);
}

std::uint32_t FiniteField::neg_code(std::uint32_t a) const {
  if (r_ == 1) return a == 0 ? 0 : static_cast<std::uint32_t>(p_ - a);
  if (p_ == 2) return a;
  std::array<std::uint32_t, kMaxDegree> da;
  decode(a, p_, r_, da.data());
  for (std::uint32_t i = 0; i < r_; ++i) {
    if (da[i] != 0) da[i] = static_cast<std::uint32_t>(p_ - da[i]);
  }
  return encode(da.data(), p_, r_);
}

std::uint32_t FiniteField::sub_code(std::uint32_t a, std::uint32_t b) const {
  return add_code(a, neg_code(b));
}

std::uint32_t FiniteField::mul_direct(std::uint32_t a, std::uint32_t b) const {
  if (r_ == 1) {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  }
  std::array<std::uint32_t, kMaxDegree> da, db;
  std::array<std::uint64_t, 2 * kMaxDegree> prod{};
  decode(a, p_, r_, da.data());
  decode(b, p_, r_, db.data());
  for (std::uint32_t i = 0; i < r_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < r_; ++j) {
      prod[i + j] += std::uint64_t{da[i]} * db[j];
    }
  }
  // Reduce by the monic modulus, top down.
  for (std::uint32_t i = 2 * r_ - 2; i >= r_; --i) {
    const std::uint64_t c = prod[i] % p_;
    if (c != 0) {
      const std::uint32_t base = i - r_;
      for (std::uint32_t j = 0; j < r_; ++j) {
        prod[base + j] += c * ((p_ - modulus_[j]) % p_);
      }
    }
    prod[i] = 0;
    if (i == r_) break;
  }
  std::array<std::uint32_t, kMaxDegree> out;
  for (std::uint32_t i = 0; i < r_; ++i) {
    out[i] = static_cast<std::uint32_t>(prod[i] % p_);
  }
  return encode(out.data(), p_, r_);
}

std::uint32_t FiniteField::mul_code(std::uint32_t a, std::uint32_t b) const {
  if (!exp_.empty()) {
    if (a == 0 || b == 0) return 0;
    std::uint64_t k = std::uint64_t{log_[a]} + log_[b];
    if (k >= q_ - 1) k -= q_ - 1;
    return exp_[k];
  }
  return mul_direct(a, b);
}

std::uint32_t FiniteField::pow_direct(std::uint32_t a, std::uint64_t k) const {
  std::uint32_t result = one().code();
  std::uint32_t base = a;
  while (k > 0) {
    if (k & 1) result = mul_direct(result, base);
    base = mul_direct(base, base);
    k >>= 1;
  }
  return result;
}

std::uint32_t FiniteField::pow_code(std::uint32_t a, std::uint64_t k) const {
  if (k == 0) return one().code();
  if (a == 0) return 0;
  if (!exp_.empty()) {
    const std::uint64_t e =
        static_cast<std::uint64_t>(log_[a]) % (q_ - 1) * (k % (q_ - 1)) %
        (q_ - 1);
    return exp_[e];
  }
  return pow_direct(a, k % (q_ - 1) == 0 ? q_ - 1 : k % (q_ - 1));
}

std::uint32_t FiniteField::inv_code(std::uint32_t a) const {
  if (a == 0) throw DivisionByZeroError("inverse of zero");
  if (!exp_.empty()) {
    const std::uint64_t k = (q_ - 1 - log_[a]) % (q_ - 1);
    return exp_[k];
  }
  return pow_direct(a, q_ - 2 == 0 ? 1 : q_ - 2);
}

std::uint64_t FiniteField::trace_code(std::uint32_t a) const {
  if (!trace_.empty()) return trace_[a];
  if (r_ == 1) return a;
  std::uint32_t acc = a;
  std::uint32_t frob = a;
  for (std::uint32_t i = 1; i < r_; ++i) {
    frob = pow_code(frob, p_);
    acc = add_code(acc, frob);
  }
  return acc;  // lies in the prime subfield, so the code is the value
}

bool FiniteField::is_square_code(std::uint32_t a) const {
  if (p_ == 2 || a == 0) return true;
  return pow_code(a, (q_ - 1) / 2) == one().code();
}

std::optional<std::uint32_t> FiniteField::sqrt_code(std::uint32_t a) const {
  if (a == 0) return 0;
  if (p_ == 2) {
    // Squaring is the Frobenius, hence bijective: sqrt(a) = a^{q/2}.
    return pow_code(a, q_ / 2);
  }
  if (!is_square_code(a)) return std::nullopt;
  std::uint32_t root;
  if (q_ % 4 == 3) {
    root = pow_code(a, (q_ + 1) / 4);
  } else {
    // Tonelli-Shanks; the multiplicative generator is a non-residue.
    std::uint64_t m = q_ - 1;
    std::uint32_t s = 0;
    while (m % 2 == 0) {
      m /= 2;
      ++s;
    }
    std::uint32_t c = pow_code(generator_, m);
    std::uint32_t t = pow_code(a, m);
    std::uint32_t rres = pow_code(a, (m + 1) / 2);
    std::uint32_t mm = s;
    const std::uint32_t one_code = one().code();
    while (t != one_code) {
      std::uint32_t i = 0;
      std::uint32_t probe = t;
      while (probe != one_code) {
        probe = mul_code(probe, probe);
        ++i;
      }
      std::uint32_t b = c;
      for (std::uint32_t j = 0; j + i + 1 < mm; ++j) b = mul_code(b, b);
      mm = i;
      c = mul_code(b, b);
      t = mul_code(t, c);
      rres = mul_code(rres, b);
    }
    root = rres;
  }
  return std::min(root, neg_code(root));
}

std::uint32_t FiniteField::find_generator() const {
  const auto factors = prime_factors(q_ - 1);
  const std::uint32_t one_code = one().code();
  for (std::uint32_t cand = 1; cand < q_; ++cand) {
    bool ok = true;
    for (std::uint64_t ell : factors) {
      if (pow_direct(cand, (q_ - 1) / ell) == one_code) {
        ok = false;
        break;
      }
    }
    if (ok) return cand;
  }
  return one_code;  // q = 2: the trivial group is generated by 1
}

void FiniteField::build_tables() {
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  std::uint32_t v = one().code();
  for (std::uint64_t k = 0; k < q_ - 1; ++k) {
    exp_[k] = v;
    log_[v] = static_cast<std::uint32_t>(k);
    v = mul_direct(v, generator_);
  }
  trace_.assign(q_, 0);
  for (std::uint64_t c = 0; c < q_; ++c) {
    std::uint32_t acc = static_cast<std::uint32_t>(c);
    std::uint32_t frob = static_cast<std::uint32_t>(c);
    for (std::uint32_t i = 1; i < r_; ++i) {
      frob = pow_direct(frob, p_);
      acc = add_code(acc, frob);
    }
    trace_[c] = acc;
  }
}

bool FiniteField::same_field(const FiniteField& other) const {
  if (this == &other) return true;
  return p_ == other.p_ && r_ == other.r_ && modulus_ == other.modulus_;
}

void require_same_field(const FieldElement& x, const FieldElement& y) {
  if (!x.field().same_field(y.field())) {
    throw FieldMismatchError("operands belong to different fields");
  }
}

std::vector<std::uint32_t> FieldElement::rep() const {
  std::vector<std::uint32_t> digits(field_->degree());
  decode(code_, field_->characteristic(), field_->degree(), digits.data());
  return digits;
}

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
  require_same_field(x, y);
  return FieldElement(x.field_, x.field_->add_code(x.code_, y.code_));
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
  require_same_field(x, y);
  return FieldElement(x.field_, x.field_->sub_code(x.code_, y.code_));
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  require_same_field(x, y);
  return FieldElement(x.field_, x.field_->mul_code(x.code_, y.code_));
}

FieldElement operator/(const FieldElement& x, const FieldElement& y) {
  require_same_field(x, y);
  return FieldElement(x.field_,
                      x.field_->mul_code(x.code_, x.field_->inv_code(y.code_)));
}

FieldElement operator-(const FieldElement& x) {
  return FieldElement(x.field_, x.field_->neg_code(x.code_));
}

bool operator==(const FieldElement& x, const FieldElement& y) {
  if (x.field_ == y.field_) return x.code_ == y.code_;
  if (x.field_ == nullptr || y.field_ == nullptr) return false;
  return x.field_->same_field(*y.field_) && x.code_ == y.code_;
}

bool operator!=(const FieldElement& x, const FieldElement& y) {
  return !(x == y);
}

FieldElement pow(const FieldElement& x, std::uint64_t k) {
  return FieldElement(&x.field(), x.field().pow_code(x.code(), k));
}

FieldElement inv(const FieldElement& x) {
  return FieldElement(&x.field(), x.field().inv_code(x.code()));
}

std::uint64_t absolute_trace(const FieldElement& x) {
  return x.field().trace_code(x.code());
}

}  // namespace ffsums
