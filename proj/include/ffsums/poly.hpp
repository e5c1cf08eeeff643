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

#ifndef FFSUMS_POLY_HPP
#define FFSUMS_POLY_HPP

#include <cstdint>
#include <vector>

#include "ffsums/field.hpp"

namespace ffsums {

// Dense polynomial over a finite field, coefficient codes constant term
// first, no trailing zeros. The zero polynomial has an empty coefficient
// vector and degree kZeroDegree.
class DensePolynomial {
 public:
  static constexpr int kZeroDegree = -1;

  explicit DensePolynomial(const FiniteField* field) : field_(field) {}
  DensePolynomial(const FiniteField* field, std::vector<std::uint32_t> coeffs)
      : field_(field), coeffs_(std::move(coeffs)) {
    trim();
  }

  // c * x^d
  static DensePolynomial monomial(const FiniteField* field, std::uint32_t c,
                                  std::uint32_t d);

  const FiniteField& field() const { return *field_; }
  const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  std::uint32_t coeff(std::uint32_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }
  std::uint32_t leading_coeff() const {
    return coeffs_.empty() ? 0 : coeffs_.back();
  }

  std::uint32_t eval(std::uint32_t x) const;

  // P(x + h) by Horner on the shifted variable.
  DensePolynomial shift_argument(std::uint32_t h) const;

  friend DensePolynomial operator+(const DensePolynomial& a,
                                   const DensePolynomial& b);
  friend DensePolynomial operator-(const DensePolynomial& a,
                                   const DensePolynomial& b);
  friend bool operator==(const DensePolynomial& a, const DensePolynomial& b) {
    return a.field_->same_field(*b.field_) && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const DensePolynomial& a, const DensePolynomial& b) {
    return !(a == b);
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  const FiniteField* field_;
  std::vector<std::uint32_t> coeffs_;
};

// P(x; h) = P(x + h) - P(x). Drops the degree by at least one whenever
// deg P >= 1; the zero polynomial for h = 0.
DensePolynomial difference_polynomial(const DensePolynomial& p,
                                      std::uint32_t h);

// Consecutive differencing by h_1, then h_2, ...
DensePolynomial iterated_difference(const DensePolynomial& p,
                                    const std::vector<std::uint32_t>& hs);

}  // namespace ffsums

#endif  // FFSUMS_POLY_HPP
