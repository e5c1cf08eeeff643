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

#include "ffsums/poly.hpp"

#include <algorithm>

namespace ffsums {

DensePolynomial DensePolynomial::monomial(const FiniteField* field,
                                          std::uint32_t c, std::uint32_t d) {
  if (c == 0) return DensePolynomial(field);
  std::vector<std::uint32_t> coeffs(d + 1, 0);
  coeffs[d] = c;
  return DensePolynomial(field, std::move(coeffs));
}

std::uint32_t DensePolynomial::eval(std::uint32_t x) const {
  std::uint32_t acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = field_->add_code(field_->mul_code(acc, x), coeffs_[i]);
  }
  return acc;
}

DensePolynomial DensePolynomial::shift_argument(std::uint32_t h) const {
  // Horner: fold c_k into acc, then multiply acc by (x + h).
  std::vector<std::uint32_t> acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    std::vector<std::uint32_t> next(acc.size() + 1, 0);
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] = field_->add_code(next[j + 1], acc[j]);
      next[j] = field_->add_code(next[j], field_->mul_code(acc[j], h));
    }
    next[0] = field_->add_code(next[0], coeffs_[i]);
    acc = std::move(next);
  }
  return DensePolynomial(field_, std::move(acc));
}

DensePolynomial operator+(const DensePolynomial& a, const DensePolynomial& b) {
  std::vector<std::uint32_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()),
                                 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.field_->add_code(a.coeff(static_cast<std::uint32_t>(i)),
                                b.coeff(static_cast<std::uint32_t>(i)));
  }
  return DensePolynomial(a.field_, std::move(out));
}

DensePolynomial operator-(const DensePolynomial& a, const DensePolynomial& b) {
  std::vector<std::uint32_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()),
                                 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.field_->sub_code(a.coeff(static_cast<std::uint32_t>(i)),
                                b.coeff(static_cast<std::uint32_t>(i)));
  }
  return DensePolynomial(a.field_, std::move(out));
}

DensePolynomial difference_polynomial(const DensePolynomial& p,
                                      std::uint32_t h) {
  return p.shift_argument(h) - p;
}

DensePolynomial iterated_difference(const DensePolynomial& p,
                                    const std::vector<std::uint32_t>& hs) {
  DensePolynomial out = p;
  for (const std::uint32_t h : hs) out = difference_polynomial(out, h);
  return out;
}

}  // namespace ffsums
