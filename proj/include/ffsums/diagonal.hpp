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

#ifndef FFSUMS_DIAGONAL_HPP
#define FFSUMS_DIAGONAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ffsums/field.hpp"

namespace ffsums {

// Default cap on q^n for count_solutions, in term evaluations.
inline constexpr std::uint64_t kDefaultWorkBudget = std::uint64_t{1} << 26;

// a_1 x_1^{k_1} + ... + a_n x_n^{k_n} = b over one field. All coefficients
// nonzero.
struct DiagonalInstance {
  const FiniteField* field;
  std::vector<std::uint64_t> exponents;     // k_i >= 1
  std::vector<std::uint32_t> coefficients;  // a_i != 0, codes
  std::uint32_t rhs;                        // b, code

  std::size_t terms() const { return exponents.size(); }
};

// The two-term equal-exponent bound |N(b) - q| <= (delta-1)^2 sqrt(q).
struct SmallBoundCheck {
  std::uint64_t delta;
  double bound;       // (delta-1)^2 sqrt(q)
  double slack;       // bound - |N(b) - q|
  bool holds;         // decided exactly: (N-q)^2 <= (delta-1)^4 q
};

struct SolutionCount {
  DiagonalInstance instance;
  std::uint64_t count;  // N(b)
  std::optional<SmallBoundCheck> small_bound;
};

// Exact N(b) via per-term value-multiplicity tables convolved together;
// equivalent to the q^n nested loop. Throws BudgetExceededError when q^n
// exceeds the budget, ZeroCoefficientError, RangeError.
SolutionCount count_solutions(const DiagonalInstance& instance,
                              std::uint64_t budget = kDefaultWorkBudget);

// N(b) for x^d + y^d = b together with the bound check. b must be nonzero
// (ZeroRhsError otherwise).
SolutionCount verify_small_bound(const FiniteField& field, std::uint64_t d,
                                 std::uint32_t b,
                                 std::uint64_t budget = kDefaultWorkBudget);

// Same check for every nonzero b at once; one convolution serves all.
std::vector<SolutionCount> verify_small_bound_all(
    const FiniteField& field, std::uint64_t d,
    std::uint64_t budget = kDefaultWorkBudget);

// q > (gcd(d, q-1) - 1)^4, the hypothesis under which two d-th powers cover
// the field.
bool small_threshold_predicate(std::uint64_t q, std::uint64_t d);

}  // namespace ffsums

#endif  // FFSUMS_DIAGONAL_HPP
