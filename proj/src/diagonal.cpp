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

#include "ffsums/diagonal.hpp"

#include <cmath>
#include <numeric>

namespace ffsums {

namespace {

// Multiplicity of each value a x^k as x runs over the field.
std::vector<std::uint64_t> term_distribution(const FiniteField& field,
                                             std::uint32_t coefficient,
                                             std::uint64_t exponent) {
  std::vector<std::uint64_t> dist(field.order(), 0);
  for (std::uint64_t x = 0; x < field.order(); ++x) {
    const std::uint32_t v = field.mul_code(
        coefficient, field.pow_code(static_cast<std::uint32_t>(x), exponent));
    ++dist[v];
  }
  return dist;
}

void check_budget(const FiniteField& field, std::size_t terms,
                  std::uint64_t budget) {
  std::uint64_t work = 1;
  for (std::size_t i = 0; i < terms; ++i) {
    if (work > budget / field.order()) {
      throw BudgetExceededError("q^n exceeds the work budget");
    }
    work *= field.order();
  }
  if (work > budget) throw BudgetExceededError("q^n exceeds the work budget");
}

SmallBoundCheck make_small_bound_check(const FiniteField& field,
                                       std::uint64_t d, std::uint64_t count) {
  const std::uint64_t q = field.order();
  const std::uint64_t delta = std::gcd(d, q - 1);
  const double bound = static_cast<double>((delta - 1) * (delta - 1)) *
                       std::sqrt(static_cast<double>(q));
  const double dev = std::abs(static_cast<double>(count) -
                              static_cast<double>(q));
  // Exact decision: (N - q)^2 <= (delta-1)^4 q in integers.
  const __int128 diff = static_cast<__int128>(count) - static_cast<__int128>(q);
  const __int128 lhs = diff * diff;
  __int128 rhs = 1;
  for (int i = 0; i < 4; ++i) rhs *= static_cast<__int128>(delta - 1);
  rhs *= static_cast<__int128>(q);
  return SmallBoundCheck{delta, bound, bound - dev, lhs <= rhs};
}

}  // namespace

SolutionCount count_solutions(const DiagonalInstance& instance,
                              std::uint64_t budget) {
  const FiniteField& field = *instance.field;
  if (instance.terms() == 0) throw RangeError("instance needs n >= 1 terms");
  if (instance.exponents.size() != instance.coefficients.size()) {
    throw RangeError("exponent and coefficient counts differ");
  }
  for (const std::uint64_t k : instance.exponents) {
    if (k < 1) throw RangeError("exponents must be at least 1");
  }
  for (const std::uint32_t a : instance.coefficients) {
    if (a == 0) throw ZeroCoefficientError("diagonal coefficients are nonzero");
  }
  check_budget(field, instance.terms(), budget);

  std::vector<std::uint64_t> acc =
      term_distribution(field, instance.coefficients[0], instance.exponents[0]);
  for (std::size_t i = 1; i < instance.terms(); ++i) {
    const std::vector<std::uint64_t> next =
        term_distribution(field, instance.coefficients[i],
                          instance.exponents[i]);
    std::vector<std::uint64_t> merged(field.order(), 0);
    for (std::uint64_t u = 0; u < field.order(); ++u) {
      if (acc[u] == 0) continue;
      for (std::uint64_t v = 0; v < field.order(); ++v) {
        if (next[v] == 0) continue;
        merged[field.add_code(static_cast<std::uint32_t>(u),
                              static_cast<std::uint32_t>(v))] +=
            acc[u] * next[v];
      }
    }
    acc = std::move(merged);
  }
  return SolutionCount{instance, acc[instance.rhs], std::nullopt};
}

SolutionCount verify_small_bound(const FiniteField& field, std::uint64_t d,
                                 std::uint32_t b, std::uint64_t budget) {
  if (b == 0) {
    throw ZeroRhsError("zero is trivially a sum of two d-th powers");
  }
  DiagonalInstance instance{&field, {d, d}, {1, 1}, b};
  SolutionCount result = count_solutions(instance, budget);
  result.small_bound = make_small_bound_check(field, d, result.count);
  return result;
}

std::vector<SolutionCount> verify_small_bound_all(const FiniteField& field,
                                                  std::uint64_t d,
                                                  std::uint64_t budget) {
  check_budget(field, 2, budget);
  const std::vector<std::uint64_t> dist = term_distribution(field, 1, d);
  std::vector<std::uint64_t> counts(field.order(), 0);
  for (std::uint64_t u = 0; u < field.order(); ++u) {
    if (dist[u] == 0) continue;
    for (std::uint64_t v = 0; v < field.order(); ++v) {
      if (dist[v] == 0) continue;
      counts[field.add_code(static_cast<std::uint32_t>(u),
                            static_cast<std::uint32_t>(v))] +=
          dist[u] * dist[v];
    }
  }
  std::vector<SolutionCount> out;
  out.reserve(field.order() - 1);
  for (std::uint64_t b = 1; b < field.order(); ++b) {
    DiagonalInstance instance{&field, {d, d}, {1, 1},
                              static_cast<std::uint32_t>(b)};
    SolutionCount sc{instance, counts[b],
                     make_small_bound_check(field, d, counts[b])};
    out.push_back(std::move(sc));
  }
  return out;
}

bool small_threshold_predicate(std::uint64_t q, std::uint64_t d) {
  if (q < 2 || d < 1) throw RangeError("need q >= 2 and d >= 1");
  const std::uint64_t delta = std::gcd(d, q - 1);
  unsigned __int128 fourth = 1;
  for (int i = 0; i < 4; ++i) fourth *= delta - 1;
  return static_cast<unsigned __int128>(q) > fourth;
}

}  // namespace ffsums
