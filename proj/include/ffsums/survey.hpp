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

#ifndef FFSUMS_SURVEY_HPP
#define FFSUMS_SURVEY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ffsums/diagonal.hpp"
#include "ffsums/field.hpp"
#include "ffsums/rational.hpp"

namespace ffsums {

enum class CoefficientMode { kUnit, kAllPairs, kSampled };
enum class CheckKind { kCoverage, kSmallBound, kWeil, kLemma8, kLemma12 };

const char* check_name(CheckKind check);
CheckKind check_from_name(const std::string& name);  // throws RangeError

struct SweepConfig {
  std::uint64_t q_min = 2;
  std::uint64_t q_max = 64;
  std::vector<std::uint64_t> d_list;
  CoefficientMode coefficient_mode = CoefficientMode::kUnit;
  std::vector<CheckKind> checks;
  std::uint64_t seed = 0;          // drives every sampled choice
  std::uint64_t samples = 32;      // sampled pairs / polynomials / sets
  std::uint64_t all_pairs_cap = 64;  // all-pairs fields above this use (1,1)
  std::uint64_t budget = kDefaultWorkBudget;
  bool emit_timings = false;  // keeps output files byte-identical when off
};

// One output line of a sweep. Element slots a and b hold canonical integer
// encodings, 0 where a check has no coefficients.
struct SweepRecord {
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  std::uint32_t r = 0;
  std::uint64_t d = 0;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::string check;
  std::string outcome;  // pass | fail | exceptional
  nlohmann::json payload = nlohmann::json::object();
  std::uint64_t wall_time_micros = 0;

  std::string to_json_line() const;
};

struct SweepSummary {
  struct PerCheck {
    std::uint64_t d;
    std::string check;
    std::uint64_t pass = 0;
    std::uint64_t fail = 0;
    std::uint64_t exceptional = 0;
    double min_slack = 0.0;
    bool has_slack = false;
  };
  std::vector<PerCheck> per_check;
  std::uint64_t total_records = 0;
  bool aborted = false;  // a bound violation stopped the sweep

  std::string to_json() const;
};

// Prime powers q in [q_min, q_max], ascending, as (p, r). Throws RangeError
// for an invalid range.
std::vector<std::pair<std::uint64_t, std::uint32_t>> enumerate_prime_powers(
    std::uint64_t q_min, std::uint64_t q_max);

// All prime powers q <= q_max where {x^d + y^d} misses part of F_q. With
// the certificate enabled the brute-force scan stops at (d-1)^4, past which
// the threshold predicate guarantees coverage.
std::vector<std::uint64_t> exceptional_field_search(std::uint64_t d,
                                                    std::uint64_t q_max,
                                                    bool use_certificate = true);

// Runs every configured check over every field and d, writing one JSON
// record per line; deterministic given the config. Returns the summary. A
// bound violation emits its reproducer record and aborts.
SweepSummary run_sweep(const SweepConfig& config, std::ostream& records_out);

struct AveragingWitness {
  FieldElement g;  // least nonzero shift with a nonempty intersection
  FieldElement x;  // a x^d lies in the intersection
  FieldElement y;  // -b y^d + c g^d equals a x^d
  FieldElement x_over_g;  // the divided witness: a(x/g)^d + b(y/g)^d = c
  FieldElement y_over_g;
  bool averaging_certificate;  // T > 0 held, the averaging proof's own path
  Rational t;                  // the g != 0 average, exact
};

// Realizes the averaging argument: finds g != 0 with
// {a x^d} cap ({-b y^d} + c g^d) nonempty and divides through by g^d.
// Throws NoWitnessError when c is genuinely not representable,
// ZeroCoefficientError for zero a, b, or c.
AveragingWitness witness_by_averaging(const FiniteField& field,
                                      std::uint64_t d, std::uint32_t a,
                                      std::uint32_t b, std::uint32_t c);

}  // namespace ffsums

#endif  // FFSUMS_SURVEY_HPP
