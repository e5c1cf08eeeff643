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

#include "ffsums/survey.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <ostream>
#include <random>

#include "ffsums/harmonic.hpp"
#include "ffsums/power_sums.hpp"

namespace ffsums {

namespace {

using nlohmann::json;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// One generator per (seed, q, d, check) cell, so record contents do not
// depend on which other cells ran. Modular draws keep the stream identical
// across standard libraries.
std::mt19937_64 cell_rng(const SweepConfig& config, std::uint64_t q,
                         std::uint64_t d, CheckKind check) {
  std::uint64_t s = splitmix64(config.seed);
  s = splitmix64(s ^ q);
  s = splitmix64(s ^ (d << 1));
  s = splitmix64(s ^ (static_cast<std::uint64_t>(check) << 2));
  return std::mt19937_64(s);
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
  return rng() % n;
}

ElementSet draw_subset(std::mt19937_64& rng, const FiniteField& field) {
  ElementSet s(&field);
  for (std::uint64_t c = 0; c < field.order(); ++c) {
    if (rng() & 1) s.insert(static_cast<std::uint32_t>(c));
  }
  return s;
}

DensePolynomial draw_monic(std::mt19937_64& rng, const FiniteField& field,
                           std::uint64_t d) {
  std::vector<std::uint32_t> coeffs(d + 1);
  for (std::uint64_t i = 0; i < d; ++i) {
    coeffs[i] = static_cast<std::uint32_t>(draw_below(rng, field.order()));
  }
  coeffs[d] = field.one().code();
  return DensePolynomial(&field, std::move(coeffs));
}

DensePolynomial draw_poly_of_degree(std::mt19937_64& rng,
                                    const FiniteField& field,
                                    std::uint64_t d) {
  std::vector<std::uint32_t> coeffs(d + 1);
  for (std::uint64_t i = 0; i < d; ++i) {
    coeffs[i] = static_cast<std::uint32_t>(draw_below(rng, field.order()));
  }
  coeffs[d] =
      static_cast<std::uint32_t>(1 + draw_below(rng, field.order() - 1));
  return DensePolynomial(&field, std::move(coeffs));
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> coefficient_pairs(
    const SweepConfig& config, const FiniteField& field, std::uint64_t d,
    CheckKind check) {
  const std::uint64_t q = field.order();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  switch (config.coefficient_mode) {
    case CoefficientMode::kUnit:
      pairs.emplace_back(field.one().code(), field.one().code());
      break;
    case CoefficientMode::kAllPairs:
      if (q > config.all_pairs_cap) {
        pairs.emplace_back(field.one().code(), field.one().code());
      } else {
        for (std::uint64_t a = 1; a < q; ++a) {
          for (std::uint64_t b = 1; b < q; ++b) {
            pairs.emplace_back(static_cast<std::uint32_t>(a),
                               static_cast<std::uint32_t>(b));
          }
        }
      }
      break;
    case CoefficientMode::kSampled: {
      auto rng = cell_rng(config, q, d, check);
      for (std::uint64_t i = 0; i < config.samples; ++i) {
        pairs.emplace_back(
            static_cast<std::uint32_t>(1 + draw_below(rng, q - 1)),
            static_cast<std::uint32_t>(1 + draw_below(rng, q - 1)));
      }
      break;
    }
  }
  return pairs;
}

class SummaryBuilder {
 public:
  void add(const SweepRecord& record, double slack, bool has_slack) {
    auto& entry = cells_[{record.d, record.check}];
    entry.d = record.d;
    entry.check = record.check;
    if (record.outcome == "pass") {
      ++entry.pass;
    } else if (record.outcome == "fail") {
      ++entry.fail;
    } else {
      ++entry.exceptional;
    }
    if (has_slack) {
      if (!entry.has_slack || slack < entry.min_slack) {
        entry.min_slack = slack;
      }
      entry.has_slack = true;
    }
    ++total_;
  }

  SweepSummary finish(bool aborted) {
    SweepSummary summary;
    summary.total_records = total_;
    summary.aborted = aborted;
    for (auto& [key, cell] : cells_) summary.per_check.push_back(cell);
    return summary;
  }

 private:
  std::map<std::pair<std::uint64_t, std::string>, SweepSummary::PerCheck>
      cells_;
  std::uint64_t total_ = 0;
};

json truncated_codes(const std::vector<std::uint32_t>& codes,
                     std::size_t limit = 32) {
  json arr = json::array();
  for (std::size_t i = 0; i < codes.size() && i < limit; ++i) {
    arr.push_back(codes[i]);
  }
  return arr;
}

}  // namespace

const char* check_name(CheckKind check) {
  switch (check) {
    case CheckKind::kCoverage:
      return "coverage";
    case CheckKind::kSmallBound:
      return "small-bound";
    case CheckKind::kWeil:
      return "weil";
    case CheckKind::kLemma8:
      return "lemma8";
    case CheckKind::kLemma12:
      return "lemma12";
  }
  return "unknown";
}

CheckKind check_from_name(const std::string& name) {
  if (name == "coverage") return CheckKind::kCoverage;
  if (name == "small-bound") return CheckKind::kSmallBound;
  if (name == "weil") return CheckKind::kWeil;
  if (name == "lemma8") return CheckKind::kLemma8;
  if (name == "lemma12") return CheckKind::kLemma12;
  throw RangeError("unrecognized check: " + name);
}

std::string SweepRecord::to_json_line() const {
  json j;
  j["q"] = q;
  j["p"] = p;
  j["r"] = r;
  j["d"] = d;
  j["a"] = a;
  j["b"] = b;
  j["check"] = check;
  j["outcome"] = outcome;
  j["payload"] = payload;
  j["wall_time_micros"] = wall_time_micros;
  return j.dump();
}

std::string SweepSummary::to_json() const {
  json j;
  j["total_records"] = total_records;
  j["aborted"] = aborted;
  json cells = json::array();
  for (const auto& cell : per_check) {
    json c;
    c["d"] = cell.d;
    c["check"] = cell.check;
    c["pass"] = cell.pass;
    c["fail"] = cell.fail;
    c["exceptional"] = cell.exceptional;
    if (cell.has_slack) c["min_slack"] = cell.min_slack;
    cells.push_back(c);
  }
  j["per_check"] = cells;
  return j.dump(2);
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> enumerate_prime_powers(
    std::uint64_t q_min, std::uint64_t q_max) {
  if (q_min < 2 || q_min > q_max || q_max > kMaxFieldOrder) {
    throw RangeError("need 2 <= q_min <= q_max <= 2^20");
  }
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t q = q_min; q <= q_max; ++q) {
    const std::uint64_t p = smallest_prime_factor(q);
    std::uint64_t m = q;
    std::uint32_t r = 0;
    while (m % p == 0) {
      m /= p;
      ++r;
    }
    if (m == 1) out.emplace_back(p, r);
  }
  return out;
}

std::vector<std::uint64_t> exceptional_field_search(std::uint64_t d,
                                                    std::uint64_t q_max,
                                                    bool use_certificate) {
  if (d < 1) throw RangeError("exponent must be at least 1");
  if (q_max < 2) throw RangeError("q_max must be at least 2");
  // Past (d-1)^4 the threshold predicate certifies coverage, since
  // gcd(d, q-1) <= d.
  unsigned __int128 certified_from = 1;
  for (int i = 0; i < 4; ++i) certified_from *= d - 1;
  std::vector<std::uint64_t> out;
  for (const auto& [p, r] : enumerate_prime_powers(2, q_max)) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < r; ++i) q *= p;
    if (use_certificate && static_cast<unsigned __int128>(q) > certified_from) {
      continue;
    }
    const auto field = FiniteField::make(p, r);
    if (!coverage_report(*field, d, 1, 1, /*with_witnesses=*/false).covered) {
      out.push_back(q);
    }
  }
  return out;
}

SweepSummary run_sweep(const SweepConfig& config, std::ostream& records_out) {
  if (config.q_min < 2 || config.q_min > config.q_max ||
      config.q_max > kMaxFieldOrder) {
    throw RangeError("invalid sweep range");
  }
  SummaryBuilder summary;
  bool aborted = false;

  const auto fields_pr = enumerate_prime_powers(config.q_min, config.q_max);
  for (const auto& [p, r] : fields_pr) {
    if (aborted) break;
    const auto field = FiniteField::make(p, r);
    const std::uint64_t q = field->order();
    for (const std::uint64_t d : config.d_list) {
      if (aborted) break;
      for (const CheckKind check : config.checks) {
        if (aborted) break;
        const auto started = std::chrono::steady_clock::now();
        std::vector<SweepRecord> produced;

        auto base_record = [&](std::uint64_t a, std::uint64_t b) {
          SweepRecord rec;
          rec.q = q;
          rec.p = p;
          rec.r = r;
          rec.d = d;
          rec.a = a;
          rec.b = b;
          rec.check = check_name(check);
          return rec;
        };

        switch (check) {
          case CheckKind::kCoverage: {
            for (const auto& [a, b] :
                 coefficient_pairs(config, *field, d, check)) {
              const CoverageReport report =
                  coverage_report(*field, d, a, b, /*with_witnesses=*/false);
              SweepRecord rec = base_record(a, b);
              rec.outcome = report.covered ? "pass" : "exceptional";
              rec.payload["covered"] = report.covered;
              rec.payload["delta"] = gcd_reduce_exponent(*field, d);
              if (!report.covered) {
                rec.payload["unrepresented_count"] =
                    report.unrepresented.size();
                rec.payload["unrepresented"] =
                    truncated_codes(report.unrepresented);
              }
              produced.push_back(std::move(rec));
            }
            break;
          }
          case CheckKind::kSmallBound: {
            const auto counts = verify_small_bound_all(*field, d,
                                                       config.budget);
            double min_slack = 0.0;
            bool first = true;
            std::uint64_t worst_b = 0;
            bool ok = true;
            for (const auto& sc : counts) {
              const auto& chk = *sc.small_bound;
              if (first || chk.slack < min_slack) {
                min_slack = chk.slack;
                worst_b = sc.instance.rhs;
                first = false;
              }
              ok = ok && chk.holds;
            }
            SweepRecord rec = base_record(1, 1);
            rec.outcome = ok ? "pass" : "fail";
            rec.payload["delta"] = std::gcd(d, q - 1);
            rec.payload["min_slack"] = min_slack;
            rec.payload["worst_b"] = worst_b;
            rec.payload["rhs_count"] = counts.size();
            produced.push_back(std::move(rec));
            break;
          }
          case CheckKind::kWeil: {
            if (d < 1 || d >= q || std::gcd(d, q) != 1) break;
            auto rng = cell_rng(config, q, d, check);
            double min_slack = 0.0;
            double max_modulus = 0.0;
            bool first = true;
            bool ok = true;
            for (std::uint64_t s = 0; s < config.samples; ++s) {
              const DensePolynomial poly = draw_monic(rng, *field, d);
              for (std::uint64_t label = 1; label < q; ++label) {
                const AdditiveCharacter chi{
                    field.get(), static_cast<std::uint32_t>(label)};
                const WeilBoundCheck chk = verify_weil_bound(poly, chi);
                if (first || chk.slack < min_slack) min_slack = chk.slack;
                max_modulus = std::max(max_modulus, chk.modulus);
                first = false;
                ok = ok && chk.holds;
              }
            }
            SweepRecord rec = base_record(0, 0);
            rec.outcome = ok ? "pass" : "fail";
            rec.payload["bound"] = static_cast<double>(d - 1) *
                                   std::sqrt(static_cast<double>(q));
            rec.payload["max_modulus"] = max_modulus;
            rec.payload["min_slack"] = min_slack;
            rec.payload["polynomials"] = config.samples;
            produced.push_back(std::move(rec));
            break;
          }
          case CheckKind::kLemma8: {
            if (d <= 1 || d >= field->characteristic()) break;
            auto rng = cell_rng(config, q, d, check);
            bool ok = true;
            double min_slack = 0.0;
            std::string max_dev = "0";
            Rational max_dev_value;
            bool first = true;
            for (std::uint64_t s = 0; s < config.samples; ++s) {
              const ElementSet a = draw_subset(rng, *field);
              const ElementSet b = draw_subset(rng, *field);
              const std::uint32_t c =
                  static_cast<std::uint32_t>(1 + draw_below(rng, q - 1));
              const LemmaCheck chk = verify_lemma8(*field, a, b, c, d);
              if (first || chk.slack < min_slack) min_slack = chk.slack;
              if (first || max_dev_value < chk.avg.deviation) {
                max_dev_value = chk.avg.deviation;
                max_dev = chk.avg.deviation.to_string();
              }
              first = false;
              ok = ok && chk.holds;
            }
            SweepRecord rec = base_record(0, 0);
            rec.outcome = ok ? "pass" : "fail";
            rec.payload["bound"] = error_fn_elementary(q, d);
            rec.payload["min_slack"] = min_slack;
            rec.payload["max_deviation"] = max_dev;
            rec.payload["samples"] = config.samples;
            produced.push_back(std::move(rec));
            break;
          }
          case CheckKind::kLemma12: {
            if (d < 1 || std::gcd(d, q) != 1) break;
            auto rng = cell_rng(config, q, d, check);
            bool ok = true;
            double min_slack = 0.0;
            std::string max_dev = "0";
            Rational max_dev_value;
            bool first = true;
            for (std::uint64_t s = 0; s < config.samples; ++s) {
              const ElementSet a = draw_subset(rng, *field);
              const ElementSet b = draw_subset(rng, *field);
              const DensePolynomial poly = draw_poly_of_degree(rng, *field, d);
              const LemmaCheck chk = verify_lemma12(*field, a, b, poly);
              if (first || chk.slack < min_slack) min_slack = chk.slack;
              if (first || max_dev_value < chk.avg.deviation) {
                max_dev_value = chk.avg.deviation;
                max_dev = chk.avg.deviation.to_string();
              }
              first = false;
              ok = ok && chk.holds;
            }
            SweepRecord rec = base_record(0, 0);
            rec.outcome = ok ? "pass" : "fail";
            rec.payload["bound"] = error_fn_fourier(q, d);
            rec.payload["min_slack"] = min_slack;
            rec.payload["max_deviation"] = max_dev;
            rec.payload["samples"] = config.samples;
            produced.push_back(std::move(rec));
            break;
          }
        }

        const auto elapsed =
            std::chrono::duration_cast<std::chrono::microseconds>(
                std::chrono::steady_clock::now() - started);
        for (SweepRecord& rec : produced) {
          if (config.emit_timings) {
            rec.wall_time_micros = static_cast<std::uint64_t>(
                elapsed.count());
          }
          const bool has_slack = rec.payload.contains("min_slack");
          const double slack =
              has_slack ? rec.payload["min_slack"].get<double>() : 0.0;
          summary.add(rec, slack, has_slack);
          records_out << rec.to_json_line() << "\n";
          if (rec.outcome == "fail") {
            aborted = true;  // the record just written is the reproducer
            break;
          }
        }
      }
    }
  }
  return summary.finish(aborted);
}

AveragingWitness witness_by_averaging(const FiniteField& field,
                                      std::uint64_t d, std::uint32_t a,
                                      std::uint32_t b, std::uint32_t c) {
  if (a == 0 || b == 0) {
    throw ZeroCoefficientError("coefficients must be nonzero");
  }
  if (c == 0) throw ZeroCoefficientError("target c must be nonzero");
  const std::uint64_t q = field.order();
  const PowerImage img = power_image(field, d);

  // A = {a x^d} and B = {-b y^d}, with least preimages carried along.
  std::vector<std::uint32_t> pre_a(q, PowerImage::kNoPreimage);
  std::vector<std::uint32_t> pre_b(q, PowerImage::kNoPreimage);
  for (const std::uint32_t u : img.elements.members()) {
    const std::uint32_t x = img.least_preimage[u];
    const std::uint32_t va = field.mul_code(a, u);
    if (pre_a[va] == PowerImage::kNoPreimage ||
        x < pre_a[va]) {  // scaling is injective; first hit is least anyway
      pre_a[va] = x;
    }
    const std::uint32_t vb = field.neg_code(field.mul_code(b, u));
    if (pre_b[vb] == PowerImage::kNoPreimage || x < pre_b[vb]) {
      pre_b[vb] = x;
    }
  }

  std::uint64_t intersections_nonzero = 0;
  std::uint32_t found_g = 0;
  std::uint32_t found_z = 0;
  bool found = false;
  for (std::uint64_t g = 1; g < q; ++g) {
    const std::uint32_t shift = field.mul_code(
        c, field.pow_code(static_cast<std::uint32_t>(g), d));
    std::uint64_t count = 0;
    std::uint32_t least_z = 0;
    for (std::uint64_t z = 0; z < q; ++z) {
      if (pre_a[z] == PowerImage::kNoPreimage) continue;
      const std::uint32_t w = field.sub_code(static_cast<std::uint32_t>(z),
                                             shift);
      if (pre_b[w] != PowerImage::kNoPreimage) {
        if (count == 0) least_z = static_cast<std::uint32_t>(z);
        ++count;
      }
    }
    intersections_nonzero += count;
    if (count > 0 && !found) {
      found = true;
      found_g = static_cast<std::uint32_t>(g);
      found_z = least_z;
    }
  }

  if (!found) {
    throw NoWitnessError("c is not a sum a x^d + b y^d in this field");
  }

  const std::uint32_t shift = field.mul_code(c, field.pow_code(found_g, d));
  const std::uint32_t x1 = pre_a[found_z];
  const std::uint32_t y1 = pre_b[field.sub_code(found_z, shift)];
  const FieldElement g_el(&field, found_g);
  const FieldElement x_el(&field, x1);
  const FieldElement y_el(&field, y1);
  const FieldElement xg = x_el / g_el;
  const FieldElement yg = y_el / g_el;
  const FieldElement lhs = field.element(a) * pow(xg, d) +
                           field.element(b) * pow(yg, d);
  if (lhs != field.element(c)) {
    throw Error("internal check failed: averaging witness");
  }
  const std::int64_t qq = static_cast<std::int64_t>(q) *
                          static_cast<std::int64_t>(q);
  return AveragingWitness{
      g_el,
      x_el,
      y_el,
      xg,
      yg,
      intersections_nonzero > 0,
      Rational(static_cast<std::int64_t>(intersections_nonzero), qq)};
}

}  // namespace ffsums
