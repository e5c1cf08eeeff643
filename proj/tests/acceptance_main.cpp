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
//
// End-to-end verification sweep. Each numbered check prints one PASS/FAIL
// line; the exit status is the number of failed checks. A single check can
// be selected with --criterion N.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ffsums/diagonal.hpp"
#include "ffsums/field.hpp"
#include "ffsums/harmonic.hpp"
#include "ffsums/poly.hpp"
#include "ffsums/power_sums.hpp"
#include "ffsums/survey.hpp"

using namespace ffsums;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& message) {
    pass = false;
    if (detail.empty()) detail = message;
  }
};

std::vector<std::uint64_t> prime_powers_up_to(std::uint64_t cap,
                                              std::uint64_t lo = 2) {
  std::vector<std::uint64_t> out;
  for (const auto& [p, r] : enumerate_prime_powers(lo, cap)) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < r; ++i) q *= p;
    out.push_back(q);
  }
  return out;
}

std::mt19937_64 seeded(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t s = 0x9e3779b97f4a7c15ull ^ (a * 0xff51afd7ed558ccdull);
  s ^= b + 0x9e3779b97f4a7c15ull + (s << 6) + (s >> 2);
  s ^= c + 0x9e3779b97f4a7c15ull + (s << 6) + (s >> 2);
  return std::mt19937_64(s);
}

ElementSet random_subset(const FiniteField& f, std::mt19937_64& rng) {
  ElementSet s(&f);
  for (std::uint64_t c = 0; c < f.order(); ++c) {
    if (rng() & 1) s.insert(static_cast<std::uint32_t>(c));
  }
  return s;
}

// 1. The F_7 cube facts, exact set equality.
Outcome criterion_cubes_f7() {
  Outcome out;
  const auto f7 = FiniteField::make(7, 1);
  const PowerImage img = power_image(*f7, 3);
  if (img.elements.members() != std::vector<std::uint32_t>{0, 1, 6}) {
    out.fail("cube image of F_7 is not {0,1,6}");
  }
  const ElementSet sums = sum_of_two_powers_set(*f7, 3, 1, 1);
  if (sums.members() != std::vector<std::uint32_t>{0, 1, 2, 5, 6}) {
    out.fail("cube sum set of F_7 is not {0,1,2,5,6}");
  }
  return out;
}

// 2. Exceptional fields for cubes up to 343: exactly 4 and 7, via both the
// certified search and the full brute-force scan.
Outcome criterion_cube_exceptions() {
  Outcome out;
  const std::vector<std::uint64_t> expected{4, 7};
  if (exceptional_field_search(3, 343, true) != expected) {
    out.fail("certified search disagrees");
  }
  if (exceptional_field_search(3, 343, false) != expected) {
    out.fail("brute-force search disagrees");
  }
  return out;
}

// 3. Squares cover every field: all coefficient pairs through q = 64, unit
// coefficients through q = 512.
Outcome criterion_squares_cover() {
  Outcome out;
  for (const std::uint64_t q : prime_powers_up_to(512)) {
    const auto f = FiniteField::make_order(q);
    if (q <= 64) {
      for (std::uint64_t a = 1; a < q && out.pass; ++a) {
        for (std::uint64_t b = 1; b < q && out.pass; ++b) {
          if (!coverage_report(*f, 2, static_cast<std::uint32_t>(a),
                               static_cast<std::uint32_t>(b), false)
                   .covered) {
            out.fail("q=" + std::to_string(q) + " a=" + std::to_string(a) +
                     " b=" + std::to_string(b));
          }
        }
      }
    } else if (!coverage_report(*f, 2, 1, 1, false).covered) {
      out.fail("q=" + std::to_string(q) + " unit coefficients");
    }
  }
  return out;
}

// 4. |N(b) - q| <= (delta-1)^2 sqrt(q) for q <= 289, d <= 8, all b != 0,
// decided exactly in integers.
Outcome criterion_small_inner_bound() {
  Outcome out;
  for (const std::uint64_t q : prime_powers_up_to(289)) {
    const auto f = FiniteField::make_order(q);
    for (std::uint64_t d = 1; d <= 8; ++d) {
      for (const SolutionCount& sc : verify_small_bound_all(*f, d)) {
        if (!sc.small_bound->holds || sc.small_bound->slack < 0.0) {
          out.fail("q=" + std::to_string(q) + " d=" + std::to_string(d) +
                   " b=" + std::to_string(sc.instance.rhs));
        }
      }
    }
  }
  return out;
}

// 5. Whenever q > (delta-1)^4 with q <= 512, d <= 8, unit coverage holds.
Outcome criterion_small_threshold() {
  Outcome out;
  for (const std::uint64_t q : prime_powers_up_to(512)) {
    const auto f = FiniteField::make_order(q);
    for (std::uint64_t d = 1; d <= 8; ++d) {
      if (!small_threshold_predicate(q, d)) continue;
      if (!coverage_report(*f, d, 1, 1, false).covered) {
        out.fail("q=" + std::to_string(q) + " d=" + std::to_string(d));
      }
    }
  }
  return out;
}

// 6. Weil bound over every nontrivial character, 200 seeded polynomials per
// (q, d), q <= 128, d <= 5, d < q, gcd(d, q) = 1.
Outcome criterion_weil() {
  Outcome out;
  for (const std::uint64_t q : prime_powers_up_to(128)) {
    const auto f = FiniteField::make_order(q);
    for (std::uint64_t d = 1; d <= 5 && d < q; ++d) {
      if (std::gcd(d, q) != 1) continue;
      auto rng = seeded(6, q, d);
      for (int sample = 0; sample < 200; ++sample) {
        std::vector<std::uint32_t> coeffs(d + 1);
        for (std::uint64_t i = 0; i < d; ++i) {
          coeffs[i] = static_cast<std::uint32_t>(rng() % q);
        }
        coeffs[d] = 1;
        const DensePolynomial p(f.get(), std::move(coeffs));
        for (std::uint64_t label = 1; label < q; ++label) {
          const WeilBoundCheck chk = verify_weil_bound(
              p, AdditiveCharacter{f.get(),
                                   static_cast<std::uint32_t>(label)});
          if (!chk.holds) {
            out.fail("q=" + std::to_string(q) + " d=" + std::to_string(d) +
                     " label=" + std::to_string(label) +
                     " |sum|=" + std::to_string(chk.modulus));
            return out;
          }
        }
      }
    }
  }
  return out;
}

// 7. The elementary averaging bound, exact rationals, 100 seeded (A, B, c)
// per (q, d), q <= 81, 2 <= d < char.
Outcome criterion_lemma8() {
  Outcome out;
  for (const std::uint64_t q : prime_powers_up_to(81)) {
    const auto f = FiniteField::make_order(q);
    for (std::uint64_t d = 2; d < f->characteristic(); ++d) {
      auto rng = seeded(8, q, d);
      for (int sample = 0; sample < 100; ++sample) {
        const ElementSet a = random_subset(*f, rng);
        const ElementSet b = random_subset(*f, rng);
        const std::uint32_t c =
            static_cast<std::uint32_t>(1 + rng() % (q - 1));
        const LemmaCheck chk = verify_lemma8(*f, a, b, c, d);
        if (!chk.holds) {
          out.fail("q=" + std::to_string(q) + " d=" + std::to_string(d) +
                   " deviation=" + chk.avg.deviation.to_string());
          return out;
        }
      }
    }
  }
  return out;
}

// 8. The Fourier-form averaging bound with general polynomials, plus the
// two error-function comparisons from the remark: exact agreement at d = 2
// and strict dominance for d >= 3, q >= 4 over the whole grid.
Outcome criterion_lemma12_and_error_fns() {
  Outcome out;
  for (const std::uint64_t q : prime_powers_up_to(81)) {
    const auto f = FiniteField::make_order(q);
    for (std::uint64_t d = 1; d <= 8; ++d) {
      if (std::gcd(d, q) != 1) continue;
      auto rng = seeded(12, q, d);
      for (int sample = 0; sample < 100; ++sample) {
        const ElementSet a = random_subset(*f, rng);
        const ElementSet b = random_subset(*f, rng);
        std::vector<std::uint32_t> coeffs(d + 1);
        for (std::uint64_t i = 0; i < d; ++i) {
          coeffs[i] = static_cast<std::uint32_t>(rng() % q);
        }
        coeffs[d] = static_cast<std::uint32_t>(1 + rng() % (q - 1));
        const DensePolynomial p(f.get(), std::move(coeffs));
        const LemmaCheck chk = verify_lemma12(*f, a, b, p);
        if (!chk.holds) {
          out.fail("slack violation at q=" + std::to_string(q) +
                   " d=" + std::to_string(d));
          return out;
        }
      }
    }
  }
  // Exact agreement at d = 2.
  for (const std::uint64_t q : prime_powers_up_to(512)) {
    if (error_fn_elementary(q, 2) != error_fn_fourier(q, 2)) {
      out.fail("error functions disagree at d=2, q=" + std::to_string(q));
      return out;
    }
  }
  // Strict dominance of the Fourier form on the grid d >= 3, q >= 4,
  // decided exactly by cross-powering.
  std::vector<std::string> counterexamples;
  for (const std::uint64_t q : prime_powers_up_to(512, 4)) {
    for (std::uint64_t d = 3; d <= 8; ++d) {
      if (!fourier_bound_strictly_smaller(q, d)) {
        counterexamples.push_back("(q=" + std::to_string(q) +
                                  ",d=" + std::to_string(d) + ")");
      }
    }
  }
  if (!counterexamples.empty()) {
    std::string detail = "fourier form not strictly smaller at " +
                         std::to_string(counterexamples.size()) +
                         " grid points:";
    for (std::size_t i = 0; i < counterexamples.size() && i < 6; ++i) {
      detail += " " + counterexamples[i];
    }
    if (counterexamples.size() > 6) detail += " ...";
    out.fail(detail);
  }
  return out;
}

// 9. Fourier inversion and Plancherel round trips, 100 random functions per
// field, q <= 128, tolerance 1e-9.
Outcome criterion_fourier_selftest() {
  Outcome out;
  for (const std::uint64_t q : prime_powers_up_to(128)) {
    const auto f = FiniteField::make_order(q);
    auto rng = seeded(9, q, 0);
    for (int sample = 0; sample < 100; ++sample) {
      std::vector<Complex> fn(q), gn(q);
      for (std::uint64_t i = 0; i < q; ++i) {
        fn[i] = Complex(static_cast<double>(rng() % 4096) / 2048.0 - 1.0,
                        static_cast<double>(rng() % 4096) / 2048.0 - 1.0);
        gn[i] = Complex(static_cast<double>(rng() % 4096) / 2048.0 - 1.0,
                        static_cast<double>(rng() % 4096) / 2048.0 - 1.0);
      }
      const std::vector<Complex> back =
          fourier_invert(fourier_transform(*f, fn));
      for (std::uint64_t i = 0; i < q; ++i) {
        if (std::abs(back[i] - fn[i]) >= 1e-9) {
          out.fail("round trip error at q=" + std::to_string(q));
          return out;
        }
      }
      const PlancherelCheck pc = plancherel_check(*f, fn, gn);
      if (pc.abs_error >= 1e-9 * std::max(1.0, std::abs(pc.lhs))) {
        out.fail("plancherel error at q=" + std::to_string(q));
        return out;
      }
    }
  }
  return out;
}

// 10. The differencing calculus: iterated differences of c x^d end linear
// with coefficient d! c prod(h_i), and evaluate to a bijection; exhaustive
// in g for every field q <= 81 and d <= 5 below the characteristic, with
// the (c, h) tuple space enumerated fully when small and sampled otherwise.
Outcome criterion_differencing() {
  Outcome out;
  for (const std::uint64_t q : prime_powers_up_to(81)) {
    const auto f = FiniteField::make_order(q);
    for (std::uint64_t d = 2; d <= 5 && d < f->characteristic(); ++d) {
      std::vector<std::vector<std::uint32_t>> tuples;  // c, h_1..h_{d-1}
      double tuple_space = static_cast<double>(q - 1);
      for (std::uint64_t i = 0; i + 1 < d; ++i) {
        tuple_space *= static_cast<double>(q - 1);
      }
      if (tuple_space <= 4096.0) {
        std::vector<std::uint32_t> tuple(d, 1);
        while (true) {
          tuples.push_back(tuple);
          std::size_t i = 0;
          while (i < d && ++tuple[i] == q) {
            tuple[i] = 1;
            ++i;
          }
          if (i == d) break;
        }
      } else {
        auto rng = seeded(10, q, d);
        for (int s = 0; s < 200; ++s) {
          std::vector<std::uint32_t> tuple(d);
          for (auto& v : tuple) {
            v = static_cast<std::uint32_t>(1 + rng() % (q - 1));
          }
          tuples.push_back(tuple);
        }
      }
      for (const auto& tuple : tuples) {
        const std::uint32_t c = tuple[0];
        const std::vector<std::uint32_t> hs(tuple.begin() + 1, tuple.end());
        const DensePolynomial p = DensePolynomial::monomial(
            f.get(), c, static_cast<std::uint32_t>(d));
        const DensePolynomial iter = iterated_difference(p, hs);
        if (iter.degree() != 1) {
          out.fail("iterated difference not linear at q=" +
                   std::to_string(q) + " d=" + std::to_string(d));
          return out;
        }
        std::uint32_t expected = c;
        for (std::uint64_t k = 2; k <= d; ++k) {
          expected = f->mul_code(
              expected,
              f->from_integer(static_cast<std::int64_t>(k)).code());
        }
        for (const std::uint32_t h : hs) expected = f->mul_code(expected, h);
        if (iter.coeff(1) != expected) {
          out.fail("linear coefficient mismatch at q=" + std::to_string(q) +
                   " d=" + std::to_string(d));
          return out;
        }
        std::vector<std::uint8_t> seen(q, 0);
        std::uint64_t hits = 0;
        for (std::uint64_t g = 0; g < q; ++g) {
          std::uint8_t& slot = seen[iter.eval(static_cast<std::uint32_t>(g))];
          hits += slot == 0;
          slot = 1;
        }
        if (hits != q) {
          out.fail("difference map is not a bijection at q=" +
                   std::to_string(q) + " d=" + std::to_string(d));
          return out;
        }
      }
    }
  }
  return out;
}

// 11. The fast paths equal the raw nested-loop oracles for q <= 64, d <= 6:
// image-pair coverage against the O(q^2) scan, and convolution counts
// against direct enumeration.
Outcome criterion_oracle_equivalence() {
  Outcome out;
  for (const std::uint64_t q : prime_powers_up_to(64)) {
    const auto f = FiniteField::make_order(q);
    for (std::uint64_t d = 1; d <= 6; ++d) {
      // Brute-force sum set and per-b pair counts in one scan.
      std::vector<std::uint8_t> reachable(q, 0);
      std::vector<std::uint64_t> counts(q, 0);
      for (std::uint64_t x = 0; x < q; ++x) {
        const std::uint32_t xd = f->pow_code(static_cast<std::uint32_t>(x), d);
        for (std::uint64_t y = 0; y < q; ++y) {
          const std::uint32_t s = f->add_code(
              xd, f->pow_code(static_cast<std::uint32_t>(y), d));
          reachable[s] = 1;
          ++counts[s];
        }
      }
      const ElementSet sums = sum_of_two_powers_set(*f, d, 1, 1);
      for (std::uint64_t v = 0; v < q; ++v) {
        if (sums.contains(static_cast<std::uint32_t>(v)) != (reachable[v] != 0)) {
          out.fail("sum-set mismatch at q=" + std::to_string(q) +
                   " d=" + std::to_string(d));
          return out;
        }
      }
      const CoverageReport rep = coverage_report(*f, d, 1, 1, false);
      const bool brute_covered =
          std::all_of(reachable.begin(), reachable.end(),
                      [](std::uint8_t v) { return v != 0; });
      if (rep.covered != brute_covered) {
        out.fail("coverage mismatch at q=" + std::to_string(q) +
                 " d=" + std::to_string(d));
        return out;
      }
      for (std::uint64_t b = 0; b < q; ++b) {
        const SolutionCount sc = count_solutions(DiagonalInstance{
            f.get(), {d, d}, {1, 1}, static_cast<std::uint32_t>(b)});
        if (sc.count != counts[b]) {
          out.fail("count mismatch at q=" + std::to_string(q) +
                   " d=" + std::to_string(d) + " b=" + std::to_string(b));
          return out;
        }
      }
    }
  }
  return out;
}

// 12. Two sweeps with the same config write byte-identical files.
Outcome criterion_determinism() {
  Outcome out;
  SweepConfig config;
  config.q_min = 2;
  config.q_max = 32;
  config.d_list = {2, 3, 4};
  config.checks = {CheckKind::kCoverage, CheckKind::kSmallBound,
                   CheckKind::kWeil, CheckKind::kLemma8, CheckKind::kLemma12};
  config.coefficient_mode = CoefficientMode::kSampled;
  config.samples = 8;
  config.seed = 2024;

  const auto dir = std::filesystem::temp_directory_path();
  const auto path1 = dir / "ffsums_acceptance_sweep_1.jsonl";
  const auto path2 = dir / "ffsums_acceptance_sweep_2.jsonl";
  for (const auto& path : {path1, path2}) {
    std::ofstream stream(path);
    if (!stream) {
      out.fail("cannot write temp files");
      return out;
    }
    run_sweep(config, stream);
  }
  std::ifstream in1(path1, std::ios::binary);
  std::ifstream in2(path2, std::ios::binary);
  const std::string bytes1((std::istreambuf_iterator<char>(in1)),
                           std::istreambuf_iterator<char>());
  const std::string bytes2((std::istreambuf_iterator<char>(in2)),
                           std::istreambuf_iterator<char>());
  std::filesystem::remove(path1);
  std::filesystem::remove(path2);
  if (bytes1.empty() || bytes1 != bytes2) {
    out.fail("sweep output files differ");
  }
  return out;
}

struct Criterion {
  int number;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      selected = std::atoi(argv[i + 1]);
    }
  }

  const std::vector<Criterion> criteria{
      {1, "F_7 cube image and two-cube sum set", criterion_cubes_f7},
      {2, "exceptional fields for cubes up to 343", criterion_cube_exceptions},
      {3, "two squares cover every field", criterion_squares_cover},
      {4, "inner bound |N(b)-q| <= (delta-1)^2 sqrt(q)",
       criterion_small_inner_bound},
      {5, "threshold q > (delta-1)^4 forces coverage",
       criterion_small_threshold},
      {6, "Weil bound over all characters and sampled polynomials",
       criterion_weil},
      {7, "elementary averaging bound in exact rationals", criterion_lemma8},
      {8, "Fourier averaging bound and error-function comparison",
       criterion_lemma12_and_error_fns},
      {9, "Fourier inversion and Plancherel self-test",
       criterion_fourier_selftest},
      {10, "differencing calculus and induced bijection",
       criterion_differencing},
      {11, "fast paths equal nested-loop oracles", criterion_oracle_equivalence},
      {12, "sweeps are byte-for-byte reproducible", criterion_determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (selected != 0 && c.number != selected) continue;
    const Outcome outcome = c.run();
    std::printf("[%2d] %s  %s\n", c.number, outcome.pass ? "PASS" : "FAIL",
                c.name);
    if (!outcome.pass) {
      std::printf("     %s\n", outcome.detail.c_str());
      ++failures;
    }
  }
  return failures;
}
