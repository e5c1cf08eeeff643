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

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ffsums/diagonal.hpp"
#include "ffsums/field.hpp"
#include "ffsums/harmonic.hpp"
#include "ffsums/power_sums.hpp"
#include "ffsums/survey.hpp"

namespace {

using namespace ffsums;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBoundViolation = 2;
constexpr int kExitIo = 3;

struct OutputOptions {
  std::string format = "human";
  std::string out_path;

  bool json() const { return format == "json-lines"; }
};

// Resolves --out; stdout when empty.
class OutputStream {
 public:
  explicit OutputStream(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw IoError("cannot open output file: " + path);
    }
  }
  std::ostream& get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct FieldArgs {
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  std::uint32_t r = 1;
};

void add_field_options(CLI::App* cmd, FieldArgs& args) {
  auto* q_opt = cmd->add_option("--q", args.q, "field order (prime power)");
  auto* p_opt = cmd->add_option("--p", args.p, "characteristic");
  auto* r_opt = cmd->add_option("--r", args.r, "extension degree");
  q_opt->excludes(p_opt)->excludes(r_opt);
  p_opt->needs(r_opt);
}

std::shared_ptr<const FiniteField> make_field(const FieldArgs& args) {
  if (args.q != 0) return FiniteField::make_order(args.q);
  if (args.p != 0) return FiniteField::make(args.p, args.r);
  throw RangeError("specify a field with --q or --p/--r");
}

std::uint64_t work_budget() {
  if (const char* env = std::getenv("FFSUMS_WORK_BUDGET")) {
    return std::strtoull(env, nullptr, 10);
  }
  return kDefaultWorkBudget;
}

SweepRecord record_for(const FiniteField& field, std::uint64_t d,
                       std::uint64_t a, std::uint64_t b,
                       const std::string& check) {
  SweepRecord rec;
  rec.q = field.order();
  rec.p = field.characteristic();
  rec.r = field.degree();
  rec.d = d;
  rec.a = a;
  rec.b = b;
  rec.check = check;
  return rec;
}

void emit(const OutputOptions& opts, std::ostream& os, const SweepRecord& rec,
          const std::string& human) {
  if (opts.json()) {
    os << rec.to_json_line() << "\n";
  } else {
    os << human << "\n";
  }
}

std::string join_codes(const std::vector<std::uint32_t>& codes) {
  std::ostringstream ss;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i) ss << ",";
    ss << codes[i];
  }
  return ss.str();
}

int run_coverage(const FieldArgs& fargs, std::uint64_t d, std::uint64_t a,
                 std::uint64_t b, bool witnesses, const OutputOptions& opts) {
  const auto field = make_field(fargs);
  const CoverageReport report =
      coverage_report(*field, d, static_cast<std::uint32_t>(a),
                      static_cast<std::uint32_t>(b), witnesses);
  SweepRecord rec = record_for(*field, d, a, b, "coverage");
  rec.outcome = report.covered ? "pass" : "exceptional";
  rec.payload["covered"] = report.covered;
  rec.payload["delta"] = gcd_reduce_exponent(*field, d);
  if (!report.covered) {
    rec.payload["unrepresented"] = report.unrepresented;
  } else if (witnesses) {
    rec.payload["witness_count"] = report.witnesses.size();
  }
  std::ostringstream human;
  human << "q=" << field->order() << " d=" << d << " a=" << a << " b=" << b
        << " covered=" << (report.covered ? "true" : "false");
  if (!report.covered) {
    human << " unrepresented=[" << join_codes(report.unrepresented) << "]";
  }
  OutputStream out(opts.out_path);
  emit(opts, out.get(), rec, human.str());
  return kExitOk;
}

int run_witness(const FieldArgs& fargs, std::uint64_t d, std::uint64_t a,
                std::uint64_t b, std::uint64_t c, const OutputOptions& opts) {
  const auto field = make_field(fargs);
  SweepRecord rec = record_for(*field, d, a, b, "witness");
  OutputStream out(opts.out_path);
  try {
    const AveragingWitness w = witness_by_averaging(
        *field, d, static_cast<std::uint32_t>(a),
        static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(c));
    rec.outcome = "pass";
    rec.payload["c"] = c;
    rec.payload["g"] = w.g.code();
    rec.payload["x"] = w.x.code();
    rec.payload["y"] = w.y.code();
    rec.payload["x_over_g"] = w.x_over_g.code();
    rec.payload["y_over_g"] = w.y_over_g.code();
    rec.payload["method"] =
        w.averaging_certificate ? "averaging" : "fallback-scan";
    std::ostringstream human;
    human << "q=" << field->order() << " d=" << d << " c=" << c
          << "  g=" << w.g.code() << " x=" << w.x.code()
          << " y=" << w.y.code() << "  c = a*(x/g)^d + b*(y/g)^d with x/g="
          << w.x_over_g.code() << " y/g=" << w.y_over_g.code();
    emit(opts, out.get(), rec, human.str());
  } catch (const NoWitnessError&) {
    rec.outcome = "exceptional";
    rec.payload["c"] = c;
    rec.payload["witness"] = false;
    std::ostringstream human;
    human << "q=" << field->order() << " d=" << d << " c=" << c
          << "  no witness: c is not of the form a x^d + b y^d";
    emit(opts, out.get(), rec, human.str());
  }
  return kExitOk;
}

int run_count(const FieldArgs& fargs, std::vector<std::uint64_t> exponents,
              std::vector<std::uint64_t> coeffs, std::uint64_t d,
              std::uint64_t rhs, const OutputOptions& opts) {
  const auto field = make_field(fargs);
  if (exponents.empty() && d > 0) exponents = {d, d};
  if (coeffs.empty()) coeffs.assign(exponents.size(), 1);
  if (exponents.empty()) {
    throw RangeError("give the equation with --exponents or --d");
  }
  DiagonalInstance instance{field.get(), exponents, {},
                            static_cast<std::uint32_t>(rhs)};
  for (const std::uint64_t a : coeffs) {
    instance.coefficients.push_back(static_cast<std::uint32_t>(a));
  }
  const SolutionCount result = count_solutions(instance, work_budget());
  SweepRecord rec = record_for(*field, exponents[0],
                               coeffs.empty() ? 0 : coeffs[0],
                               coeffs.size() > 1 ? coeffs[1] : 0, "count");
  rec.outcome = "pass";
  rec.payload["exponents"] = exponents;
  rec.payload["coefficients"] = coeffs;
  rec.payload["rhs"] = rhs;
  rec.payload["count"] = result.count;
  std::ostringstream human;
  human << "q=" << field->order() << " N(" << rhs << ") = " << result.count;
  OutputStream out(opts.out_path);
  emit(opts, out.get(), rec, human.str());
  return kExitOk;
}

int run_small(const FieldArgs& fargs, std::uint64_t d,
              std::optional<std::uint64_t> rhs, const OutputOptions& opts) {
  const auto field = make_field(fargs);
  OutputStream out(opts.out_path);
  bool violated = false;
  std::vector<SolutionCount> results;
  if (rhs.has_value()) {
    results.push_back(verify_small_bound(
        *field, d, static_cast<std::uint32_t>(*rhs), work_budget()));
  } else {
    results = verify_small_bound_all(*field, d, work_budget());
  }
  for (const SolutionCount& sc : results) {
    const SmallBoundCheck& chk = *sc.small_bound;
    SweepRecord rec = record_for(*field, d, 1, 1, "small-bound");
    rec.outcome = chk.holds ? "pass" : "fail";
    rec.payload["rhs"] = sc.instance.rhs;
    rec.payload["count"] = sc.count;
    rec.payload["delta"] = chk.delta;
    rec.payload["bound"] = chk.bound;
    rec.payload["slack"] = chk.slack;
    std::ostringstream human;
    human << "q=" << field->order() << " d=" << d << " b=" << sc.instance.rhs
          << " N=" << sc.count << " |N-q|<=" << chk.bound
          << " slack=" << chk.slack << (chk.holds ? " pass" : " FAIL");
    emit(opts, out.get(), rec, human.str());
    violated = violated || !chk.holds;
  }
  return violated ? kExitBoundViolation : kExitOk;
}

int run_weil(const FieldArgs& fargs, std::uint64_t d,
             std::vector<std::uint64_t> poly, std::uint64_t label,
             bool all_characters, const OutputOptions& opts) {
  const auto field = make_field(fargs);
  DensePolynomial p(field.get());
  if (!poly.empty()) {
    std::vector<std::uint32_t> coeffs;
    for (const std::uint64_t c : poly) {
      coeffs.push_back(static_cast<std::uint32_t>(c % field->order()));
    }
    p = DensePolynomial(field.get(), std::move(coeffs));
  } else if (d > 0) {
    p = DensePolynomial::monomial(field.get(), field->one().code(),
                                  static_cast<std::uint32_t>(d));
  } else {
    throw RangeError("give the polynomial with --poly or --d");
  }
  OutputStream out(opts.out_path);
  bool violated = false;
  double max_modulus = 0.0;
  double bound = 0.0;
  std::vector<std::uint64_t> labels;
  if (all_characters || label == 0) {
    for (std::uint64_t a = 1; a < field->order(); ++a) labels.push_back(a);
  } else {
    labels.push_back(label);
  }
  for (const std::uint64_t a : labels) {
    const AdditiveCharacter chi{field.get(), static_cast<std::uint32_t>(a)};
    const WeilBoundCheck chk = verify_weil_bound(p, chi);
    max_modulus = std::max(max_modulus, chk.modulus);
    bound = chk.bound;
    violated = violated || !chk.holds;
  }
  SweepRecord rec = record_for(*field, p.degree(), 0, 0, "weil");
  rec.outcome = violated ? "fail" : "pass";
  rec.payload["poly"] = p.coeffs();
  rec.payload["characters"] = labels.size();
  rec.payload["max_modulus"] = max_modulus;
  rec.payload["bound"] = bound;
  rec.payload["min_slack"] = bound - max_modulus;
  std::ostringstream human;
  human << "q=" << field->order() << " deg=" << p.degree()
        << " max|sum|=" << max_modulus << " bound=" << bound
        << (violated ? " FAIL" : " pass");
  emit(opts, out.get(), rec, human.str());
  return violated ? kExitBoundViolation : kExitOk;
}

ElementSet parse_set(const FiniteField& field,
                     const std::vector<std::uint64_t>& codes) {
  ElementSet s(&field);
  for (const std::uint64_t c : codes) {
    if (c >= field.order()) throw RangeError("set element out of range");
    s.insert(static_cast<std::uint32_t>(c));
  }
  return s;
}

ElementSet random_subset(const FiniteField& field, std::mt19937_64& rng) {
  ElementSet s(&field);
  for (std::uint64_t c = 0; c < field.order(); ++c) {
    if (rng() & 1) s.insert(static_cast<std::uint32_t>(c));
  }
  return s;
}

int run_lemma(const FieldArgs& fargs, std::uint64_t d, std::uint64_t c,
              const std::vector<std::uint64_t>& poly,
              const std::vector<std::uint64_t>& set_a,
              const std::vector<std::uint64_t>& set_b, std::uint64_t samples,
              std::uint64_t seed, bool fourier_form,
              const OutputOptions& opts) {
  const auto field = make_field(fargs);
  OutputStream out(opts.out_path);
  std::mt19937_64 rng(seed);
  bool violated = false;
  const bool explicit_sets = !set_a.empty() || !set_b.empty();
  const std::uint64_t runs = explicit_sets ? 1 : samples;
  for (std::uint64_t i = 0; i < runs; ++i) {
    const ElementSet a = explicit_sets ? parse_set(*field, set_a)
                                       : random_subset(*field, rng);
    const ElementSet b = explicit_sets ? parse_set(*field, set_b)
                                       : random_subset(*field, rng);
    LemmaCheck chk = [&] {
      if (fourier_form) {
        DensePolynomial p(field.get());
        if (!poly.empty()) {
          std::vector<std::uint32_t> coeffs;
          for (const std::uint64_t v : poly) {
            coeffs.push_back(static_cast<std::uint32_t>(v % field->order()));
          }
          p = DensePolynomial(field.get(), std::move(coeffs));
        } else {
          p = DensePolynomial::monomial(
              field.get(),
              static_cast<std::uint32_t>(c % field->order()),
              static_cast<std::uint32_t>(d));
        }
        return verify_lemma12(*field, a, b, p);
      }
      return verify_lemma8(*field, a, b,
                           static_cast<std::uint32_t>(c % field->order()), d);
    }();
    SweepRecord rec = record_for(*field, d, 0, 0,
                                 fourier_form ? "lemma12" : "lemma8");
    rec.outcome = chk.holds ? "pass" : "fail";
    rec.payload["deviation"] = chk.avg.deviation.to_string();
    rec.payload["bound"] = chk.bound;
    rec.payload["slack"] = chk.slack;
    rec.payload["mu_a"] = chk.avg.mu_a.to_string();
    rec.payload["mu_b"] = chk.avg.mu_b.to_string();
    std::ostringstream human;
    human << "q=" << field->order() << " d=" << d
          << " deviation=" << chk.avg.deviation.to_string()
          << " bound=" << chk.bound << " slack=" << chk.slack
          << (chk.holds ? " pass" : " FAIL");
    emit(opts, out.get(), rec, human.str());
    violated = violated || !chk.holds;
  }
  return violated ? kExitBoundViolation : kExitOk;
}

int run_exceptional(std::uint64_t d, std::uint64_t qmax, bool no_certificate,
                    const OutputOptions& opts) {
  const std::vector<std::uint64_t> fields =
      exceptional_field_search(d, qmax, !no_certificate);
  SweepRecord rec;
  rec.d = d;
  rec.check = "exceptional";
  rec.outcome = "pass";
  rec.payload["qmax"] = qmax;
  rec.payload["certificate"] = !no_certificate;
  rec.payload["exceptional"] = fields;
  std::ostringstream human;
  human << "d=" << d << " qmax=" << qmax << " exceptional=[";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) human << ",";
    human << fields[i];
  }
  human << "]";
  OutputStream out(opts.out_path);
  emit(opts, out.get(), rec, human.str());
  return kExitOk;
}

int run_fourier_selftest(const FieldArgs& fargs, std::uint64_t samples,
                         std::uint64_t seed, const OutputOptions& opts) {
  const auto field = make_field(fargs);
  const std::uint64_t q = field->order();
  std::mt19937_64 rng(seed);
  double max_roundtrip = 0.0;
  double max_plancherel = 0.0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::vector<Complex> f(q), g(q);
    for (std::uint64_t i = 0; i < q; ++i) {
      f[i] = Complex(static_cast<double>(rng() % 2048) / 1024.0 - 1.0,
                     static_cast<double>(rng() % 2048) / 1024.0 - 1.0);
      g[i] = Complex(static_cast<double>(rng() % 2048) / 1024.0 - 1.0,
                     static_cast<double>(rng() % 2048) / 1024.0 - 1.0);
    }
    const std::vector<Complex> back =
        fourier_invert(fourier_transform(*field, f));
    for (std::uint64_t i = 0; i < q; ++i) {
      max_roundtrip = std::max(max_roundtrip, std::abs(back[i] - f[i]));
    }
    const PlancherelCheck pc = plancherel_check(*field, f, g);
    max_plancherel = std::max(max_plancherel, pc.abs_error);
  }
  const bool ok = max_roundtrip < 1e-9 && max_plancherel < 1e-9;
  SweepRecord rec = record_for(*field, 0, 0, 0, "fourier-selftest");
  rec.outcome = ok ? "pass" : "fail";
  rec.payload["samples"] = samples;
  rec.payload["max_roundtrip_error"] = max_roundtrip;
  rec.payload["max_plancherel_error"] = max_plancherel;
  std::ostringstream human;
  human << "q=" << q << " roundtrip_err=" << max_roundtrip
        << " plancherel_err=" << max_plancherel << (ok ? " pass" : " FAIL");
  OutputStream out(opts.out_path);
  emit(opts, out.get(), rec, human.str());
  return ok ? kExitOk : kExitBoundViolation;
}

int run_sweep_cmd(std::uint64_t qmin, std::uint64_t qmax,
                  const std::vector<std::uint64_t>& d_list,
                  const std::vector<std::string>& checks,
                  const std::string& mode, std::uint64_t samples,
                  std::uint64_t seed, bool timings,
                  const std::string& summary_path, const OutputOptions& opts) {
  SweepConfig config;
  config.q_min = qmin;
  config.q_max = qmax;
  config.d_list = d_list;
  config.seed = seed;
  config.samples = samples;
  config.emit_timings = timings;
  config.budget = work_budget();
  if (mode == "unit") {
    config.coefficient_mode = CoefficientMode::kUnit;
  } else if (mode == "all-pairs") {
    config.coefficient_mode = CoefficientMode::kAllPairs;
  } else if (mode == "sampled-k") {
    config.coefficient_mode = CoefficientMode::kSampled;
  } else {
    throw RangeError("unknown coefficient mode: " + mode);
  }
  for (const std::string& name : checks) {
    config.checks.push_back(check_from_name(name));
  }
  if (config.checks.empty()) {
    config.checks = {CheckKind::kCoverage};
  }
  OutputStream out(opts.out_path);
  const SweepSummary summary = run_sweep(config, out.get());
  const std::string summary_text = summary.to_json();
  if (!summary_path.empty()) {
    std::ofstream sf(summary_path);
    if (!sf) throw IoError("cannot open summary file: " + summary_path);
    sf << summary_text << "\n";
  } else if (!opts.out_path.empty()) {
    std::ofstream sf(opts.out_path + ".summary.json");
    if (!sf) throw IoError("cannot open summary file");
    sf << summary_text << "\n";
  } else {
    std::cerr << summary_text << "\n";
  }
  return summary.aborted ? kExitBoundViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-field power-sum toolkit"};
  app.require_subcommand(1);

  OutputOptions opts;
  app.add_option("--format", opts.format, "human | json-lines")
      ->check(CLI::IsMember({"human", "json-lines"}))
      ->capture_default_str();
  app.add_option("--out", opts.out_path, "write records to this file");

  // coverage
  FieldArgs cov_field;
  std::uint64_t cov_d = 2, cov_a = 1, cov_b = 1;
  bool cov_witnesses = false;
  auto* cov = app.add_subcommand("coverage",
                                 "is every c equal to a x^d + b y^d?");
  add_field_options(cov, cov_field);
  cov->add_option("--d", cov_d, "exponent")->required();
  cov->add_option("--a", cov_a, "coefficient a (canonical code)");
  cov->add_option("--b", cov_b, "coefficient b (canonical code)");
  cov->add_flag("--witnesses", cov_witnesses, "also compute per-c witnesses");

  // witness
  FieldArgs wit_field;
  std::uint64_t wit_d = 2, wit_a = 1, wit_b = 1, wit_c = 1;
  auto* wit = app.add_subcommand("witness",
                                 "averaging witness for c = a x^d + b y^d");
  add_field_options(wit, wit_field);
  wit->add_option("--d", wit_d, "exponent")->required();
  wit->add_option("--a", wit_a, "coefficient a");
  wit->add_option("--b", wit_b, "coefficient b");
  wit->add_option("--c", wit_c, "target element")->required();

  // count
  FieldArgs cnt_field;
  std::vector<std::uint64_t> cnt_exponents, cnt_coeffs;
  std::uint64_t cnt_d = 0, cnt_rhs = 0;
  auto* cnt = app.add_subcommand("count",
                                 "count diagonal-equation solutions N(b)");
  add_field_options(cnt, cnt_field);
  cnt->add_option("--exponents", cnt_exponents, "k_1,k_2,...")
      ->delimiter(',');
  cnt->add_option("--coeffs", cnt_coeffs, "a_1,a_2,... (canonical codes)")
      ->delimiter(',');
  cnt->add_option("--d", cnt_d, "shorthand for x^d + y^d");
  cnt->add_option("--rhs", cnt_rhs, "right-hand side b");

  // small
  FieldArgs sml_field;
  std::uint64_t sml_d = 2;
  std::optional<std::uint64_t> sml_rhs;
  auto* sml = app.add_subcommand("small",
                                 "check |N(b) - q| <= (delta-1)^2 sqrt(q)");
  add_field_options(sml, sml_field);
  sml->add_option("--d", sml_d, "exponent")->required();
  std::uint64_t sml_rhs_raw = 0;
  auto* sml_rhs_opt =
      sml->add_option("--rhs", sml_rhs_raw, "single b (default: all b != 0)");

  // weil
  FieldArgs weil_field;
  std::uint64_t weil_d = 0, weil_label = 0;
  std::vector<std::uint64_t> weil_poly;
  bool weil_all = false;
  auto* weil = app.add_subcommand("weil",
                                  "check |sum chi(P(g))| <= (d-1) sqrt(q)");
  add_field_options(weil, weil_field);
  weil->add_option("--poly", weil_poly,
                   "coefficients, constant first, comma separated")
      ->delimiter(',');
  weil->add_option("--d", weil_d, "use the monic monomial x^d");
  weil->add_option("--label", weil_label, "character label (code)");
  weil->add_flag("--all-characters", weil_all, "scan every nontrivial chi");

  // lemma8 / lemma12
  FieldArgs l8_field, l12_field;
  std::uint64_t l8_d = 2, l8_c = 1, l8_samples = 10, l8_seed = 0;
  std::vector<std::uint64_t> l8_set_a, l8_set_b;
  auto* l8 = app.add_subcommand("lemma8",
                                "averaged-intersection bound, elementary form");
  add_field_options(l8, l8_field);
  l8->add_option("--d", l8_d, "monomial degree (1 < d < char)")->required();
  l8->add_option("--c", l8_c, "monomial coefficient");
  l8->add_option("--samples", l8_samples, "random (A,B) draws");
  l8->add_option("--seed", l8_seed, "sampling seed");
  l8->add_option("--set-a", l8_set_a, "explicit A (codes)")->delimiter(',');
  l8->add_option("--set-b", l8_set_b, "explicit B (codes)")->delimiter(',');

  std::uint64_t l12_d = 0, l12_samples = 10, l12_seed = 0;
  std::vector<std::uint64_t> l12_poly, l12_set_a, l12_set_b;
  auto* l12 = app.add_subcommand("lemma12",
                                 "averaged-intersection bound, Fourier form");
  add_field_options(l12, l12_field);
  l12->add_option("--poly", l12_poly, "polynomial, constant first")
      ->delimiter(',');
  l12->add_option("--d", l12_d, "use the monic monomial x^d");
  l12->add_option("--samples", l12_samples, "random (A,B) draws");
  l12->add_option("--seed", l12_seed, "sampling seed");
  l12->add_option("--set-a", l12_set_a, "explicit A (codes)")->delimiter(',');
  l12->add_option("--set-b", l12_set_b, "explicit B (codes)")->delimiter(',');

  // sweep
  std::uint64_t sw_qmin = 2, sw_qmax = 64, sw_samples = 32, sw_seed = 0;
  std::vector<std::uint64_t> sw_d;
  std::vector<std::string> sw_checks;
  std::string sw_mode = "unit";
  std::string sw_summary;
  bool sw_timings = false;
  auto* sw = app.add_subcommand("sweep", "batch checks over prime powers");
  sw->add_option("--qmin", sw_qmin, "lowest field order");
  sw->add_option("--qmax", sw_qmax, "highest field order");
  sw->add_option("--d", sw_d, "exponent list")->delimiter(',')->required();
  sw->add_option("--checks", sw_checks,
                 "coverage,small-bound,weil,lemma8,lemma12")
      ->delimiter(',');
  sw->add_option("--mode", sw_mode, "unit | all-pairs | sampled-k");
  sw->add_option("--samples", sw_samples, "samples per cell (sampled modes)");
  sw->add_option("--seed", sw_seed, "sampling seed")->capture_default_str();
  sw->add_option("--summary-out", sw_summary, "summary file path");
  sw->add_flag("--timings", sw_timings,
               "record wall times (breaks byte-for-byte reproducibility)");

  // exceptional
  std::uint64_t ex_d = 2, ex_qmax = 64;
  bool ex_nocert = false;
  auto* ex = app.add_subcommand("exceptional",
                                "fields where {x^d + y^d} misses elements");
  ex->add_option("--d", ex_d, "exponent")->required();
  ex->add_option("--qmax", ex_qmax, "search bound")->required();
  ex->add_flag("--no-certificate", ex_nocert,
               "brute force the whole range, ignore the threshold");

  // fourier-selftest
  FieldArgs ft_field;
  std::uint64_t ft_samples = 100, ft_seed = 0;
  auto* ft = app.add_subcommand("fourier-selftest",
                                "inversion and Plancherel round trips");
  add_field_options(ft, ft_field);
  ft->add_option("--samples", ft_samples, "random functions to test");
  ft->add_option("--seed", ft_seed, "sampling seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cov->parsed()) {
      return run_coverage(cov_field, cov_d, cov_a, cov_b, cov_witnesses, opts);
    }
    if (wit->parsed()) {
      return run_witness(wit_field, wit_d, wit_a, wit_b, wit_c, opts);
    }
    if (cnt->parsed()) {
      return run_count(cnt_field, cnt_exponents, cnt_coeffs, cnt_d, cnt_rhs,
                       opts);
    }
    if (sml->parsed()) {
      if (sml_rhs_opt->count() > 0) sml_rhs = sml_rhs_raw;
      return run_small(sml_field, sml_d, sml_rhs, opts);
    }
    if (weil->parsed()) {
      return run_weil(weil_field, weil_d, weil_poly, weil_label, weil_all,
                      opts);
    }
    if (l8->parsed()) {
      return run_lemma(l8_field, l8_d, l8_c, {}, l8_set_a, l8_set_b,
                       l8_samples, l8_seed, /*fourier_form=*/false, opts);
    }
    if (l12->parsed()) {
      return run_lemma(l12_field, l12_d, 1, l12_poly, l12_set_a, l12_set_b,
                       l12_samples, l12_seed, /*fourier_form=*/true, opts);
    }
    if (sw->parsed()) {
      return run_sweep_cmd(sw_qmin, sw_qmax, sw_d, sw_checks, sw_mode,
                           sw_samples, sw_seed, sw_timings, sw_summary, opts);
    }
    if (ex->parsed()) {
      return run_exceptional(ex_d, ex_qmax, ex_nocert, opts);
    }
    if (ft->parsed()) {
      return run_fourier_selftest(ft_field, ft_samples, ft_seed, opts);
    }
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
