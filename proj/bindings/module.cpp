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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <memory>
#include <optional>
#include <vector>

#include "ffsums/diagonal.hpp"
#include "ffsums/field.hpp"
#include "ffsums/harmonic.hpp"
#include "ffsums/power_sums.hpp"
#include "ffsums/survey.hpp"

namespace py = pybind11;

namespace {

using namespace ffsums;

// Python-facing handle; elements cross the boundary as canonical integer
// codes.
struct Field {
  std::shared_ptr<const FiniteField> f;

  const FiniteField& get() const { return *f; }
  std::uint32_t code(std::uint64_t v) const {
    if (v >= f->order()) throw RangeError("element code out of range");
    return static_cast<std::uint32_t>(v);
  }
};

ElementSet to_set(const Field& field, const std::vector<std::uint64_t>& codes) {
  ElementSet s(&field.get());
  for (const std::uint64_t c : codes) s.insert(field.code(c));
  return s;
}

DensePolynomial to_poly(const Field& field,
                        const std::vector<std::uint64_t>& coeffs) {
  std::vector<std::uint32_t> c;
  c.reserve(coeffs.size());
  for (const std::uint64_t v : coeffs) c.push_back(field.code(v));
  return DensePolynomial(&field.get(), std::move(c));
}

py::dict lemma_dict(const LemmaCheck& chk) {
  py::dict d;
  d["deviation"] = chk.avg.deviation.to_string();
  d["deviation_float"] = chk.avg.deviation.to_double();
  d["s"] = chk.avg.s.to_string();
  d["t"] = chk.avg.t.to_string();
  d["bound"] = chk.bound;
  d["slack"] = chk.slack;
  d["holds"] = chk.holds;
  return d;
}

}  // namespace

PYBIND11_MODULE(_ffsums, m) {
  m.doc() = "finite-field power-sum toolkit";

  py::register_exception<Error>(m, "FfsumsError", PyExc_RuntimeError);

  py::class_<Field>(m, "Field")
      .def(py::init([](std::uint64_t q) {
             return Field{FiniteField::make_order(q)};
           }),
           py::arg("q"))
      .def(py::init([](std::uint64_t p, std::uint32_t r) {
             return Field{FiniteField::make(p, r)};
           }),
           py::arg("p"), py::arg("r"))
      .def_property_readonly("order",
                             [](const Field& f) { return f.get().order(); })
      .def_property_readonly(
          "characteristic",
          [](const Field& f) { return f.get().characteristic(); })
      .def_property_readonly("degree",
                             [](const Field& f) { return f.get().degree(); })
      .def_property_readonly("modulus",
                             [](const Field& f) { return f.get().modulus(); })
      .def("add", [](const Field& f, std::uint64_t a, std::uint64_t b) {
        return f.get().add_code(f.code(a), f.code(b));
      })
      .def("sub", [](const Field& f, std::uint64_t a, std::uint64_t b) {
        return f.get().sub_code(f.code(a), f.code(b));
      })
      .def("mul", [](const Field& f, std::uint64_t a, std::uint64_t b) {
        return f.get().mul_code(f.code(a), f.code(b));
      })
      .def("neg",
           [](const Field& f, std::uint64_t a) {
             return f.get().neg_code(f.code(a));
           })
      .def("inv",
           [](const Field& f, std::uint64_t a) {
             return f.get().inv_code(f.code(a));
           })
      .def("pow", [](const Field& f, std::uint64_t a, std::uint64_t k) {
        return f.get().pow_code(f.code(a), k);
      })
      .def("trace",
           [](const Field& f, std::uint64_t a) {
             return f.get().trace_code(f.code(a));
           })
      .def("rep",
           [](const Field& f, std::uint64_t a) {
             return f.get().element(a).rep();
           })
      .def("generator",
           [](const Field& f) {
             return f.get().multiplicative_generator().code();
           })
      .def("elements",
           [](const Field& f) {
             std::vector<std::uint32_t> out;
             for (const auto& e : f.get().enumerate()) out.push_back(e.code());
             return out;
           })
      .def("is_square",
           [](const Field& f, std::uint64_t a) {
             return f.get().is_square_code(f.code(a));
           })
      .def("sqrt",
           [](const Field& f,
              std::uint64_t a) -> std::optional<std::uint32_t> {
             return f.get().sqrt_code(f.code(a));
           })
      .def("__repr__", [](const Field& f) {
        return "Field(q=" + std::to_string(f.get().order()) + ")";
      });

  m.def("power_image", [](const Field& f, std::uint64_t d) {
    return power_image(f.get(), d).elements.members();
  });
  m.def("gcd_reduce_exponent", [](const Field& f, std::uint64_t d) {
    return gcd_reduce_exponent(f.get(), d);
  });
  m.def("sum_of_two_powers",
        [](const Field& f, std::uint64_t d, std::uint64_t a, std::uint64_t b) {
          return sum_of_two_powers_set(f.get(), d, f.code(a), f.code(b))
              .members();
        },
        py::arg("field"), py::arg("d"), py::arg("a") = 1, py::arg("b") = 1);
  m.def("coverage",
        [](const Field& f, std::uint64_t d, std::uint64_t a, std::uint64_t b,
           bool witnesses) {
          const CoverageReport rep =
              coverage_report(f.get(), d, f.code(a), f.code(b), witnesses);
          py::dict out;
          out["covered"] = rep.covered;
          out["unrepresented"] = rep.unrepresented;
          if (witnesses && rep.covered) {
            py::dict w;
            for (const auto& cw : rep.witnesses) {
              w[py::int_(cw.c)] = py::make_tuple(cw.x, cw.y);
            }
            out["witnesses"] = w;
          }
          return out;
        },
        py::arg("field"), py::arg("d"), py::arg("a") = 1, py::arg("b") = 1,
        py::arg("witnesses") = false);
  m.def("weber_two_squares", [](const Field& f, std::uint64_t c) {
    const auto [x, y] = weber_two_squares(f.get(), f.get().element(c));
    return py::make_tuple(x.code(), y.code());
  });
  m.def("cauchy_two_squares",
        [](const Field& f, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
          const auto [x, y] =
              cauchy_two_squares(f.get(), f.get().element(a),
                                 f.get().element(b), f.get().element(c));
          return py::make_tuple(x.code(), y.code());
        });
  m.def("three_term_witness",
        [](const Field& f, std::uint64_t e, std::uint64_t a, std::uint64_t b,
           std::uint64_t c) -> py::object {
          const auto w = three_term_diagonal_witness(
              f.get(), e, f.get().element(a), f.get().element(b),
              f.get().element(c));
          if (!w) return py::none();
          py::dict out;
          out["x"] = w->x.code();
          out["y"] = w->y.code();
          out["z"] = w->z.code();
          out["u"] = w->u.code();
          out["v"] = w->v.code();
          return out;
        });

  m.def("count_solutions",
        [](const Field& f, const std::vector<std::uint64_t>& exponents,
           const std::vector<std::uint64_t>& coeffs, std::uint64_t rhs) {
          DiagonalInstance instance{&f.get(), exponents, {}, f.code(rhs)};
          for (const std::uint64_t a : coeffs) {
            instance.coefficients.push_back(f.code(a));
          }
          return count_solutions(instance).count;
        });
  m.def("small_bound", [](const Field& f, std::uint64_t d, std::uint64_t b) {
    const SolutionCount sc = verify_small_bound(f.get(), d, f.code(b));
    py::dict out;
    out["count"] = sc.count;
    out["delta"] = sc.small_bound->delta;
    out["bound"] = sc.small_bound->bound;
    out["slack"] = sc.small_bound->slack;
    out["holds"] = sc.small_bound->holds;
    return out;
  });
  m.def("small_threshold", &small_threshold_predicate);

  m.def("character_value",
        [](const Field& f, std::uint64_t label, std::uint64_t x) {
          const AdditiveCharacter chi{&f.get(), f.code(label)};
          return character_value(chi, f.get().element(x));
        });
  m.def("fourier_transform",
        [](const Field& f, const std::vector<std::complex<double>>& values) {
          return fourier_transform(f.get(), values).values;
        });
  m.def("fourier_invert",
        [](const Field& f, const std::vector<std::complex<double>>& values) {
          return fourier_invert(SpectrumFunction{&f.get(), values});
        });
  m.def("plancherel",
        [](const Field& f, const std::vector<std::complex<double>>& f1,
           const std::vector<std::complex<double>>& f2) {
          const PlancherelCheck chk = plancherel_check(f.get(), f1, f2);
          return py::make_tuple(chk.lhs, chk.rhs, chk.abs_error);
        });
  m.def("weil_sum",
        [](const Field& f, const std::vector<std::uint64_t>& poly,
           std::uint64_t label) {
          const AdditiveCharacter chi{&f.get(), f.code(label)};
          return weil_sum(to_poly(f, poly), chi);
        });
  m.def("verify_weil",
        [](const Field& f, const std::vector<std::uint64_t>& poly,
           std::uint64_t label) {
          const AdditiveCharacter chi{&f.get(), f.code(label)};
          const WeilBoundCheck chk = verify_weil_bound(to_poly(f, poly), chi);
          py::dict out;
          out["sum"] = chk.sum;
          out["modulus"] = chk.modulus;
          out["bound"] = chk.bound;
          out["slack"] = chk.slack;
          out["holds"] = chk.holds;
          return out;
        });
  m.def("difference_polynomial",
        [](const Field& f, const std::vector<std::uint64_t>& poly,
           std::uint64_t h) {
          return difference_polynomial(to_poly(f, poly), f.code(h)).coeffs();
        });

  m.def("error_fn_elementary", &error_fn_elementary);
  m.def("error_fn_fourier", &error_fn_fourier);

  m.def("lemma8",
        [](const Field& f, const std::vector<std::uint64_t>& a,
           const std::vector<std::uint64_t>& b, std::uint64_t c,
           std::uint64_t d) {
          return lemma_dict(
              verify_lemma8(f.get(), to_set(f, a), to_set(f, b), f.code(c), d));
        });
  m.def("lemma12",
        [](const Field& f, const std::vector<std::uint64_t>& a,
           const std::vector<std::uint64_t>& b,
           const std::vector<std::uint64_t>& poly) {
          return lemma_dict(verify_lemma12(f.get(), to_set(f, a), to_set(f, b),
                                           to_poly(f, poly)));
        });

  m.def("enumerate_prime_powers", &enumerate_prime_powers);
  m.def("exceptional_fields",
        [](std::uint64_t d, std::uint64_t qmax, bool certificate) {
          return exceptional_field_search(d, qmax, certificate);
        },
        py::arg("d"), py::arg("qmax"), py::arg("certificate") = true);
  m.def("witness_by_averaging",
        [](const Field& f, std::uint64_t d, std::uint64_t a, std::uint64_t b,
           std::uint64_t c) -> py::object {
          try {
            const AveragingWitness w = witness_by_averaging(
                f.get(), d, f.code(a), f.code(b), f.code(c));
            py::dict out;
            out["g"] = w.g.code();
            out["x"] = w.x.code();
            out["y"] = w.y.code();
            out["x_over_g"] = w.x_over_g.code();
            out["y_over_g"] = w.y_over_g.code();
            out["averaging_certificate"] = w.averaging_certificate;
            return out;
          } catch (const NoWitnessError&) {
            return py::none();
          }
        });

  m.attr("__version__") = "0.1.0";
}
