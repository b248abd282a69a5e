// Copyright 2026 The fltk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings for the core operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fltk/category.hpp"
#include "fltk/encodings.hpp"
#include "fltk/error.hpp"
#include "fltk/hierarchy.hpp"
#include "fltk/modelcheck.hpp"
#include "fltk/surface.hpp"
#include "fltk/translate.hpp"

namespace py = pybind11;
using namespace fltk;

namespace {

HfFun fun_from_text(const std::string& text) {
  surface::Value v = surface::eval(surface::parse(text));
  if (auto* f = std::get_if<HfFun>(&v)) return *f;
  throw UserError("expected a function, got " + surface::print_value(v));
}

HfSet set_from_text(const std::string& text) {
  surface::Value v = surface::eval(surface::parse(text));
  if (auto* a = std::get_if<HfSet>(&v)) return *a;
  throw UserError("expected a set, got " + surface::print_value(v));
}

py::dict report_dict(const SweepReport& r) {
  py::dict failures;
  for (const auto& [axiom, count] : r.per_axiom_failures)
    failures[py::str(std::string(axiom_name(axiom)))] = count;
  py::dict d;
  d["theory"] = std::string(theory_name(r.theory));
  d["size"] = r.size;
  d["candidates"] = r.candidates;
  d["models"] = r.models;
  d["iso_classes"] = r.iso_classes;
  d["per_axiom_failures"] = failures;
  return d;
}

Theory theory_from(const std::string& name) {
  auto t = parse_theory(name);
  if (!t) throw UserError("unknown theory: " + name);
  return *t;
}

}  // namespace

PYBIND11_MODULE(_fltk, m) {
  m.doc() = "Hereditarily finite functions and their set-theoretic mirror";

  // Translators run newest first, so the subclass is registered last.
  auto& user_error = py::register_exception<UserError>(m, "UserError", PyExc_ValueError);
  py::register_exception<surface::ParseError>(m, "ParseError", user_error.ptr());
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  py::class_<HfFun>(m, "Fun")
      .def(py::init(&fun_from_text), py::arg("text"))
      .def_property_readonly("rank", &HfFun::rank)
      .def_property_readonly("field",
                             [](HfFun f) {
                               std::vector<HfFun> xs(f.field().begin(), f.field().end());
                               canonical_sort(xs);
                               return xs;
                             })
      .def("__call__", [](HfFun f, HfFun x) { return apply(f, x); })
      .def("__contains__", [](HfFun f, HfFun g) { return fun_in(g, f); })
      .def("__eq__", [](HfFun a, HfFun b) { return a == b; })
      .def("__lt__", [](HfFun a, HfFun b) { return compare(a, b) < 0; })
      .def("__hash__", [](HfFun f) { return f.id(); })
      .def("__str__", [](HfFun f) { return surface::print_canonical(f); })
      .def("__repr__", [](HfFun f) { return "Fun('" + surface::print_canonical(f) + "')"; });

  py::class_<HfSet>(m, "Set")
      .def(py::init(&set_from_text), py::arg("text"))
      .def_property_readonly("rank", &HfSet::rank)
      .def_property_readonly("elements",
                             [](HfSet a) {
                               return std::vector<HfSet>(a.elements().begin(),
                                                         a.elements().end());
                             })
      .def("__len__", &HfSet::size)
      .def("__contains__", [](HfSet a, HfSet x) { return member(x, a); })
      .def("__eq__", [](HfSet a, HfSet b) { return a == b; })
      .def("__lt__", [](HfSet a, HfSet b) { return compare(a, b) < 0; })
      .def("__hash__", [](HfSet a) { return a.id(); })
      .def("__str__", [](HfSet a) { return surface::print_canonical(a); })
      .def("__repr__", [](HfSet a) { return "Set('" + surface::print_canonical(a) + "')"; });

  m.def("eval", [](const std::string& text) {
    return surface::print_value(surface::eval(surface::parse(text)));
  }, py::arg("text"), "Evaluate an expression and return its canonical text.");
  m.def("null", &null);
  m.def("funset", [](const std::vector<HfFun>& xs) { return funset_of(xs); }, py::arg("members"));
  m.def("make", [](const std::vector<std::pair<HfFun, HfFun>>& graph) {
    std::vector<Entry> entries;
    for (const auto& [a, v] : graph) entries.push_back({a, v});
    return make(entries);
  }, py::arg("graph"));
  m.def("is_funset", &is_funset);

  m.def("enumerate_stage", py::overload_cast<std::uint32_t>(&enumerate_stage), py::arg("stage"));
  m.def("count_p", [](std::uint32_t alpha) { return py::int_(py::str(count_p(alpha).str())); },
        py::arg("alpha"));
  m.def("hfpot", &hfpot);
  m.def("is_history", py::overload_cast<HfFun>(&is_history));
  m.def("is_fevel", &is_fevel);
  m.def("is_fevel_recursive", &is_fevel_recursive);
  m.def("fevel_of", &fevel_of);
  m.def("diagonal_exists", [](const std::vector<HfFun>& u) { return diagonal_exists(u); });

  m.def("to_set", &to_set);
  m.def("to_fun", &to_fun);
  m.def("is_hereditary_setfunction", &is_hereditary_setfunction);
  m.def("is_hereditary_funset", &is_hereditary_funset);
  m.def("lev_of", &lev_of);
  m.def("is_level", &is_level);
  m.def("kpair", &kpair);

  m.def("dom", &dom);
  m.def("cod", &cod);
  m.def("compose", &compose, py::arg("g"), py::arg("f"));
  m.def("check_category_laws", [](const std::vector<HfFun>& arrows) {
    LawReport r = check_category_laws(arrows);
    py::dict d;
    d["arrows"] = r.arrows;
    d["identity_checks"] = r.identity_checks;
    d["identity_failures"] = r.identity_failures;
    d["composable_pairs"] = r.composable_pairs;
    d["composable_triples"] = r.composable_triples;
    d["associativity_failures"] = r.associativity_failures;
    d["ok"] = r.ok();
    return d;
  });
  m.def("find_products", [](HfFun a, HfFun b, std::size_t max_apex) {
    std::vector<py::tuple> out;
    for (const ProductDiagram& d : find_products(a, b, product_universe(a, b), max_apex))
      out.push_back(py::make_tuple(d.P, d.p1, d.p2));
    return out;
  }, py::arg("a"), py::arg("b"), py::arg("max_apex") = 5);

  m.def("pair", &pair);
  m.def("fst", &fst);
  m.def("snd", &snd);
  m.def("ord", &ord_encode);
  m.def("ord_value", &ord_decode);

  m.def("check", [](const std::string& theory, std::size_t size, unsigned threads) {
    SweepReport r;
    {
      py::gil_scoped_release release;
      r = sweep(theory_from(theory), size, threads);
    }
    return report_dict(r);
  }, py::arg("theory"), py::arg("size"), py::arg("threads") = 0,
     "Sweep every structure of one size for models of a theory.");
}
