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

// Command-line front end.

#include <unistd.h>

#include <iostream>
#include <new>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fltk/category.hpp"
#include "fltk/error.hpp"
#include "fltk/hierarchy.hpp"
#include "fltk/modelcheck.hpp"
#include "fltk/surface.hpp"
#include "fltk/translate.hpp"

namespace {

using namespace fltk;
using surface::print_canonical;

int cmd_eval(const std::string& expr) {
  std::cout << surface::print_value(surface::eval(surface::parse(expr))) << '\n';
  return 0;
}

int cmd_repl() {
  bool interactive = ::isatty(STDIN_FILENO) != 0;
  std::size_t errors = surface::run_repl(std::cin, std::cout, interactive);
  return (!interactive && errors > 0) ? 1 : 0;
}

int cmd_enumerate(std::uint32_t stage, bool count_only) {
  if (count_only) {
    if (stage == 0) {
      std::cout << 0 << '\n';
    } else {
      std::cout << count_p(stage) << '\n';
    }
    return 0;
  }
  for (HfFun f : enumerate_stage(stage)) std::cout << print_canonical(f) << '\n';
  return 0;
}

int cmd_fevels(std::uint32_t stage) {
  for (HfFun f : enumerate_stage(stage)) {
    if (is_fevel(f)) std::cout << print_canonical(f) << '\n';
  }
  return 0;
}

int cmd_check(const std::string& theory_text, std::size_t max_size, const std::string& fmt,
              unsigned threads) {
  auto theory = parse_theory(theory_text);
  if (!theory) throw UserError("unknown theory '" + theory_text + "' (flt, fst or lt)");
  if (max_size == 0) throw UserError("--max-size must be at least 1");
  std::vector<SweepReport> reports;
  for (std::size_t n = 1; n <= max_size; ++n) reports.push_back(sweep(*theory, n, threads));
  if (fmt == "json") {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const SweepReport& r : reports) {
      nlohmann::ordered_json failures = nlohmann::ordered_json::object();
      for (auto [a, c] : r.per_axiom_failures) failures[std::string(axiom_name(a))] = c;
      out.push_back({{"size", r.size},
                     {"candidates", r.candidates},
                     {"models", r.models},
                     {"iso_classes", r.iso_classes},
                     {"per_axiom_failures", failures}});
    }
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  for (const SweepReport& r : reports) {
    std::cout << theory_name(r.theory) << " size " << r.size << ": " << r.candidates
              << " candidates, " << r.models << " models, " << r.iso_classes
              << " isomorphism classes\n";
    for (auto [a, c] : r.per_axiom_failures) {
      std::cout << "  " << axiom_name(a) << " fails on " << c << '\n';
    }
  }
  return 0;
}

int cmd_translate(const std::string& dir) {
  bool to_sets = dir == "i";
  int status = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(std::cin, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      surface::Value v = surface::eval(surface::parse(line));
      if (to_sets) {
        auto f = std::get_if<HfFun>(&v);
        if (!f) throw UserError("expected a function");
        std::cout << print_canonical(to_set(*f)) << '\n';
      } else {
        auto a = std::get_if<HfSet>(&v);
        if (!a) throw UserError("expected a set");
        std::cout << print_canonical(to_fun(*a)) << '\n';
      }
    } catch (const UserError& e) {
      std::cerr << "line " << lineno << ": " << e.what() << '\n';
      status = 1;
    }
  }
  return status;
}

int cmd_laws(std::uint32_t stage) {
  LawReport r = check_category_laws(enumerate_stage(stage));
  std::cout << "arrows " << r.arrows << '\n'
            << "identity checks " << r.identity_checks << ", failures "
            << r.identity_failures << '\n'
            << "composable pairs " << r.composable_pairs << '\n'
            << "composable triples " << r.composable_triples << ", associativity failures "
            << r.associativity_failures << '\n'
            << (r.ok() ? "laws hold" : "laws FAIL") << '\n';
  return r.ok() ? 0 : 2;
}

int cmd_product(std::size_t card_a, std::size_t card_b, std::size_t max_apex, bool report) {
  std::vector<HfFun> base = enumerate_stage(2);
  std::vector<HfFun> objects;
  for (unsigned mask = 0; mask < (1u << base.size()); ++mask) {
    std::vector<HfFun> xs;
    for (std::size_t i = 0; i < base.size(); ++i)
      if (mask & (1u << i)) xs.push_back(base[i]);
    objects.push_back(funset_of(xs));
  }
  std::size_t total = 0;
  for (HfFun a : objects) {
    if (a.field().size() != card_a) continue;
    for (HfFun b : objects) {
      if (b.field().size() != card_b) continue;
      std::vector<HfFun> universe = product_universe(a, b);
      std::vector<ProductDiagram> found = find_products(a, b, universe, max_apex);
      total += found.size();
      std::cout << "A=" << print_canonical(a) << " B=" << print_canonical(b) << ": "
                << found.size() << " product diagram(s) with |P| <= " << max_apex << '\n';
      if (report) {
        for (const ProductDiagram& d : found) {
          std::cout << "  P=" << print_canonical(d.P) << " p1=" << print_canonical(d.p1)
                    << " p2=" << print_canonical(d.p2) << '\n';
        }
      }
    }
  }
  std::cout << "total " << total << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hereditarily finite functions and their set-theoretic mirror"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads for sweeps (0 = all cores)");

  std::string expr;
  auto* eval = app.add_subcommand("eval", "Evaluate one expression");
  eval->add_option("expr", expr, "Expression")->required();

  auto* repl = app.add_subcommand("repl", "Read expressions and commands line by line");

  std::uint32_t stage = 0;
  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "List the members of a stage");
  enumerate->add_option("--stage", stage, "Stage number")->required();
  enumerate->add_flag("--count-only", count_only, "Print only the number of members");

  std::uint32_t within = 0;
  auto* fevels = app.add_subcommand("fevels", "List the fevels inside a stage");
  fevels->add_option("--within-stage", within, "Stage number")->required();

  std::uint32_t alpha = 0;
  auto* countp = app.add_subcommand("count-p", "Number of functions found by n fevels");
  countp->add_option("n", alpha, "Number of fevels")->required();

  std::string theory;
  std::size_t max_size = 0;
  std::string fmt = "text";
  auto* check = app.add_subcommand("check", "Sweep finite structures for models of a theory");
  check->add_option("--theory", theory, "flt, fst or lt")->required();
  check->add_option("--max-size", max_size, "Largest structure size")->required();
  check->add_option("--report", fmt, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::string dir;
  auto* translate = app.add_subcommand("translate", "Translate canonical terms read from stdin");
  translate->add_option("--dir", dir, "i: functions to sets, j: sets to functions")
      ->required()
      ->check(CLI::IsMember({"i", "j"}));

  auto* cat = app.add_subcommand("cat", "Category checks");
  cat->require_subcommand(1);
  std::uint32_t law_stage = 3;
  auto* laws = cat->add_subcommand("laws", "Identity and associativity over a stage");
  laws->add_option("--stage", law_stage, "Stage number");
  std::size_t card_a = 0, card_b = 0, max_apex = 5;
  bool product_report = false;
  auto* product = cat->add_subcommand("product", "Search product diagrams over stage-2 funsets");
  product->add_option("--cardA", card_a, "Cardinality of A")->required();
  product->add_option("--cardB", card_b, "Cardinality of B")->required();
  product->add_option("--max-apex", max_apex, "Largest apex searched");
  product->add_flag("--report", product_report, "Print every diagram found");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*eval) return cmd_eval(expr);
    if (*repl) return cmd_repl();
    if (*enumerate) return cmd_enumerate(stage, count_only);
    if (*fevels) return cmd_fevels(within);
    if (*countp) {
      std::cout << count_p(alpha) << '\n';
      return 0;
    }
    if (*check) return cmd_check(theory, max_size, fmt, threads);
    if (*translate) return cmd_translate(dir);
    if (*laws) return cmd_laws(law_stage);
    if (*product) return cmd_product(card_a, card_b, max_apex, product_report);
  } catch (const UserError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::bad_alloc&) {
    std::cerr << "internal error: out of memory\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
