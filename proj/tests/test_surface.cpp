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

#include <doctest.h>

#include <sstream>

#include "fltk/hierarchy.hpp"
#include "fltk/surface.hpp"
#include "fuzz.hpp"
#include "oracles.hpp"

using namespace fltk;
using namespace fltk::surface;

namespace {

std::string run(const std::string& text) { return print_value(eval(parse(text))); }

SourcePos error_pos(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.pos();
  }
  FAIL("expected a parse error for: " << text);
  return {};
}

}  // namespace

TEST_CASE("parse shapes") {
  CHECK(parse("0").kind == Term::Kind::kNull);
  Term t = parse("[0->0]");
  REQUIRE(t.kind == Term::Kind::kFun);
  REQUIRE(t.children.size() == 2);
  CHECK(t.children[0].kind == Term::Kind::kNull);
  CHECK(t.children[1].kind == Term::Kind::kNull);
  CHECK(parse("{}").kind == Term::Kind::kFunset);
  CHECK(parse("set{}").kind == Term::Kind::kSet);
  CHECK(parse("set").kind == Term::Kind::kVar);
  CHECK(parse("ord(12)").children.at(0).number == 12);
  CHECK(parse(" [ 0 -> 0 ,\n 0->0 ] ") == parse("[0->0,0->0]"));
}

TEST_CASE("parse errors carry positions and expectations") {
  SourcePos p = error_pos("[0->");
  CHECK(p.line == 1);
  CHECK(p.column == 5);
  CHECK(error_pos("").column == 1);
  CHECK(error_pos("[0,0]").column == 3);
  SourcePos q = error_pos("[0->0,\n  0 0]");
  CHECK(q.line == 2);
  CHECK(q.column == 5);
  try {
    parse("{0 0}");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.expected() == std::vector<std::string>{",", "}"});
    CHECK(e.found() == "'0'");
    CHECK(std::string(e.what()).find("1:4") != std::string::npos);
  }
  std::string deep(300, '{');
  CHECK(error_pos(deep).column == kMaxNesting + 1);
  std::string ok(100, '{');
  ok += std::string(100, '}');
  CHECK_NOTHROW(parse(ok));
}

TEST_CASE("canonical printing") {
  CHECK(print_canonical(null()) == "0");
  CHECK(print_canonical(funset_of({null()})) == "{0}");
  CHECK(print_canonical(make({{make({{null(), null()}}), null()}})) == "[{0}->0]");
  CHECK(print_canonical(empty_set()) == "set{}");
  CHECK(print_canonical(set_of({empty_set()})) == "set{set{}}");
  for (HfFun f : enumerate_stage(3)) {
    std::string s = print_canonical(f);
    CHECK(s.find(' ') == std::string::npos);
    CHECK(s.find('\n') == std::string::npos);
  }
}

TEST_CASE("evaluation examples") {
  CHECK(run("apply([0->0],0)") == "0");
  CHECK(run("apply(0,0)") == "undef");
  CHECK(run("tofun(set{set{}})") == "{0}");
  CHECK(run("dom([{0}->0])") == "{{0}}");
  CHECK(run("cod([{0}->0])") == "{0}");
  CHECK(run("comp([0->0],[{0}->0])") == "[{0}->0]");
  CHECK(run("pair(0,0)") == "[0->{0}]");
  CHECK(run("fst(pair({0},0))") == "{0}");
  CHECK(run("snd(pair({0},0))") == "0");
  CHECK(run("ord(2)") == "[0->0,{0}->0]");
  CHECK(run("ord(0)") == "0");
  CHECK(run("ordval(ord(5))") == "5");
  CHECK(run("ordval([{0}->0])") == "undef");
  CHECK(run("fevel([{0}->0])") == "{0,{0}}");
  CHECK(run("levof(set{set{set{}}})") == "set{set{},set{set{}}}");
  CHECK(run("toset([0->0])") == "set{set{set{set{}}}}");
  CHECK(run("rank({0,{0}})") == "3");
  CHECK(run("rank(set{set{}})") == "1");
  CHECK(run("card({0,{0}})") == "2");
  CHECK(run("card(set{})") == "0");
  CHECK(run("isfunset({0})") == "true");
  CHECK(run("isfevel([{0}->0])") == "false");
  CHECK(run("isfevel({0,{0}})") == "true");
  CHECK(run("rel({{0}},0,0)") == "true");
  CHECK(run("hfpot({0})") == "{0}");
  CHECK(run("countp(4)") == "1000000000");
  CHECK(run("stage(2)") == "{0,{0}}");
  CHECK(run("chi(set{set{}},set{})") == "set{set{}}");
  CHECK(run("eq([0->0],{0})") == "true");
}

TEST_CASE("undefined propagates") {
  CHECK(run("pair(apply(0,0),0)") == "undef");
  CHECK(run("[apply(0,0)->0]") == "undef");
  CHECK(run("{apply(0,0)}") == "undef");
  CHECK(run("isfunset(apply(0,0))") == "undef");
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS(run("x"), UnboundName);
  CHECK_THROWS_AS(run("nosuchop(0)"), UnboundName);
  CHECK_THROWS_AS(run("apply(0)"), ArityError);
  CHECK_THROWS_AS(run("rel(0,0)"), ArityError);
  CHECK_THROWS_AS(run("fst(0)"), NotAPair);
  CHECK_THROWS_AS(run("comp([0->0],[0->{0}])"), CompositionMismatch);
  CHECK_THROWS_AS(run("[0->0,0->{0}]"), FunctionalityViolation);
  CHECK_THROWS_AS(run("toset(set{})"), UserError);
  CHECK_THROWS_AS(run("set{0}"), UserError);
  CHECK_THROWS_AS(run("ord(13)"), CapExceeded);
  CHECK_THROWS_AS(run("stage(4)"), CapExceeded);
  Env env{{"x", Value{null()}}};
  CHECK(print_value(eval(parse("[x->x]"), env)) == "{0}");
}

TEST_CASE("round trips over stage 3 and rank <= 3 sets") {
  for (HfFun f : enumerate_stage(3)) {
    std::string s = print_canonical(f);
    CHECK(eval(parse(s)) == Value{f});
    CHECK(print_term(parse(s)) == s);
  }
  for (HfSet a : oracle::cumulative(4)) {
    std::string s = print_canonical(a);
    CHECK(eval(parse(s)) == Value{a});
    CHECK(print_term(parse(s)) == s);
  }
  // Non-canonical input normalizes to the canonical text.
  CHECK(run("[{0}->0,0->0]") == "[0->0,{0}->0]");
  CHECK(run("[0->0]") == "{0}");
  CHECK(run("set{set{},set{}}") == "set{set{}}");
}

TEST_CASE("print_term is a fixed point of parse") {
  for (std::string s : {"apply( x ,0)", "[ {0} -> set{ } ]", "ord(7)", "f(g(h(0)))"}) {
    std::string once = print_term(parse(s));
    CHECK(print_term(parse(once)) == once);
  }
}

TEST_CASE("fixed malformed inputs") {
  for (const std::string& s : fuzz::fixed_malformed()) {
    CAPTURE(s);
    CHECK_THROWS_AS(parse(s), ParseError);
  }
}

TEST_CASE("repl session") {
  Repl r;
  CHECK(r.handle(":let x = [0->0]") == "x = {0}");
  CHECK(r.handle("apply(x, 0)") == "0");
  CHECK(r.handle("   ") == "");
  CHECK(r.handle(":enumerate 2") == "0\n{0}");
  CHECK(r.handle(":check flt 2") == "flt size 2: 81 candidates, 2 models, 1 classes");
  CHECK(r.handle("apply(") .rfind("error: parse error at 1:7", 0) == 0);
  CHECK(r.handle("y").rfind("error:", 0) == 0);
  CHECK(r.handle(":bogus").rfind("error:", 0) == 0);
  CHECK(r.error_count() == 3);
  CHECK_FALSE(r.finished());
  CHECK(r.handle(":quit") == "");
  CHECK(r.finished());
}

TEST_CASE("batch repl") {
  std::istringstream in(":let a = {0}\nhfpot(a)\n:quit\napply(0,0)\n");
  std::ostringstream out;
  CHECK(run_repl(in, out, false) == 0);
  CHECK(out.str() == "a = {0}\n{0}\n");
}

TEST_CASE("operation table") {
  std::vector<std::string> names = operation_names();
  for (std::string required : {"apply", "dom", "cod", "comp", "pair", "fst", "snd", "ord",
                               "fevel", "levof", "toset", "tofun", "rank", "card",
                               "isfunset", "isfevel", "rel"}) {
    CHECK(std::find(names.begin(), names.end(), required) != names.end());
  }
}
