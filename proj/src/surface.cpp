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

#include "fltk/surface.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

#include "fltk/category.hpp"
#include "fltk/encodings.hpp"
#include "fltk/hierarchy.hpp"
#include "fltk/modelcheck.hpp"
#include "fltk/translate.hpp"

namespace fltk::surface {
namespace {

std::string join(const std::vector<std::string>& xs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

std::string format_parse_error(SourcePos pos, const std::vector<std::string>& expected,
                               const std::string& found) {
  return "parse error at " + std::to_string(pos.line) + ":" + std::to_string(pos.column) +
         ": expected " + join(expected, " or ") + ", found " + found;
}

const std::vector<std::string> kExprStart{"0", "number", "[", "{", "set", "identifier"};

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Term parse_all() {
    Term t = expr(0);
    skip_ws();
    if (!at_end()) fail({"end of input"});
    return t;
  }

 private:
  bool at_end() const { return i_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[i_]; }
  SourcePos pos() const { return {line_, col_}; }

  void advance() {
    if (text_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  void skip_ws() {
    while (!at_end() && is_space(peek())) advance();
  }

  std::string found() const {
    if (at_end()) return "end of input";
    auto c = static_cast<unsigned char>(peek());
    if (c >= 0x20 && c < 0x7f) return std::string("'") + static_cast<char>(c) + "'";
    static constexpr char kHex[] = "0123456789abcdef";
    return std::string("byte 0x") + kHex[c >> 4] + kHex[c & 15];
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(pos(), std::move(expected), found());
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail({std::string(1, c)});
    advance();
  }

  std::string word() {
    std::string w;
    while (is_lower(peek())) {
      w += peek();
      advance();
    }
    return w;
  }

  // Comma-separated items up to `close`; the opening bracket is consumed.
  template <class Item>
  void items(char close, Item&& item) {
    skip_ws();
    if (peek() == close) {
      advance();
      return;
    }
    while (true) {
      item();
      skip_ws();
      if (peek() == ',') {
        advance();
        continue;
      }
      if (peek() == close) {
        advance();
        return;
      }
      fail({",", std::string(1, close)});
    }
  }

  Term expr(std::size_t depth) {
    skip_ws();
    if (depth >= kMaxNesting) {
      throw ParseError(pos(), {"at most " + std::to_string(kMaxNesting) + " nested terms"},
                       "deeper nesting");
    }
    char c = peek();
    Term t;
    if (c == '0') {
      advance();
      return t;
    }
    if (is_digit(c)) return number();
    if (c == '[') {
      advance();
      t.kind = Term::Kind::kFun;
      items(']', [&] {
        t.children.push_back(expr(depth + 1));
        skip_ws();
        if (peek() != '-') fail({"->"});
        advance();
        if (peek() != '>') fail({"->"});
        advance();
        t.children.push_back(expr(depth + 1));
      });
      return t;
    }
    if (c == '{') {
      advance();
      t.kind = Term::Kind::kFunset;
      items('}', [&] { t.children.push_back(expr(depth + 1)); });
      return t;
    }
    if (is_lower(c)) {
      std::string name = word();
      skip_ws();
      if (name == "set" && peek() == '{') {
        advance();
        t.kind = Term::Kind::kSet;
        items('}', [&] { t.children.push_back(expr(depth + 1)); });
        return t;
      }
      if (peek() == '(') {
        advance();
        t.kind = Term::Kind::kCall;
        t.name = std::move(name);
        items(')', [&] { t.children.push_back(expr(depth + 1)); });
        return t;
      }
      t.kind = Term::Kind::kVar;
      t.name = std::move(name);
      return t;
    }
    fail(kExprStart);
  }

  Term number() {
    SourcePos start = pos();
    std::uint64_t v = 0;
    std::size_t digits = 0;
    while (is_digit(peek())) {
      if (++digits > 18) {
        throw ParseError(start, {"number with at most 18 digits"}, "a longer number");
      }
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      advance();
    }
    Term t;
    t.kind = Term::Kind::kNumber;
    t.number = v;
    return t;
  }

  std::string_view text_;
  std::size_t i_ = 0;
  std::uint32_t line_ = 1;
  std::uint32_t col_ = 1;
};

void print_term_into(const Term& t, std::string& out) {
  auto list = [&](std::size_t step) {
    for (std::size_t i = 0; i < t.children.size(); i += step) {
      if (i) out += ',';
      print_term_into(t.children[i], out);
      if (step == 2) {
        out += "->";
        print_term_into(t.children[i + 1], out);
      }
    }
  };
  switch (t.kind) {
    case Term::Kind::kNull: out += '0'; break;
    case Term::Kind::kNumber: out += std::to_string(t.number); break;
    case Term::Kind::kFun: out += '['; list(2); out += ']'; break;
    case Term::Kind::kFunset: out += '{'; list(1); out += '}'; break;
    case Term::Kind::kSet: out += "set{"; list(1); out += '}'; break;
    case Term::Kind::kCall: out += t.name; out += '('; list(1); out += ')'; break;
    case Term::Kind::kVar: out += t.name; break;
  }
}

void print_fun_into(HfFun f, std::string& out) {
  if (f.is_null()) {
    out += '0';
    return;
  }
  bool funset = is_funset(f);
  out += funset ? '{' : '[';
  bool first = true;
  for (const Entry& e : f.graph()) {
    if (!first) out += ',';
    first = false;
    print_fun_into(e.arg, out);
    if (!funset) {
      out += "->";
      print_fun_into(e.value, out);
    }
  }
  out += funset ? '}' : ']';
}

void print_set_into(HfSet a, std::string& out) {
  out += "set{";
  bool first = true;
  for (HfSet x : a.elements()) {
    if (!first) out += ',';
    first = false;
    print_set_into(x, out);
  }
  out += '}';
}

// --- operation table ----------------------------------------------------------

using Args = std::span<const Value>;

struct Operation {
  std::size_t min_args;
  std::size_t max_args;
  std::function<Value(std::string_view, Args)> run;
};

[[noreturn]] void type_error(std::string_view op, std::size_t i, const char* want) {
  throw UserError(std::string(op) + ": argument " + std::to_string(i + 1) + " must be " + want);
}

HfFun fun_arg(std::string_view op, Args a, std::size_t i) {
  if (auto f = std::get_if<HfFun>(&a[i])) return *f;
  type_error(op, i, "a function");
}

HfSet set_arg(std::string_view op, Args a, std::size_t i) {
  if (auto s = std::get_if<HfSet>(&a[i])) return *s;
  type_error(op, i, "a set");
}

std::uint64_t num_arg(std::string_view op, Args a, std::size_t i) {
  if (auto n = std::get_if<std::uint64_t>(&a[i])) return *n;
  if (auto f = std::get_if<HfFun>(&a[i]); f && f->is_null()) return 0;
  type_error(op, i, "a number");
}

std::uint32_t small_num_arg(std::string_view op, Args a, std::size_t i) {
  std::uint64_t n = num_arg(op, a, i);
  if (n > 1'000'000) throw CapExceeded(std::string(op) + ": number too large");
  return static_cast<std::uint32_t>(n);
}

Value opt(std::optional<HfFun> f) {
  if (f) return *f;
  return Undefined{};
}

using FunUnary = HfFun (*)(HfFun);

Operation fun_to_fun(FunUnary fn) {
  return {1, 1, [fn](std::string_view op, Args a) -> Value { return fn(fun_arg(op, a, 0)); }};
}

Operation fun_pred(bool (*fn)(HfFun)) {
  return {1, 1, [fn](std::string_view op, Args a) -> Value { return fn(fun_arg(op, a, 0)); }};
}

const std::map<std::string, Operation, std::less<>>& operations() {
  static const std::map<std::string, Operation, std::less<>> table = [] {
    std::map<std::string, Operation, std::less<>> t;
    t["apply"] = {2, 2, [](auto op, Args a) -> Value {
                    return opt(apply(fun_arg(op, a, 0), fun_arg(op, a, 1)));
                  }};
    t["applyn"] = {2, SIZE_MAX, [](auto op, Args a) -> Value {
                     std::vector<HfFun> xs;
                     for (std::size_t i = 1; i < a.size(); ++i) xs.push_back(fun_arg(op, a, i));
                     return opt(apply_n(fun_arg(op, a, 0), xs));
                   }};
    t["dom"] = fun_to_fun(&dom);
    t["cod"] = fun_to_fun(&cod);
    t["comp"] = {2, 2, [](auto op, Args a) -> Value {
                   return compose(fun_arg(op, a, 0), fun_arg(op, a, 1));
                 }};
    t["pair"] = {2, 2, [](auto op, Args a) -> Value {
                   return pair(fun_arg(op, a, 0), fun_arg(op, a, 1));
                 }};
    t["fst"] = fun_to_fun(&fst);
    t["snd"] = fun_to_fun(&snd);
    t["ord"] = {1, 1, [](auto op, Args a) -> Value { return ord_encode(small_num_arg(op, a, 0)); }};
    t["ordval"] = {1, 1, [](auto op, Args a) -> Value {
                     if (auto n = ord_decode(fun_arg(op, a, 0))) return std::uint64_t{*n};
                     return Undefined{};
                   }};
    t["rel"] = {3, SIZE_MAX, [](auto op, Args a) -> Value {
                  std::vector<HfFun> xs;
                  for (std::size_t i = 1; i + 1 < a.size(); ++i) xs.push_back(fun_arg(op, a, i));
                  return rel_holds(fun_arg(op, a, 0), xs, fun_arg(op, a, a.size() - 1));
                }};
    t["fevel"] = fun_to_fun(&fevel_of);
    t["isfevel"] = fun_pred(&is_fevel);
    t["isfevelrec"] = fun_pred(&is_fevel_recursive);
    t["ishistory"] = fun_pred(static_cast<bool (*)(HfFun)>(&is_history));
    t["hfpot"] = fun_to_fun(&hfpot);
    t["isfunset"] = fun_pred(&is_funset);
    t["stage"] = {1, 1, [](auto op, Args a) -> Value {
                    return funset_of(enumerate_stage(small_num_arg(op, a, 0)));
                  }};
    t["countp"] = {1, 1, [](auto op, Args a) -> Value {
                     return count_p(small_num_arg(op, a, 0)).template convert_to<std::uint64_t>();
                   }};
    t["levof"] = {1, 1, [](auto op, Args a) -> Value { return lev_of(set_arg(op, a, 0)); }};
    t["pot"] = {1, 1, [](auto op, Args a) -> Value { return pot(set_arg(op, a, 0)); }};
    t["islevel"] = {1, 1, [](auto op, Args a) -> Value { return is_level(set_arg(op, a, 0)); }};
    t["toset"] = {1, 1, [](auto op, Args a) -> Value { return to_set(fun_arg(op, a, 0)); }};
    t["tofun"] = {1, 1, [](auto op, Args a) -> Value { return to_fun(set_arg(op, a, 0)); }};
    t["rank"] = {1, 1, [](auto op, Args a) -> Value {
                   if (auto s = std::get_if<HfSet>(&a[0])) return std::uint64_t{s->rank()};
                   return std::uint64_t{idx(fun_arg(op, a, 0)).value()};
                 }};
    t["card"] = {1, 1, [](auto op, Args a) -> Value {
                   if (auto s = std::get_if<HfSet>(&a[0])) return std::uint64_t{s->size()};
                   return std::uint64_t{fun_arg(op, a, 0).graph().size()};
                 }};
    t["in"] = {2, 2, [](auto op, Args a) -> Value {
                 return fun_in(fun_arg(op, a, 0), fun_arg(op, a, 1));
               }};
    t["subeq"] = {2, 2, [](auto op, Args a) -> Value {
                    return fun_subeq(fun_arg(op, a, 0), fun_arg(op, a, 1));
                  }};
    t["member"] = {2, 2, [](auto op, Args a) -> Value {
                     return member(set_arg(op, a, 0), set_arg(op, a, 1));
                   }};
    t["subset"] = {2, 2, [](auto op, Args a) -> Value {
                     return subset(set_arg(op, a, 0), set_arg(op, a, 1));
                   }};
    t["kpair"] = {2, 2, [](auto op, Args a) -> Value {
                    return kpair(set_arg(op, a, 0), set_arg(op, a, 1));
                  }};
    t["chi"] = {2, 2, [](auto op, Args a) -> Value {
                  return chi_app(set_arg(op, a, 0), set_arg(op, a, 1));
                }};
    t["cart"] = {2, 2, [](auto op, Args a) -> Value {
                   return cartesian_funset(fun_arg(op, a, 0), fun_arg(op, a, 1));
                 }};
    t["eq"] = {2, 2, [](auto, Args a) -> Value { return a[0] == a[1]; }};
    return t;
  }();
  return table;
}

Value eval_in(const Term& t, const Env& env) {
  auto children = [&]() {
    std::vector<Value> vs;
    vs.reserve(t.children.size());
    for (const Term& c : t.children) vs.push_back(eval_in(c, env));
    return vs;
  };
  auto any_undefined = [](const std::vector<Value>& vs) {
    return std::any_of(vs.begin(), vs.end(),
                       [](const Value& v) { return std::holds_alternative<Undefined>(v); });
  };
  switch (t.kind) {
    case Term::Kind::kNull: return null();
    case Term::Kind::kNumber: return t.number;
    case Term::Kind::kVar: {
      auto it = env.find(t.name);
      if (it == env.end()) throw UnboundName("unbound name '" + t.name + "'");
      return it->second;
    }
    case Term::Kind::kFun: {
      std::vector<Value> vs = children();
      if (any_undefined(vs)) return Undefined{};
      std::vector<Entry> entries;
      for (std::size_t i = 0; i < vs.size(); i += 2) {
        entries.push_back({fun_arg("function literal", vs, i), fun_arg("function literal", vs, i + 1)});
      }
      return make(entries);
    }
    case Term::Kind::kFunset: {
      std::vector<Value> vs = children();
      if (any_undefined(vs)) return Undefined{};
      std::vector<HfFun> xs;
      for (std::size_t i = 0; i < vs.size(); ++i) xs.push_back(fun_arg("funset literal", vs, i));
      return funset_of(xs);
    }
    case Term::Kind::kSet: {
      std::vector<Value> vs = children();
      if (any_undefined(vs)) return Undefined{};
      std::vector<HfSet> xs;
      for (std::size_t i = 0; i < vs.size(); ++i) xs.push_back(set_arg("set literal", vs, i));
      return set_of(xs);
    }
    case Term::Kind::kCall: {
      const auto& ops = operations();
      auto it = ops.find(t.name);
      if (it == ops.end()) throw UnboundName("unknown operation '" + t.name + "'");
      const Operation& op = it->second;
      std::size_t n = t.children.size();
      if (n < op.min_args || n > op.max_args) {
        std::string want = op.min_args == op.max_args ? std::to_string(op.min_args)
                           : op.max_args == SIZE_MAX ? "at least " + std::to_string(op.min_args)
                                                     : std::to_string(op.min_args) + " to " +
                                                           std::to_string(op.max_args);
        throw ArityError(t.name + " takes " + want + " argument(s), got " + std::to_string(n));
      }
      std::vector<Value> vs = children();
      if (any_undefined(vs)) return Undefined{};
      return op.run(t.name, vs);
    }
  }
  throw InternalError("unknown term kind");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::uint32_t parse_count(std::string_view s, const char* what) {
  s = trim(s);
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), is_digit)) {
    throw UserError(std::string(what) + " must be a non-negative integer");
  }
  return static_cast<std::uint32_t>(std::stoul(std::string(s)));
}

}  // namespace

ParseError::ParseError(SourcePos pos, std::vector<std::string> expected, std::string found)
    : UserError(format_parse_error(pos, expected, found)),
      pos_(pos),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

Term parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print_term(const Term& t) {
  std::string out;
  print_term_into(t, out);
  return out;
}

std::string print_canonical(HfFun f) {
  std::string out;
  print_fun_into(f, out);
  return out;
}

std::string print_canonical(HfSet a) {
  std::string out;
  print_set_into(a, out);
  return out;
}

std::string print_value(const Value& v) {
  struct Printer {
    std::string operator()(Undefined) const { return "undef"; }
    std::string operator()(HfFun f) const { return print_canonical(f); }
    std::string operator()(HfSet a) const { return print_canonical(a); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::uint64_t n) const { return std::to_string(n); }
  };
  return std::visit(Printer{}, v);
}

Value eval(const Term& t, const Env& env) { return eval_in(t, env); }

std::vector<std::string> operation_names() {
  std::vector<std::string> out;
  for (const auto& [name, op] : operations()) out.push_back(name);
  return out;
}

// --- REPL ---------------------------------------------------------------------

std::string Repl::run_command(std::string_view line) {
  std::string_view rest = line.substr(1);
  std::size_t sp = rest.find_first_of(" \t");
  std::string_view cmd = rest.substr(0, sp);
  std::string_view arg = sp == std::string_view::npos ? std::string_view{} : trim(rest.substr(sp));

  if (cmd == "quit") {
    finished_ = true;
    return "";
  }
  if (cmd == "let") {
    std::size_t eq = arg.find('=');
    if (eq == std::string_view::npos) throw UserError(":let expects name = expression");
    std::string_view name = trim(arg.substr(0, eq));
    if (name.empty() || !std::all_of(name.begin(), name.end(), is_lower) || name == "set") {
      throw UserError(":let needs a lowercase name");
    }
    Value v = eval(parse(arg.substr(eq + 1)), env_);
    env_[std::string(name)] = v;
    return std::string(name) + " = " + print_value(v);
  }
  if (cmd == "enumerate") {
    std::vector<HfFun> members = enumerate_stage(parse_count(arg, ":enumerate stage"));
    std::string out;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i) out += '\n';
      out += print_canonical(members[i]);
    }
    return out;
  }
  if (cmd == "check") {
    std::size_t s2 = arg.find_first_of(" \t");
    if (s2 == std::string_view::npos) throw UserError(":check expects a theory and a size");
    auto theory = parse_theory(arg.substr(0, s2));
    if (!theory) throw UserError(":check theory must be flt, fst or lt");
    SweepReport r = sweep(*theory, parse_count(arg.substr(s2), ":check size"), 1);
    std::ostringstream os;
    os << theory_name(r.theory) << " size " << r.size << ": " << r.candidates
       << " candidates, " << r.models << " models, " << r.iso_classes << " classes";
    return os.str();
  }
  throw UserError("unknown command :" + std::string(cmd) +
                  " (known: :let, :check, :enumerate, :quit)");
}

std::string Repl::handle(std::string_view line) {
  std::string_view body = trim(line);
  if (body.empty()) return "";
  try {
    if (body.front() == ':') return run_command(body);
    return print_value(eval(parse(body), env_));
  } catch (const UserError& e) {
    ++errors_;
    return std::string("error: ") + e.what();
  }
}

std::size_t run_repl(std::istream& in, std::ostream& out, bool prompt) {
  Repl repl;
  std::string line;
  while (!repl.finished()) {
    if (prompt) out << "fltk> " << std::flush;
    if (!std::getline(in, line)) break;
    std::string reply = repl.handle(line);
    if (!reply.empty()) out << reply << '\n';
  }
  return repl.error_count();
}

}  // namespace fltk::surface
