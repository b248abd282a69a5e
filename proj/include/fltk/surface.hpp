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

#pragma once

// The expression language: parser, canonical printer, evaluator and REPL.
//
//   expr  := "0" | number | "[" [entry ("," entry)*] "]"
//          | "{" [expr ("," expr)*] "}" | "set" "{" [expr ("," expr)*] "}"
//          | ident "(" [expr ("," expr)*] ")" | ident
//   entry := expr "->" expr
//
// Identifiers are lowercase ASCII words; numbers are decimal without a
// leading zero and are only meaningful where an operation expects one.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fltk/error.hpp"
#include "fltk/hf_kernel.hpp"
#include "fltk/hf_sets.hpp"

namespace fltk::surface {

struct SourcePos {
  std::uint32_t line = 1;
  std::uint32_t column = 1;
  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

class ParseError : public UserError {
 public:
  ParseError(SourcePos pos, std::vector<std::string> expected, std::string found);

  SourcePos pos() const { return pos_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  SourcePos pos_;
  std::vector<std::string> expected_;
  std::string found_;
};

class UnboundName : public UserError {
 public:
  using UserError::UserError;
};

class ArityError : public UserError {
 public:
  using UserError::UserError;
};

/// Deepest bracket nesting the parser accepts.
inline constexpr std::size_t kMaxNesting = 256;

struct Term {
  enum class Kind { kNull, kNumber, kFun, kFunset, kSet, kCall, kVar };

  Kind kind = Kind::kNull;
  std::string name;           // kCall, kVar
  std::uint64_t number = 0;   // kNumber
  std::vector<Term> children; // kFun: arg, value, arg, value, ...

  friend bool operator==(const Term&, const Term&) = default;
};

Term parse(std::string_view text);

/// Prints a term as written (no normalization): parse(print_term(t)) == t.
std::string print_term(const Term& t);

std::string print_canonical(HfFun f);
std::string print_canonical(HfSet a);

struct Undefined {
  friend bool operator==(Undefined, Undefined) = default;
};

using Value = std::variant<Undefined, HfFun, HfSet, bool, std::uint64_t>;

std::string print_value(const Value& v);

using Env = std::map<std::string, Value, std::less<>>;

/// Evaluates under `env`. Undefined arguments make every operation
/// undefined. Throws UnboundName, ArityError, UserError for ill-typed
/// arguments, and whatever the underlying operation throws.
Value eval(const Term& t, const Env& env = {});

/// Names of the registered operations, sorted.
std::vector<std::string> operation_names();

/// Line-oriented session: expressions print their value; `:let x = e`
/// binds, `:check T N` sweeps theory T at size N, `:enumerate N` lists a
/// stage, `:quit` ends the session.
class Repl {
 public:
  /// Output for one input line (possibly empty). Errors are reported as
  /// "error: ..." and leave the session usable.
  std::string handle(std::string_view line);
  bool finished() const { return finished_; }
  std::size_t error_count() const { return errors_; }
  const Env& env() const { return env_; }

 private:
  std::string run_command(std::string_view line);

  Env env_;
  bool finished_ = false;
  std::size_t errors_ = 0;
};

/// Reads lines until end of input or `:quit`. Prompts only when `prompt`
/// is set. Returns the number of lines that raised an error.
std::size_t run_repl(std::istream& in, std::ostream& out, bool prompt);

}  // namespace fltk::surface
