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

// Hereditarily finite partial functions.
//
// Every HfFun is hash-consed into a process-wide table, so two values are
// extensionally equal exactly when their ids agree. Application is partial:
// an argument outside the graph yields std::nullopt, never a sentinel value.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace fltk {

struct Entry;

class HfFun {
 public:
  /// The null function.
  HfFun() = default;

  std::uint32_t id() const { return id_; }

  /// Graph entries, ascending by the canonical order of their arguments.
  std::span<const Entry> graph() const;
  /// Field (domain together with range), ascending by id.
  std::span<const HfFun> field() const;
  /// Least stage at which the function is found: 1 for null.
  std::uint32_t rank() const;
  bool is_null() const { return id_ == 0; }

  friend bool operator==(HfFun a, HfFun b) { return a.id_ == b.id_; }

  /// Id order. Cheap and deterministic within one process, but not the
  /// canonical order; use `compare` or CanonicalLess for that.
  friend bool operator<(HfFun a, HfFun b) { return a.id_ < b.id_; }

  static HfFun from_id(std::uint32_t id) { return HfFun(id); }

 private:
  explicit HfFun(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = 0;
};

struct Entry {
  HfFun arg;
  HfFun value;
  friend bool operator==(const Entry&, const Entry&) = default;
};

HfFun null();

/// Interns the function with exactly these entries. Identical duplicates
/// collapse; two entries with one argument and distinct values throw
/// FunctionalityViolation.
HfFun make(std::span<const Entry> entries);
inline HfFun make(std::initializer_list<Entry> entries) {
  return make(std::span<const Entry>(entries.begin(), entries.size()));
}

std::optional<HfFun> apply(HfFun f, HfFun x);

/// g is in f's field.
bool fun_in(HfFun g, HfFun f);
/// f's field includes g's.
bool fun_subeq(HfFun g, HfFun f);
/// f is a partial identity.
bool is_funset(HfFun f);

/// Partial identity whose field is exactly `xs` (duplicates ignored).
HfFun funset_of(std::span<const HfFun> xs);
inline HfFun funset_of(std::initializer_list<HfFun> xs) {
  return funset_of(std::span<const HfFun>(xs.begin(), xs.size()));
}

std::span<const HfFun> field_members(HfFun f);

/// The function sending each x in `support` to oracle(x) when that is
/// defined. Throws FunctionalityViolation if the oracle answers the same
/// argument inconsistently.
HfFun comprehend(std::span<const HfFun> support,
                 const std::function<std::optional<HfFun>(HfFun)>& oracle);

/// Canonical total order: rank, then graph length, then lexicographic over
/// the canonical entry lists (argument before value).
std::strong_ordering compare(HfFun a, HfFun b);

struct CanonicalLess {
  bool operator()(HfFun a, HfFun b) const { return compare(a, b) < 0; }
};

/// Sorts into canonical order and removes duplicates.
void canonical_sort(std::vector<HfFun>& xs);

/// Every field member has strictly smaller rank, recursively. Always true
/// for values built through `make`; exposed for invariant tests.
bool check_well_founded(HfFun f);

/// Number of distinct functions interned so far.
std::size_t interned_function_count();

/// Test hook: overrides FLTK_MAX_NODES for the function table.
void set_function_node_limit(std::size_t limit);

}  // namespace fltk

template <>
struct std::hash<fltk::HfFun> {
  std::size_t operator()(fltk::HfFun f) const noexcept {
    return std::hash<std::uint32_t>{}(f.id());
  }
};
