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

#include "fltk/hf_kernel.hpp"

#include <algorithm>

#include "fltk/detail/intern_table.hpp"
#include "fltk/error.hpp"

namespace fltk {
namespace {

struct FunNode {
  std::vector<Entry> graph;   // canonical order of arguments
  std::vector<Entry> by_arg;  // ascending argument id, for lookup
  std::vector<HfFun> field;   // ascending id
  std::uint32_t rank = 1;
  bool funset = true;
};

using FunTable = detail::InternTable<FunNode>;

FunTable& table() {
  // The null function is interned first so that it owns id 0, which is what
  // a default-constructed HfFun refers to.
  static FunTable* t = [] {
    auto* tab = new FunTable("function");
    tab->intern({}, [] { return FunNode{}; });
    return tab;
  }();
  return *t;
}

const FunNode& node(HfFun f) { return table().at(f.id()); }

bool by_arg_id(const Entry& a, const Entry& b) {
  if (a.arg.id() != b.arg.id()) return a.arg.id() < b.arg.id();
  return a.value.id() < b.value.id();
}

}  // namespace

std::span<const Entry> HfFun::graph() const { return node(*this).graph; }
std::span<const HfFun> HfFun::field() const { return node(*this).field; }
std::uint32_t HfFun::rank() const { return node(*this).rank; }

HfFun null() {
  table();
  return HfFun{};
}

HfFun make(std::span<const Entry> entries) {
  std::vector<Entry> sorted(entries.begin(), entries.end());
  std::sort(sorted.begin(), sorted.end(), by_arg_id);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].arg == sorted[i - 1].arg) {
      throw FunctionalityViolation(
          "two graph entries share an argument but map it to distinct values");
    }
  }

  std::vector<std::uint32_t> key;
  key.reserve(sorted.size() * 2);
  for (const Entry& e : sorted) {
    key.push_back(e.arg.id());
    key.push_back(e.value.id());
  }

  FunTable& tab = table();
  std::uint32_t id = tab.intern(std::move(key), [&] {
    FunNode n;
    n.by_arg = sorted;
    n.graph = sorted;
    std::sort(n.graph.begin(), n.graph.end(), [](const Entry& a, const Entry& b) {
      return compare(a.arg, b.arg) < 0;
    });
    n.field.reserve(sorted.size() * 2);
    for (const Entry& e : sorted) {
      n.field.push_back(e.arg);
      n.field.push_back(e.value);
      if (e.arg != e.value) n.funset = false;
    }
    std::sort(n.field.begin(), n.field.end());
    n.field.erase(std::unique(n.field.begin(), n.field.end()), n.field.end());
    std::uint32_t top = 0;
    for (HfFun x : n.field) top = std::max(top, x.rank());
    n.rank = top + 1;
    return n;
  });
  return HfFun::from_id(id);
}

std::optional<HfFun> apply(HfFun f, HfFun x) {
  const auto& by_arg = node(f).by_arg;
  auto it = std::lower_bound(
      by_arg.begin(), by_arg.end(), x,
      [](const Entry& e, HfFun v) { return e.arg.id() < v.id(); });
  if (it == by_arg.end() || it->arg != x) return std::nullopt;
  return it->value;
}

bool fun_in(HfFun g, HfFun f) {
  const auto& fld = node(f).field;
  return std::binary_search(fld.begin(), fld.end(), g);
}

bool fun_subeq(HfFun g, HfFun f) {
  const auto& outer = node(f).field;
  const auto& inner = node(g).field;
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

bool is_funset(HfFun f) { return node(f).funset; }

HfFun funset_of(std::span<const HfFun> xs) {
  std::vector<Entry> entries;
  entries.reserve(xs.size());
  for (HfFun x : xs) entries.push_back({x, x});
  return make(entries);
}

std::span<const HfFun> field_members(HfFun f) { return f.field(); }

HfFun comprehend(std::span<const HfFun> support,
                 const std::function<std::optional<HfFun>(HfFun)>& oracle) {
  std::vector<Entry> entries;
  for (HfFun x : support) {
    if (auto y = oracle(x)) entries.push_back({x, *y});
  }
  return make(entries);
}

std::strong_ordering compare(HfFun a, HfFun b) {
  if (a == b) return std::strong_ordering::equal;
  const FunNode& na = node(a);
  const FunNode& nb = node(b);
  if (auto c = na.rank <=> nb.rank; c != 0) return c;
  if (auto c = na.graph.size() <=> nb.graph.size(); c != 0) return c;
  for (std::size_t i = 0; i < na.graph.size(); ++i) {
    if (auto c = compare(na.graph[i].arg, nb.graph[i].arg); c != 0) return c;
    if (auto c = compare(na.graph[i].value, nb.graph[i].value); c != 0) return c;
  }
  throw InternalError("distinct interned functions compare equal");
}

void canonical_sort(std::vector<HfFun>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(xs.begin(), xs.end(), CanonicalLess{});
}

bool check_well_founded(HfFun f) {
  for (HfFun x : f.field()) {
    if (x.rank() >= f.rank() || !check_well_founded(x)) return false;
  }
  return true;
}

std::size_t interned_function_count() { return table().size(); }

void set_function_node_limit(std::size_t limit) { table().set_limit(limit); }

}  // namespace fltk
