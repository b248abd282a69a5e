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

#include "fltk/hf_sets.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <string>

#include "fltk/detail/intern_table.hpp"
#include "fltk/error.hpp"

namespace fltk {
namespace {

struct SetNode {
  std::vector<HfSet> elements;  // canonical
  std::vector<HfSet> by_id;     // ascending id
  std::uint32_t rank = 0;
};

using SetTable = detail::InternTable<SetNode>;

SetTable& table() {
  static SetTable* t = [] {
    auto* tab = new SetTable("set");
    tab->intern({}, [] { return SetNode{}; });
    return tab;
  }();
  return *t;
}

const SetNode& node(HfSet s) { return table().at(s.id()); }

constexpr std::uint64_t kPotBudget = 1u << 18;
constexpr std::uint64_t kHistorySearchBudget = 1u << 16;

}  // namespace

std::span<const HfSet> HfSet::elements() const { return node(*this).elements; }
std::uint32_t HfSet::rank() const { return node(*this).rank; }

HfSet empty_set() {
  table();
  return HfSet{};
}

HfSet set_of(std::span<const HfSet> xs) {
  std::vector<HfSet> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::uint32_t> key;
  key.reserve(sorted.size());
  for (HfSet x : sorted) key.push_back(x.id());
  std::uint32_t id = table().intern(std::move(key), [&] {
    SetNode n;
    n.by_id = sorted;
    n.elements = sorted;
    std::sort(n.elements.begin(), n.elements.end(), CanonicalSetLess{});
    for (HfSet x : sorted) n.rank = std::max(n.rank, x.rank() + 1);
    return n;
  });
  return HfSet::from_id(id);
}

bool member(HfSet x, HfSet a) {
  const auto& els = node(a).by_id;
  return std::binary_search(els.begin(), els.end(), x);
}

bool subset(HfSet a, HfSet b) {
  const auto& inner = node(a).by_id;
  const auto& outer = node(b).by_id;
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

std::strong_ordering compare(HfSet a, HfSet b) {
  if (a == b) return std::strong_ordering::equal;
  const SetNode& na = node(a);
  const SetNode& nb = node(b);
  if (auto c = na.rank <=> nb.rank; c != 0) return c;
  if (auto c = na.elements.size() <=> nb.elements.size(); c != 0) return c;
  for (std::size_t i = 0; i < na.elements.size(); ++i) {
    if (auto c = compare(na.elements[i], nb.elements[i]); c != 0) return c;
  }
  throw InternalError("distinct interned sets compare equal");
}

void canonical_sort(std::vector<HfSet>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(xs.begin(), xs.end(), CanonicalSetLess{});
}

HfSet kpair(HfSet a, HfSet b) { return set_of({set_of({a}), set_of({a, b})}); }

std::optional<std::pair<HfSet, HfSet>> kpair_decode(HfSet p) {
  auto els = p.elements();
  if (els.size() == 1) {
    // {{a}} = <a, a>
    auto inner = els[0].elements();
    if (inner.size() != 1) return std::nullopt;
    return std::pair{inner[0], inner[0]};
  }
  if (els.size() != 2) return std::nullopt;
  HfSet single = els[0].size() == 1 ? els[0] : els[1];
  HfSet doubled = els[0].size() == 1 ? els[1] : els[0];
  if (single.size() != 1 || doubled.size() != 2) return std::nullopt;
  HfSet a = single.elements()[0];
  if (!member(a, doubled)) return std::nullopt;
  HfSet b = doubled.elements()[0] == a ? doubled.elements()[1] : doubled.elements()[0];
  return std::pair{a, b};
}

bool is_setfunction(HfSet f) {
  std::vector<std::pair<HfSet, HfSet>> pairs;
  for (HfSet p : f.elements()) {
    auto decoded = kpair_decode(p);
    if (!decoded) return false;
    pairs.push_back(*decoded);
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (pairs[i].first == pairs[j].first && pairs[i].second != pairs[j].second) {
        return false;
      }
    }
  }
  return true;
}

HfSet pot(HfSet a) {
  std::vector<HfSet> out;
  std::uint64_t total = 0;
  for (HfSet c : a.elements()) {
    auto els = c.elements();
    if (els.size() >= 20 || (total += std::uint64_t{1} << els.size()) > kPotBudget) {
      throw CapExceeded("pot: too many subsets to enumerate");
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << els.size()); ++mask) {
      std::vector<HfSet> sub;
      for (std::size_t i = 0; i < els.size(); ++i) {
        if (mask >> i & 1) sub.push_back(els[i]);
      }
      out.push_back(set_of(sub));
    }
  }
  return set_of(out);
}

bool is_history(HfSet h) {
  for (HfSet x : h.elements()) {
    std::vector<HfSet> meet;
    for (HfSet z : x.elements()) {
      if (member(z, h)) meet.push_back(z);
    }
    if (x != pot(set_of(meet))) return false;
  }
  return true;
}

bool is_level(HfSet s) {
  std::vector<HfSet> closure(s.elements().begin(), s.elements().end());
  for (std::size_t i = 0; i < closure.size(); ++i) {
    for (HfSet y : closure[i].elements()) {
      if (std::find(closure.begin(), closure.end(), y) == closure.end()) {
        closure.push_back(y);
      }
    }
  }
  const std::size_t n = closure.size();
  const std::size_t max_size = s.size() + 1;
  std::uint64_t total = 0, c = 1;
  for (std::size_t k = 0; k <= std::min(n, max_size); ++k) {
    total += c;
    if (total > kHistorySearchBudget) {
      throw CapExceeded("history search space for is_level is too large");
    }
    c = c * (n - k) / (k + 1);
  }

  std::vector<HfSet> chosen;
  auto search = [&](auto&& self, std::size_t next) -> bool {
    HfSet h = set_of(chosen);
    if (is_history(h) && pot(h) == s) return true;
    if (chosen.size() == max_size) return false;
    for (std::size_t i = next; i < n; ++i) {
      chosen.push_back(closure[i]);
      bool found = self(self, i + 1);
      chosen.pop_back();
      if (found) return true;
    }
    return false;
  };
  return search(search, 0);
}

HfSet cumulative_level(std::uint32_t k) {
  if (k > kMaxCumulativeLevel) {
    throw CapExceeded("V_" + std::to_string(k) + " is too large to materialize");
  }
  static std::mutex mu;
  static std::array<std::optional<HfSet>, kMaxCumulativeLevel + 1> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (cache[k]) return *cache[k];
  }
  HfSet result = empty_set();
  if (k > 0) {
    // powerset(V_(k-1)) is pot({V_(k-1)}).
    result = pot(set_of({cumulative_level(k - 1)}));
  }
  std::lock_guard<std::mutex> lock(mu);
  cache[k] = result;
  return result;
}

std::vector<HfSet> sets_of_rank_at_most(std::uint32_t r) {
  auto els = cumulative_level(r + 1).elements();
  return {els.begin(), els.end()};
}

HfSet lev_of(HfSet a) {
  for (std::uint32_t k = 0;; ++k) {
    HfSet v = cumulative_level(k);
    if (subset(a, v)) return v;
  }
}

HfSet chi_zero() { return empty_set(); }
HfSet chi_one() { return set_of({empty_set()}); }

HfSet chi_app(HfSet y, HfSet x) { return member(x, y) ? chi_one() : chi_zero(); }

std::size_t interned_set_count() { return table().size(); }

void set_set_node_limit(std::size_t limit) { table().set_limit(limit); }

}  // namespace fltk
