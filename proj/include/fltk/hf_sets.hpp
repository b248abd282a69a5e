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

// Hereditarily finite sets, interned like HfFun, with the level machinery
// (pot, histories, levels, lev-of), Kuratowski pairs, setfunctions, and the
// two-valued characteristic-function application.

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

class HfSet {
 public:
  /// The empty set.
  HfSet() = default;

  std::uint32_t id() const { return id_; }
  /// Elements in canonical order.
  std::span<const HfSet> elements() const;
  /// Von Neumann rank: 0 for the empty set.
  std::uint32_t rank() const;
  std::size_t size() const { return elements().size(); }
  bool is_empty() const { return id_ == 0; }

  friend bool operator==(HfSet a, HfSet b) { return a.id_ == b.id_; }
  /// Id order, not the canonical order.
  friend bool operator<(HfSet a, HfSet b) { return a.id_ < b.id_; }

  static HfSet from_id(std::uint32_t id) { return HfSet(id); }

 private:
  explicit HfSet(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = 0;
};

HfSet empty_set();
HfSet set_of(std::span<const HfSet> xs);
inline HfSet set_of(std::initializer_list<HfSet> xs) {
  return set_of(std::span<const HfSet>(xs.begin(), xs.size()));
}

bool member(HfSet x, HfSet a);
/// a is a subset of b.
bool subset(HfSet a, HfSet b);

/// Canonical order mirroring the function order: rank, size, then
/// lexicographic over the canonical element lists.
std::strong_ordering compare(HfSet a, HfSet b);

struct CanonicalSetLess {
  bool operator()(HfSet a, HfSet b) const { return compare(a, b) < 0; }
};

void canonical_sort(std::vector<HfSet>& xs);

/// {{a}, {a, b}}.
HfSet kpair(HfSet a, HfSet b);
/// Components of a Kuratowski pair, or nullopt for any other set.
std::optional<std::pair<HfSet, HfSet>> kpair_decode(HfSet p);

bool is_setfunction(HfSet f);

/// {x : x is a subset of some c in a}.
HfSet pot(HfSet a);
/// Every x in h equals pot(x intersect h).
bool is_history(HfSet h);
/// Some history h has s = pot(h). The search bound mirrors is_fevel.
bool is_level(HfSet s);
/// The least level including a.
HfSet lev_of(HfSet a);

/// V_0 = {}, V_(k+1) = powerset(V_k). CapExceeded for k > 4.
HfSet cumulative_level(std::uint32_t k);
inline constexpr std::uint32_t kMaxCumulativeLevel = 4;

/// Every set of rank at most r, canonically sorted (the members of V_(r+1)).
std::vector<HfSet> sets_of_rank_at_most(std::uint32_t r);

/// Truth objects for characteristic-function application: 0 is the empty
/// set, 1 is {0}.
HfSet chi_zero();
HfSet chi_one();
/// 1 when x is a member of y, otherwise 0.
HfSet chi_app(HfSet y, HfSet x);

std::size_t interned_set_count();
void set_set_node_limit(std::size_t limit);

}  // namespace fltk

template <>
struct std::hash<fltk::HfSet> {
  std::size_t operator()(fltk::HfSet s) const noexcept {
    return std::hash<std::uint32_t>{}(s.id());
  }
};
