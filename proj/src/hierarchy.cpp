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

#include "fltk/hierarchy.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <string>

#include "fltk/error.hpp"

namespace fltk {
namespace {

// hfpot enumerates every partial self-map of a member's field; a six-element
// field gives 7^6 = 117649 maps, seven would give two million.
constexpr std::uint64_t kHfpotBudget = 1u << 18;

// Subsets examined by the history search in is_fevel.
constexpr std::uint64_t kHistorySearchBudget = 1u << 20;

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp,
                             std::uint64_t ceiling) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > ceiling / std::max<std::uint64_t>(base, 1)) return ceiling + 1;
    r *= base;
  }
  return r;
}

std::uint64_t binomial_sum(std::uint64_t n, std::uint64_t k_max,
                           std::uint64_t ceiling) {
  std::uint64_t total = 0;
  std::uint64_t c = 1;
  for (std::uint64_t k = 0; k <= std::min(n, k_max); ++k) {
    total += c;
    if (total > ceiling) return ceiling + 1;
    c = c * (n - k) / (k + 1);
  }
  return total;
}

}  // namespace

StageIndex::StageIndex(std::uint32_t index) : index_(index) {
  if (index == 0) throw UserError("stage index must be at least 1");
}

std::vector<HfFun> partial_maps(std::span<const HfFun> domain,
                                std::span<const HfFun> codomain,
                                std::uint64_t max_count) {
  const std::uint64_t choices = codomain.size() + 1;
  if (saturating_pow(choices, domain.size(), max_count) > max_count) {
    throw CapExceeded("enumerating partial maps " + std::to_string(domain.size()) +
                      " -> " + std::to_string(codomain.size()) +
                      " exceeds the cap of " + std::to_string(max_count));
  }
  // Odometer over the domain; digit 0 means undefined.
  std::vector<std::size_t> digit(domain.size(), 0);
  std::vector<HfFun> out;
  std::vector<Entry> entries;
  while (true) {
    entries.clear();
    for (std::size_t i = 0; i < domain.size(); ++i) {
      if (digit[i] != 0) entries.push_back({domain[i], codomain[digit[i] - 1]});
    }
    out.push_back(make(entries));
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == choices) digit[i++] = 0;
    if (i == digit.size()) break;
  }
  return out;
}

std::vector<HfFun> enumerate_stage(std::uint32_t stage) {
  if (stage > kMaxMaterializedStage) {
    throw CapExceeded("stage " + std::to_string(stage) +
                      " cannot be materialized (p(" + std::to_string(stage) +
                      ") = " + count_p(std::min(stage, kMaxCountAlpha)).str() +
                      (stage > kMaxCountAlpha ? "+" : "") +
                      " functions); use --count-only");
  }
  static std::mutex mu;
  static std::array<std::vector<HfFun>, kMaxMaterializedStage + 1> cache;
  static std::array<bool, kMaxMaterializedStage + 1> ready{};
  {
    std::lock_guard<std::mutex> lock(mu);
    if (ready[stage]) return cache[stage];
  }
  std::vector<HfFun> result;
  if (stage > 0) {
    std::vector<HfFun> prev = enumerate_stage(stage - 1);
    result = partial_maps(prev, prev);
    canonical_sort(result);
  }
  std::lock_guard<std::mutex> lock(mu);
  cache[stage] = result;
  ready[stage] = true;
  return result;
}

std::vector<HfFun> enumerate_stage(StageIndex stage) {
  return enumerate_stage(stage.value());
}

FevelReport fevel_report(StageIndex stage) {
  std::vector<HfFun> previous = enumerate_stage(stage.value() - 1);
  return FevelReport{stage, enumerate_stage(stage), funset_of(previous)};
}

BigNat count_p(std::uint32_t alpha) {
  if (alpha == 0) throw UserError("p is defined for alpha >= 1");
  if (alpha > kMaxCountAlpha) {
    throw CapExceeded("p(" + std::to_string(alpha) +
                      ") is too large to compute exactly; the cap is alpha <= " +
                      std::to_string(kMaxCountAlpha));
  }
  BigNat p = 1;
  for (std::uint32_t a = 1; a < alpha; ++a) {
    p = boost::multiprecision::pow(p + 1, p.convert_to<unsigned>());
  }
  return p;
}

StageIndex idx(HfFun f) { return StageIndex(f.rank()); }

HfFun hfpot(HfFun f) {
  std::vector<HfFun> members;
  std::vector<std::span<const HfFun>> seen;
  for (HfFun g : f.field()) {
    std::span<const HfFun> fld = g.field();
    bool duplicate = std::any_of(seen.begin(), seen.end(), [&](auto s) {
      return std::equal(s.begin(), s.end(), fld.begin(), fld.end());
    });
    if (duplicate) continue;
    seen.push_back(fld);
    std::vector<HfFun> maps = partial_maps(fld, fld, kHfpotBudget);
    members.insert(members.end(), maps.begin(), maps.end());
  }
  return funset_of(members);
}

bool is_history(HfFun h) {
  std::span<const HfFun> hf = h.field();
  for (HfFun x : hf) {
    std::vector<HfFun> below;
    for (HfFun z : hf) {
      if (fun_in(z, x)) below.push_back(z);
    }
    if (x != hfpot(funset_of(below))) return false;
  }
  return true;
}

bool is_fevel(HfFun s) {
  if (!is_funset(s)) return false;

  // Downward closure of s's field under membership.
  std::vector<HfFun> closure(s.field().begin(), s.field().end());
  for (std::size_t i = 0; i < closure.size(); ++i) {
    for (HfFun y : closure[i].field()) {
      if (std::find(closure.begin(), closure.end(), y) == closure.end()) {
        closure.push_back(y);
      }
    }
  }
  const std::size_t n = closure.size();
  const std::size_t max_size = s.field().size() + 1;
  if (binomial_sum(n, max_size, kHistorySearchBudget) > kHistorySearchBudget) {
    throw CapExceeded("history search space for is_fevel is too large");
  }

  // Depth-first over subsets of the closure with at most max_size members.
  std::vector<HfFun> chosen;
  auto search = [&](auto&& self, std::size_t next) -> bool {
    HfFun h = funset_of(chosen);
    if (is_history(h) && hfpot(h) == s) return true;
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

bool is_fevel_recursive(HfFun s) {
  std::vector<HfFun> earlier;
  for (HfFun t : s.field()) {
    if (is_fevel_recursive(t)) earlier.push_back(t);
  }
  return s == hfpot(funset_of(earlier));
}

HfFun fevel_of(HfFun f) {
  for (std::uint32_t k = 1;; ++k) {
    HfFun candidate = funset_of(enumerate_stage(k - 1));
    if (fun_subeq(f, candidate)) return candidate;
  }
}

bool diagonal_exists(std::span<const HfFun> universe) {
  for (HfFun d : universe) {
    bool diagonal = true;
    for (HfFun x : universe) {
      std::optional<HfFun> self = apply(x, x);
      std::optional<HfFun> at = apply(d, x);
      bool ok = (self == x) ? !at.has_value() : at == x;
      if (!ok) {
        diagonal = false;
        break;
      }
    }
    if (diagonal) return true;
  }
  return false;
}

}  // namespace fltk
