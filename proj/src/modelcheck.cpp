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

#include "fltk/modelcheck.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_map>

#include "fltk/error.hpp"
#include "fltk/hierarchy.hpp"

namespace fltk {
namespace {

using Mask = std::uint64_t;

constexpr std::uint64_t kSweepBudget = 1u << 22;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

bool has(Mask m, std::size_t i) { return (m >> i) & 1; }

bool includes(Mask outer, Mask inner) { return (inner & ~outer) == 0; }

std::vector<std::size_t> elements_of(Mask m) {
  std::vector<std::size_t> out;
  while (m != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp,
                          std::uint64_t ceiling, const char* what) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > ceiling / base) {
      throw CapExceeded(std::string(what) + ": second-order sweep exceeds the cap");
    }
    r *= base;
  }
  return r;
}

void require_size(std::size_t n) {
  if (n == 0) throw UserError("structures must have at least one element");
  if (n > kMaxStructureSize) {
    throw CapExceeded("structure size " + std::to_string(n) + " exceeds " +
                      std::to_string(kMaxStructureSize));
  }
}

void require_second_order_size(std::size_t n, AxiomId a) {
  if (n > kMaxSecondOrderSize) {
    throw CapExceeded(std::string(axiom_name(a)) + " needs a domain of at most " +
                      std::to_string(kMaxSecondOrderSize) + " elements");
  }
}

[[noreturn]] void wrong_language(AxiomId a, const char* kind) {
  throw UserError(std::string(axiom_name(a)) + " is not in the language of " + kind);
}

// Rows of an application table as base-(n+1) codes, digit 0 = undefined.
class RowCodes {
 public:
  explicit RowCodes(const FinStructure& s) : n_(s.size()) {
    place_.resize(n_);
    std::uint64_t p = 1;
    for (std::size_t x = 0; x < n_; ++x) {
      place_[x] = p;
      p *= n_ + 1;
    }
    for (std::size_t f = 0; f < n_; ++f) {
      std::uint64_t code = 0;
      for (std::size_t x = 0; x < n_; ++x) {
        auto y = s.app(f, x);
        code += (y ? *y + 1 : 0) * place_[x];
      }
      rows_.emplace(code, f);
    }
  }

  std::uint64_t place(std::size_t x) const { return place_[x]; }

  /// Elements whose row has this code.
  auto realizers(std::uint64_t code) const { return rows_.equal_range(code); }
  bool realized(std::uint64_t code) const { return rows_.count(code) != 0; }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> place_;
  std::unordered_multimap<std::uint64_t, std::size_t> rows_;
};

// Calls visit(code) for every partial map from `domain` into `codomain`
// (digit 0 = undefined), with codes relative to `rows`. Stops early when
// visit returns false; returns whether it ran to completion.
template <class Visit>
bool for_each_partial_map(const RowCodes& rows, std::span<const std::size_t> domain,
                          std::span<const std::size_t> codomain, Visit&& visit) {
  std::vector<std::size_t> digit(domain.size(), 0);
  const std::size_t choices = codomain.size() + 1;
  while (true) {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < domain.size(); ++i) {
      if (digit[i] != 0) code += (codomain[digit[i] - 1] + 1) * rows.place(domain[i]);
    }
    if (!visit(code)) return false;
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == choices) digit[i++] = 0;
    if (i == digit.size()) return true;
  }
}

bool fun_ext(const FinStructure& s) {
  const std::size_t n = s.size();
  auto t = s.table();
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = f + 1; g < n; ++g) {
      if (std::equal(t.begin() + f * n, t.begin() + (f + 1) * n, t.begin() + g * n)) {
        return false;
      }
    }
  }
  return true;
}

// Definitional expansion of the fevel machinery inside an application
// structure.
struct FunAnalysis {
  explicit FunAnalysis(const FinStructure& st) : s(st), n(st.size()) {
    field.assign(n, 0);
    funset.assign(n, true);
    for (std::size_t f = 0; f < n; ++f) {
      for (std::size_t x = 0; x < n; ++x) {
        if (auto y = s.app(f, x)) {
          field[f] |= bit(x) | bit(*y);
          if (*y != x) funset[f] = false;
        }
      }
    }
    for (std::size_t f = 0; f < n; ++f) {
      if (funset[f]) funset_fields.push_back(field[f]);
    }
    std::sort(funset_fields.begin(), funset_fields.end());
  }

  bool funset_with_field(Mask m) const {
    return std::binary_search(funset_fields.begin(), funset_fields.end(), m);
  }

  // Field of hfpot applied to anything with field m.
  Mask pot_field(Mask m) const {
    Mask out = 0;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t g : elements_of(m)) {
        if (includes(field[g], field[x])) {
          out |= bit(x);
          break;
        }
      }
    }
    return out;
  }

  // x = hfpot(w) for a funset w with field m.
  bool is_hfpot_of(std::size_t x, Mask m) const {
    return funset[x] && field[x] == pot_field(m);
  }

  bool is_history(std::size_t h) const {
    for (std::size_t x : elements_of(field[h])) {
      Mask below = field[h] & field[x];
      if (!funset_with_field(below) || !is_hfpot_of(x, below)) return false;
    }
    return true;
  }

  std::vector<bool> fevels() const {
    std::vector<Mask> history_fields;
    for (std::size_t h = 0; h < n; ++h) {
      if (is_history(h)) history_fields.push_back(field[h]);
    }
    std::vector<bool> out(n, false);
    for (std::size_t sidx = 0; sidx < n; ++sidx) {
      for (Mask hf : history_fields) {
        if (is_hfpot_of(sidx, hf)) {
          out[sidx] = true;
          break;
        }
      }
    }
    return out;
  }

  const FinStructure& s;
  std::size_t n;
  std::vector<Mask> field;
  std::vector<bool> funset;
  std::vector<Mask> funset_fields;
};

std::vector<Mask> distinct_nonempty_fields(const FunAnalysis& fa) {
  std::vector<Mask> out(fa.field.begin(), fa.field.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool fun_comp(const FinStructure& s) {
  require_second_order_size(s.size(), AxiomId::kFunComp);
  FunAnalysis fa(s);
  RowCodes rows(s);
  std::vector<Mask> fields = distinct_nonempty_fields(fa);
  std::uint64_t budget = 0;
  for (Mask k : fields) {
    std::size_t c = std::popcount(k);
    budget += checked_pow(c + 1, c, kSweepBudget, "FunComp");
    if (budget > kSweepBudget) throw CapExceeded("FunComp: second-order sweep exceeds the cap");
  }
  for (Mask k : fields) {
    std::vector<std::size_t> elems = elements_of(k);
    bool ok = for_each_partial_map(rows, elems, elems,
                                   [&](std::uint64_t code) { return rows.realized(code); });
    if (!ok) return false;
  }
  return true;
}

bool fun_supercomp(const FinStructure& s) {
  require_second_order_size(s.size(), AxiomId::kFunSupercomp);
  FunAnalysis fa(s);
  RowCodes rows(s);
  std::vector<Mask> fields = distinct_nonempty_fields(fa);
  std::vector<std::size_t> everything(s.size());
  std::iota(everything.begin(), everything.end(), 0);
  std::uint64_t budget = 0;
  for (Mask k : fields) {
    budget += checked_pow(s.size() + 1, std::popcount(k), kSweepBudget, "FunSupercomp");
    if (budget > kSweepBudget) {
      throw CapExceeded("FunSupercomp: second-order sweep exceeds the cap");
    }
  }
  for (Mask k : fields) {
    std::vector<std::size_t> elems = elements_of(k);
    bool ok = for_each_partial_map(rows, elems, everything,
                                   [&](std::uint64_t code) { return rows.realized(code); });
    if (!ok) return false;
  }
  return true;
}

bool fun_strat(const FinStructure& s) {
  FunAnalysis fa(s);
  std::vector<bool> fev = fa.fevels();
  for (std::size_t a = 0; a < s.size(); ++a) {
    bool covered = false;
    for (std::size_t t = 0; t < s.size() && !covered; ++t) {
      covered = fev[t] && includes(fa.field[t], fa.field[a]);
    }
    if (!covered) return false;
  }
  return true;
}

bool fun_endless(const FinStructure& s) {
  FunAnalysis fa(s);
  std::vector<bool> fev = fa.fevels();
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (!fev[a]) continue;
    bool succ = false;
    for (std::size_t t = 0; t < s.size() && !succ; ++t) {
      succ = fev[t] && has(fa.field[t], a);
    }
    if (!succ) return false;
  }
  return true;
}

bool fun_infinity(const FinStructure& s) {
  FunAnalysis fa(s);
  std::vector<bool> fev = fa.fevels();
  for (std::size_t top = 0; top < s.size(); ++top) {
    if (!fev[top] || fa.field[top] == 0) continue;
    bool limit = true;
    for (std::size_t q : elements_of(fa.field[top])) {
      bool between = false;
      for (std::size_t r = 0; r < s.size() && !between; ++r) {
        between = fev[r] && has(fa.field[r], q) && has(fa.field[top], r);
      }
      if (!between) {
        limit = false;
        break;
      }
    }
    if (limit) return true;
  }
  return false;
}

bool chi_range(const FinStructure& s) {
  if (!s.tokens()) throw UserError("ChiRange needs designated 0 and 1 tokens");
  auto [zero, one] = *s.tokens();
  for (std::size_t y = 0; y < s.size(); ++y) {
    for (std::size_t x = 0; x < s.size(); ++x) {
      auto v = s.app(y, x);
      if (!v || (*v != zero && *v != one)) return false;
    }
  }
  return true;
}

// Definitional expansion of pot / history / level in a membership structure.
struct SetAnalysis {
  explicit SetAnalysis(const MembershipStructure& st) : n(st.size()) {
    members.assign(n, 0);
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t x = 0; x < n; ++x) {
        if (st.elem(x, y)) members[y] |= bit(x);
      }
    }
    sorted_members = members;
    std::sort(sorted_members.begin(), sorted_members.end());
  }

  bool exists_with(Mask m) const {
    return std::binary_search(sorted_members.begin(), sorted_members.end(), m);
  }

  Mask pot_members(Mask a) const {
    Mask out = 0;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t c : elements_of(a)) {
        if (includes(members[c], members[x])) {
          out |= bit(x);
          break;
        }
      }
    }
    return out;
  }

  bool is_history(std::size_t h) const {
    for (std::size_t x : elements_of(members[h])) {
      Mask meet = members[x] & members[h];
      if (!exists_with(meet) || members[x] != pot_members(meet)) return false;
    }
    return true;
  }

  std::vector<bool> levels() const {
    std::vector<Mask> history_members;
    for (std::size_t h = 0; h < n; ++h) {
      if (is_history(h)) history_members.push_back(members[h]);
    }
    std::vector<bool> out(n, false);
    for (std::size_t s = 0; s < n; ++s) {
      for (Mask hm : history_members) {
        if (members[s] == pot_members(hm)) {
          out[s] = true;
          break;
        }
      }
    }
    return out;
  }

  std::size_t n;
  std::vector<Mask> members;
  std::vector<Mask> sorted_members;
};

bool covered_by_level(const SetAnalysis& sa, const std::vector<bool>& lev, Mask m) {
  for (std::size_t s = 0; s < sa.n; ++s) {
    if (lev[s] && includes(sa.members[s], m)) return true;
  }
  return false;
}

}  // namespace

std::string_view axiom_name(AxiomId a) {
  switch (a) {
    case AxiomId::kFunExt: return "FunExt";
    case AxiomId::kFunOrd: return "FunOrd";
    case AxiomId::kFunStage: return "FunStage";
    case AxiomId::kFunPri: return "FunPri";
    case AxiomId::kFunSpec: return "FunSpec";
    case AxiomId::kFunStrat: return "FunStrat";
    case AxiomId::kFunComp: return "FunComp";
    case AxiomId::kFunEndless: return "FunEndless";
    case AxiomId::kFunInfinity: return "FunInfinity";
    case AxiomId::kFunSupercomp: return "FunSupercomp";
    case AxiomId::kExt: return "Ext";
    case AxiomId::kSep: return "Sep";
    case AxiomId::kStrat: return "Strat";
    case AxiomId::kEndless: return "Endless";
    case AxiomId::kInf: return "Inf";
    case AxiomId::kUnbounded: return "Unbounded";
    case AxiomId::kChiRange: return "ChiRange";
  }
  return "?";
}

std::optional<AxiomId> parse_axiom(std::string_view name) {
  for (AxiomId a : kAllAxioms) {
    if (axiom_name(a) == name) return a;
  }
  return std::nullopt;
}

std::string_view theory_name(Theory t) {
  switch (t) {
    case Theory::kFlt: return "flt";
    case Theory::kFst: return "fst";
    case Theory::kLt: return "lt";
  }
  return "?";
}

std::optional<Theory> parse_theory(std::string_view name) {
  for (Theory t : {Theory::kFlt, Theory::kFst, Theory::kLt}) {
    if (theory_name(t) == name) return t;
  }
  return std::nullopt;
}

std::span<const AxiomId> theory_axioms(Theory t) {
  static constexpr std::array flt{AxiomId::kFunExt, AxiomId::kFunStrat, AxiomId::kFunComp};
  static constexpr std::array fst{AxiomId::kFunExt, AxiomId::kFunOrd, AxiomId::kFunStage,
                                  AxiomId::kFunPri, AxiomId::kFunSpec};
  static constexpr std::array lt{AxiomId::kExt, AxiomId::kSep, AxiomId::kStrat};
  switch (t) {
    case Theory::kFlt: return flt;
    case Theory::kFst: return fst;
    case Theory::kLt: return lt;
  }
  return {};
}

// --- structures ------------------------------------------------------------

FinStructure::FinStructure(std::size_t size)
    : size_(size), table_(size * size, kUndefined) {
  require_size(size);
}

FinStructure::FinStructure(std::size_t size, std::vector<std::int16_t> table)
    : size_(size), table_(std::move(table)) {
  require_size(size);
  if (table_.size() != size * size) throw UserError("application table has the wrong shape");
  for (std::int16_t v : table_) {
    if (v < kUndefined || v >= static_cast<std::int16_t>(size)) {
      throw UserError("application table entry out of range");
    }
  }
}

std::optional<std::size_t> FinStructure::app(std::size_t f, std::size_t x) const {
  std::int16_t v = table_[f * size_ + x];
  if (v == kUndefined) return std::nullopt;
  return static_cast<std::size_t>(v);
}

void FinStructure::set_app(std::size_t f, std::size_t x, std::optional<std::size_t> y) {
  table_[f * size_ + x] = y ? static_cast<std::int16_t>(*y) : kUndefined;
}

FstStructure::FstStructure(FinStructure functions, std::size_t stage_size)
    : functions_(std::move(functions)),
      stage_size_(stage_size),
      before_(stage_size * stage_size, false),
      found_at_(functions_.size() * stage_size, false) {
  if (stage_size == 0) throw UserError("FST structures need at least one stage");
  if (stage_size > kMaxStructureSize) throw CapExceeded("too many stages");
}

bool FstStructure::before(std::size_t r, std::size_t s) const {
  return before_[r * stage_size_ + s];
}
void FstStructure::set_before(std::size_t r, std::size_t s, bool v) {
  before_[r * stage_size_ + s] = v;
}
bool FstStructure::found_at(std::size_t f, std::size_t s) const {
  return found_at_[f * stage_size_ + s];
}
void FstStructure::set_found_at(std::size_t f, std::size_t s, bool v) {
  found_at_[f * stage_size_ + s] = v;
}

MembershipStructure::MembershipStructure(std::size_t size)
    : size_(size), elem_(size * size, false) {
  require_size(size);
}

bool MembershipStructure::elem(std::size_t x, std::size_t y) const {
  return elem_[x * size_ + y];
}
void MembershipStructure::set_elem(std::size_t x, std::size_t y, bool v) {
  elem_[x * size_ + y] = v;
}

// --- evaluation ------------------------------------------------------------

bool eval_axiom(const FinStructure& s, AxiomId a) {
  switch (a) {
    case AxiomId::kFunExt: return fun_ext(s);
    case AxiomId::kFunStrat: return fun_strat(s);
    case AxiomId::kFunComp: return fun_comp(s);
    case AxiomId::kFunEndless: return fun_endless(s);
    case AxiomId::kFunInfinity: return fun_infinity(s);
    case AxiomId::kFunSupercomp: return fun_supercomp(s);
    case AxiomId::kChiRange: return chi_range(s);
    default: wrong_language(a, "application structures");
  }
}

bool eval_axiom(const FstStructure& s, AxiomId a) {
  const std::size_t n = s.fun_size();
  const std::size_t m = s.stage_size();
  auto found_before = [&](std::size_t x, std::size_t st) {
    for (std::size_t r = 0; r < m; ++r) {
      if (s.found_at(x, r) && s.before(r, st)) return true;
    }
    return false;
  };
  switch (a) {
    case AxiomId::kFunExt: return fun_ext(s.functions());
    case AxiomId::kFunOrd:
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t q = 0; q < m; ++q)
          for (std::size_t t = 0; t < m; ++t)
            if (s.before(r, q) && s.before(q, t) && !s.before(r, t)) return false;
      return true;
    case AxiomId::kFunStage:
      for (std::size_t f = 0; f < n; ++f) {
        bool somewhere = false;
        for (std::size_t st = 0; st < m && !somewhere; ++st) somewhere = s.found_at(f, st);
        if (!somewhere) return false;
      }
      return true;
    case AxiomId::kFunPri: {
      FunAnalysis fa(s.functions());
      for (std::size_t st = 0; st < m; ++st)
        for (std::size_t f = 0; f < n; ++f) {
          if (!s.found_at(f, st)) continue;
          for (std::size_t x : elements_of(fa.field[f]))
            if (!found_before(x, st)) return false;
        }
      return true;
    }
    case AxiomId::kFunSpec: {
      require_second_order_size(n, a);
      RowCodes rows(s.functions());
      std::uint64_t budget = 0;
      std::vector<std::vector<std::size_t>> earlier(m);
      for (std::size_t st = 0; st < m; ++st) {
        for (std::size_t x = 0; x < n; ++x)
          if (found_before(x, st)) earlier[st].push_back(x);
        std::size_t c = earlier[st].size();
        budget += checked_pow(c + 1, c, kSweepBudget, "FunSpec");
        if (budget > kSweepBudget) throw CapExceeded("FunSpec: second-order sweep exceeds the cap");
      }
      for (std::size_t st = 0; st < m; ++st) {
        bool ok = for_each_partial_map(rows, earlier[st], earlier[st], [&](std::uint64_t code) {
          auto [lo, hi] = rows.realizers(code);
          for (auto it = lo; it != hi; ++it)
            if (s.found_at(it->second, st)) return true;
          return false;
        });
        if (!ok) return false;
      }
      return true;
    }
    default: wrong_language(a, "two-sorted stage structures");
  }
}

bool eval_axiom(const MembershipStructure& s, AxiomId a) {
  SetAnalysis sa(s);
  const std::size_t n = s.size();
  switch (a) {
    case AxiomId::kExt: {
      auto sorted = sa.sorted_members;
      return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }
    case AxiomId::kSep: {
      std::uint64_t budget = 0;
      for (std::size_t x = 0; x < n; ++x) {
        budget += std::uint64_t{1} << std::popcount(sa.members[x]);
        if (budget > kSweepBudget) throw CapExceeded("Sep: second-order sweep exceeds the cap");
      }
      for (std::size_t x = 0; x < n; ++x) {
        // Every sub-mask of members[x], including the empty one.
        Mask full = sa.members[x];
        Mask sub = full;
        while (true) {
          if (!sa.exists_with(sub)) return false;
          if (sub == 0) break;
          sub = (sub - 1) & full;
        }
      }
      return true;
    }
    case AxiomId::kStrat: {
      std::vector<bool> lev = sa.levels();
      for (std::size_t x = 0; x < n; ++x)
        if (!covered_by_level(sa, lev, sa.members[x])) return false;
      return true;
    }
    case AxiomId::kEndless: {
      std::vector<bool> lev = sa.levels();
      for (std::size_t x = 0; x < n; ++x) {
        if (!lev[x]) continue;
        bool succ = false;
        for (std::size_t t = 0; t < n && !succ; ++t) succ = lev[t] && has(sa.members[t], x);
        if (!succ) return false;
      }
      return true;
    }
    case AxiomId::kInf: {
      std::vector<bool> lev = sa.levels();
      for (std::size_t top = 0; top < n; ++top) {
        if (!lev[top] || sa.members[top] == 0) continue;
        bool limit = true;
        for (std::size_t q : elements_of(sa.members[top])) {
          bool between = false;
          for (std::size_t r = 0; r < n && !between; ++r)
            between = lev[r] && has(sa.members[r], q) && has(sa.members[top], r);
          if (!between) {
            limit = false;
            break;
          }
        }
        if (limit) return true;
      }
      return false;
    }
    case AxiomId::kUnbounded: {
      // P ranges over total maps; the image of a k-element set is any
      // nonempty set of at most k elements, so those are what must fit.
      std::vector<bool> lev = sa.levels();
      bool any_level = std::find(lev.begin(), lev.end(), true) != lev.end();
      std::size_t widest = 0;
      for (std::size_t x = 0; x < n; ++x) {
        if (sa.members[x] == 0 && !any_level) return false;
        widest = std::max<std::size_t>(widest, std::popcount(sa.members[x]));
      }
      if (widest == 0) return true;
      if (n >= 40) throw CapExceeded("Unbounded: second-order sweep exceeds the cap");
      std::uint64_t total = 0;
      for (Mask img = 1; img < (Mask{1} << n); ++img) {
        if (static_cast<std::size_t>(std::popcount(img)) > widest) continue;
        if (++total > kSweepBudget) throw CapExceeded("Unbounded: second-order sweep exceeds the cap");
        if (!covered_by_level(sa, lev, img)) return false;
      }
      return true;
    }
    default: wrong_language(a, "membership structures");
  }
}

std::vector<std::size_t> fevels_in(const FinStructure& s) {
  FunAnalysis fa(s);
  std::vector<bool> fev = fa.fevels();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fev.size(); ++i)
    if (fev[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> levels_in(const MembershipStructure& s) {
  SetAnalysis sa(s);
  std::vector<bool> lev = sa.levels();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lev.size(); ++i)
    if (lev[i]) out.push_back(i);
  return out;
}

// --- isomorphism -----------------------------------------------------------

namespace {

constexpr std::size_t kMaxIsoSize = 9;

template <class Check>
bool any_permutation(std::size_t n, Check&& check) {
  if (n > kMaxIsoSize) throw CapExceeded("isomorphism search is limited to 9 elements");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (check(perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool maps_app(const FinStructure& a, const FinStructure& b,
              const std::vector<std::size_t>& pi) {
  const std::size_t n = a.size();
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t x = 0; x < n; ++x) {
      auto y = a.app(f, x);
      auto z = b.app(pi[f], pi[x]);
      if (y.has_value() != z.has_value()) return false;
      if (y && pi[*y] != *z) return false;
    }
  }
  return true;
}

}  // namespace

bool isomorphic(const FinStructure& a, const FinStructure& b) {
  if (a.size() != b.size()) return false;
  if (a.tokens().has_value() != b.tokens().has_value()) return false;
  return any_permutation(a.size(), [&](const std::vector<std::size_t>& pi) {
    if (a.tokens()) {
      if (pi[a.tokens()->zero] != b.tokens()->zero || pi[a.tokens()->one] != b.tokens()->one) {
        return false;
      }
    }
    return maps_app(a, b, pi);
  });
}

bool isomorphic(const MembershipStructure& a, const MembershipStructure& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  return any_permutation(n, [&](const std::vector<std::size_t>& pi) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (a.elem(x, y) != b.elem(pi[x], pi[y])) return false;
    return true;
  });
}

bool isomorphic(const FstStructure& a, const FstStructure& b) {
  if (a.fun_size() != b.fun_size() || a.stage_size() != b.stage_size()) return false;
  const std::size_t n = a.fun_size();
  const std::size_t m = a.stage_size();
  return any_permutation(n, [&](const std::vector<std::size_t>& pi) {
    if (!maps_app(a.functions(), b.functions(), pi)) return false;
    return any_permutation(m, [&](const std::vector<std::size_t>& sigma) {
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t t = 0; t < m; ++t)
          if (a.before(r, t) != b.before(sigma[r], sigma[t])) return false;
      for (std::size_t f = 0; f < n; ++f)
        for (std::size_t t = 0; t < m; ++t)
          if (a.found_at(f, t) != b.found_at(pi[f], sigma[t])) return false;
      return true;
    });
  });
}

// --- builders --------------------------------------------------------------

FinStructure functions_as_structure(std::span<const HfFun> universe) {
  require_size(universe.size());
  std::unordered_map<HfFun, std::size_t> index;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (!index.emplace(universe[i], i).second) {
      throw UserError("universe lists a function twice");
    }
  }
  FinStructure s(universe.size());
  for (std::size_t f = 0; f < universe.size(); ++f) {
    for (std::size_t x = 0; x < universe.size(); ++x) {
      if (auto y = apply(universe[f], universe[x])) {
        auto it = index.find(*y);
        if (it == index.end()) throw UserError("universe is not closed under application");
        s.set_app(f, x, it->second);
      }
    }
  }
  return s;
}

MembershipStructure sets_as_structure(std::span<const HfSet> universe) {
  MembershipStructure m(universe.size());
  for (std::size_t x = 0; x < universe.size(); ++x)
    for (std::size_t y = 0; y < universe.size(); ++y)
      m.set_elem(x, y, member(universe[x], universe[y]));
  return m;
}

FinStructure hierarchy_as_structure(std::uint32_t stage) {
  std::vector<HfFun> members = enumerate_stage(StageIndex(stage));
  return functions_as_structure(members);
}

FstStructure hierarchy_as_fst(std::uint32_t stage) {
  std::vector<HfFun> members = enumerate_stage(StageIndex(stage));
  FstStructure s(functions_as_structure(members), stage);
  for (std::size_t r = 0; r < stage; ++r)
    for (std::size_t t = 0; t < stage; ++t) s.set_before(r, t, r < t);
  for (std::size_t f = 0; f < members.size(); ++f)
    for (std::size_t t = 0; t < stage; ++t)
      s.set_found_at(f, t, members[f].rank() <= t + 1);
  return s;
}

FinStructure chi_translate(const MembershipStructure& m, std::size_t zero,
                           std::size_t one) {
  if (zero == one) throw DegenerateTokens("the 0 and 1 tokens must be distinct elements");
  if (zero >= m.size() || one >= m.size()) throw UserError("token index out of range");
  FinStructure s(m.size());
  for (std::size_t y = 0; y < m.size(); ++y)
    for (std::size_t x = 0; x < m.size(); ++x) s.set_app(y, x, m.elem(x, y) ? one : zero);
  s.set_tokens({zero, one});
  return s;
}

// --- sweeps ----------------------------------------------------------------

namespace {

unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs work(begin, end, slot) over [0, total) split into contiguous slices,
// one per thread; slot indexes per-thread output.
template <class Work>
void parallel_slices(std::uint64_t total, unsigned threads, Work&& work) {
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(total, 1)));
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    std::uint64_t lo = total * t / threads;
    std::uint64_t hi = total * (t + 1) / threads;
    auto body = [&, lo, hi, t] {
      try {
        work(lo, hi, t);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    };
    if (threads == 1) {
      body();
    } else {
      pool.emplace_back(body);
    }
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

template <class Structure>
std::vector<std::size_t> group_classes(const std::vector<Structure>& models) {
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < models.size(); ++i) {
    bool known = std::any_of(reps.begin(), reps.end(),
                             [&](std::size_t r) { return isomorphic(models[r], models[i]); });
    if (!known) reps.push_back(i);
  }
  return reps;
}

struct SliceResult {
  std::vector<std::uint64_t> model_codes;
  std::map<AxiomId, std::uint64_t> failures;
};

// Shared driver: decode(code) builds a candidate, every axiom is evaluated,
// and candidates passing all of them are kept.
template <class Structure, class Decode>
std::pair<SweepReport, std::vector<Structure>> run_sweep(Theory theory, std::size_t n,
                                                         std::uint64_t total, unsigned threads,
                                                         Decode&& decode) {
  threads = resolve_threads(threads);
  std::span<const AxiomId> axioms = theory_axioms(theory);
  std::vector<SliceResult> slices(threads);
  parallel_slices(total, threads, [&](std::uint64_t lo, std::uint64_t hi, unsigned slot) {
    SliceResult& out = slices[slot];
    for (std::uint64_t code = lo; code < hi; ++code) {
      Structure cand = decode(code);
      bool all = true;
      for (AxiomId a : axioms) {
        if (!eval_axiom(cand, a)) {
          ++out.failures[a];
          all = false;
        }
      }
      if (all) out.model_codes.push_back(code);
    }
  });
  SweepReport report;
  report.theory = theory;
  report.size = n;
  report.candidates = total;
  for (AxiomId a : axioms) report.per_axiom_failures[a] = 0;
  std::vector<Structure> models;
  for (const SliceResult& s : slices) {
    for (auto [a, c] : s.failures) report.per_axiom_failures[a] += c;
    for (std::uint64_t code : s.model_codes) models.push_back(decode(code));
  }
  report.models = models.size();
  report.iso_classes = group_classes(models).size();
  return {report, std::move(models)};
}

FinStructure decode_table(std::size_t n, std::uint64_t code) {
  std::vector<std::int16_t> table(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    table[i] = static_cast<std::int16_t>(code % (n + 1)) - 1;
    code /= n + 1;
  }
  return FinStructure(n, std::move(table));
}

}  // namespace

FltSweep enumerate_flt_models(std::size_t n, unsigned threads) {
  if (n == 0) throw UserError("model size must be at least 1");
  if (n > 3) throw CapExceeded("FLT sweeps are limited to size 3 ((n+1)^(n^2) tables)");
  std::uint64_t total = checked_pow(n + 1, n * n, std::uint64_t{1} << 40, "FLT sweep");
  auto [report, models] = run_sweep<FinStructure>(
      Theory::kFlt, n, total, threads, [n](std::uint64_t code) { return decode_table(n, code); });
  FltSweep out;
  out.report = report;
  out.class_representatives = group_classes(models);
  out.models = std::move(models);
  return out;
}

SweepReport sweep_lt(std::size_t n, unsigned threads) {
  if (n == 0) throw UserError("model size must be at least 1");
  if (n > 4) throw CapExceeded("LT sweeps are limited to size 4 (2^(n^2) relations)");
  std::uint64_t total = std::uint64_t{1} << (n * n);
  return run_sweep<MembershipStructure>(Theory::kLt, n, total, threads,
                                        [n](std::uint64_t code) {
                                          MembershipStructure m(n);
                                          for (std::size_t i = 0; i < n * n; ++i)
                                            m.set_elem(i / n, i % n, (code >> i) & 1);
                                          return m;
                                        })
      .first;
}

SweepReport sweep_fst(std::size_t n, unsigned threads) {
  if (n == 0) throw UserError("model size must be at least 1");
  if (n > 2) throw CapExceeded("FST sweeps are limited to size 2");
  const std::uint64_t tables = checked_pow(n + 1, n * n, 1u << 20, "FST sweep");
  const std::uint64_t befores = std::uint64_t{1} << (n * n);
  const std::uint64_t founds = std::uint64_t{1} << (n * n);
  return run_sweep<FstStructure>(Theory::kFst, n, tables * befores * founds, threads,
                                 [=](std::uint64_t code) {
                                   std::uint64_t t = code % tables;
                                   std::uint64_t b = (code / tables) % befores;
                                   std::uint64_t f = code / tables / befores;
                                   FstStructure s(decode_table(n, t), n);
                                   for (std::size_t i = 0; i < n * n; ++i) {
                                     s.set_before(i / n, i % n, (b >> i) & 1);
                                     s.set_found_at(i / n, i % n, (f >> i) & 1);
                                   }
                                   return s;
                                 })
      .first;
}

SweepReport sweep(Theory t, std::size_t n, unsigned threads) {
  switch (t) {
    case Theory::kFlt: return enumerate_flt_models(n, threads).report;
    case Theory::kFst: return sweep_fst(n, threads);
    case Theory::kLt: return sweep_lt(n, threads);
  }
  throw UserError("unknown theory");
}

}  // namespace fltk
