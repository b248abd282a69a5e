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

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the value constructors (make, funset_of,
// set_of) and the structure containers.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "fltk/hf_kernel.hpp"
#include "fltk/hf_sets.hpp"
#include "fltk/modelcheck.hpp"

namespace oracle {

using fltk::Entry;
using fltk::FinStructure;
using fltk::FstStructure;
using fltk::HfFun;
using fltk::HfSet;
using fltk::MembershipStructure;

inline std::vector<HfFun> sorted_by_id(std::vector<HfFun> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

inline std::vector<HfSet> sorted_by_id(std::vector<HfSet> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

/// Every partial map from `dom` to `cod`, one odometer step at a time.
inline std::vector<HfFun> all_partial_maps(const std::vector<HfFun>& dom,
                                           const std::vector<HfFun>& cod) {
  std::vector<HfFun> out;
  std::vector<std::size_t> digit(dom.size(), 0);
  while (true) {
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < dom.size(); ++i) {
      if (digit[i] > 0) entries.push_back({dom[i], cod[digit[i] - 1]});
    }
    out.push_back(fltk::make(entries));
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == cod.size() + 1) digit[i++] = 0;
    if (i == digit.size()) break;
  }
  return out;
}

/// Stage k by iterating "all partial maps on the previous stage".
inline std::vector<HfFun> stage(unsigned k) {
  std::vector<HfFun> s{};
  if (k == 0) return s;
  s = {HfFun{}};
  for (unsigned i = 1; i < k; ++i) s = all_partial_maps(s, s);
  return sorted_by_id(s);
}

/// Field computed from the graph alone.
inline std::vector<HfFun> field(HfFun f) {
  std::vector<HfFun> out;
  for (const Entry& e : f.graph()) {
    out.push_back(e.arg);
    out.push_back(e.value);
  }
  return sorted_by_id(out);
}

inline bool in_field(HfFun g, HfFun f) {
  auto fl = field(f);
  return std::find(fl.begin(), fl.end(), g) != fl.end();
}

/// p by the recurrence, in plain 64-bit arithmetic (enough up to alpha 4).
inline std::uint64_t p(unsigned alpha) {
  std::uint64_t v = 1;
  for (unsigned a = 1; a < alpha; ++a) {
    std::uint64_t next = 1;
    for (std::uint64_t i = 0; i < v; ++i) next *= v + 1;
    v = next;
  }
  return v;
}

/// Cumulative V_k: V_0 = {}, V_(k+1) = powerset of V_k.
inline std::vector<HfSet> cumulative(unsigned k) {
  std::vector<HfSet> v;
  for (unsigned i = 0; i < k; ++i) {
    std::vector<HfSet> next;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << v.size()); ++mask) {
      std::vector<HfSet> xs;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (mask >> j & 1) xs.push_back(v[j]);
      next.push_back(fltk::set_of(xs));
    }
    v = sorted_by_id(next);
  }
  return v;
}

inline HfSet kuratowski(HfSet a, HfSet b) {
  return fltk::set_of({fltk::set_of({a}), fltk::set_of({a, b})});
}

// --- literal axiom evaluation over small structures --------------------------

/// Calls visit(P) for every partial map P: n -> n (-1 = undefined).
template <class Visit>
bool every_partial_map(std::size_t n, Visit&& visit) {
  std::vector<int> p(n, -1);
  while (true) {
    if (!visit(p)) return false;
    std::size_t i = 0;
    while (i < n && ++p[i] == static_cast<int>(n)) p[i++] = -1;
    if (i == n) return true;
  }
}

inline int app(const FinStructure& s, std::size_t f, std::size_t x) {
  auto y = s.app(f, x);
  return y ? static_cast<int>(*y) : -1;
}

inline bool fin(const FinStructure& s, std::size_t g, std::size_t f) {
  for (std::size_t z = 0; z < s.size(); ++z) {
    if (z == g && app(s, f, z) >= 0) return true;
    if (app(s, f, z) == static_cast<int>(g)) return true;
  }
  return false;
}

inline bool realized(const FinStructure& s, const std::vector<int>& p) {
  for (std::size_t g = 0; g < s.size(); ++g) {
    bool same = true;
    for (std::size_t x = 0; x < s.size() && same; ++x) same = app(s, g, x) == p[x];
    if (same) return true;
  }
  return false;
}

inline bool fun_comp(const FinStructure& s) {
  const std::size_t n = s.size();
  return every_partial_map(n, [&](const std::vector<int>& p) {
    bool bounded = false;
    for (std::size_t f = 0; f < n && !bounded; ++f) {
      bounded = true;
      for (std::size_t x = 0; x < n; ++x) {
        if (p[x] >= 0 && !(fin(s, x, f) && fin(s, p[x], f))) bounded = false;
      }
    }
    return !bounded || realized(s, p);
  });
}

inline bool fun_supercomp(const FinStructure& s) {
  const std::size_t n = s.size();
  return every_partial_map(n, [&](const std::vector<int>& p) {
    bool bounded = false;
    for (std::size_t f = 0; f < n && !bounded; ++f) {
      bounded = true;
      for (std::size_t x = 0; x < n; ++x)
        if (p[x] >= 0 && !fin(s, x, f)) bounded = false;
    }
    return !bounded || realized(s, p);
  });
}

inline bool is_funset(const FinStructure& s, std::size_t f) {
  for (std::size_t x = 0; x < s.size(); ++x)
    if (fin(s, x, f) && app(s, f, x) != static_cast<int>(x)) return false;
  return true;
}

inline bool subeq(const FinStructure& s, std::size_t g, std::size_t f) {
  for (std::size_t x = 0; x < s.size(); ++x)
    if (fin(s, x, g) && !fin(s, x, f)) return false;
  return true;
}

/// y is the funset hfpot(w): a funset whose field is everything included
/// in some member of w.
inline bool is_hfpot(const FinStructure& s, std::size_t y, std::size_t w) {
  if (!is_funset(s, y)) return false;
  for (std::size_t z = 0; z < s.size(); ++z) {
    bool want = false;
    for (std::size_t g = 0; g < s.size() && !want; ++g) want = fin(s, g, w) && subeq(s, z, g);
    if (want != fin(s, z, y)) return false;
  }
  return true;
}

inline bool is_history(const FinStructure& s, std::size_t h) {
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (!fin(s, x, h)) continue;
    // Some funset w with field {z in h : z in x} and x = hfpot(w).
    bool ok = false;
    for (std::size_t w = 0; w < s.size() && !ok; ++w) {
      if (!is_funset(s, w)) continue;
      bool right_field = true;
      for (std::size_t z = 0; z < s.size() && right_field; ++z)
        right_field = fin(s, z, w) == (fin(s, z, h) && fin(s, z, x));
      ok = right_field && is_hfpot(s, x, w);
    }
    if (!ok) return false;
  }
  return true;
}

inline std::vector<std::size_t> fevels(const FinStructure& s) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < s.size(); ++t) {
    for (std::size_t h = 0; h < s.size(); ++h) {
      if (is_history(s, h) && is_hfpot(s, t, h)) {
        out.push_back(t);
        break;
      }
    }
  }
  return out;
}

inline bool fun_strat(const FinStructure& s) {
  auto fev = fevels(s);
  for (std::size_t a = 0; a < s.size(); ++a) {
    bool ok = std::any_of(fev.begin(), fev.end(), [&](std::size_t t) { return subeq(s, a, t); });
    if (!ok) return false;
  }
  return true;
}

inline bool fun_spec(const FstStructure& s) {
  const std::size_t n = s.fun_size();
  auto before = [&](std::size_t x, std::size_t st) {
    for (std::size_t r = 0; r < s.stage_size(); ++r)
      if (s.found_at(x, r) && s.before(r, st)) return true;
    return false;
  };
  for (std::size_t st = 0; st < s.stage_size(); ++st) {
    bool ok = every_partial_map(n, [&](const std::vector<int>& p) {
      for (std::size_t x = 0; x < n; ++x)
        if (p[x] >= 0 && !(before(x, st) && before(p[x], st))) return true;
      for (std::size_t g = 0; g < n; ++g) {
        bool same = true;
        for (std::size_t x = 0; x < n && same; ++x) same = app(s.functions(), g, x) == p[x];
        if (same && s.found_at(g, st)) return true;
      }
      return false;
    });
    if (!ok) return false;
  }
  return true;
}

inline bool sep(const MembershipStructure& m) {
  const std::size_t n = m.size();
  for (std::uint64_t f = 0; f < (std::uint64_t{1} << n); ++f) {
    for (std::size_t a = 0; a < n; ++a) {
      bool exists = false;
      for (std::size_t b = 0; b < n && !exists; ++b) {
        exists = true;
        for (std::size_t x = 0; x < n && exists; ++x)
          exists = m.elem(x, b) == (m.elem(x, a) && (f >> x & 1));
      }
      if (!exists) return false;
    }
  }
  return true;
}

/// Unbounded with P ranging over total maps, levels taken as given.
inline bool unbounded(const MembershipStructure& m, const std::vector<std::size_t>& levels) {
  const std::size_t n = m.size();
  std::vector<std::size_t> p(n, 0);
  while (true) {
    for (std::size_t a = 0; a < n; ++a) {
      bool some = false;
      for (std::size_t s : levels) {
        bool all = true;
        for (std::size_t x = 0; x < n && all; ++x)
          if (m.elem(x, a) && !m.elem(p[x], s)) all = false;
        if (all) {
          some = true;
          break;
        }
      }
      if (!some) return false;
    }
    std::size_t i = 0;
    while (i < n && ++p[i] == n) p[i++] = 0;
    if (i == n) return true;
  }
}

}  // namespace oracle
