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

#include "fltk/category.hpp"

#include <algorithm>
#include <string>

#include "fltk/encodings.hpp"
#include "fltk/error.hpp"

namespace fltk {
namespace {

constexpr std::size_t kMaxCartesian = 4096;
constexpr std::uint64_t kMaxMapsPerObject = 1u << 20;

// Calls visit(subset) for every subset of `pool` with at most `max_size`
// members, smallest-index-first. Stops when visit returns false.
template <class Visit>
bool for_each_subset(std::span<const HfFun> pool, std::size_t max_size,
                     Visit&& visit) {
  std::vector<HfFun> chosen;
  auto rec = [&](auto&& self, std::size_t next) -> bool {
    if (!visit(std::span<const HfFun>(chosen))) return false;
    if (chosen.size() == max_size) return true;
    for (std::size_t i = next; i < pool.size(); ++i) {
      chosen.push_back(pool[i]);
      bool go_on = self(self, i + 1);
      chosen.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  return rec(rec, 0);
}

std::vector<HfFun> dedupe(std::span<const HfFun> xs) {
  std::vector<HfFun> out(xs.begin(), xs.end());
  canonical_sort(out);
  return out;
}

}  // namespace

HfFun dom(HfFun f) {
  std::vector<HfFun> args;
  for (const Entry& e : f.graph()) args.push_back(e.arg);
  return funset_of(args);
}

HfFun cod(HfFun f) {
  std::vector<HfFun> values;
  for (const Entry& e : f.graph()) values.push_back(e.value);
  return funset_of(values);
}

ArrowView arrow_view(HfFun f) { return ArrowView{f, dom(f), cod(f)}; }

bool is_arrow(HfFun f, HfFun a, HfFun b) { return dom(f) == a && cod(f) == b; }

HfFun compose(HfFun g, HfFun f) {
  if (cod(f) != dom(g)) {
    throw CompositionMismatch("cannot compose: cod(f) differs from dom(g)");
  }
  std::vector<Entry> entries;
  for (const Entry& e : f.graph()) entries.push_back({e.arg, *apply(g, e.value)});
  return make(entries);
}

HfFun cartesian_funset(HfFun f, HfFun g) {
  auto ff = f.field();
  auto gf = g.field();
  if (ff.size() * gf.size() > kMaxCartesian) {
    throw CapExceeded("cartesian funset would exceed " +
                      std::to_string(kMaxCartesian) + " members");
  }
  std::vector<HfFun> pairs;
  for (HfFun x : ff) {
    for (HfFun y : gf) pairs.push_back(pair(x, y));
  }
  return funset_of(pairs);
}

std::vector<HfFun> arrows_between(HfFun q, HfFun target) {
  auto src = q.field();
  auto dst = target.field();
  std::vector<HfFun> out;
  if (dst.size() > src.size()) return out;
  if (src.empty()) {
    out.push_back(null());
    return out;
  }
  if (dst.empty()) return out;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < src.size(); ++i) {
    count *= dst.size();
    if (count > kMaxMapsPerObject) throw CapExceeded("too many arrows to enumerate");
  }
  std::vector<std::size_t> digit(src.size(), 0);
  std::vector<Entry> entries(src.size());
  std::vector<bool> hit(dst.size());
  while (true) {
    std::fill(hit.begin(), hit.end(), false);
    for (std::size_t i = 0; i < src.size(); ++i) {
      entries[i] = {src[i], dst[digit[i]]};
      hit[digit[i]] = true;
    }
    if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
      out.push_back(make(entries));
    }
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == dst.size()) digit[i++] = 0;
    if (i == digit.size()) break;
  }
  return out;
}

namespace {

// Number of arrows u : Q -> P with p1 . u = q1 and p2 . u = q2, counted up
// to 2.
int count_factorizations(HfFun Q, HfFun P, HfFun p1, HfFun p2, HfFun q1,
                         HfFun q2) {
  auto qs = Q.field();
  auto ps = P.field();
  std::vector<std::vector<HfFun>> candidates(qs.size());
  for (std::size_t i = 0; i < qs.size(); ++i) {
    HfFun a = *apply(q1, qs[i]);
    HfFun b = *apply(q2, qs[i]);
    for (HfFun y : ps) {
      if (apply(p1, y) == a && apply(p2, y) == b) candidates[i].push_back(y);
    }
    if (candidates[i].empty()) return 0;
  }
  int found = 0;
  std::vector<std::size_t> digit(qs.size(), 0);
  std::vector<Entry> entries(qs.size());
  while (true) {
    for (std::size_t i = 0; i < qs.size(); ++i) {
      entries[i] = {qs[i], candidates[i][digit[i]]};
    }
    HfFun u = make(entries);
    if (cod(u) == P && compose(p1, u) == q1 && compose(p2, u) == q2) {
      if (++found == 2) return found;
    }
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == candidates[i].size()) digit[i++] = 0;
    if (i == digit.size()) break;
  }
  return found;
}

}  // namespace

bool is_product(HfFun P, HfFun p1, HfFun p2, HfFun A, HfFun B,
                std::span<const HfFun> test_universe,
                const ProductCheckOptions& options) {
  if (!is_funset(A) || !is_funset(B) || !is_funset(P)) return false;
  if (!is_arrow(p1, P, A) || !is_arrow(p2, P, B)) return false;
  const std::size_t a = A.field().size();
  const std::size_t b = B.field().size();
  const std::size_t bound =
      options.max_test_size.value_or(std::max({a * b, a, b}));
  std::vector<HfFun> pool = dedupe(test_universe);

  return for_each_subset(pool, bound, [&](std::span<const HfFun> members) {
    HfFun Q = funset_of(members);
    std::vector<HfFun> q1s = arrows_between(Q, A);
    if (q1s.empty()) return true;
    std::vector<HfFun> q2s = arrows_between(Q, B);
    for (HfFun q1 : q1s) {
      for (HfFun q2 : q2s) {
        if (count_factorizations(Q, P, p1, p2, q1, q2) != 1) return false;
      }
    }
    return true;
  });
}

std::vector<HfFun> product_universe(HfFun A, HfFun B) {
  std::vector<HfFun> out;
  auto add_all = [&](std::span<const HfFun> xs) {
    for (HfFun x : xs) {
      if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    }
  };
  add_all(A.field());
  add_all(B.field());
  add_all(cartesian_funset(A, B).field());
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::vector<HfFun> below(out[i].field().begin(), out[i].field().end());
    add_all(below);
  }
  canonical_sort(out);
  return out;
}

std::vector<ProductDiagram> find_products(HfFun A, HfFun B,
                                          std::span<const HfFun> universe,
                                          std::size_t max_apex,
                                          std::size_t limit) {
  std::vector<ProductDiagram> found;
  std::vector<HfFun> pool = dedupe(universe);
  for_each_subset(pool, max_apex, [&](std::span<const HfFun> members) {
    HfFun P = funset_of(members);
    std::vector<HfFun> p1s = arrows_between(P, A);
    if (p1s.empty()) return true;
    std::vector<HfFun> p2s = arrows_between(P, B);
    for (HfFun p1 : p1s) {
      for (HfFun p2 : p2s) {
        if (is_product(P, p1, p2, A, B, pool)) {
          found.push_back({P, p1, p2});
          if (found.size() >= limit) return false;
        }
      }
    }
    return true;
  });
  return found;
}

LawReport check_category_laws(std::span<const HfFun> arrows) {
  LawReport r;
  r.arrows = arrows.size();
  std::vector<HfFun> doms, cods;
  for (HfFun f : arrows) {
    doms.push_back(dom(f));
    cods.push_back(cod(f));
  }
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    HfFun f = arrows[i];
    r.identity_checks += 2;
    if (compose(f, doms[i]) != f) ++r.identity_failures;
    if (compose(cods[i], f) != f) ++r.identity_failures;
  }
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    for (std::size_t j = 0; j < arrows.size(); ++j) {
      if (cods[i] != doms[j]) continue;
      ++r.composable_pairs;
      HfFun gf = compose(arrows[j], arrows[i]);
      for (std::size_t k = 0; k < arrows.size(); ++k) {
        if (cods[j] != doms[k]) continue;
        ++r.composable_triples;
        HfFun left = compose(arrows[k], gf);
        HfFun right = compose(compose(arrows[k], arrows[j]), arrows[i]);
        if (left != right) ++r.associativity_failures;
      }
    }
  }
  return r;
}

}  // namespace fltk
