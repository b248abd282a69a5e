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

#include "fltk/encodings.hpp"

#include <array>
#include <mutex>
#include <string>
#include <vector>

#include "fltk/error.hpp"

namespace fltk {

Arity::Arity(std::uint32_t n) : n_(n) {
  if (n == 0) throw UserError("arity must be at least 1");
}

std::optional<HfFun> apply_n(HfFun f, std::span<const HfFun> args) {
  std::optional<HfFun> cur = f;
  for (HfFun x : args) {
    cur = apply(*cur, x);
    if (!cur) return std::nullopt;
  }
  return cur;
}

bool rel_holds(HfFun f, std::span<const HfFun> args, HfFun z) {
  for (HfFun g : f.field()) {
    if (apply_n(g, args) == z) return true;
  }
  return false;
}

HfFun pair(HfFun a, HfFun b) { return make({{a, funset_of({b})}}); }

std::optional<std::pair<HfFun, HfFun>> pair_decode(HfFun p) {
  auto g = p.graph();
  if (g.size() != 1) return std::nullopt;
  HfFun inner = g[0].value;
  auto ig = inner.graph();
  if (ig.size() != 1 || ig[0].arg != ig[0].value) return std::nullopt;
  return std::pair{g[0].arg, ig[0].arg};
}

HfFun fst(HfFun p) {
  auto d = pair_decode(p);
  if (!d) throw NotAPair("fst: argument is not an encoded pair");
  return d->first;
}

HfFun snd(HfFun p) {
  auto d = pair_decode(p);
  if (!d) throw NotAPair("snd: argument is not an encoded pair");
  return d->second;
}

HfFun ord_encode(std::uint32_t n) {
  if (n > kMaxOrdinal) {
    throw CapExceeded("ordinal " + std::to_string(n) + " exceeds the cap of " +
                      std::to_string(kMaxOrdinal));
  }
  std::vector<HfFun> ords{null()};
  for (std::uint32_t m = 1; m <= n; ++m) {
    std::vector<Entry> entries;
    for (std::uint32_t k = 0; k < m; ++k) {
      entries.push_back({ords[k], ords[k == 0 ? 0 : k - 1]});
    }
    ords.push_back(make(entries));
  }
  return ords[n];
}

std::optional<std::uint32_t> ord_decode(HfFun f) {
  std::size_t n = f.graph().size();
  if (n > kMaxOrdinal) return std::nullopt;
  auto m = static_cast<std::uint32_t>(n);
  if (ord_encode(m) == f) return m;
  return std::nullopt;
}

}  // namespace fltk
