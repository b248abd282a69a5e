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

#include <doctest.h>

#include "fltk/encodings.hpp"
#include "fltk/error.hpp"
#include "fltk/hierarchy.hpp"

using namespace fltk;

namespace {
const HfFun z = null();
const HfFun id0 = make({{z, z}});
}  // namespace

TEST_CASE("arity") {
  CHECK(Arity(3).value() == 3);
  CHECK_THROWS_AS(Arity(0), UserError);
}

TEST_CASE("curried application") {
  CHECK(apply_n(id0, {}) == id0);
  std::vector<HfFun> args{z, z};
  CHECK(apply_n(make({{z, id0}}), args) == z);
  std::vector<HfFun> one{id0};
  CHECK_FALSE(apply_n(z, one).has_value());
  std::vector<HfFun> f3 = enumerate_stage(3);
  for (HfFun f : f3)
    for (HfFun x : f3)
      for (HfFun y : f3) {
        std::vector<HfFun> xy{x, y};
        std::optional<HfFun> step = apply(f, x);
        std::optional<HfFun> expected = step ? apply(*step, y) : std::nullopt;
        CHECK(apply_n(f, xy) == expected);
      }
}

TEST_CASE("relations") {
  std::vector<HfFun> x0{z};
  std::vector<HfFun> x1{id0};
  CHECK_FALSE(rel_holds(z, x0, z));
  CHECK(rel_holds(funset_of({id0}), x0, z));
  CHECK_FALSE(rel_holds(funset_of({id0}), x1, z));
}

TEST_CASE("pairs") {
  CHECK(pair(z, z) == make({{z, id0}}));
  std::vector<HfFun> f2 = enumerate_stage(2);
  for (HfFun a : f2)
    for (HfFun b : f2) {
      CHECK(fst(pair(a, b)) == a);
      CHECK(snd(pair(a, b)) == b);
      for (HfFun c : f2)
        for (HfFun d : f2) CHECK((pair(a, b) == pair(c, d)) == (a == c && b == d));
    }
  std::size_t pairs_in_f3 = 0;
  for (HfFun f : enumerate_stage(3)) {
    if (pair_decode(f)) {
      ++pairs_in_f3;
      CHECK(pair(fst(f), snd(f)) == f);
    } else {
      CHECK_THROWS_AS(fst(f), NotAPair);
      CHECK_THROWS_AS(snd(f), NotAPair);
    }
  }
  // Single-entry graphs whose value is a singleton funset: [0->{0}] and
  // [{0}->{0}].
  CHECK(pairs_in_f3 == 2);
}

TEST_CASE("ordinals") {
  CHECK(ord_encode(0) == z);
  CHECK(ord_encode(1) == id0);
  CHECK(ord_encode(2) == make({{z, z}, {id0, z}}));
  for (std::uint32_t m = 0; m <= 8; ++m) {
    CHECK(ord_decode(ord_encode(m)) == m);
    for (std::uint32_t n = 0; n <= 8; ++n) {
      CHECK((m < n) == fun_in(ord_encode(m), ord_encode(n)));
      CHECK((m == n) == (ord_encode(m) == ord_encode(n)));
    }
  }
  CHECK_THROWS_AS(ord_encode(kMaxOrdinal + 1), CapExceeded);
  std::size_t ordinals_in_f3 = 0;
  for (HfFun f : enumerate_stage(3)) {
    auto n = ord_decode(f);
    if (n) {
      ++ordinals_in_f3;
      CHECK(ord_encode(*n) == f);
    }
  }
  // 0, [0->0] and [0->0,[0->0]->0].
  CHECK(ordinals_in_f3 == 3);
}
