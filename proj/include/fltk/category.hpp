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

// Functions as arrows: dom and cod are the funsets of arguments and values,
// composition is functional composition, and the funsets are the objects
// and their identities. Because a function's range is its codomain, an
// arrow Q -> A is a total map from Q onto A.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fltk/hf_kernel.hpp"

namespace fltk {

struct ArrowView {
  HfFun arrow;
  HfFun domain;
  HfFun codomain;
};

HfFun dom(HfFun f);
HfFun cod(HfFun f);
ArrowView arrow_view(HfFun f);

/// f is an arrow from a to b.
bool is_arrow(HfFun f, HfFun a, HfFun b);

/// g after f. Throws CompositionMismatch unless cod(f) = dom(g).
HfFun compose(HfFun g, HfFun f);

/// Funset of encoded pairs pair(x, y) for x in f's field and y in g's field.
HfFun cartesian_funset(HfFun f, HfFun g);

/// Every arrow from q onto `target` (total on q's field, range = target).
std::vector<HfFun> arrows_between(HfFun q, HfFun target);

struct ProductCheckOptions {
  /// Largest test object; defaults to max(|A| * |B|, |A|, |B|).
  std::optional<std::size_t> max_test_size;
};

/// Bounded universal-property check. False unless A, B, P are funsets and
/// p1 : P -> A, p2 : P -> B are arrows; otherwise true iff every test
/// diagram A <- Q -> B, with Q a funset over `test_universe` of bounded size,
/// factors through P by exactly one arrow u : Q -> P.
bool is_product(HfFun P, HfFun p1, HfFun p2, HfFun A, HfFun B,
                std::span<const HfFun> test_universe,
                const ProductCheckOptions& options = {});

struct ProductDiagram {
  HfFun P;
  HfFun p1;
  HfFun p2;
};

/// Downward closure of the fields of A, B and A x B; the default universe
/// for product searches.
std::vector<HfFun> product_universe(HfFun A, HfFun B);

/// Every product diagram whose apex is a funset over `universe` with at most
/// `max_apex` members. `limit` stops the search after that many finds.
std::vector<ProductDiagram> find_products(HfFun A, HfFun B,
                                          std::span<const HfFun> universe,
                                          std::size_t max_apex,
                                          std::size_t limit = SIZE_MAX);

struct LawReport {
  std::size_t arrows = 0;
  std::size_t identity_checks = 0;
  std::size_t identity_failures = 0;
  std::size_t composable_pairs = 0;
  std::size_t composable_triples = 0;
  std::size_t associativity_failures = 0;
  bool ok() const { return identity_failures == 0 && associativity_failures == 0; }
};

/// Identity and associativity laws over all arrows and composites drawn
/// from `arrows`.
LawReport check_category_laws(std::span<const HfFun> arrows);

}  // namespace fltk
