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

// Function-theoretic encodings: curried application, relations, ordered
// pairs, and ordinals.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "fltk/hf_kernel.hpp"

namespace fltk {

class Arity {
 public:
  explicit Arity(std::uint32_t n);
  std::uint32_t value() const { return n_; }

 private:
  std::uint32_t n_;
};

/// ((f(x1))(x2))...(xn); undefined as soon as any step is.
std::optional<HfFun> apply_n(HfFun f, std::span<const HfFun> args);

/// Some g in f's field has apply_n(g, args) = z.
bool rel_holds(HfFun f, std::span<const HfFun> args, HfFun z);

/// The function a -> (b -> b), undefined elsewhere.
HfFun pair(HfFun a, HfFun b);
std::optional<std::pair<HfFun, HfFun>> pair_decode(HfFun p);
/// NotAPair unless p has pair shape.
HfFun fst(HfFun p);
HfFun snd(HfFun p);

inline constexpr std::uint32_t kMaxOrdinal = 12;

/// ord(n) maps ord(k) to ord(k - 1) (truncated at 0) for every k < n.
/// CapExceeded above kMaxOrdinal.
HfFun ord_encode(std::uint32_t n);
std::optional<std::uint32_t> ord_decode(HfFun f);

}  // namespace fltk
