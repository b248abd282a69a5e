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

// Value-level interpretations between functions and sets.
//
//   I: to_set(f) = { kpair(I(x), I(y)) : (x, y) in graph(f) }
//   J: to_fun(a) = funset_of({ J(x) : x in a })
//
// Both are defined by well-founded recursion and memoized.

#include "fltk/hf_kernel.hpp"
#include "fltk/hf_sets.hpp"

namespace fltk {

enum class TranslationDirection { kI, kJ };

HfSet to_set(HfFun f);
HfFun to_fun(HfSet a);

/// A setfunction whose pairs have hereditary-setfunction components.
bool is_hereditary_setfunction(HfSet a);
/// A funset whose field members are all hereditary funsets.
bool is_hereditary_funset(HfFun f);

}  // namespace fltk
