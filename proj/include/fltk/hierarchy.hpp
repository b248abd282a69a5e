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

// The finite stages of the function hierarchy and the fevel machinery:
// hfpot, functional histories, the fevel predicate (by history search and by
// recursion on earlier fevels), fevel-of, and the diagonal check.

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fltk/hf_kernel.hpp"

namespace fltk {

/// 1-based stage index. Stage 1 holds only the null function.
class StageIndex {
 public:
  explicit StageIndex(std::uint32_t index);
  std::uint32_t value() const { return index_; }
  friend auto operator<=>(StageIndex, StageIndex) = default;

 private:
  std::uint32_t index_;
};

/// Largest stage that may be materialized (stage 4 has 10^9 members).
inline constexpr std::uint32_t kMaxMaterializedStage = 3;
/// Largest alpha for which p(alpha) is computed exactly.
inline constexpr std::uint32_t kMaxCountAlpha = 4;

struct FevelReport {
  StageIndex stage;
  std::vector<HfFun> members;  // canonical order; everything with rank <= stage
  HfFun fevel;                 // the stage-th fevel: funset of the previous stage
};

/// All functions whose field lies in the previous stage, canonically sorted.
/// Stage 0 (the empty collection) is accepted as a convenience.
std::vector<HfFun> enumerate_stage(std::uint32_t stage);
std::vector<HfFun> enumerate_stage(StageIndex stage);

FevelReport fevel_report(StageIndex stage);

/// Every partial map from `domain` into `codomain`, in no particular order.
/// Throws CapExceeded above `max_count` maps.
std::vector<HfFun> partial_maps(std::span<const HfFun> domain,
                                std::span<const HfFun> codomain,
                                std::uint64_t max_count = 1u << 22);

using BigNat = boost::multiprecision::cpp_int;

/// p(1) = 1, p(a + 1) = (p(a) + 1)^p(a). CapExceeded for alpha > 4, whose
/// value has billions of digits.
BigNat count_p(std::uint32_t alpha);

StageIndex idx(HfFun f);

/// Funset of every x whose field is included in the field of some g in f's
/// field. CapExceeded when a member field is too large to enumerate over.
HfFun hfpot(HfFun f);

bool is_history(HfFun h);

/// Existential form: some functional history h has s = hfpot(h). Candidate
/// histories draw their field from the downward closure of s's field and
/// have at most |field(s)| + 1 members.
bool is_fevel(HfFun s);

/// Recursive form: s = hfpot(funset of the fevels in s's field).
bool is_fevel_recursive(HfFun s);

/// The least fevel whose field includes f's field.
HfFun fevel_of(HfFun f);

/// Whether some d in the universe is the naive diagonal function relative to
/// that universe: d(x) = x when x(x) != x, and d(x) undefined when x(x) = x.
bool diagonal_exists(std::span<const HfFun> universe);

}  // namespace fltk
