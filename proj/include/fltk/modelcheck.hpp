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

// Finite-structure semantics for the function and set axiom systems.
//
// Structures are dense tables. Second-order quantifiers use standard
// semantics: they range over every partial self-map (or subset) of the
// domain. The evaluators only visit the maps that can satisfy an axiom's
// antecedent (for instance, maps whose field lies inside some element's
// field for FunComp); every other map makes the implication vacuously true,
// so the verdict equals that of the literal sweep.
//
// Defined predicates (funset, hfpot, functional history, fevel; pot, history,
// level) are expanded definitionally inside the structure. A funset-builder
// or hfpot term denotes only if the structure contains a funset with
// exactly the required field; an atomic formula with a non-denoting term is
// false.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fltk/hf_kernel.hpp"
#include "fltk/hf_sets.hpp"

namespace fltk {

enum class AxiomId {
  kFunExt,
  kFunOrd,
  kFunStage,
  kFunPri,
  kFunSpec,
  kFunStrat,
  kFunComp,
  kFunEndless,
  kFunInfinity,
  kFunSupercomp,
  kExt,
  kSep,
  kStrat,
  kEndless,
  kInf,
  kUnbounded,
  kChiRange,
};

inline constexpr std::array kAllAxioms = {
    AxiomId::kFunExt,     AxiomId::kFunOrd,      AxiomId::kFunStage,
    AxiomId::kFunPri,     AxiomId::kFunSpec,     AxiomId::kFunStrat,
    AxiomId::kFunComp,    AxiomId::kFunEndless,  AxiomId::kFunInfinity,
    AxiomId::kFunSupercomp, AxiomId::kExt,       AxiomId::kSep,
    AxiomId::kStrat,      AxiomId::kEndless,     AxiomId::kInf,
    AxiomId::kUnbounded,  AxiomId::kChiRange,
};

std::string_view axiom_name(AxiomId a);
std::optional<AxiomId> parse_axiom(std::string_view name);

enum class Theory { kFlt, kFst, kLt };

std::string_view theory_name(Theory t);
std::optional<Theory> parse_theory(std::string_view name);
/// FLT: FunExt, FunStrat, FunComp. FST: FunExt, FunOrd, FunStage, FunPri,
/// FunSpec. LT: Ext, Sep, Strat.
std::span<const AxiomId> theory_axioms(Theory t);

/// Largest domain any structure may have (fields are 64-bit masks).
inline constexpr std::size_t kMaxStructureSize = 64;
/// Largest function domain for which partial maps are row-encoded.
inline constexpr std::size_t kMaxSecondOrderSize = 12;

/// Designated truth objects for the characteristic-function reading.
struct ChiTokens {
  std::size_t zero;
  std::size_t one;
  bool operator==(const ChiTokens&) const = default;
};

/// A finite application structure: app(f, x) is an element or undefined.
class FinStructure {
 public:
  static constexpr std::int16_t kUndefined = -1;

  explicit FinStructure(std::size_t size);
  FinStructure(std::size_t size, std::vector<std::int16_t> table);

  std::size_t size() const { return size_; }
  std::optional<std::size_t> app(std::size_t f, std::size_t x) const;
  void set_app(std::size_t f, std::size_t x, std::optional<std::size_t> y);
  std::span<const std::int16_t> table() const { return table_; }

  const std::optional<ChiTokens>& tokens() const { return tokens_; }
  void set_tokens(ChiTokens t) { tokens_ = t; }

  friend bool operator==(const FinStructure&, const FinStructure&) = default;

 private:
  std::size_t size_;
  std::vector<std::int16_t> table_;  // row-major: table_[f * size + x]
  std::optional<ChiTokens> tokens_;
};

/// Two-sorted structure: functions with an application table, stages with
/// a before relation, and found_at between them.
class FstStructure {
 public:
  FstStructure(FinStructure functions, std::size_t stage_size);

  const FinStructure& functions() const { return functions_; }
  std::size_t fun_size() const { return functions_.size(); }
  std::size_t stage_size() const { return stage_size_; }

  bool before(std::size_t r, std::size_t s) const;
  void set_before(std::size_t r, std::size_t s, bool v);
  bool found_at(std::size_t f, std::size_t s) const;
  void set_found_at(std::size_t f, std::size_t s, bool v);

 private:
  FinStructure functions_;
  std::size_t stage_size_;
  std::vector<bool> before_;    // [r * stage_size + s]
  std::vector<bool> found_at_;  // [f * stage_size + s]
};

/// A finite membership structure: elem(x, y) reads x is a member of y.
class MembershipStructure {
 public:
  explicit MembershipStructure(std::size_t size);

  std::size_t size() const { return size_; }
  bool elem(std::size_t x, std::size_t y) const;
  void set_elem(std::size_t x, std::size_t y, bool v);

 private:
  std::size_t size_;
  std::vector<bool> elem_;  // [x * size + y]
};

/// Throws UserError when the axiom is not in the structure's language and
/// CapExceeded when a second-order sweep is too large.
bool eval_axiom(const FinStructure& s, AxiomId a);
bool eval_axiom(const FstStructure& s, AxiomId a);
bool eval_axiom(const MembershipStructure& s, AxiomId a);

/// Elements that are fevels (resp. levels) under the definitional expansion.
std::vector<std::size_t> fevels_in(const FinStructure& s);
std::vector<std::size_t> levels_in(const MembershipStructure& s);

bool isomorphic(const FinStructure& a, const FinStructure& b);
bool isomorphic(const MembershipStructure& a, const MembershipStructure& b);
bool isomorphic(const FstStructure& a, const FstStructure& b);

/// Application table over the given functions (indices follow the span).
FinStructure functions_as_structure(std::span<const HfFun> universe);
/// Membership table over the given sets.
MembershipStructure sets_as_structure(std::span<const HfSet> universe);

FinStructure hierarchy_as_structure(std::uint32_t stage);
/// Stages 1..stage in order, before = <, and f found at every stage t with
/// idx(f) <= t.
FstStructure hierarchy_as_fst(std::uint32_t stage);

/// app(y, x) = one when x is a member of y, otherwise zero.
FinStructure chi_translate(const MembershipStructure& m, std::size_t zero,
                           std::size_t one);

struct SweepReport {
  Theory theory = Theory::kFlt;
  std::size_t size = 0;
  std::uint64_t candidates = 0;
  std::uint64_t models = 0;
  std::size_t iso_classes = 0;
  std::map<AxiomId, std::uint64_t> per_axiom_failures;
};

struct FltSweep {
  SweepReport report;
  std::vector<FinStructure> models;           // ascending table code
  std::vector<std::size_t> class_representatives;  // indices into models
};

/// Every application table of size n satisfying FunExt + FunStrat + FunComp,
/// grouped by isomorphism. CapExceeded for n > 3. `threads` = 0 picks the
/// hardware concurrency; results do not depend on it.
FltSweep enumerate_flt_models(std::size_t n, unsigned threads = 0);

/// Sweeps for the other theories: LT over membership relations (n <= 4) and
/// FST over function tables and stage structures with n functions and n
/// stages (n <= 2).
SweepReport sweep_lt(std::size_t n, unsigned threads = 0);
SweepReport sweep_fst(std::size_t n, unsigned threads = 0);
SweepReport sweep(Theory t, std::size_t n, unsigned threads = 0);

}  // namespace fltk
