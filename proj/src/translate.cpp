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

#include "fltk/translate.hpp"

#include <mutex>
#include <unordered_map>

namespace fltk {
namespace {

template <class K, class V>
class Memo {
 public:
  std::optional<V> find(K k) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(k);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void put(K k, V v) {
    std::lock_guard<std::mutex> lock(mu_);
    map_.emplace(k, v);
  }

 private:
  mutable std::mutex mu_;
  std::unordered_map<K, V> map_;
};

Memo<HfFun, HfSet>& i_memo() {
  static Memo<HfFun, HfSet> m;
  return m;
}

Memo<HfSet, HfFun>& j_memo() {
  static Memo<HfSet, HfFun> m;
  return m;
}

}  // namespace

HfSet to_set(HfFun f) {
  if (auto hit = i_memo().find(f)) return *hit;
  std::vector<HfSet> pairs;
  for (const Entry& e : f.graph()) {
    pairs.push_back(kpair(to_set(e.arg), to_set(e.value)));
  }
  HfSet result = set_of(pairs);
  i_memo().put(f, result);
  return result;
}

HfFun to_fun(HfSet a) {
  if (auto hit = j_memo().find(a)) return *hit;
  std::vector<HfFun> members;
  for (HfSet x : a.elements()) members.push_back(to_fun(x));
  HfFun result = funset_of(members);
  j_memo().put(a, result);
  return result;
}

bool is_hereditary_setfunction(HfSet a) {
  if (!is_setfunction(a)) return false;
  for (HfSet p : a.elements()) {
    auto [x, y] = *kpair_decode(p);
    if (!is_hereditary_setfunction(x) || !is_hereditary_setfunction(y)) {
      return false;
    }
  }
  return true;
}

bool is_hereditary_funset(HfFun f) {
  if (!is_funset(f)) return false;
  for (HfFun x : f.field()) {
    if (!is_hereditary_funset(x)) return false;
  }
  return true;
}

}  // namespace fltk
