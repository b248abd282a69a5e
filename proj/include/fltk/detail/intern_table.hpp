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

#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "fltk/error.hpp"

namespace fltk::detail {

/// Default for FLTK_MAX_NODES.
inline constexpr std::size_t kDefaultMaxNodes = 10'000'000;

/// Reads FLTK_MAX_NODES; malformed or zero values fall back to the default.
inline std::size_t max_nodes_from_env() {
  const char* raw = std::getenv("FLTK_MAX_NODES");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxNodes;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) return kDefaultMaxNodes;
  return static_cast<std::size_t>(v);
}

struct IdVectorHash {
  std::size_t operator()(const std::vector<std::uint32_t>& key) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint32_t v : key) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h ^ (key.size() * 0x9e3779b97f4a7c15ULL));
  }
};

/// Hash-consing table. Keys are flattened id vectors that identify a node
/// extensionally; nodes live in fixed-size chunks so that readers never
/// observe a relocation. Insertion is serialized by a mutex; `at` is
/// lock-free and may run concurrently with `intern`.
template <class Node>
class InternTable {
 public:
  static constexpr std::size_t kChunkBits = 14;
  static constexpr std::size_t kChunkSize = std::size_t{1} << kChunkBits;
  static constexpr std::size_t kMaxChunks = std::size_t{1} << 16;

  explicit InternTable(std::string kind)
      : kind_(std::move(kind)), limit_(max_nodes_from_env()) {
    for (auto& c : chunks_) c.store(nullptr, std::memory_order_relaxed);
  }

  InternTable(const InternTable&) = delete;
  InternTable& operator=(const InternTable&) = delete;

  ~InternTable() {
    for (auto& c : chunks_) delete[] c.load(std::memory_order_relaxed);
  }

  /// Returns the id for `key`, calling `build()` to create the node if the
  /// key is new. `build` runs under the table lock and must not intern into
  /// this same table.
  template <class Build>
  std::uint32_t intern(std::vector<std::uint32_t> key, Build&& build) {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    std::size_t id = size_.load(std::memory_order_relaxed);
    if (id >= limit_ || id >= kMaxChunks * kChunkSize) {
      throw NodeLimitExceeded(kind_ + " interning table exceeded " +
                              std::to_string(limit_) +
                              " nodes (raise FLTK_MAX_NODES)");
    }
    std::size_t chunk = id >> kChunkBits;
    Node* block = chunks_[chunk].load(std::memory_order_relaxed);
    if (block == nullptr) {
      block = new Node[kChunkSize];
      chunks_[chunk].store(block, std::memory_order_release);
    }
    block[id & (kChunkSize - 1)] = build();
    index_.emplace(std::move(key), static_cast<std::uint32_t>(id));
    size_.store(id + 1, std::memory_order_release);
    return static_cast<std::uint32_t>(id);
  }

  const Node& at(std::uint32_t id) const {
    Node* block = chunks_[id >> kChunkBits].load(std::memory_order_acquire);
    return block[id & (kChunkSize - 1)];
  }

  std::size_t size() const { return size_.load(std::memory_order_acquire); }

  std::size_t limit() const {
    std::lock_guard<std::mutex> lock(mu_);
    return limit_;
  }

  void set_limit(std::size_t limit) {
    std::lock_guard<std::mutex> lock(mu_);
    limit_ = limit;
  }

 private:
  std::string kind_;
  mutable std::mutex mu_;
  std::size_t limit_;
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, IdVectorHash>
      index_;
  std::array<std::atomic<Node*>, kMaxChunks> chunks_;
  std::atomic<std::size_t> size_{0};
};

}  // namespace fltk::detail
