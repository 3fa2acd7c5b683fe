// Copyright 2026 The lgx Authors
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

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <list>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "lgx/oracle.hpp"

namespace lgx {

/// Memoizing wrapper keyed on (instance id, class id, canonical subset).
///
/// Unbounded by default; with a capacity the least recently used entry is
/// evicted. Reads take a shared lock when unbounded, inserts are exclusive.
class CachedOracle final : public Oracle {
 public:
  explicit CachedOracle(std::shared_ptr<Oracle> inner,
                        std::optional<std::size_t> capacity = std::nullopt);

  double score(const ScoreQuery& q) override;
  std::vector<double> score_batch(std::span<const ScoreQuery> qs) override;

  OracleStats stats() const;
  std::size_t size() const;

 private:
  struct KeyHash {
    std::size_t operator()(const ScoreQuery& q) const noexcept;
  };
  struct Entry {
    double value;
    std::list<ScoreQuery>::iterator lru;
  };

  std::optional<double> lookup(const ScoreQuery& q);
  void insert(const ScoreQuery& q, double value);

  std::shared_ptr<Oracle> inner_;
  std::optional<std::size_t> capacity_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<ScoreQuery, Entry, KeyHash> entries_;
  std::list<ScoreQuery> lru_;  // front = most recent; only maintained with a capacity
  std::atomic<std::uint64_t> query_count_{0};
  std::atomic<std::uint64_t> cache_hits_{0};
};

}  // namespace lgx
