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

#include "lgx/cached_oracle.hpp"

#include <functional>
#include <mutex>

#include "lgx/error.hpp"

namespace lgx {

std::size_t CachedOracle::KeyHash::operator()(const ScoreQuery& q) const noexcept {
  std::size_t h = std::hash<std::string>{}(q.instance_id);
  h ^= q.subset.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= std::hash<ClassId>{}(q.class_id) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

CachedOracle::CachedOracle(std::shared_ptr<Oracle> inner, std::optional<std::size_t> capacity)
    : inner_(std::move(inner)), capacity_(capacity) {
  if (!inner_) throw ConfigError("cached oracle needs an inner oracle");
  if (capacity_ && *capacity_ == 0) throw ConfigError("cache capacity must be positive");
}

std::optional<double> CachedOracle::lookup(const ScoreQuery& q) {
  if (!capacity_) {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(q);
    if (it == entries_.end()) return std::nullopt;
    ++cache_hits_;
    return it->second.value;
  }
  std::unique_lock lock(mutex_);
  auto it = entries_.find(q);
  if (it == entries_.end()) return std::nullopt;
  lru_.splice(lru_.begin(), lru_, it->second.lru);
  ++cache_hits_;
  return it->second.value;
}

void CachedOracle::insert(const ScoreQuery& q, double value) {
  std::unique_lock lock(mutex_);
  ++query_count_;
  if (entries_.count(q) != 0) return;
  std::list<ScoreQuery>::iterator pos{};
  if (capacity_) {
    if (entries_.size() >= *capacity_) {
      entries_.erase(lru_.back());
      lru_.pop_back();
    }
    lru_.push_front(q);
    pos = lru_.begin();
  }
  entries_.emplace(q, Entry{value, pos});
}

double CachedOracle::score(const ScoreQuery& q) {
  if (auto hit = lookup(q)) return *hit;
  const double v = inner_->score(q);
  insert(q, v);
  return v;
}

std::vector<double> CachedOracle::score_batch(std::span<const ScoreQuery> qs) {
  std::vector<double> out(qs.size());
  std::vector<std::size_t> miss_slots;
  std::vector<ScoreQuery> misses;
  std::unordered_map<ScoreQuery, std::size_t, KeyHash> miss_index;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (auto it = miss_index.find(qs[i]); it != miss_index.end()) {
      // Repeated inside the batch: served from the pending inner answer.
      miss_slots.push_back(it->second);
      continue;
    }
    if (auto hit = lookup(qs[i])) {
      out[i] = *hit;
      miss_slots.push_back(SIZE_MAX);
      continue;
    }
    miss_index.emplace(qs[i], misses.size());
    miss_slots.push_back(misses.size());
    misses.push_back(qs[i]);
  }
  if (misses.empty()) return out;
  const auto values = inner_->score_batch(misses);
  if (values.size() != misses.size()) throw OracleError("inner oracle returned a short batch");
  for (std::size_t j = 0; j < misses.size(); ++j) insert(misses[j], values[j]);
  std::size_t repeats = 0;
  std::vector<bool> first_use(misses.size(), true);
  for (std::size_t i = 0; i < qs.size(); ++i) {
    const std::size_t slot = miss_slots[i];
    if (slot == SIZE_MAX) continue;
    out[i] = values[slot];
    if (!first_use[slot]) ++repeats;
    first_use[slot] = false;
  }
  cache_hits_ += repeats;
  return out;
}

OracleStats CachedOracle::stats() const {
  return OracleStats{query_count_.load(), cache_hits_.load()};
}

std::size_t CachedOracle::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

}  // namespace lgx
