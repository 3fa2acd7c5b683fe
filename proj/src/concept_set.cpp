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

#include "lgx/concept_set.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace lgx {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

}  // namespace

ConceptSet::ConceptSet(std::initializer_list<ConceptId> ids)
    : ConceptSet(from_ids(std::span<const ConceptId>(ids.begin(), ids.size()))) {}

ConceptSet ConceptSet::from_ids(std::span<const ConceptId> ids) {
  std::vector<ConceptId> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return from_sorted_unique(std::move(sorted));
}

ConceptSet ConceptSet::from_sorted_unique(std::vector<ConceptId> ids) {
  ConceptSet out;
  if (!ids.empty() && ids.back() >= kInlineBits) {
    out.sparse_ = std::move(ids);
    return out;
  }
  for (ConceptId id : ids) out.bits_[id / 64] |= std::uint64_t{1} << (id % 64);
  return out;
}

bool ConceptSet::empty() const noexcept {
  return sparse_.empty() && bits_[0] == 0 && bits_[1] == 0;
}

std::size_t ConceptSet::size() const noexcept {
  if (!sparse_.empty()) return sparse_.size();
  return static_cast<std::size_t>(std::popcount(bits_[0]) + std::popcount(bits_[1]));
}

bool ConceptSet::contains(ConceptId id) const noexcept {
  if (!sparse_.empty()) return std::binary_search(sparse_.begin(), sparse_.end(), id);
  if (id >= kInlineBits) return false;
  return (bits_[id / 64] >> (id % 64)) & 1U;
}

bool ConceptSet::is_subset_of(const ConceptSet& other) const noexcept {
  if (is_inline() && other.is_inline()) {
    return (bits_[0] & ~other.bits_[0]) == 0 && (bits_[1] & ~other.bits_[1]) == 0;
  }
  if (size() > other.size()) return false;
  const auto a = ids();
  const auto b = other.ids();
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool ConceptSet::is_proper_subset_of(const ConceptSet& other) const noexcept {
  return size() < other.size() && is_subset_of(other);
}

ConceptSet ConceptSet::with(ConceptId id) const {
  if (is_inline() && id < kInlineBits) {
    ConceptSet out = *this;
    out.bits_[id / 64] |= std::uint64_t{1} << (id % 64);
    return out;
  }
  auto v = ids();
  auto it = std::lower_bound(v.begin(), v.end(), id);
  if (it == v.end() || *it != id) v.insert(it, id);
  return from_sorted_unique(std::move(v));
}

ConceptSet ConceptSet::without(ConceptId id) const {
  if (is_inline()) {
    ConceptSet out = *this;
    if (id < kInlineBits) out.bits_[id / 64] &= ~(std::uint64_t{1} << (id % 64));
    return out;
  }
  auto v = ids();
  v.erase(std::remove(v.begin(), v.end(), id), v.end());
  return from_sorted_unique(std::move(v));
}

ConceptSet ConceptSet::united(const ConceptSet& other) const {
  if (is_inline() && other.is_inline()) {
    ConceptSet out;
    out.bits_ = {bits_[0] | other.bits_[0], bits_[1] | other.bits_[1]};
    return out;
  }
  const auto a = ids();
  const auto b = other.ids();
  std::vector<ConceptId> u;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return from_sorted_unique(std::move(u));
}

ConceptSet ConceptSet::minus(const ConceptSet& other) const {
  if (is_inline() && other.is_inline()) {
    ConceptSet out;
    out.bits_ = {bits_[0] & ~other.bits_[0], bits_[1] & ~other.bits_[1]};
    return out;
  }
  const auto a = ids();
  const auto b = other.ids();
  std::vector<ConceptId> d;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d));
  return from_sorted_unique(std::move(d));
}

std::vector<ConceptId> ConceptSet::ids() const {
  if (!sparse_.empty()) return sparse_;
  std::vector<ConceptId> out;
  out.reserve(size());
  for_each([&](ConceptId id) { out.push_back(id); });
  return out;
}

ConceptId ConceptSet::max_id() const noexcept {
  if (!sparse_.empty()) return sparse_.back();
  if (bits_[1] != 0) return static_cast<ConceptId>(127 - std::countl_zero(bits_[1]));
  return static_cast<ConceptId>(63 - std::countl_zero(bits_[0]));
}

std::size_t ConceptSet::hash() const noexcept {
  if (!sparse_.empty()) {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (ConceptId id : sparse_) h = mix(h ^ (id + 0x9e3779b97f4a7c15ULL + (h << 6)));
    return static_cast<std::size_t>(h);
  }
  return static_cast<std::size_t>(mix(bits_[0] ^ mix(bits_[1] + 0x9e3779b97f4a7c15ULL)));
}

std::string ConceptSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each([&](ConceptId id) {
    if (!first) os << ',';
    os << id;
    first = false;
  });
  os << '}';
  return os.str();
}

std::strong_ordering operator<=>(const ConceptSet& a, const ConceptSet& b) noexcept {
  if (a.is_inline() && b.is_inline()) {
    // The lowest id in the symmetric difference decides: the set holding it
    // is smaller unless the other set has nothing left above it.
    for (std::size_t w = 0; w < 2; ++w) {
      const std::uint64_t diff = a.bits_[w] ^ b.bits_[w];
      if (diff == 0) continue;
      const int bit = std::countr_zero(diff);
      const std::uint64_t at = std::uint64_t{1} << bit;
      const bool in_a = (a.bits_[w] & at) != 0;
      const ConceptSet& other = in_a ? b : a;
      // Members of `other` strictly above the differing position.
      std::uint64_t above = other.bits_[w] & ~((at << 1) - 1);
      if (w == 0) above |= other.bits_[1];
      const bool holder_smaller = above != 0;
      if (in_a) return holder_smaller ? std::strong_ordering::less : std::strong_ordering::greater;
      return holder_smaller ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }
  const auto x = a.ids();
  const auto y = b.ids();
  return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
}

}  // namespace lgx
