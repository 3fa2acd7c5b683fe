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

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lgx {

using ConceptId = std::uint32_t;
using ClassId = std::uint32_t;

/// A canonical set of concept ids.
///
/// Sets whose members are all below `kInlineBits` live in a two-word bitset;
/// anything larger falls back to a sorted id vector. The representation is a
/// pure function of the contents, so structural equality is set equality and
/// the hash respects set semantics.
///
/// Ordering is lexicographic over the ascending member sequence, e.g.
/// {1} < {1,2} < {2}. This is the tie-break order used throughout the
/// search and the global explanation algorithms.
class ConceptSet {
 public:
  static constexpr ConceptId kInlineBits = 128;

  ConceptSet() = default;
  ConceptSet(std::initializer_list<ConceptId> ids);

  /// Sorts and deduplicates. No vocabulary check; see Vocabulary::canonicalize.
  static ConceptSet from_ids(std::span<const ConceptId> ids);

  bool empty() const noexcept;
  std::size_t size() const noexcept;
  bool contains(ConceptId id) const noexcept;
  /// True iff every member of *this is a member of `other`.
  bool is_subset_of(const ConceptSet& other) const noexcept;
  bool is_proper_subset_of(const ConceptSet& other) const noexcept;

  ConceptSet with(ConceptId id) const;
  ConceptSet without(ConceptId id) const;
  ConceptSet united(const ConceptSet& other) const;
  ConceptSet minus(const ConceptSet& other) const;

  /// Members in ascending order.
  std::vector<ConceptId> ids() const;
  /// Largest member; undefined on the empty set.
  ConceptId max_id() const noexcept;

  template <typename F>
  void for_each(F&& f) const {
    if (!sparse_.empty()) {
      for (ConceptId id : sparse_) f(id);
      return;
    }
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t word = bits_[w];
      while (word != 0) {
        const int bit = __builtin_ctzll(word);
        f(static_cast<ConceptId>(w * 64 + static_cast<std::size_t>(bit)));
        word &= word - 1;
      }
    }
  }

  std::size_t hash() const noexcept;
  std::string to_string() const;

  friend bool operator==(const ConceptSet& a, const ConceptSet& b) noexcept {
    return a.bits_ == b.bits_ && a.sparse_ == b.sparse_;
  }
  friend std::strong_ordering operator<=>(const ConceptSet& a,
                                          const ConceptSet& b) noexcept;

 private:
  bool is_inline() const noexcept { return sparse_.empty(); }
  static ConceptSet from_sorted_unique(std::vector<ConceptId> ids);

  std::array<std::uint64_t, 2> bits_{};
  // Non-empty iff some member is >= kInlineBits; then bits_ is all zero.
  std::vector<ConceptId> sparse_;
};

/// Free-function form of ConceptSet::is_subset_of.
inline bool is_subset(const ConceptSet& a, const ConceptSet& b) noexcept {
  return a.is_subset_of(b);
}

struct ConceptSetHash {
  std::size_t operator()(const ConceptSet& s) const noexcept { return s.hash(); }
};

}  // namespace lgx

template <>
struct std::hash<lgx::ConceptSet> {
  std::size_t operator()(const lgx::ConceptSet& s) const noexcept {
    return s.hash();
  }
};
