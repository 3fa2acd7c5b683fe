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

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lgx/concept_set.hpp"

namespace lgx {

/// Dense name <-> id table for concepts (ids 0..V-1, names unique).
class Vocabulary {
 public:
  Vocabulary() = default;
  explicit Vocabulary(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  ConceptId id(std::string_view name) const;
  const std::string& name(ConceptId id) const;
  bool contains(std::string_view name) const;

  /// Validates ids against the vocabulary, then sorts and deduplicates.
  ConceptSet canonicalize(std::span<const ConceptId> raw) const;
  ConceptSet encode(std::span<const std::string> names) const;
  std::vector<std::string> decode(const ConceptSet& s) const;

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, ConceptId> index_;
};

/// Dense name <-> id table for class labels (ids 0..C-1). String labels only
/// exist at the I/O boundary; everything inside works with ClassId.
class ClassLabels {
 public:
  ClassLabels() = default;
  explicit ClassLabels(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  ClassId id(std::string_view name) const;
  const std::string& name(ClassId id) const;
  bool contains(std::string_view name) const;

  friend bool operator==(const ClassLabels& a, const ClassLabels& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, ClassId> index_;
};

}  // namespace lgx
