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

#include "lgx/vocabulary.hpp"

#include "lgx/error.hpp"

namespace lgx {

Vocabulary::Vocabulary(std::vector<std::string> names) : names_(std::move(names)) {
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<ConceptId>(i)).second) {
      throw VocabularyError("duplicate concept name '" + names_[i] + "'");
    }
  }
}

ConceptId Vocabulary::id(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw VocabularyError("unknown concept '" + std::string(name) + "'");
  return it->second;
}

const std::string& Vocabulary::name(ConceptId id) const {
  if (id >= names_.size()) {
    throw VocabularyError("concept id " + std::to_string(id) + " outside vocabulary of size " +
                          std::to_string(names_.size()));
  }
  return names_[id];
}

bool Vocabulary::contains(std::string_view name) const {
  return index_.count(std::string(name)) != 0;
}

ConceptSet Vocabulary::canonicalize(std::span<const ConceptId> raw) const {
  for (ConceptId id : raw) {
    if (id >= names_.size()) {
      throw VocabularyError("concept id " + std::to_string(id) + " outside vocabulary of size " +
                            std::to_string(names_.size()));
    }
  }
  return ConceptSet::from_ids(raw);
}

ConceptSet Vocabulary::encode(std::span<const std::string> names) const {
  std::vector<ConceptId> ids;
  ids.reserve(names.size());
  for (const auto& n : names) ids.push_back(id(n));
  return ConceptSet::from_ids(ids);
}

std::vector<std::string> Vocabulary::decode(const ConceptSet& s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  s.for_each([&](ConceptId id) { out.push_back(name(id)); });
  return out;
}

ClassLabels::ClassLabels(std::vector<std::string> names) : names_(std::move(names)) {
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<ClassId>(i)).second) {
      throw ClassError("duplicate class label '" + names_[i] + "'");
    }
  }
}

ClassId ClassLabels::id(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw ClassError("unknown class '" + std::string(name) + "'");
  return it->second;
}

const std::string& ClassLabels::name(ClassId id) const {
  if (id >= names_.size()) throw ClassError("class id " + std::to_string(id) + " out of range");
  return names_[id];
}

bool ClassLabels::contains(std::string_view name) const {
  return index_.count(std::string(name)) != 0;
}

}  // namespace lgx
