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

#include <filesystem>
#include <unordered_map>

#include "lgx/oracle.hpp"
#include "lgx/vocabulary.hpp"

namespace lgx {

/// Exact replay of externally computed scores.
///
/// File: JSON lines {"id": str, "class": str, "objects": [str,...], "score": float}.
/// A query without an entry raises MissingKeyError; there is no interpolation.
class TableOracle final : public Oracle {
 public:
  static TableOracle load(const std::filesystem::path& path, const Vocabulary& vocab,
                          const ClassLabels& classes);

  /// Throws ParseError on a duplicate key.
  void add(const ScoreQuery& key, double score);
  double score(const ScoreQuery& q) override;
  std::size_t size() const noexcept { return table_.size(); }

 private:
  struct KeyHash {
    std::size_t operator()(const ScoreQuery& q) const noexcept;
  };
  std::unordered_map<ScoreQuery, double, KeyHash> table_;
};

}  // namespace lgx
