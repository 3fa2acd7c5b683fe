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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lgx/concept_set.hpp"

namespace lgx {

/// f_class evaluated on the instance with only `subset` kept.
struct ScoreQuery {
  std::string instance_id;
  ClassId class_id = 0;
  ConceptSet subset;

  friend bool operator==(const ScoreQuery&, const ScoreQuery&) = default;
};

struct OracleStats {
  /// Calls forwarded to the wrapped backend.
  std::uint64_t query_count = 0;
  std::uint64_t cache_hits = 0;
};

/// Black-box scoring interface. Implementations must be safe to call from
/// several threads at once.
class Oracle {
 public:
  virtual ~Oracle() = default;

  virtual double score(const ScoreQuery& q) = 0;

  /// Element-wise equal to score(); any failure fails the whole batch.
  virtual std::vector<double> score_batch(std::span<const ScoreQuery> qs);
};

}  // namespace lgx
