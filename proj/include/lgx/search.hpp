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

#include <cstddef>
#include <optional>

#include "lgx/oracle.hpp"
#include "lgx/types.hpp"

namespace lgx {

struct SearchConfig {
  /// Sufficiency ratio: S is sufficient iff f_y(x_S) / f_y(x) >= tau_p.
  double tau_p = 0.95;
  std::size_t beam_width = 3;
  /// Non-sufficient extensions of one frontier set allowed into the next
  /// candidate pool; nullopt means all of them.
  std::optional<std::size_t> max_successors = 5;
  /// Deepest subset size evaluated; nullopt runs until the frontier empties.
  std::optional<std::size_t> max_depth;
  /// Largest |O(x)| the exhaustive enumerator accepts (2^k queries).
  std::size_t exact_k_limit = 15;

  /// Throws ConfigError.
  void validate() const;
};

struct SearchStats {
  /// Distinct oracle queries of the run, the reference query included.
  std::size_t oracle_queries = 0;
  /// |S_suf| before redundancy removal.
  std::size_t sufficient_collected = 0;
  /// Largest subset size evaluated.
  std::size_t depth_reached = 0;
  /// d*, the largest returned MSCX.
  std::size_t max_mscx_size = 0;
};

struct BeamResult {
  CompleteExplanation explanation;
  SearchStats stats;
};

/// f_y(x) queried on the full object set. Throws SearchError unless > 0.
double reference_score(Oracle& oracle, const Instance& inst, ClassId cls);

/// score(S) / score(O(x)) >= tau_p. Throws SearchError for an empty S, an S
/// outside O(x), or a non-positive reference score.
bool is_sufficient(Oracle& oracle, const Instance& inst, ClassId cls, const ConceptSet& s,
                   double tau_p);

/// Beam search adding one object at a time from the empty set.
///
/// Every extension that passes the sufficiency test is collected and never
/// expanded further; the rest compete (at most `max_successors` per parent,
/// best score first) for the `beam_width` frontier slots of the next depth.
/// The search continues until the frontier empties or `max_depth` is hit.
/// Collected sets with a collected proper subset are dropped, the rest are
/// shrunk to 1-minimality by backward elimination, and the result is
/// reduced to an antichain. Ties rank by descending score, then ascending
/// lexicographic concept ids.
BeamResult beam_add_traced(Oracle& oracle, const Instance& inst, ClassId cls,
                           const SearchConfig& config);
CompleteExplanation beam_add(Oracle& oracle, const Instance& inst, ClassId cls,
                             const SearchConfig& config);

/// Greedy backward elimination in ascending concept id, repeated until a
/// full pass removes nothing. The result is sufficient and 1-minimal.
ConceptSet minimize_set(Oracle& oracle, const Instance& inst, ClassId cls, const ConceptSet& s,
                        double tau_p);

/// All inclusion-minimal sufficient subsets by enumerating every non-empty
/// subset of O(x) in one batch. Refuses when |O(x)| > k_limit.
CompleteExplanation exact_complete_explanation(Oracle& oracle, const Instance& inst, ClassId cls,
                                               double tau_p, std::size_t k_limit = 15);

/// True when removing any single member of `s` breaks sufficiency.
bool is_one_minimal(Oracle& oracle, const Instance& inst, ClassId cls, const ConceptSet& s,
                    double tau_p);

}  // namespace lgx
