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
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lgx/types.hpp"

namespace lgx {

/// R: mask -> support instances (sorted ids) whose complete explanation holds it.
using CoverageMap = std::map<ConceptSet, std::vector<std::string>>;

/// M: mask -> (instance id, predicted class) of every instance whose complete
/// explanation for its predicted class holds it.
using MaskIndex = std::map<ConceptSet, std::vector<std::pair<std::string, ClassId>>>;

enum class MatchMode {
  /// Clause fires when its antecedent is a subset of O(x): the logical
  /// reading of the monotone DNF over presence indicators.
  kPresence,
  /// Clause fires when its antecedent is one of the instance's MSCXs: the
  /// semantics the formulas are built under.
  kMscx,
};

const char* to_string(MatchMode mode) noexcept;

CoverageMap build_coverage_map(std::span<const CompleteExplanation> explanations);

/// Greedy set cover over R restricted to `support`. Picks the mask covering
/// the most uncovered instances (ties: larger |R(S)|, then lexicographically
/// smaller mask) until nothing is uncovered or no mask adds coverage.
/// Percentages are relative to |support|.
CoveringExplanation greedy_cover(std::span<const std::string> support, const CoverageMap& r,
                                 ClassId cls = 0);

/// Builds the covering explanation of `cls` from its support instances.
/// Instances with an empty complete explanation are excluded from I_y and
/// listed in `unexplained`.
CoveringExplanation build_covering(ClassId cls, std::span<const CompleteExplanation> explanations);

/// Minimum-cardinality family of masks covering every coverable support
/// instance, by enumerating families in increasing size. Refuses (ConfigError)
/// beyond `mask_limit` distinct masks.
std::vector<ConceptSet> exact_min_cover(std::span<const std::string> support, const CoverageMap& r,
                                        std::size_t mask_limit = 20);

struct CoverageResult {
  /// Covered fraction in [0, 1]; 0 for an empty instance list.
  double fraction = 0.0;
  /// curve[i]: fraction covered by the first i+1 clauses.
  std::vector<double> curve;
};

/// In kMscx mode the instance's own MSCX list is consulted, so callers pass
/// instances of the formula's class.
CoverageResult eval_dnf_coverage(const CoveringExplanation& phi,
                                 std::span<const ExplainedInstance> instances, MatchMode mode);

MaskIndex build_mask_index(std::span<const ExplainedInstance> dataset);

/// Ordered rule extraction. Each round scores every remaining mask S by the
/// uncovered instances it reaches: err = |T_S| - max_c |N_{S,c}|, gain = |T_S|.
/// The mask minimizing (err, -gain), ties to the lexicographically smaller
/// mask, becomes (S; majority class, ties to lowest id) and leaves the index.
/// The default rule predicts the dataset-wide modal predicted class.
ExplanationList explanation_list(std::span<const ExplainedInstance> dataset, const MaskIndex& index);
ExplanationList explanation_list(std::span<const ExplainedInstance> dataset);

ClassId classify_with_list(const ExplanationList& list, const ExplainedInstance& inst,
                           MatchMode mode);

/// Fraction of instances whose list prediction equals predicted_class; 0 on
/// an empty input.
double list_accuracy(const ExplanationList& list, std::span<const ExplainedInstance> instances,
                     MatchMode mode);

}  // namespace lgx
