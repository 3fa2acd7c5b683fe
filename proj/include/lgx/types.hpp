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
#include <optional>
#include <string>
#include <vector>

#include "lgx/concept_set.hpp"
#include "lgx/vocabulary.hpp"

namespace lgx {

/// An annotated example: the concepts present in it and the model's decision.
struct Instance {
  std::string id;
  ConceptSet objects;
  ClassId predicted_class = 0;
  std::optional<ClassId> true_class;
  /// f_y(x) per class; empty when the dataset carries no scores.
  std::map<ClassId, double> reference_scores;

  /// Throws ParseError when objects is empty or predicted_class disagrees
  /// with the argmax of reference_scores.
  void validate() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Argmax over a score map; ties go to the lowest class id.
ClassId argmax_class(const std::map<ClassId, double>& scores);

/// Vocabulary, labels and instances of one dataset file.
struct Dataset {
  Vocabulary vocab;
  ClassLabels classes;
  std::vector<Instance> instances;

  const Instance* find(const std::string& id) const;
};

/// One minimally sufficient concept explanation.
struct Mscx {
  ConceptSet concepts;
  std::string instance_id;
  ClassId class_id = 0;
  /// f_y(x_S) / f_y(x).
  double score_ratio = 0.0;

  friend bool operator==(const Mscx&, const Mscx&) = default;
};

enum class SearchStatus {
  kFound,
  /// Search ran to its depth cap without collecting a sufficient set.
  kNoSufficientSet,
};

/// All MSCXs of one (instance, class); an antichain under inclusion, kept in
/// ascending lexicographic order of the concept sets.
struct CompleteExplanation {
  std::string instance_id;
  ClassId class_id = 0;
  std::vector<Mscx> mscxs;
  SearchStatus status = SearchStatus::kFound;

  std::vector<ConceptSet> concept_sets() const;
  bool contains(const ConceptSet& s) const;
  bool empty() const noexcept { return mscxs.empty(); }

  friend bool operator==(const CompleteExplanation&, const CompleteExplanation&) = default;
};

/// True when no member is a subset of another member.
bool is_antichain(const std::vector<ConceptSet>& family);

struct MdnfClause {
  ConceptSet concepts;
  /// |R(S)|: support instances whose complete explanation contains S.
  std::size_t covered_total = 0;
  /// Instances still uncovered when the clause was selected.
  std::size_t covered_marginal = 0;
  double d_total_pct = 0.0;
  double d_marginal_pct = 0.0;

  friend bool operator==(const MdnfClause&, const MdnfClause&) = default;
};

/// Monotone DNF for one class. Clause order is the greedy selection order;
/// the formula itself is an unordered disjunction.
struct CoveringExplanation {
  ClassId class_id = 0;
  std::vector<MdnfClause> clauses;
  /// |I_y|, explained support instances only.
  std::size_t support_size = 0;
  /// Support instances with an empty complete explanation, reported apart.
  std::vector<std::string> unexplained;

  friend bool operator==(const CoveringExplanation&, const CoveringExplanation&) = default;
};

struct ExplanationRule {
  ConceptSet antecedent;
  ClassId class_id = 0;
  std::size_t covered_marginal = 0;
  double d_pct = 0.0;

  friend bool operator==(const ExplanationRule&, const ExplanationRule&) = default;
};

/// Ordered rules, first match wins; the default rule (empty antecedent) is
/// held apart and always fires last.
struct ExplanationList {
  std::vector<ExplanationRule> rules;
  ClassId default_class = 0;
  std::size_t default_covered = 0;
  double default_d_pct = 0.0;

  /// Number of rules including the default.
  std::size_t size() const noexcept { return rules.size() + 1; }
  ExplanationRule default_rule() const {
    return ExplanationRule{ConceptSet{}, default_class, default_covered, default_d_pct};
  }

  friend bool operator==(const ExplanationList&, const ExplanationList&) = default;
};

/// What the global explainers need about one instance: its objects, the
/// model's decision and the complete explanation for that decision.
struct ExplainedInstance {
  std::string id;
  ConceptSet objects;
  ClassId predicted_class = 0;
  std::vector<ConceptSet> mscxs;

  bool has_mscx(const ConceptSet& s) const;
};

/// Pairs instances with their explanations by id. Instances without an
/// explanation entry get an empty mscx list.
std::vector<ExplainedInstance> join_explanations(const std::vector<Instance>& instances,
                                                 const std::vector<CompleteExplanation>& expl);

}  // namespace lgx
