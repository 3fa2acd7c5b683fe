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
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lgx/synthetic.hpp"
#include "lgx/types.hpp"

namespace lgx::io {

using json = nlohmann::ordered_json;

// Vocabulary and class files are plain JSON arrays of names.
Vocabulary read_vocabulary(const std::filesystem::path& path);
void write_vocabulary(const std::filesystem::path& path, const Vocabulary& vocab);
ClassLabels read_classes(const std::filesystem::path& path);
void write_classes(const std::filesystem::path& path, const ClassLabels& classes);

// Dataset lines:
//   {"id": str, "objects": [str,...], "predicted_class": str,
//    "true_class": str|null, "scores": {class: float}|null}
json instance_to_json(const Instance& inst, const Vocabulary& vocab, const ClassLabels& classes);
Instance instance_from_json(const json& j, const Vocabulary& vocab, const ClassLabels& classes);
std::vector<Instance> read_instances(const std::filesystem::path& path, const Vocabulary& vocab,
                                     const ClassLabels& classes);
void write_dataset(const std::filesystem::path& path, const Dataset& ds);

/// Reads a dataset file. Missing vocabulary/class files are inferred from the
/// dataset itself (sorted unique names).
Dataset read_dataset(const std::filesystem::path& dataset,
                     const std::filesystem::path& vocab_path = {},
                     const std::filesystem::path& classes_path = {});

// Explanation lines:
//   {"id": str, "class": str, "mscxs": [{"concepts": [str,...], "score_ratio": float}]}
json explanation_to_json(const CompleteExplanation& e, const Vocabulary& vocab,
                         const ClassLabels& classes);
CompleteExplanation explanation_from_json(const json& j, const Vocabulary& vocab,
                                          const ClassLabels& classes);
std::vector<CompleteExplanation> read_explanations(const std::filesystem::path& path,
                                                   const Vocabulary& vocab,
                                                   const ClassLabels& classes);
void write_explanations(const std::filesystem::path& path,
                        const std::vector<CompleteExplanation>& expl, const Vocabulary& vocab,
                        const ClassLabels& classes);

// {"class": str, "support_size": int,
//  "clauses": [{"concepts": [str], "d_total_pct": float, "d_marginal_pct": float, ...}]}
json covering_to_json(const CoveringExplanation& c, const Vocabulary& vocab,
                      const ClassLabels& classes);
CoveringExplanation covering_from_json(const json& j, const Vocabulary& vocab,
                                       const ClassLabels& classes);

// {"rules": [{"if": [str], "then": str, "d_pct": float}], "default": str}
json list_to_json(const ExplanationList& l, const Vocabulary& vocab, const ClassLabels& classes);
ExplanationList list_from_json(const json& j, const Vocabulary& vocab, const ClassLabels& classes);

// {"weights": {class: {concept: float}}, "monotone": bool, "seed": int}
json model_to_json(const SyntheticModel& m, const Vocabulary& vocab, const ClassLabels& classes);
SyntheticModel model_from_json(const json& j, const Vocabulary& vocab, const ClassLabels& classes);

enum class PctDisplay { kMarginal, kTotal };

/// "(bed)_26% ∨ (wall ∧ bed)_25%". Clauses below `min_pct` (in the chosen
/// display) are left out. Returns an empty string for an empty formula.
std::string format_formula(const CoveringExplanation& c, const Vocabulary& vocab,
                           PctDisplay display = PctDisplay::kMarginal, double min_pct = 0.0);
std::string format_list(const ExplanationList& l, const Vocabulary& vocab,
                        const ClassLabels& classes);

json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const json& j);
/// One parsed object per non-blank line; errors carry the line number.
std::vector<json> read_json_lines(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace lgx::io
