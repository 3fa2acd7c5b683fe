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

#include "lgx/types.hpp"

#include <algorithm>
#include <unordered_map>

#include "lgx/error.hpp"

namespace lgx {

ClassId argmax_class(const std::map<ClassId, double>& scores) {
  if (scores.empty()) throw ConfigError("argmax over an empty score map");
  // std::map iterates in ascending id, so a strict > keeps the lowest on ties.
  auto best = scores.begin();
  for (auto it = scores.begin(); it != scores.end(); ++it) {
    if (it->second > best->second) best = it;
  }
  return best->first;
}

void Instance::validate() const {
  if (objects.empty()) throw ParseError("instance '" + id + "' has no objects");
  if (!reference_scores.empty() && argmax_class(reference_scores) != predicted_class) {
    throw ParseError("instance '" + id + "': predicted_class is not the argmax of its scores");
  }
}

const Instance* Dataset::find(const std::string& id) const {
  for (const auto& inst : instances) {
    if (inst.id == id) return &inst;
  }
  return nullptr;
}

std::vector<ConceptSet> CompleteExplanation::concept_sets() const {
  std::vector<ConceptSet> out;
  out.reserve(mscxs.size());
  for (const auto& m : mscxs) out.push_back(m.concepts);
  return out;
}

bool CompleteExplanation::contains(const ConceptSet& s) const {
  return std::any_of(mscxs.begin(), mscxs.end(),
                     [&](const Mscx& m) { return m.concepts == s; });
}

bool is_antichain(const std::vector<ConceptSet>& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i != j && family[i].is_subset_of(family[j])) return false;
    }
  }
  return true;
}

bool ExplainedInstance::has_mscx(const ConceptSet& s) const {
  return std::find(mscxs.begin(), mscxs.end(), s) != mscxs.end();
}

std::vector<ExplainedInstance> join_explanations(const std::vector<Instance>& instances,
                                                 const std::vector<CompleteExplanation>& expl) {
  std::unordered_map<std::string, const CompleteExplanation*> by_id;
  for (const auto& e : expl) by_id[e.instance_id] = &e;
  std::vector<ExplainedInstance> out;
  out.reserve(instances.size());
  for (const auto& inst : instances) {
    ExplainedInstance ei{inst.id, inst.objects, inst.predicted_class, {}};
    auto it = by_id.find(inst.id);
    if (it != by_id.end() && it->second->class_id == inst.predicted_class) {
      ei.mscxs = it->second->concept_sets();
    }
    out.push_back(std::move(ei));
  }
  return out;
}

}  // namespace lgx
