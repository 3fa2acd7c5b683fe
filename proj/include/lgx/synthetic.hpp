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
#include <string>
#include <unordered_map>
#include <vector>

#include "lgx/oracle.hpp"
#include "lgx/types.hpp"

namespace lgx {

/// Additive scorer: f_c(x_S) = sum of weights[c][o] over o in S.
///
/// With `monotone` set every weight must be non-negative, which makes the
/// score monotone under inclusion.
class SyntheticModel {
 public:
  SyntheticModel() = default;
  SyntheticModel(std::vector<std::vector<double>> weights, bool monotone, std::uint64_t seed);

  std::size_t num_classes() const noexcept { return weights_.size(); }
  std::size_t num_concepts() const noexcept { return weights_.empty() ? 0 : weights_[0].size(); }
  bool monotone() const noexcept { return monotone_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const std::vector<std::vector<double>>& weights() const noexcept { return weights_; }
  double weight(ClassId c, ConceptId o) const;

  /// Summed in extended precision, rounded once.
  double score(ClassId c, const ConceptSet& subset) const;

  friend bool operator==(const SyntheticModel&, const SyntheticModel&) = default;

 private:
  std::vector<std::vector<double>> weights_;
  bool monotone_ = true;
  std::uint64_t seed_ = 0;
};

/// Argmax of the additive scores; ties to the lowest class id.
ClassId synthetic_predict(const SyntheticModel& model, const ConceptSet& objects);

/// Reference scores of every class on the full object set.
std::map<ClassId, double> synthetic_scores(const SyntheticModel& model, const ConceptSet& objects);

/// Oracle backed by a SyntheticModel. When constructed with instances, queries
/// are checked against them (unknown id, subset outside O(x)).
class SyntheticOracle final : public Oracle {
 public:
  explicit SyntheticOracle(SyntheticModel model);
  SyntheticOracle(SyntheticModel model, const std::vector<Instance>& instances);

  double score(const ScoreQuery& q) override;
  const SyntheticModel& model() const noexcept { return model_; }

 private:
  SyntheticModel model_;
  bool check_instances_ = false;
  std::unordered_map<std::string, ConceptSet> objects_;
};

}  // namespace lgx
