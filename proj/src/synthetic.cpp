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

#include "lgx/synthetic.hpp"

#include "lgx/error.hpp"

namespace lgx {

SyntheticModel::SyntheticModel(std::vector<std::vector<double>> weights, bool monotone,
                               std::uint64_t seed)
    : weights_(std::move(weights)), monotone_(monotone), seed_(seed) {
  if (weights_.empty()) throw ConfigError("synthetic model needs at least one class");
  const std::size_t v = weights_.front().size();
  for (const auto& row : weights_) {
    if (row.size() != v) throw ConfigError("synthetic model weight rows differ in length");
    if (monotone_) {
      for (double w : row) {
        if (!(w >= 0.0)) throw ConfigError("monotone synthetic model has a negative weight");
      }
    }
  }
}

double SyntheticModel::weight(ClassId c, ConceptId o) const {
  if (c >= weights_.size()) throw ClassError("class id " + std::to_string(c) + " out of range");
  if (o >= weights_[c].size()) {
    throw VocabularyError("concept id " + std::to_string(o) + " outside model vocabulary");
  }
  return weights_[c][o];
}

double SyntheticModel::score(ClassId c, const ConceptSet& subset) const {
  if (c >= weights_.size()) throw ClassError("class id " + std::to_string(c) + " out of range");
  const auto& row = weights_[c];
  long double sum = 0.0L;
  subset.for_each([&](ConceptId o) {
    if (o >= row.size()) {
      throw VocabularyError("concept id " + std::to_string(o) + " outside model vocabulary");
    }
    sum += static_cast<long double>(row[o]);
  });
  return static_cast<double>(sum);
}

ClassId synthetic_predict(const SyntheticModel& model, const ConceptSet& objects) {
  ClassId best = 0;
  double best_score = model.score(0, objects);
  for (ClassId c = 1; c < model.num_classes(); ++c) {
    const double s = model.score(c, objects);
    if (s > best_score) {
      best = c;
      best_score = s;
    }
  }
  return best;
}

std::map<ClassId, double> synthetic_scores(const SyntheticModel& model, const ConceptSet& objects) {
  std::map<ClassId, double> out;
  for (ClassId c = 0; c < model.num_classes(); ++c) out.emplace(c, model.score(c, objects));
  return out;
}

SyntheticOracle::SyntheticOracle(SyntheticModel model) : model_(std::move(model)) {}

SyntheticOracle::SyntheticOracle(SyntheticModel model, const std::vector<Instance>& instances)
    : model_(std::move(model)), check_instances_(true) {
  for (const auto& inst : instances) objects_.emplace(inst.id, inst.objects);
}

double SyntheticOracle::score(const ScoreQuery& q) {
  if (q.class_id >= model_.num_classes()) {
    throw OracleError("unknown class id " + std::to_string(q.class_id));
  }
  if (check_instances_) {
    auto it = objects_.find(q.instance_id);
    if (it == objects_.end()) throw OracleError("unknown instance '" + q.instance_id + "'");
    if (!q.subset.is_subset_of(it->second)) {
      throw OracleError("query subset is not contained in the objects of '" + q.instance_id + "'");
    }
  }
  return model_.score(q.class_id, q.subset);
}

}  // namespace lgx
