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

#include "lgx/synth.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

#include "lgx/error.hpp"
#include "rng.hpp"

namespace lgx::synth {

namespace {

std::string padded(const char* prefix, std::size_t i, std::size_t count) {
  const int width = static_cast<int>(std::to_string(count == 0 ? 0 : count - 1).size());
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%0*zu", prefix, width, i);
  return buf;
}

std::vector<std::string> class_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t c = 0; c < n; ++c) out.push_back(padded("class", c, n));
  return out;
}

}  // namespace

void GeneratorConfig::validate() const {
  if (num_classes == 0) throw ConfigError("need at least one class");
  if (instances_per_class == 0) throw ConfigError("need at least one instance per class");
  if (min_objects == 0 || min_objects > max_objects) {
    throw ConfigError("object count range must satisfy 1 <= min <= max");
  }
  if (max_objects > vocab_size) throw ConfigError("max_objects exceeds the vocabulary size");
  if (!(weight_sparsity >= 0.0 && weight_sparsity < 1.0)) {
    throw ConfigError("weight_sparsity must lie in [0, 1)");
  }
  if (!(weight_rate > 0.0)) throw ConfigError("weight_rate must be positive");
  if (disjoint_vocab) {
    const std::size_t block = vocab_size / num_classes;
    if (block < max_objects) {
      throw ConfigError("disjoint vocabulary blocks are smaller than max_objects");
    }
    if (dominant_concepts > block) throw ConfigError("more dominant concepts than block size");
  } else if (dominant_concepts > vocab_size) {
    throw ConfigError("more dominant concepts than vocabulary entries");
  }
}

SyntheticDataset generate(const GeneratorConfig& config) {
  config.validate();
  detail::Rng rng(config.seed);
  const std::size_t v = config.vocab_size;
  const std::size_t c_count = config.num_classes;

  // Concepts each class may use.
  std::vector<std::vector<ConceptId>> pool(c_count);
  for (std::size_t c = 0; c < c_count; ++c) {
    if (config.disjoint_vocab) {
      const std::size_t block = v / c_count;
      for (std::size_t o = c * block; o < (c + 1) * block; ++o) pool[c].push_back(static_cast<ConceptId>(o));
    } else {
      for (std::size_t o = 0; o < v; ++o) pool[c].push_back(static_cast<ConceptId>(o));
    }
  }

  std::vector<std::vector<double>> weights(c_count, std::vector<double>(v, 0.0));
  for (std::size_t c = 0; c < c_count; ++c) {
    for (ConceptId o : pool[c]) {
      const double w = rng.truncated_exponential(config.weight_rate);
      weights[c][o] = rng.uniform() < config.weight_sparsity ? 0.0 : w;
    }
    std::vector<ConceptId> order = pool[c];
    rng.shuffle(order);
    for (std::size_t i = 0; i < config.dominant_concepts; ++i) {
      weights[c][order[i]] = 1.0 + 0.1 * rng.uniform();
    }
    const bool any = std::any_of(pool[c].begin(), pool[c].end(),
                                 [&](ConceptId o) { return weights[c][o] > 0.0; });
    if (!any) weights[c][order.front()] = 1.0;
  }
  SyntheticModel model(weights, true, config.seed);

  std::vector<std::string> concept_names;
  for (std::size_t o = 0; o < v; ++o) concept_names.push_back(padded("obj", o, v));
  SyntheticDataset out{Dataset{Vocabulary(concept_names), ClassLabels(class_names(c_count)), {}},
                       model};

  const std::size_t total = c_count * config.instances_per_class;
  std::size_t serial = 0;
  for (std::size_t c = 0; c < c_count; ++c) {
    for (std::size_t i = 0; i < config.instances_per_class; ++i, ++serial) {
      const auto k = static_cast<std::size_t>(rng.between(config.min_objects, config.max_objects));
      std::vector<double> bias(pool[c].size());
      std::vector<double> signal(pool[c].size());
      for (std::size_t j = 0; j < pool[c].size(); ++j) {
        signal[j] = weights[c][pool[c][j]];
        bias[j] = signal[j] + 0.05;
      }
      std::vector<ConceptId> picked;
      // The first object carries class signal, the rest lean towards it.
      long first = rng.weighted_index(signal);
      picked.push_back(pool[c][static_cast<std::size_t>(first)]);
      bias[static_cast<std::size_t>(first)] = 0.0;
      while (picked.size() < k) {
        const long j = rng.weighted_index(bias);
        picked.push_back(pool[c][static_cast<std::size_t>(j)]);
        bias[static_cast<std::size_t>(j)] = 0.0;
      }
      Instance inst;
      inst.id = padded("x", serial, total);
      inst.objects = ConceptSet::from_ids(picked);
      inst.true_class = static_cast<ClassId>(c);
      inst.predicted_class = synthetic_predict(model, inst.objects);
      inst.reference_scores = synthetic_scores(model, inst.objects);
      out.dataset.instances.push_back(std::move(inst));
    }
  }
  return out;
}

void PlantedConfig::validate() const {
  if (num_classes == 0) throw ConfigError("need at least one class");
  if (instances_per_class == 0) throw ConfigError("need at least one instance per class");
  if (max_fillers > filler_concepts) throw ConfigError("max_fillers exceeds the filler pool");
  if (nested && num_classes < 2) throw ConfigError("nested plants need at least two classes");
}

PlantedDataset planted_list_dataset(const PlantedConfig& config) {
  config.validate();
  detail::Rng rng(config.seed);
  const std::size_t c_count = config.num_classes;

  // Logical concepts before shuffling ids: markers, optional base, fillers.
  std::vector<std::string> logical;
  const std::size_t markers = config.nested ? c_count + 1 : c_count;
  for (std::size_t m = 0; m < markers; ++m) logical.push_back(padded("m", m, markers));
  const std::size_t base = logical.size();
  if (config.nested) logical.push_back("base");
  const std::size_t first_filler = logical.size();
  for (std::size_t f = 0; f < config.filler_concepts; ++f) {
    logical.push_back(padded("f", f, config.filler_concepts));
  }
  const std::size_t v = logical.size();

  std::vector<ConceptId> id_of(v);
  for (std::size_t i = 0; i < v; ++i) id_of[i] = static_cast<ConceptId>(i);
  rng.shuffle(id_of);
  std::vector<std::string> names(v);
  for (std::size_t i = 0; i < v; ++i) names[id_of[i]] = logical[i];

  // In nested mode class c uses markers c and c+1 (i.e. m_{c-1}, m_c with
  // m_{-1} stored at logical index 0).
  auto marker_of = [&](std::size_t c) { return config.nested ? id_of[c + 1] : id_of[c]; };
  auto second_marker_of = [&](std::size_t c) { return id_of[c]; };

  // Filler budget per class: 0.04 total in flat mode, 0.01 in nested mode.
  const double filler_budget = config.nested ? 0.01 : 0.04;
  const double per_filler = config.max_fillers == 0 ? 0.0 : filler_budget / static_cast<double>(config.max_fillers);
  std::vector<std::vector<double>> weights(c_count, std::vector<double>(v, 0.0));
  for (std::size_t c = 0; c < c_count; ++c) {
    if (config.nested) {
      weights[c][id_of[base]] = 1.0;
      weights[c][marker_of(c)] = 0.04;
      weights[c][second_marker_of(c)] = 0.04;
    } else {
      weights[c][marker_of(c)] = 1.0;
    }
    for (std::size_t f = 0; f < config.filler_concepts; ++f) {
      weights[c][id_of[first_filler + f]] = per_filler * rng.uniform();
    }
  }
  SyntheticModel model(weights, true, config.seed);

  PlantedDataset out{Dataset{Vocabulary(names), ClassLabels(class_names(c_count)), {}}, model, {}};
  const std::size_t total = c_count * config.instances_per_class;
  std::size_t serial = 0;
  for (std::size_t c = 0; c < c_count; ++c) {
    for (std::size_t i = 0; i < config.instances_per_class; ++i, ++serial) {
      std::vector<ConceptId> objs{marker_of(c)};
      if (config.nested) {
        objs.push_back(id_of[base]);
        objs.push_back(second_marker_of(c));
      }
      std::vector<ConceptId> fillers;
      for (std::size_t f = 0; f < config.filler_concepts; ++f) fillers.push_back(id_of[first_filler + f]);
      rng.shuffle(fillers);
      const auto n_fill = static_cast<std::size_t>(rng.between(0, config.max_fillers));
      objs.insert(objs.end(), fillers.begin(), fillers.begin() + static_cast<long>(n_fill));

      Instance inst;
      inst.id = padded("p", serial, total);
      inst.objects = ConceptSet::from_ids(objs);
      inst.true_class = static_cast<ClassId>(c);
      inst.predicted_class = synthetic_predict(model, inst.objects);
      inst.reference_scores = synthetic_scores(model, inst.objects);
      out.dataset.instances.push_back(std::move(inst));
    }
  }

  // Flat: (m_0; 0) ≺ ... ≺ (m_{C-2}; C-2) ≺ (∅; C-1).
  // Nested: ({b, m_{C-1}}; C-1) ≺ ... ≺ ({b, m_1}; 1) ≺ (∅; 0).
  ExplanationList& plant = out.plant;
  if (config.nested) {
    for (std::size_t c = c_count; c-- > 1;) {
      plant.rules.push_back(ExplanationRule{ConceptSet{id_of[base], marker_of(c)},
                                            static_cast<ClassId>(c), 0, 0.0});
    }
    plant.default_class = 0;
  } else {
    for (std::size_t c = 0; c + 1 < c_count; ++c) {
      plant.rules.push_back(ExplanationRule{ConceptSet{marker_of(c)}, static_cast<ClassId>(c), 0, 0.0});
    }
    plant.default_class = static_cast<ClassId>(c_count - 1);
  }
  // Coverage annotations of the plant over its own dataset.
  std::vector<char> covered(total, 0);
  for (auto& rule : plant.rules) {
    for (std::size_t i = 0; i < total; ++i) {
      if (!covered[i] && rule.antecedent.is_subset_of(out.dataset.instances[i].objects)) {
        covered[i] = 1;
        ++rule.covered_marginal;
      }
    }
    rule.d_pct = 100.0 * static_cast<double>(rule.covered_marginal) / static_cast<double>(total);
  }
  plant.default_covered = static_cast<std::size_t>(std::count(covered.begin(), covered.end(), 0));
  plant.default_d_pct = 100.0 * static_cast<double>(plant.default_covered) / static_cast<double>(total);
  return out;
}

}  // namespace lgx::synth
