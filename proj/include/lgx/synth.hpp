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
#include <cstdint>

#include "lgx/synthetic.hpp"
#include "lgx/types.hpp"

namespace lgx::synth {

struct GeneratorConfig {
  std::size_t num_classes = 5;
  std::size_t vocab_size = 40;
  std::size_t instances_per_class = 50;
  std::size_t min_objects = 4;
  std::size_t max_objects = 8;
  /// Probability that a non-dominant weight is zeroed.
  double weight_sparsity = 0.5;
  /// Rate of the truncated exponential on [0, 1] for background weights.
  double weight_rate = 6.0;
  /// Concepts per class with near-equal weight around 1.
  std::size_t dominant_concepts = 3;
  /// Partition the vocabulary into per-class blocks; instances and weights
  /// of a class stay inside its block.
  bool disjoint_vocab = false;
  std::uint64_t seed = 0;

  /// Throws ConfigError when infeasible (e.g. max_objects > vocab_size).
  void validate() const;
};

struct SyntheticDataset {
  Dataset dataset;
  SyntheticModel model;
};

/// Random monotone additive model plus a dataset drawn from it. The
/// generating class is recorded as true_class; predicted_class and the
/// reference scores always come from the model. Deterministic in the seed.
SyntheticDataset generate(const GeneratorConfig& config);

struct PlantedConfig {
  std::size_t num_classes = 3;
  std::size_t instances_per_class = 2;
  std::size_t filler_concepts = 4;
  std::size_t max_fillers = 2;
  /// Chain the classes through shared masks so that only one rule order is
  /// error-free. Needs num_classes >= 2.
  bool nested = false;
  std::uint64_t seed = 0;

  void validate() const;
};

struct PlantedDataset {
  Dataset dataset;
  SyntheticModel model;
  /// A zero-error explanation list over the instances' MSCXs.
  ExplanationList plant;
};

/// Dataset whose complete explanations admit a perfect explanation list.
///
/// Flat: class c carries a marker m_c (weight 1) plus low-weight fillers, so
/// P_min = {{m_c}}. Nested: every class shares a base concept b (weight 1)
/// and class c carries markers m_c and m_{c-1} (weight 0.04 each), so
/// P_min = {{b, m_c}, {b, m_{c-1}}} and the mask {b, m_c} is shared by
/// classes c and c+1. Concept ids are shuffled by the seed.
PlantedDataset planted_list_dataset(const PlantedConfig& config);

}  // namespace lgx::synth
