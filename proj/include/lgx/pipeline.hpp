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
#include <string>
#include <vector>

#include "lgx/oracle.hpp"
#include "lgx/search.hpp"
#include "lgx/types.hpp"

namespace lgx {

enum class ExplainMethod { kBeam, kExact };

struct ExplainOptions {
  SearchConfig search;
  ExplainMethod method = ExplainMethod::kBeam;
  /// Worker threads; 0 picks the hardware concurrency.
  std::size_t workers = 1;
};

struct ExplainRun {
  /// In dataset order, one per instance, for its predicted class.
  std::vector<CompleteExplanation> explanations;
  /// Per-instance statistics (beam method only; zeros for exact).
  std::vector<SearchStats> stats;
};

/// Explains every instance for its predicted class on a worker pool. Output
/// order does not depend on the number of workers. The first failure is
/// rethrown after all workers stop.
ExplainRun explain_dataset(Oracle& oracle, const std::vector<Instance>& instances,
                           const ExplainOptions& options);

/// Deterministic support/validation partition from a hash of the instance id,
/// so reordering a dataset does not change the split.
bool in_support(const std::string& instance_id, double support_fraction = 0.8,
                std::uint64_t seed = 0);

struct Split {
  std::vector<Instance> support;
  std::vector<Instance> validation;
};
Split split_dataset(const std::vector<Instance>& instances, double support_fraction = 0.8,
                    std::uint64_t seed = 0);

}  // namespace lgx
