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
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lgx/oracle.hpp"
#include "lgx/types.hpp"

namespace lgx {

/// score(O(x) minus every concept used by any MSCX) / score(O(x)).
/// Lower is better. When nothing remains the empty subset is queried.
/// Throws SearchError on an empty `pmin` or a non-positive reference.
double fidelity_plus(Oracle& oracle, const Instance& inst, ClassId cls,
                     std::span<const ConceptSet> pmin);

struct FidelityMinusDetail {
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  /// score(S) / score(O(x)) for each S, in input order.
  std::vector<double> terms;
};

/// Mean over S in pmin of score(S) / score(O(x)); higher is better and it
/// may exceed 1 for non-monotone models.
double fidelity_minus(Oracle& oracle, const Instance& inst, ClassId cls,
                      std::span<const ConceptSet> pmin);
FidelityMinusDetail fidelity_minus_detail(Oracle& oracle, const Instance& inst, ClassId cls,
                                          std::span<const ConceptSet> pmin);

struct FidelityReport {
  double fid_plus_mean = 0.0;
  double fid_plus_std = 0.0;
  double fid_minus_mean = 0.0;
  double fid_minus_std = 0.0;
  std::size_t n_instances = 0;
  /// Instances left out because their complete explanation is empty or missing.
  std::size_t n_skipped = 0;
};

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;
};

/// Mean and population standard deviation. Throws ConfigError when empty.
MeanStd mean_and_std(std::span<const double> values);

/// Per-instance fidelities for each instance's explanation (matched by id),
/// summarized by mean and population std. Throws ConfigError when no
/// instance could be scored.
FidelityReport aggregate_fidelity(Oracle& oracle, std::span<const Instance> instances,
                                  std::span<const CompleteExplanation> explanations);

/// |S| -> number of MSCXs of that size, over all explanations.
std::map<std::size_t, std::size_t> mscx_size_histogram(
    std::span<const CompleteExplanation> explanations);

/// Columns clause_index, support_coverage_pct, validation_coverage_pct; one
/// row per clause, clause_index counting from 1. Curves hold fractions.
void write_coverage_csv(std::ostream& out, std::span<const double> support_curve,
                        std::span<const double> validation_curve);
std::string coverage_csv(std::span<const double> support_curve,
                         std::span<const double> validation_curve);

}  // namespace lgx
