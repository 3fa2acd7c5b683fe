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

#include "lgx/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "lgx/error.hpp"
#include "lgx/search.hpp"

namespace lgx {

double fidelity_plus(Oracle& oracle, const Instance& inst, ClassId cls,
                     std::span<const ConceptSet> pmin) {
  if (pmin.empty()) throw SearchError("fidelity is undefined for an empty explanation");
  const double ref = reference_score(oracle, inst, cls);
  ConceptSet used;
  for (const auto& s : pmin) used = used.united(s);
  const ConceptSet rest = inst.objects.minus(used);
  return oracle.score(ScoreQuery{inst.id, cls, rest}) / ref;
}

FidelityMinusDetail fidelity_minus_detail(Oracle& oracle, const Instance& inst, ClassId cls,
                                          std::span<const ConceptSet> pmin) {
  if (pmin.empty()) throw SearchError("fidelity is undefined for an empty explanation");
  const double ref = reference_score(oracle, inst, cls);
  FidelityMinusDetail d;
  std::vector<ScoreQuery> qs;
  qs.reserve(pmin.size());
  for (const auto& s : pmin) qs.push_back(ScoreQuery{inst.id, cls, s});
  for (double v : oracle.score_batch(qs)) d.terms.push_back(v / ref);
  double sum = 0.0;
  for (double t : d.terms) sum += t;
  d.mean = sum / static_cast<double>(d.terms.size());
  const auto [lo, hi] = std::minmax_element(d.terms.begin(), d.terms.end());
  d.min = *lo;
  d.max = *hi;
  return d;
}

double fidelity_minus(Oracle& oracle, const Instance& inst, ClassId cls,
                      std::span<const ConceptSet> pmin) {
  return fidelity_minus_detail(oracle, inst, cls, pmin).mean;
}

MeanStd mean_and_std(std::span<const double> values) {
  if (values.empty()) throw ConfigError("mean of an empty sample");
  const double n = static_cast<double>(values.size());
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / n;
  double sq = 0.0;
  for (double v : values) sq += (v - mean) * (v - mean);
  return MeanStd{mean, std::sqrt(sq / n)};
}

FidelityReport aggregate_fidelity(Oracle& oracle, std::span<const Instance> instances,
                                  std::span<const CompleteExplanation> explanations) {
  if (instances.empty()) throw ConfigError("fidelity over an empty dataset");
  std::unordered_map<std::string, const CompleteExplanation*> by_id;
  for (const auto& e : explanations) by_id[e.instance_id] = &e;

  std::vector<double> plus;
  std::vector<double> minus;
  FidelityReport rep;
  for (const auto& inst : instances) {
    auto it = by_id.find(inst.id);
    if (it == by_id.end() || it->second->mscxs.empty()) {
      ++rep.n_skipped;
      continue;
    }
    const auto sets = it->second->concept_sets();
    plus.push_back(fidelity_plus(oracle, inst, it->second->class_id, sets));
    minus.push_back(fidelity_minus(oracle, inst, it->second->class_id, sets));
  }
  if (plus.empty()) throw ConfigError("no instance has a non-empty explanation");
  const auto p = mean_and_std(plus);
  const auto m = mean_and_std(minus);
  rep.fid_plus_mean = p.mean;
  rep.fid_plus_std = p.std;
  rep.fid_minus_mean = m.mean;
  rep.fid_minus_std = m.std;
  rep.n_instances = plus.size();
  return rep;
}

std::map<std::size_t, std::size_t> mscx_size_histogram(
    std::span<const CompleteExplanation> explanations) {
  std::map<std::size_t, std::size_t> h;
  for (const auto& e : explanations) {
    for (const auto& m : e.mscxs) ++h[m.concepts.size()];
  }
  return h;
}

void write_coverage_csv(std::ostream& out, std::span<const double> support_curve,
                        std::span<const double> validation_curve) {
  out << "clause_index,support_coverage_pct,validation_coverage_pct\n";
  const std::size_t rows = std::max(support_curve.size(), validation_curve.size());
  auto cell = [](std::span<const double> c, std::size_t i) {
    // A shorter curve has plateaued at its last value.
    if (c.empty()) return 0.0;
    return 100.0 * c[std::min(i, c.size() - 1)];
  };
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(4);
  for (std::size_t i = 0; i < rows; ++i) {
    line.str("");
    line << (i + 1) << ',' << cell(support_curve, i) << ',' << cell(validation_curve, i) << '\n';
    out << line.str();
  }
}

std::string coverage_csv(std::span<const double> support_curve,
                         std::span<const double> validation_curve) {
  std::ostringstream os;
  write_coverage_csv(os, support_curve, validation_curve);
  return os.str();
}

}  // namespace lgx
