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

#include "lgx/global.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "lgx/error.hpp"

namespace lgx {

const char* to_string(MatchMode mode) noexcept {
  return mode == MatchMode::kPresence ? "presence" : "mscx";
}

CoverageMap build_coverage_map(std::span<const CompleteExplanation> explanations) {
  CoverageMap r;
  for (const auto& e : explanations) {
    for (const auto& m : e.mscxs) r[m.concepts].push_back(e.instance_id);
  }
  for (auto& [mask, ids] : r) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  }
  return r;
}

namespace {

double pct(std::size_t part, std::size_t whole) {
  return whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

/// Masks of R as bitsets over the support index.
struct IndexedMasks {
  std::vector<ConceptSet> masks;
  std::vector<std::vector<std::size_t>> members;  // support indices, per mask
  std::size_t support_size = 0;
};

IndexedMasks index_masks(std::span<const std::string> support, const CoverageMap& r) {
  std::unordered_map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < support.size(); ++i) pos.emplace(support[i], i);
  IndexedMasks out;
  out.support_size = support.size();
  for (const auto& [mask, ids] : r) {
    std::vector<std::size_t> members;
    for (const auto& id : ids) {
      if (auto it = pos.find(id); it != pos.end()) members.push_back(it->second);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty()) continue;
    out.masks.push_back(mask);
    out.members.push_back(std::move(members));
  }
  return out;
}

}  // namespace

CoveringExplanation greedy_cover(std::span<const std::string> support, const CoverageMap& r,
                                 ClassId cls) {
  const IndexedMasks im = index_masks(support, r);
  CoveringExplanation out;
  out.class_id = cls;
  out.support_size = support.size();

  std::vector<char> covered(support.size(), 0);
  std::size_t uncovered = support.size();
  std::vector<char> used(im.masks.size(), 0);
  while (uncovered > 0) {
    std::size_t best = im.masks.size();
    std::size_t best_gain = 0;
    for (std::size_t m = 0; m < im.masks.size(); ++m) {
      if (used[m]) continue;
      std::size_t gain = 0;
      for (std::size_t i : im.members[m]) gain += covered[i] ? 0 : 1;
      if (gain == 0) continue;
      // Masks are visited in ascending lexicographic order, so strict
      // comparisons keep the smallest mask on a full tie.
      if (best == im.masks.size() || gain > best_gain ||
          (gain == best_gain && im.members[m].size() > im.members[best].size())) {
        best = m;
        best_gain = gain;
      }
    }
    if (best == im.masks.size()) break;
    used[best] = 1;
    for (std::size_t i : im.members[best]) covered[i] = 1;
    uncovered -= best_gain;
    const std::size_t total = im.members[best].size();
    out.clauses.push_back(MdnfClause{im.masks[best], total, best_gain,
                                     pct(total, support.size()), pct(best_gain, support.size())});
  }
  return out;
}

CoveringExplanation build_covering(ClassId cls, std::span<const CompleteExplanation> explanations) {
  std::vector<std::string> support;
  std::vector<std::string> unexplained;
  std::vector<CompleteExplanation> of_class;
  for (const auto& e : explanations) {
    if (e.class_id != cls) continue;
    if (e.mscxs.empty()) {
      unexplained.push_back(e.instance_id);
    } else {
      support.push_back(e.instance_id);
      of_class.push_back(e);
    }
  }
  std::sort(support.begin(), support.end());
  std::sort(unexplained.begin(), unexplained.end());
  CoveringExplanation out = greedy_cover(support, build_coverage_map(of_class), cls);
  out.unexplained = std::move(unexplained);
  return out;
}

std::vector<ConceptSet> exact_min_cover(std::span<const std::string> support, const CoverageMap& r,
                                        std::size_t mask_limit) {
  const IndexedMasks im = index_masks(support, r);
  const std::size_t n = im.masks.size();
  if (n > mask_limit) {
    throw ConfigError("exact_min_cover: " + std::to_string(n) + " masks exceed the limit of " +
                      std::to_string(mask_limit));
  }
  const std::size_t words = (support.size() + 63) / 64;
  using Bits = std::vector<std::uint64_t>;
  std::vector<Bits> bits(n, Bits(words, 0));
  Bits target(words, 0);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i : im.members[m]) {
      bits[m][i / 64] |= std::uint64_t{1} << (i % 64);
      target[i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
  if (n == 0) return {};

  // Combinations of each size in lexicographic index order.
  std::vector<std::size_t> pick;
  for (std::size_t size = 1; size <= n; ++size) {
    pick.resize(size);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
      Bits acc(words, 0);
      for (std::size_t m : pick) {
        for (std::size_t w = 0; w < words; ++w) acc[w] |= bits[m][w];
      }
      if (acc == target) {
        std::vector<ConceptSet> out;
        for (std::size_t m : pick) out.push_back(im.masks[m]);
        return out;
      }
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {};
}

CoverageResult eval_dnf_coverage(const CoveringExplanation& phi,
                                 std::span<const ExplainedInstance> instances, MatchMode mode) {
  CoverageResult out;
  out.curve.reserve(phi.clauses.size());
  std::vector<char> covered(instances.size(), 0);
  std::size_t count = 0;
  for (const auto& clause : phi.clauses) {
    for (std::size_t i = 0; i < instances.size(); ++i) {
      if (covered[i]) continue;
      const bool fires = mode == MatchMode::kPresence
                             ? clause.concepts.is_subset_of(instances[i].objects)
                             : instances[i].has_mscx(clause.concepts);
      if (fires) {
        covered[i] = 1;
        ++count;
      }
    }
    out.curve.push_back(instances.empty() ? 0.0
                                          : static_cast<double>(count) /
                                                static_cast<double>(instances.size()));
  }
  out.fraction = instances.empty()
                     ? 0.0
                     : static_cast<double>(count) / static_cast<double>(instances.size());
  return out;
}

MaskIndex build_mask_index(std::span<const ExplainedInstance> dataset) {
  MaskIndex m;
  for (const auto& x : dataset) {
    for (const auto& s : x.mscxs) m[s].emplace_back(x.id, x.predicted_class);
  }
  return m;
}

namespace {

ClassId modal_class(std::span<const ExplainedInstance> dataset) {
  std::map<ClassId, std::size_t> counts;
  for (const auto& x : dataset) ++counts[x.predicted_class];
  ClassId best = 0;
  std::size_t best_count = 0;
  for (const auto& [c, n] : counts) {
    if (n > best_count) {
      best = c;
      best_count = n;
    }
  }
  return best;
}

}  // namespace

ExplanationList explanation_list(std::span<const ExplainedInstance> dataset, const MaskIndex& index) {
  std::unordered_map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < dataset.size(); ++i) pos.emplace(dataset[i].id, i);

  struct Mask {
    ConceptSet set;
    std::vector<std::pair<std::size_t, ClassId>> members;
    bool available = true;
  };
  std::vector<Mask> masks;
  for (const auto& [set, pairs] : index) {
    Mask m{set, {}, true};
    for (const auto& [id, c] : pairs) {
      if (auto it = pos.find(id); it != pos.end()) m.members.emplace_back(it->second, c);
    }
    masks.push_back(std::move(m));
  }

  ExplanationList out;
  std::vector<char> covered(dataset.size(), 0);
  std::size_t uncovered = dataset.size();
  const std::size_t n = dataset.size();

  while (uncovered > 0) {
    std::size_t best = masks.size();
    std::size_t best_err = 0;
    std::size_t best_gain = 0;
    ClassId best_class = 0;
    for (std::size_t m = 0; m < masks.size(); ++m) {
      if (!masks[m].available) continue;
      std::map<ClassId, std::size_t> per_class;
      std::size_t gain = 0;
      for (const auto& [i, c] : masks[m].members) {
        if (covered[i]) continue;
        ++per_class[c];
        ++gain;
      }
      if (gain == 0) continue;
      ClassId majority = 0;
      std::size_t majority_count = 0;
      for (const auto& [c, k] : per_class) {
        if (k > majority_count) {
          majority = c;
          majority_count = k;
        }
      }
      const std::size_t err = gain - majority_count;
      // Ascending mask order makes strict comparisons the lexicographic tie-break.
      if (best == masks.size() || err < best_err || (err == best_err && gain > best_gain)) {
        best = m;
        best_err = err;
        best_gain = gain;
        best_class = majority;
      }
    }
    if (best == masks.size()) break;
    for (const auto& [i, c] : masks[best].members) {
      if (!covered[i]) {
        covered[i] = 1;
        --uncovered;
      }
    }
    masks[best].available = false;
    out.rules.push_back(ExplanationRule{masks[best].set, best_class, best_gain, pct(best_gain, n)});
  }
  out.default_class = modal_class(dataset);
  out.default_covered = uncovered;
  out.default_d_pct = pct(uncovered, n);
  return out;
}

ExplanationList explanation_list(std::span<const ExplainedInstance> dataset) {
  return explanation_list(dataset, build_mask_index(dataset));
}

ClassId classify_with_list(const ExplanationList& list, const ExplainedInstance& inst,
                           MatchMode mode) {
  for (const auto& rule : list.rules) {
    const bool fires = mode == MatchMode::kPresence ? rule.antecedent.is_subset_of(inst.objects)
                                                    : inst.has_mscx(rule.antecedent);
    if (fires) return rule.class_id;
  }
  return list.default_class;
}

double list_accuracy(const ExplanationList& list, std::span<const ExplainedInstance> instances,
                     MatchMode mode) {
  if (instances.empty()) return 0.0;
  std::size_t hits = 0;
  for (const auto& x : instances) hits += classify_with_list(list, x, mode) == x.predicted_class;
  return static_cast<double>(hits) / static_cast<double>(instances.size());
}

}  // namespace lgx
