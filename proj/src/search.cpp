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

#include "lgx/search.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>

#include "lgx/error.hpp"

namespace lgx {

void SearchConfig::validate() const {
  if (!(tau_p > 0.0 && tau_p <= 1.0)) throw ConfigError("tau_p must lie in (0, 1]");
  if (beam_width == 0) throw ConfigError("beam width must be at least 1");
  if (max_successors && *max_successors == 0) throw ConfigError("max_successors must be positive");
  if (max_depth && *max_depth == 0) throw ConfigError("max_depth must be positive");
}

namespace {

/// Per-run memo over subsets of one instance for one class.
class SubsetScorer {
 public:
  SubsetScorer(Oracle& oracle, const Instance& inst, ClassId cls)
      : oracle_(oracle), inst_(inst), cls_(cls) {
    reference_ = score(inst.objects);
    if (!(reference_ > 0.0)) {
      throw SearchError("reference score of '" + inst.id + "' for class " + std::to_string(cls) +
                        " is not positive");
    }
  }

  double score(const ConceptSet& s) {
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    const double v = oracle_.score(ScoreQuery{inst_.id, cls_, s});
    memo_.emplace(s, v);
    return v;
  }

  /// Scores every unseen set with one batch call.
  void prefetch(const std::vector<ConceptSet>& sets) {
    std::vector<ScoreQuery> qs;
    std::vector<ConceptSet> keys;
    std::set<ConceptSet> pending;
    for (const auto& s : sets) {
      if (memo_.count(s) != 0 || !pending.insert(s).second) continue;
      qs.push_back(ScoreQuery{inst_.id, cls_, s});
      keys.push_back(s);
    }
    if (qs.empty()) return;
    const auto values = oracle_.score_batch(qs);
    for (std::size_t i = 0; i < keys.size(); ++i) memo_.emplace(keys[i], values[i]);
  }

  double ratio(const ConceptSet& s) { return score(s) / reference_; }
  bool sufficient(const ConceptSet& s, double tau) { return ratio(s) >= tau; }
  std::size_t queries() const noexcept { return memo_.size(); }

 private:
  Oracle& oracle_;
  const Instance& inst_;
  ClassId cls_;
  double reference_ = 0.0;
  std::unordered_map<ConceptSet, double, ConceptSetHash> memo_;
};

ConceptSet minimize_with(SubsetScorer& scorer, ConceptSet cur, double tau) {
  for (bool changed = true; changed;) {
    changed = false;
    for (ConceptId o : cur.ids()) {
      ConceptSet cand = cur.without(o);
      if (!cand.empty() && scorer.sufficient(cand, tau)) {
        cur = std::move(cand);
        changed = true;
      }
    }
  }
  return cur;
}

void check_subset(const Instance& inst, const ConceptSet& s) {
  if (s.empty()) throw SearchError("sufficiency is undefined for the empty set");
  if (!s.is_subset_of(inst.objects)) {
    throw SearchError("subset " + s.to_string() + " is not contained in the objects of '" +
                      inst.id + "'");
  }
}

void check_instance(const Instance& inst) {
  if (inst.objects.empty()) throw SearchError("instance '" + inst.id + "' has no objects");
}

/// Keeps the members of `family` that have no proper subset in `family`.
std::vector<ConceptSet> minimal_members(const std::set<ConceptSet>& family) {
  std::vector<ConceptSet> out;
  for (const auto& t : family) {
    const bool redundant = std::any_of(family.begin(), family.end(), [&](const ConceptSet& u) {
      return u.is_proper_subset_of(t);
    });
    if (!redundant) out.push_back(t);
  }
  return out;
}

struct Ranked {
  ConceptSet set;
  double score;
};

bool better(const Ranked& a, const Ranked& b) {
  if (a.score != b.score) return a.score > b.score;
  return a.set < b.set;
}

CompleteExplanation make_explanation(const Instance& inst, ClassId cls,
                                     const std::vector<ConceptSet>& sets, SubsetScorer& scorer) {
  CompleteExplanation e;
  e.instance_id = inst.id;
  e.class_id = cls;
  for (const auto& s : sets) e.mscxs.push_back(Mscx{s, inst.id, cls, scorer.ratio(s)});
  std::sort(e.mscxs.begin(), e.mscxs.end(),
            [](const Mscx& a, const Mscx& b) { return a.concepts < b.concepts; });
  e.status = e.mscxs.empty() ? SearchStatus::kNoSufficientSet : SearchStatus::kFound;
  return e;
}

}  // namespace

double reference_score(Oracle& oracle, const Instance& inst, ClassId cls) {
  check_instance(inst);
  const double ref = oracle.score(ScoreQuery{inst.id, cls, inst.objects});
  if (!(ref > 0.0)) {
    throw SearchError("reference score of '" + inst.id + "' for class " + std::to_string(cls) +
                      " is not positive");
  }
  return ref;
}

bool is_sufficient(Oracle& oracle, const Instance& inst, ClassId cls, const ConceptSet& s,
                   double tau_p) {
  check_subset(inst, s);
  const double ref = reference_score(oracle, inst, cls);
  return oracle.score(ScoreQuery{inst.id, cls, s}) / ref >= tau_p;
}

bool is_one_minimal(Oracle& oracle, const Instance& inst, ClassId cls, const ConceptSet& s,
                    double tau_p) {
  check_subset(inst, s);
  SubsetScorer scorer(oracle, inst, cls);
  for (ConceptId o : s.ids()) {
    const ConceptSet cand = s.without(o);
    if (!cand.empty() && scorer.sufficient(cand, tau_p)) return false;
  }
  return true;
}

BeamResult beam_add_traced(Oracle& oracle, const Instance& inst, ClassId cls,
                           const SearchConfig& config) {
  config.validate();
  check_instance(inst);
  SubsetScorer scorer(oracle, inst, cls);
  const auto objects = inst.objects.ids();

  std::vector<ConceptSet> frontier{ConceptSet{}};
  std::set<ConceptSet> collected;
  std::size_t depth = 0;
  while (!frontier.empty()) {
    if (config.max_depth && depth >= *config.max_depth) break;
    ++depth;

    std::vector<ConceptSet> extensions;
    for (const auto& s : frontier) {
      for (ConceptId o : objects) {
        if (!s.contains(o)) extensions.push_back(s.with(o));
      }
    }
    scorer.prefetch(extensions);

    std::map<ConceptSet, double> candidates;
    for (const auto& s : frontier) {
      std::vector<Ranked> rejected;
      for (ConceptId o : objects) {
        if (s.contains(o)) continue;
        ConceptSet t = s.with(o);
        const double r = scorer.ratio(t);
        if (r >= config.tau_p) {
          collected.insert(std::move(t));
        } else {
          rejected.push_back(Ranked{std::move(t), r});
        }
      }
      if (config.max_successors && rejected.size() > *config.max_successors) {
        std::sort(rejected.begin(), rejected.end(), better);
        rejected.resize(*config.max_successors);
      }
      for (auto& r : rejected) candidates.emplace(std::move(r.set), r.score);
    }

    std::vector<Ranked> pool;
    pool.reserve(candidates.size());
    for (auto& [set, score] : candidates) pool.push_back(Ranked{set, score});
    std::sort(pool.begin(), pool.end(), better);
    if (pool.size() > config.beam_width) pool.resize(config.beam_width);
    frontier.clear();
    for (auto& r : pool) frontier.push_back(std::move(r.set));
  }

  BeamResult result;
  result.stats.sufficient_collected = collected.size();
  result.stats.depth_reached = depth;

  std::set<ConceptSet> shrunk;
  for (const auto& t : minimal_members(collected)) {
    shrunk.insert(minimize_with(scorer, t, config.tau_p));
  }
  const auto final_sets = minimal_members(shrunk);
  result.explanation = make_explanation(inst, cls, final_sets, scorer);
  for (const auto& s : final_sets) {
    result.stats.max_mscx_size = std::max(result.stats.max_mscx_size, s.size());
  }
  result.stats.oracle_queries = scorer.queries();
  return result;
}

CompleteExplanation beam_add(Oracle& oracle, const Instance& inst, ClassId cls,
                             const SearchConfig& config) {
  return beam_add_traced(oracle, inst, cls, config).explanation;
}

ConceptSet minimize_set(Oracle& oracle, const Instance& inst, ClassId cls, const ConceptSet& s,
                        double tau_p) {
  check_subset(inst, s);
  SubsetScorer scorer(oracle, inst, cls);
  if (!scorer.sufficient(s, tau_p)) {
    throw SearchError("minimize_set needs a sufficient set, got " + s.to_string());
  }
  return minimize_with(scorer, s, tau_p);
}

CompleteExplanation exact_complete_explanation(Oracle& oracle, const Instance& inst, ClassId cls,
                                               double tau_p, std::size_t k_limit) {
  check_instance(inst);
  if (!(tau_p > 0.0 && tau_p <= 1.0)) throw ConfigError("tau_p must lie in (0, 1]");
  const auto objects = inst.objects.ids();
  const std::size_t k = objects.size();
  if (k > k_limit || k >= 31) {
    throw SearchError("instance '" + inst.id + "' has " + std::to_string(k) +
                      " objects; exhaustive enumeration is limited to " + std::to_string(k_limit));
  }
  const std::uint32_t full = (std::uint32_t{1} << k) - 1;
  auto subset_of = [&](std::uint32_t mask) {
    std::vector<ConceptId> ids;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::uint32_t{1} << i)) ids.push_back(objects[i]);
    }
    return ConceptSet::from_ids(ids);
  };

  std::vector<ScoreQuery> qs;
  qs.reserve(full);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    qs.push_back(ScoreQuery{inst.id, cls, subset_of(mask)});
  }
  const auto scores = oracle.score_batch(qs);
  const double ref = scores[full - 1];
  if (!(ref > 0.0)) {
    throw SearchError("reference score of '" + inst.id + "' for class " + std::to_string(cls) +
                      " is not positive");
  }

  std::vector<char> sufficient(std::size_t{full} + 1, 0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    sufficient[mask] = scores[mask - 1] / ref >= tau_p;
  }
  // has_sufficient[m]: some non-empty submask of m is sufficient. Masks are
  // visited in increasing order, so every proper submask is already done.
  std::vector<char> has_sufficient(std::size_t{full} + 1, 0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    char any = sufficient[mask];
    for (std::size_t i = 0; i < k && !any; ++i) {
      const std::uint32_t bit = std::uint32_t{1} << i;
      if (mask & bit) any = has_sufficient[mask ^ bit];
    }
    has_sufficient[mask] = any;
  }

  CompleteExplanation e;
  e.instance_id = inst.id;
  e.class_id = cls;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (!sufficient[mask]) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < k && minimal; ++i) {
      const std::uint32_t bit = std::uint32_t{1} << i;
      if (mask & bit) minimal = !has_sufficient[mask ^ bit];
    }
    if (minimal) e.mscxs.push_back(Mscx{qs[mask - 1].subset, inst.id, cls, scores[mask - 1] / ref});
  }
  std::sort(e.mscxs.begin(), e.mscxs.end(),
            [](const Mscx& a, const Mscx& b) { return a.concepts < b.concepts; });
  e.status = e.mscxs.empty() ? SearchStatus::kNoSufficientSet : SearchStatus::kFound;
  return e;
}

}  // namespace lgx
