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

// Reference implementations used only by the tests. They work on plain
// sorted id vectors and never call into the search or cover code they check.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lgx::testing {

using Ids = std::vector<std::uint32_t>;
using Scorer = std::function<double(const Ids&)>;

inline bool includes(const Ids& big, const Ids& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

/// All non-empty subsets of `objects` (sorted input gives sorted subsets).
inline std::vector<Ids> all_subsets(const Ids& objects) {
  std::vector<Ids> out;
  const std::size_t k = objects.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    Ids s;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask >> i & 1U) s.push_back(objects[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

/// Minimal sufficient subsets straight from the definitions: S is sufficient
/// when score(S) / score(objects) >= tau, minimal when no strict subset is.
inline std::set<Ids> brute_pmin(const Ids& objects, const Scorer& score, double tau) {
  const double ref = score(objects);
  std::vector<Ids> sufficient;
  for (const auto& s : all_subsets(objects)) {
    if (score(s) / ref >= tau) sufficient.push_back(s);
  }
  std::set<Ids> out;
  for (const auto& s : sufficient) {
    bool minimal = true;
    for (const auto& t : sufficient) {
      if (t.size() < s.size() && includes(s, t)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.insert(s);
  }
  return out;
}

/// Additive score with weights looked up per id; summed in long double.
inline Scorer additive(const std::vector<double>& weights) {
  return [weights](const Ids& s) {
    long double sum = 0.0L;
    for (auto id : s) sum += weights.at(id);
    return static_cast<double>(sum);
  };
}

/// Size of a smallest family of masks covering the union of all coverage
/// sets, by trying every family.
inline std::size_t brute_min_cover_size(const std::vector<std::set<std::string>>& covers) {
  std::set<std::string> target;
  for (const auto& c : covers) target.insert(c.begin(), c.end());
  if (target.empty()) return 0;
  const std::size_t n = covers.size();
  std::size_t best = n + 1;
  for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << n); ++fam) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(fam));
    if (size >= best) continue;
    std::set<std::string> got;
    for (std::size_t i = 0; i < n; ++i) {
      if (fam >> i & 1U) got.insert(covers[i].begin(), covers[i].end());
    }
    if (got == target) best = size;
  }
  return best;
}

struct ListInstance {
  std::uint32_t predicted = 0;
  std::vector<Ids> mscxs;
};

/// Does some ordered list of distinct (mask; class) rules plus a default rule
/// classify every instance correctly under MSCX-membership matching?
/// Searches all rule orders; memoized on the set of uncovered instances.
inline bool perfect_list_exists(const std::vector<ListInstance>& data) {
  std::set<Ids> masks;
  for (const auto& x : data) masks.insert(x.mscxs.begin(), x.mscxs.end());
  const std::vector<Ids> mask_list(masks.begin(), masks.end());
  const std::size_t n = data.size();
  std::map<std::uint64_t, bool> memo;
  std::function<bool(std::uint64_t)> solve = [&](std::uint64_t uncovered) -> bool {
    if (auto it = memo.find(uncovered); it != memo.end()) return it->second;
    // Default rule: everything left must share one class.
    std::set<std::uint32_t> left;
    for (std::size_t i = 0; i < n; ++i) {
      if (uncovered >> i & 1U) left.insert(data[i].predicted);
    }
    bool ok = left.size() <= 1;
    for (std::size_t m = 0; m < mask_list.size() && !ok; ++m) {
      std::uint64_t hit = 0;
      std::set<std::uint32_t> classes;
      for (std::size_t i = 0; i < n; ++i) {
        if (!(uncovered >> i & 1U)) continue;
        const auto& ms = data[i].mscxs;
        if (std::find(ms.begin(), ms.end(), mask_list[m]) != ms.end()) {
          hit |= std::uint64_t{1} << i;
          classes.insert(data[i].predicted);
        }
      }
      // A rule that fires must be right on everything it newly reaches;
      // a rule that reaches nothing never helps.
      if (hit == 0 || classes.size() != 1) continue;
      ok = solve(uncovered & ~hit);
    }
    memo[uncovered] = ok;
    return ok;
  };
  return solve(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

}  // namespace lgx::testing
