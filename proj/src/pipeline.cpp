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

#include "lgx/pipeline.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "lgx/error.hpp"

namespace lgx {

ExplainRun explain_dataset(Oracle& oracle, const std::vector<Instance>& instances,
                           const ExplainOptions& options) {
  options.search.validate();
  ExplainRun run;
  run.explanations.resize(instances.size());
  run.stats.resize(instances.size());

  std::size_t workers = options.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(1, instances.size()));

  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    while (!stop.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= instances.size()) return;
      const Instance& inst = instances[i];
      try {
        if (options.method == ExplainMethod::kExact) {
          run.explanations[i] = exact_complete_explanation(oracle, inst, inst.predicted_class,
                                                           options.search.tau_p,
                                                           options.search.exact_k_limit);
        } else {
          auto r = beam_add_traced(oracle, inst, inst.predicted_class, options.search);
          run.explanations[i] = std::move(r.explanation);
          run.stats[i] = r.stats;
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        stop.store(true);
        return;
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return run;
}

bool in_support(const std::string& instance_id, double support_fraction, std::uint64_t seed) {
  if (!(support_fraction >= 0.0 && support_fraction <= 1.0)) {
    throw ConfigError("support fraction must lie in [0, 1]");
  }
  // FNV-1a over the seed bytes and the id, then a final avalanche.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (int i = 0; i < 8; ++i) {
    h ^= (seed >> (8 * i)) & 0xff;
    h *= 0x100000001b3ULL;
  }
  for (unsigned char ch : instance_id) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  const double u = static_cast<double>(h >> 11) * 0x1.0p-53;
  return u < support_fraction;
}

Split split_dataset(const std::vector<Instance>& instances, double support_fraction,
                    std::uint64_t seed) {
  Split s;
  for (const auto& inst : instances) {
    (in_support(inst.id, support_fraction, seed) ? s.support : s.validation).push_back(inst);
  }
  return s;
}

}  // namespace lgx
