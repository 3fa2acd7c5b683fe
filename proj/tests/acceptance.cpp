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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "lgx/global.hpp"
#include "lgx/io.hpp"
#include "lgx/metrics.hpp"
#include "lgx/pipeline.hpp"
#include "lgx/search.hpp"
#include "lgx/synth.hpp"
#include "oracles/brute_force.hpp"
#include "support/fixtures.hpp"

using namespace lgx;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::set<testing::Ids> as_ids(const CompleteExplanation& e) {
  std::set<testing::Ids> out;
  for (const auto& m : e.mscxs) out.insert(m.concepts.ids());
  return out;
}

synth::GeneratorConfig small_config(std::uint64_t seed, std::size_t kmax) {
  synth::GeneratorConfig cfg;
  cfg.num_classes = 3;
  cfg.vocab_size = 16;
  cfg.instances_per_class = 12;
  cfg.min_objects = 3;
  cfg.max_objects = kmax;
  cfg.seed = seed;
  return cfg;
}

Outcome theorem1_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  std::size_t largest_k = 0;
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto g = synth::generate(small_config(100 + seed, 12));
    SyntheticOracle oracle(g.model, g.dataset.instances);
    for (const auto& x : g.dataset.instances) {
      const std::size_t k = x.objects.size();
      largest_k = std::max(largest_k, k);
      SearchConfig cfg;
      cfg.beam_width = std::size_t{1} << k;
      cfg.max_successors = std::nullopt;
      const auto beam = beam_add(oracle, x, x.predicted_class, cfg);
      const auto exact = exact_complete_explanation(oracle, x, x.predicted_class, cfg.tau_p);
      if (as_ids(beam) != as_ids(exact)) ++mismatches;
      ++instances;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {instances >= 100 && mismatches == 0 && secs < 60.0,
          fmt("%zu instances, k <= %zu, %zu mismatches, %.2f s", instances, largest_k, mismatches, secs)};
}

Outcome soundness() {
  std::size_t checked = 0;
  std::size_t bad = 0;
  std::size_t configs = 0;
  const std::vector<std::size_t> beams{1, 2, 3, 5, 8};
  const std::vector<std::optional<std::size_t>> succs{1, 3, 5, std::nullopt};
  for (std::uint64_t seed = 0; seed < 2; ++seed) {
    auto gcfg = small_config(200 + seed, 10);
    const auto g = synth::generate(gcfg);
    SyntheticOracle oracle(g.model, g.dataset.instances);
    for (auto b : beams) {
      for (auto s : succs) {
        for (double tau : {0.95, 0.8}) {
          SearchConfig cfg;
          cfg.beam_width = b;
          cfg.max_successors = s;
          cfg.tau_p = tau;
          ++configs;
          for (const auto& x : g.dataset.instances) {
            const auto e = beam_add(oracle, x, x.predicted_class, cfg);
            if (!is_antichain(e.concept_sets())) ++bad;
            for (const auto& m : e.mscxs) {
              ++checked;
              if (!is_sufficient(oracle, x, x.predicted_class, m.concepts, tau) ||
                  !is_one_minimal(oracle, x, x.predicted_class, m.concepts, tau)) {
                ++bad;
              }
            }
          }
        }
      }
    }
  }
  return {bad == 0 && checked > 0,
          fmt("%zu configurations, %zu MSCXs re-checked, %zu failures", configs, checked, bad)};
}

Outcome theorem2() {
  std::mt19937_64 rng(300);
  std::size_t runs = 0;
  std::size_t violations = 0;
  double worst = 0.0;
  while (runs < 200) {
    const std::size_t n = 2 + rng() % 29;
    const std::size_t pool = 2 + rng() % 19;
    std::vector<CompleteExplanation> expl;
    std::vector<std::string> support;
    for (std::size_t i = 0; i < n; ++i) {
      CompleteExplanation e{"x" + std::to_string(i), 0, {}, SearchStatus::kFound};
      const std::size_t count = 1 + rng() % 3;
      std::set<ConceptSet> sets;
      for (std::size_t j = 0; j < count; ++j) {
        const auto a = static_cast<ConceptId>(rng() % pool);
        const auto b = static_cast<ConceptId>(pool + rng() % 3);
        sets.insert(rng() % 2 ? ConceptSet{a} : ConceptSet{a, b});
      }
      for (const auto& s : sets) e.mscxs.push_back(Mscx{s, e.instance_id, 0, 1.0});
      support.push_back(e.instance_id);
      expl.push_back(std::move(e));
    }
    const CoverageMap r = build_coverage_map(expl);
    if (r.size() > 20) continue;
    ++runs;
    const auto phi = greedy_cover(support, r);
    std::vector<ExplainedInstance> own;
    for (const auto& e : expl) own.push_back(ExplainedInstance{e.instance_id, {}, 0, e.concept_sets()});
    const double cov = eval_dnf_coverage(phi, own, MatchMode::kMscx).fraction;
    const std::size_t m_star = exact_min_cover(support, r).size();
    const double bound = std::ceil(static_cast<double>(m_star) * std::log(static_cast<double>(n)));
    worst = std::max(worst, static_cast<double>(phi.clauses.size()) / std::max(bound, 1.0));
    if (cov != 1.0 || static_cast<double>(phi.clauses.size()) > bound) ++violations;
  }
  return {violations == 0, fmt("%zu cover instances (2..30 support, <= 20 masks), %zu violations, "
                               "max |clauses|/bound %.2f", runs, violations, worst)};
}

Outcome theorem3() {
  std::size_t datasets = 0;
  std::size_t failures = 0;
  std::size_t brute_checked = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    synth::PlantedConfig cfg;
    cfg.num_classes = 1 + seed % 5;
    cfg.nested = seed % 2 == 1 && cfg.num_classes >= 2;
    cfg.instances_per_class = 1 + seed % 4;
    cfg.seed = 400 + seed;
    const auto p = synth::planted_list_dataset(cfg);
    SyntheticOracle oracle(p.model, p.dataset.instances);
    ExplainOptions opts;
    const auto run = explain_dataset(oracle, p.dataset.instances, opts);
    const auto d = join_explanations(p.dataset.instances, run.explanations);
    const MaskIndex m = build_mask_index(d);
    const auto list = explanation_list(d, m);
    ++datasets;
    bool ok = list_accuracy(list, d, MatchMode::kMscx) == 1.0 &&
              list.size() <= std::min(m.size(), d.size()) + 1;
    if (d.size() <= 8) {
      std::vector<testing::ListInstance> brute;
      for (const auto& x : d) {
        testing::ListInstance li{x.predicted_class, {}};
        for (const auto& s : x.mscxs) li.mscxs.push_back(s.ids());
        brute.push_back(li);
      }
      ok = ok && testing::perfect_list_exists(brute);
      ++brute_checked;
    }
    if (!ok) ++failures;
  }
  return {failures == 0 && datasets >= 50,
          fmt("%zu planted datasets (flat and nested), %zu brute-force confirmed, %zu failures", datasets,
              brute_checked, failures)};
}

Outcome fidelity_bounds() {
  std::size_t terms = 0;
  std::size_t bad = 0;
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto g = synth::generate(small_config(500 + seed, 10));
    SyntheticOracle oracle(g.model, g.dataset.instances);
    for (const auto& x : g.dataset.instances) {
      const auto sets = beam_add(oracle, x, x.predicted_class, SearchConfig{}).concept_sets();
      if (sets.empty()) continue;
      for (double t : fidelity_minus_detail(oracle, x, x.predicted_class, sets).terms) {
        ++terms;
        if (!(t >= 0.95)) ++bad;
      }
      const double fp = fidelity_plus(oracle, x, x.predicted_class, sets);
      if (!(fp >= 0.0 && fp <= 1.0)) ++bad;
    }
  }

  // Five hand-worked instances over one additive class.
  const SyntheticModel model({{0.9, 0.05, 0.05, 0.96, 0.04, 1.0}}, true, 0);
  auto inst = [&](const std::string& id, ConceptSet objects) {
    Instance x;
    x.id = id;
    x.objects = std::move(objects);
    x.reference_scores = synthetic_scores(model, x.objects);
    return x;
  };
  const std::vector<Instance> five{inst("a", {0, 1, 2}), inst("b", {3, 4}), inst("c", {5}),
                                   inst("d", {3, 5}), inst("e", {1, 4, 5})};
  SyntheticOracle oracle(model, five);
  ExplainOptions opts;
  const auto run = explain_dataset(oracle, five, opts);
  const auto rep = aggregate_fidelity(oracle, five, run.explanations);
  // fid- = 0.95, 0.96, 1, 1, 2.09/2.18; fid+ = 0, 0.04, 0, 0, 0.
  const double err = std::max({std::abs(rep.fid_minus_mean - 0.9737431192660551),
                               std::abs(rep.fid_minus_std - 0.021713051637122477),
                               std::abs(rep.fid_plus_mean - 0.008), std::abs(rep.fid_plus_std - 0.016)});
  return {bad == 0 && terms > 0 && err <= 1e-9 && rep.n_instances == 5,
          fmt("%zu fidelity- terms, %zu out of bounds; fixture fid- %.6f+-%.6f fid+ %.4f+-%.4f, max error %.1e",
              terms, bad, rep.fid_minus_mean, rep.fid_minus_std, rep.fid_plus_mean, rep.fid_plus_std, err)};
}

Outcome bedroom_fixture() {
  testing::BedroomFixture fx;
  SyntheticOracle oracle(fx.model, {fx.instance});
  const auto brute = testing::brute_pmin(fx.instance.objects.ids(), testing::additive({0.9, 0.05, 0.05}), 0.95);
  const auto e = beam_add(oracle, fx.instance, 0, SearchConfig{});
  const auto sets = e.concept_sets();
  const double fp = fidelity_plus(oracle, fx.instance, 0, sets);
  const double fm = fidelity_minus(oracle, fx.instance, 0, sets);
  std::string names;
  for (const auto& s : sets) {
    const auto n = fx.vocab.decode(s);
    names += (names.empty() ? "{" : ", {") + n[0] + "," + n[1] + "}";
  }
  const bool ok = as_ids(e) == brute && brute == std::set<testing::Ids>{{0, 1}, {0, 2}} && fp == 0.0 &&
                  std::abs(fm - 0.95) <= 1e-12;
  return {ok, fmt("P_min {%s}, Fid+ %.6f, Fid- %.12f", names.c_str(), fp, fm)};
}

struct PipelineOutput {
  std::string explanations;
  std::string coverings;
  std::string list;
  std::string csv;
  std::string report;
  std::vector<std::vector<double>> support_curves;
  std::size_t support_sizes = 0;
};

PipelineOutput run_pipeline(std::uint64_t seed, std::size_t workers) {
  synth::GeneratorConfig gcfg;
  gcfg.num_classes = 4;
  gcfg.vocab_size = 24;
  gcfg.instances_per_class = 25;
  gcfg.seed = seed;
  const auto g = synth::generate(gcfg);
  const auto& ds = g.dataset;
  auto oracle = std::make_shared<SyntheticOracle>(g.model, ds.instances);
  ExplainOptions opts;
  opts.workers = workers;
  const auto run = explain_dataset(*oracle, ds.instances, opts);

  PipelineOutput out;
  for (const auto& e : run.explanations) {
    out.explanations += io::explanation_to_json(e, ds.vocab, ds.classes).dump() + "\n";
  }
  const auto split = split_dataset(ds.instances, 0.8, seed);
  std::vector<CompleteExplanation> support_expl;
  for (const auto& e : run.explanations) {
    if (in_support(e.instance_id, 0.8, seed)) support_expl.push_back(e);
  }
  const auto support = join_explanations(split.support, support_expl);
  const auto validation = join_explanations(split.validation, run.explanations);
  io::json covers = io::json::array();
  for (ClassId c = 0; c < ds.classes.size(); ++c) {
    const auto phi = build_covering(c, support_expl);
    covers.push_back(io::covering_to_json(phi, ds.vocab, ds.classes));
    std::vector<ExplainedInstance> sup_c;
    std::vector<ExplainedInstance> val_c;
    for (const auto& x : support) {
      if (x.predicted_class == c && !x.mscxs.empty()) sup_c.push_back(x);
    }
    for (const auto& x : validation) {
      if (x.predicted_class == c) val_c.push_back(x);
    }
    const auto sc = eval_dnf_coverage(phi, sup_c, MatchMode::kMscx);
    const auto vc = eval_dnf_coverage(phi, val_c, MatchMode::kPresence);
    out.csv += coverage_csv(sc.curve, vc.curve);
    if (!sup_c.empty()) {
      out.support_curves.push_back(sc.curve);
      ++out.support_sizes;
    }
  }
  out.coverings = covers.dump(2);
  out.list = io::list_to_json(explanation_list(support), ds.vocab, ds.classes).dump(2);
  const auto rep = aggregate_fidelity(*oracle, ds.instances, run.explanations);
  io::json r;
  r["fid_plus_mean"] = rep.fid_plus_mean;
  r["fid_plus_std"] = rep.fid_plus_std;
  r["fid_minus_mean"] = rep.fid_minus_mean;
  r["fid_minus_std"] = rep.fid_minus_std;
  out.report = r.dump(2);
  return out;
}

Outcome coverage_curve() {
  std::size_t curves = 0;
  std::size_t bad = 0;
  bool schema = true;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto out = run_pipeline(600 + seed, 1);
    for (const auto& c : out.support_curves) {
      ++curves;
      if (c.empty() || !std::is_sorted(c.begin(), c.end()) || c.back() != 1.0) ++bad;
    }
    std::istringstream csv(out.csv);
    std::string line;
    while (std::getline(csv, line)) {
      if (line.rfind("clause_index", 0) == 0) {
        schema = schema && line == "clause_index,support_coverage_pct,validation_coverage_pct";
      } else {
        int idx = 0;
        double a = 0;
        double b = 0;
        schema = schema && std::sscanf(line.c_str(), "%d,%lf,%lf", &idx, &a, &b) == 3 && idx >= 1 &&
                 a >= 0.0 && a <= 100.0 && b >= 0.0 && b <= 100.0;
      }
    }
  }
  return {bad == 0 && curves > 0 && schema,
          fmt("%zu per-class support curves, %zu not ending at 100%% or decreasing, CSV schema %s", curves, bad,
              schema ? "stable" : "broken")};
}

Outcome determinism() {
  std::size_t differing = 0;
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto a = run_pipeline(700 + seed, 1);
    const auto b = run_pipeline(700 + seed, 1);
    const auto c = run_pipeline(700 + seed, 4);
    for (const auto* o : {&b, &c}) {
      if (a.explanations != o->explanations || a.coverings != o->coverings || a.list != o->list ||
          a.csv != o->csv || a.report != o->report) {
        ++differing;
      }
    }
  }
  return {differing == 0, fmt("3 seeds x (rerun, 4 workers): %zu differing outputs", differing)};
}

Outcome query_budget() {
  std::size_t runs = 0;
  std::size_t over = 0;
  double worst = 0.0;
  std::string example;
  const std::vector<std::size_t> beams{1, 2, 3, 5, 8, 16};
  const std::vector<std::optional<std::size_t>> succs{5, std::nullopt};
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto g = synth::generate(small_config(800 + seed, 12));
    SyntheticOracle oracle(g.model, g.dataset.instances);
    for (auto b : beams) {
      for (auto s : succs) {
        SearchConfig cfg;
        cfg.beam_width = b;
        cfg.max_successors = s;
        for (const auto& x : g.dataset.instances) {
          const auto r = beam_add_traced(oracle, x, x.predicted_class, cfg);
          const double k = static_cast<double>(x.objects.size());
          const double d = static_cast<double>(r.stats.max_mscx_size);
          const double budget = static_cast<double>(b) * d * k +
                                static_cast<double>(r.stats.sufficient_collected) * d * d;
          const double ratio = static_cast<double>(r.stats.oracle_queries) / budget;
          ++runs;
          if (ratio > 1.0) {
            ++over;
            if (ratio > worst) {
              example = fmt(" (worst: B=%zu k=%zu d*=%zu |S_suf|=%zu depth=%zu queries=%zu budget=%.0f)", b,
                            x.objects.size(), r.stats.max_mscx_size, r.stats.sufficient_collected,
                            r.stats.depth_reached, r.stats.oracle_queries, budget);
            }
          }
          worst = std::max(worst, ratio);
        }
      }
    }
  }
  return {over == 0, fmt("%zu instrumented runs, %zu over budget, max queries/budget %.3f%s", runs, over, worst,
                         example.c_str())};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"theorem1-equivalence", theorem1_equivalence},
      {"soundness", soundness},
      {"theorem2-greedy-cover", theorem2},
      {"theorem3-explanation-list", theorem3},
      {"fidelity-bounds", fidelity_bounds},
      {"bedroom-fixture", bedroom_fixture},
      {"coverage-curve", coverage_curve},
      {"determinism", determinism},
      {"query-budget", query_budget},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
