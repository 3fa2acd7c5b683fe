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

// lgx: command line driver.
//
//   lgx gen     --dir run --seed 7
//   lgx explain --dir run
//   lgx cover   --dir run --min-pct 3
//   lgx mclist  --dir run
//   lgx eval    --dir run
//   lgx verify  --seeds 100
//
// Every stage reads and writes fixed file names inside the run directory;
// individual inputs can be overridden by flag. Exit codes: 0 success,
// 1 usage or input error, 2 oracle failure, 3 verification failure.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "lgx/cached_oracle.hpp"
#include "lgx/error.hpp"
#include "lgx/external_oracle.hpp"
#include "lgx/global.hpp"
#include "lgx/io.hpp"
#include "lgx/metrics.hpp"
#include "lgx/pipeline.hpp"
#include "lgx/search.hpp"
#include "lgx/synth.hpp"
#include "lgx/table_oracle.hpp"

namespace fs = std::filesystem;
using lgx::io::json;

namespace {

constexpr int kExitInput = 1;
constexpr int kExitOracle = 2;
constexpr int kExitVerify = 3;

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input files of a run directory, each overridable.
struct Inputs {
  fs::path dir = ".";
  fs::path data;
  fs::path vocab;
  fs::path classes;
  fs::path explanations;

  fs::path or_default(const fs::path& p, const char* name) const { return p.empty() ? dir / name : p; }
  fs::path data_path() const { return or_default(data, "dataset.jsonl"); }
  fs::path explanations_path() const { return or_default(explanations, "explanations.jsonl"); }

  lgx::Dataset load() const {
    const fs::path v = or_default(vocab, "vocab.json");
    const fs::path c = or_default(classes, "classes.json");
    return lgx::io::read_dataset(data_path(), fs::exists(v) ? v : fs::path{}, fs::exists(c) ? c : fs::path{});
  }
};

void add_inputs(CLI::App* cmd, Inputs& in, bool with_explanations) {
  cmd->add_option("--dir", in.dir, "Run directory")->capture_default_str();
  cmd->add_option("--data", in.data, "Dataset JSON lines (default <dir>/dataset.jsonl)");
  cmd->add_option("--vocab", in.vocab, "Vocabulary file (default <dir>/vocab.json, inferred if absent)");
  cmd->add_option("--classes", in.classes, "Class list (default <dir>/classes.json, inferred if absent)");
  if (with_explanations) {
    cmd->add_option("--explanations", in.explanations, "MSCX file (default <dir>/explanations.jsonl)");
  }
}

struct OracleOptions {
  fs::path model;
  fs::path table;
  std::string external;
  std::optional<double> timeout;
  std::size_t cache_cap = 0;
};

void add_oracle(CLI::App* cmd, OracleOptions& o) {
  auto* model = cmd->add_option("--model", o.model, "Synthetic model file (default <dir>/model.json)");
  auto* table = cmd->add_option("--table", o.table, "Precomputed score table (JSON lines)");
  auto* ext = cmd->add_option("--external", o.external, "Adapter command speaking the line protocol");
  model->excludes(table)->excludes(ext);
  table->excludes(ext);
  cmd->add_option("--timeout", o.timeout,
                  "Adapter timeout in seconds (default $LGX_ORACLE_TIMEOUT, else 30)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--cache-cap", o.cache_cap, "Bound the score cache (0 = unbounded)")->capture_default_str();
}

std::shared_ptr<lgx::CachedOracle> make_oracle(const OracleOptions& o, const Inputs& in, const lgx::Dataset& ds,
                                               json& manifest) {
  std::shared_ptr<lgx::Oracle> inner;
  if (!o.external.empty()) {
    const auto timeout = o.timeout ? std::chrono::milliseconds(std::llround(*o.timeout * 1000.0))
                                   : lgx::ExternalOracle::timeout_from_env();
    inner = std::make_shared<lgx::ExternalOracle>(o.external, ds.vocab, ds.classes, timeout);
    manifest["oracle"] = {{"kind", "external"}, {"command", o.external}, {"timeout_ms", timeout.count()}};
  } else if (!o.table.empty()) {
    inner = std::make_shared<lgx::TableOracle>(lgx::TableOracle::load(o.table, ds.vocab, ds.classes));
    manifest["oracle"] = {{"kind", "table"}, {"path", o.table.string()}};
  } else {
    const fs::path path = in.or_default(o.model, "model.json");
    auto model = lgx::io::model_from_json(lgx::io::read_json(path), ds.vocab, ds.classes);
    inner = std::make_shared<lgx::SyntheticOracle>(std::move(model), ds.instances);
    manifest["oracle"] = {{"kind", "synthetic"}, {"path", path.string()}};
  }
  std::optional<std::size_t> cap;
  if (o.cache_cap > 0) cap = o.cache_cap;
  return std::make_shared<lgx::CachedOracle>(std::move(inner), cap);
}

json oracle_stats(const lgx::CachedOracle& oracle) {
  const auto st = oracle.stats();
  return {{"queries", st.query_count}, {"cache_hits", st.cache_hits}};
}

json base_manifest(const CLI::App* cmd) {
  json m;
  m["command"] = cmd->get_name();
  m["version"] = LGX_VERSION;
  json flags = json::object();
  for (const auto* opt : cmd->get_options()) {
    if (opt->get_name() == "--help" || opt->count() == 0) continue;
    const auto res = opt->results();
    flags[opt->get_name()] = res.size() == 1 ? json(res.front()) : json(res);
  }
  m["flags"] = std::move(flags);
  return m;
}

void write_manifest(const fs::path& dir, const std::string& cmd, const json& m) {
  lgx::io::write_json(dir / ("manifest_" + cmd + ".json"), m);
}

json histogram_json(const std::map<std::size_t, std::size_t>& h) {
  json j = json::object();
  for (const auto& [size, count] : h) j[std::to_string(size)] = count;
  return j;
}

// ---------------------------------------------------------------------------
// gen

struct GenOptions {
  fs::path dir = ".";
  lgx::synth::GeneratorConfig gen;
  lgx::synth::PlantedConfig planted;
  bool use_planted = false;
};

void run_gen(const GenOptions& o, const CLI::App* cmd) {
  fs::create_directories(o.dir);
  json manifest = base_manifest(cmd);
  lgx::Dataset ds;
  if (o.use_planted) {
    auto p = lgx::synth::planted_list_dataset(o.planted);
    lgx::io::write_json(o.dir / "model.json", lgx::io::model_to_json(p.model, p.dataset.vocab, p.dataset.classes));
    lgx::io::write_json(o.dir / "planted_list.json", lgx::io::list_to_json(p.plant, p.dataset.vocab, p.dataset.classes));
    ds = std::move(p.dataset);
  } else {
    auto g = lgx::synth::generate(o.gen);
    lgx::io::write_json(o.dir / "model.json", lgx::io::model_to_json(g.model, g.dataset.vocab, g.dataset.classes));
    ds = std::move(g.dataset);
  }
  lgx::io::write_dataset(o.dir / "dataset.jsonl", ds);
  lgx::io::write_vocabulary(o.dir / "vocab.json", ds.vocab);
  lgx::io::write_classes(o.dir / "classes.json", ds.classes);
  manifest["instances"] = ds.instances.size();
  write_manifest(o.dir, "gen", manifest);
  std::cout << "wrote " << ds.instances.size() << " instances over " << ds.vocab.size() << " concepts and "
            << ds.classes.size() << " classes to " << o.dir.string() << "\n";
}

// ---------------------------------------------------------------------------
// explain

struct ExplainCli {
  Inputs in;
  OracleOptions oracle;
  double tau = 0.95;
  std::size_t beam = 3;
  std::string successors = "5";
  std::size_t max_depth = 0;
  bool exact = false;
  std::size_t workers = 1;
  fs::path out;
};

void run_explain(const ExplainCli& o, const CLI::App* cmd) {
  const auto ds = o.in.load();
  json manifest = base_manifest(cmd);
  auto oracle = make_oracle(o.oracle, o.in, ds, manifest);

  lgx::ExplainOptions opts;
  opts.search.tau_p = o.tau;
  opts.search.beam_width = o.beam;
  if (o.successors == "0" || o.successors == "unlimited") {
    opts.search.max_successors = std::nullopt;
  } else {
    opts.search.max_successors = std::stoul(o.successors);
  }
  if (o.max_depth > 0) opts.search.max_depth = o.max_depth;
  opts.method = o.exact ? lgx::ExplainMethod::kExact : lgx::ExplainMethod::kBeam;
  opts.workers = o.workers;
  opts.search.validate();

  const auto run = lgx::explain_dataset(*oracle, ds.instances, opts);
  const fs::path out = o.out.empty() ? o.in.explanations_path() : o.out;
  if (out.has_parent_path()) fs::create_directories(out.parent_path());
  lgx::io::write_explanations(out, run.explanations, ds.vocab, ds.classes);

  std::size_t empty = 0;
  std::size_t mscxs = 0;
  for (const auto& e : run.explanations) {
    if (e.empty()) {
      ++empty;
      std::cerr << "warning: no sufficient set found for '" << e.instance_id << "'\n";
    }
    mscxs += e.mscxs.size();
  }
  manifest["instances"] = run.explanations.size();
  manifest["mscxs"] = mscxs;
  manifest["unexplained"] = empty;
  manifest["oracle_stats"] = oracle_stats(*oracle);
  manifest["mscx_size_histogram"] = histogram_json(lgx::mscx_size_histogram(run.explanations));
  write_manifest(out.has_parent_path() ? out.parent_path() : fs::path("."), "explain", manifest);
  std::cout << "explained " << run.explanations.size() << " instances: " << mscxs << " MSCXs, " << empty
            << " without a sufficient set; " << oracle->stats().query_count << " oracle queries, "
            << oracle->stats().cache_hits << " cache hits -> " << out.string() << "\n";
}

// ---------------------------------------------------------------------------
// cover / mclist / eval

struct SplitOptions {
  double support_frac = 0.8;
  std::uint64_t split_seed = 0;
};

void add_split(CLI::App* cmd, SplitOptions& s) {
  cmd->add_option("--support-frac", s.support_frac, "Share of instances in the support split")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("--split-seed", s.split_seed, "Seed of the support/validation hash")->capture_default_str();
}

struct Loaded {
  lgx::Dataset ds;
  std::vector<lgx::CompleteExplanation> expl;
  std::vector<lgx::CompleteExplanation> support_expl;
  std::vector<lgx::ExplainedInstance> support;
  std::vector<lgx::ExplainedInstance> validation;
};

Loaded load_explained(const Inputs& in, const SplitOptions& s) {
  Loaded l;
  l.ds = in.load();
  l.expl = lgx::io::read_explanations(in.explanations_path(), l.ds.vocab, l.ds.classes);
  const auto split = lgx::split_dataset(l.ds.instances, s.support_frac, s.split_seed);
  for (const auto& e : l.expl) {
    const auto* x = l.ds.find(e.instance_id);
    if (x == nullptr) throw lgx::ParseError("explanation for unknown instance '" + e.instance_id + "'");
    if (e.class_id == x->predicted_class && lgx::in_support(e.instance_id, s.support_frac, s.split_seed)) {
      l.support_expl.push_back(e);
    }
  }
  l.support = lgx::join_explanations(split.support, l.expl);
  l.validation = lgx::join_explanations(split.validation, l.expl);
  return l;
}

std::string cover_file(const lgx::ClassLabels& classes, lgx::ClassId c) {
  return "cover_" + classes.name(c) + ".json";
}

struct CoverCli {
  Inputs in;
  SplitOptions split;
  double min_pct = 0.0;
  std::string display = "marginal";
};

void run_cover(const CoverCli& o, const CLI::App* cmd) {
  const auto l = load_explained(o.in, o.split);
  const auto display = o.display == "total" ? lgx::io::PctDisplay::kTotal : lgx::io::PctDisplay::kMarginal;
  json manifest = base_manifest(cmd);
  json summary = json::object();
  std::string text;
  for (lgx::ClassId c = 0; c < l.ds.classes.size(); ++c) {
    const auto phi = lgx::build_covering(c, l.support_expl);
    const std::string& name = l.ds.classes.name(c);
    if (phi.support_size == 0) std::cerr << "warning: class '" << name << "' has no explained support instances\n";
    lgx::io::write_json(o.in.dir / cover_file(l.ds.classes, c), lgx::io::covering_to_json(phi, l.ds.vocab, l.ds.classes));
    const std::string formula = lgx::io::format_formula(phi, l.ds.vocab, display, o.min_pct);
    text += name + ": " + formula + "\n";
    std::cout << "Phi_" << name << " = " << (formula.empty() ? "(empty)" : formula) << "\n";
    summary[name] = {{"support_size", phi.support_size}, {"clauses", phi.clauses.size()},
                     {"unexplained", phi.unexplained.size()}};
  }
  lgx::io::write_text(o.in.dir / "formulas.txt", text);
  manifest["classes"] = std::move(summary);
  write_manifest(o.in.dir, "cover", manifest);
}

struct ListCli {
  Inputs in;
  SplitOptions split;
};

void run_mclist(const ListCli& o, const CLI::App* cmd) {
  const auto l = load_explained(o.in, o.split);
  const auto list = lgx::explanation_list(l.support);
  lgx::io::write_json(o.in.dir / "list.json", lgx::io::list_to_json(list, l.ds.vocab, l.ds.classes));
  const std::string text = lgx::io::format_list(list, l.ds.vocab, l.ds.classes);
  lgx::io::write_text(o.in.dir / "list.txt", text + "\n");
  json manifest = base_manifest(cmd);
  manifest["rules"] = list.size();
  manifest["support_accuracy_mscx"] = lgx::list_accuracy(list, l.support, lgx::MatchMode::kMscx);
  write_manifest(o.in.dir, "mclist", manifest);
  std::cout << list.size() << " rules (default included) -> " << (o.in.dir / "list.txt").string() << "\n";
}

struct EvalCli {
  Inputs in;
  OracleOptions oracle;
  SplitOptions split;
  std::string match = "presence";
};

void run_eval(const EvalCli& o, const CLI::App* cmd) {
  const auto l = load_explained(o.in, o.split);
  json manifest = base_manifest(cmd);
  auto oracle = make_oracle(o.oracle, o.in, l.ds, manifest);
  const auto mode = o.match == "mscx" ? lgx::MatchMode::kMscx : lgx::MatchMode::kPresence;

  json report;
  const auto fid = lgx::aggregate_fidelity(*oracle, l.ds.instances, l.expl);
  report["fidelity"] = {{"fid_plus_mean", fid.fid_plus_mean},   {"fid_plus_std", fid.fid_plus_std},
                        {"fid_minus_mean", fid.fid_minus_mean}, {"fid_minus_std", fid.fid_minus_std},
                        {"n_instances", fid.n_instances},       {"n_skipped", fid.n_skipped}};
  report["mscx_size_histogram"] = histogram_json(lgx::mscx_size_histogram(l.expl));

  const fs::path list_path = o.in.dir / "list.json";
  if (!fs::exists(list_path)) throw lgx::ParseError(list_path.string() + " not found; run `lgx mclist` first");
  const auto list = lgx::io::list_from_json(lgx::io::read_json(list_path), l.ds.vocab, l.ds.classes);
  json acc;
  for (const auto& [split_name, set] : {std::pair{"support", &l.support}, std::pair{"validation", &l.validation}}) {
    acc[split_name] = {{"mscx", lgx::list_accuracy(list, *set, lgx::MatchMode::kMscx)},
                       {"presence", lgx::list_accuracy(list, *set, lgx::MatchMode::kPresence)},
                       {"n", set->size()}};
  }
  report["list_accuracy"] = std::move(acc);

  json coverage = json::object();
  for (lgx::ClassId c = 0; c < l.ds.classes.size(); ++c) {
    const fs::path path = o.in.dir / cover_file(l.ds.classes, c);
    if (!fs::exists(path)) throw lgx::ParseError(path.string() + " not found; run `lgx cover` first");
    const auto phi = lgx::io::covering_from_json(lgx::io::read_json(path), l.ds.vocab, l.ds.classes);
    std::vector<lgx::ExplainedInstance> sup;
    std::vector<lgx::ExplainedInstance> val;
    for (const auto& x : l.support) {
      if (x.predicted_class == c && !x.mscxs.empty()) sup.push_back(x);
    }
    for (const auto& x : l.validation) {
      if (x.predicted_class == c) val.push_back(x);
    }
    const auto sc = lgx::eval_dnf_coverage(phi, sup, mode);
    const auto vc = lgx::eval_dnf_coverage(phi, val, mode);
    const std::string& name = l.ds.classes.name(c);
    lgx::io::write_text(o.in.dir / ("coverage_" + name + ".csv"), lgx::coverage_csv(sc.curve, vc.curve));
    coverage[name] = {{"support", sc.fraction}, {"validation", vc.fraction},
                      {"n_support", sup.size()}, {"n_validation", val.size()}};
  }
  report["coverage"] = std::move(coverage);
  report["match_mode"] = lgx::to_string(mode);
  lgx::io::write_json(o.in.dir / "report.json", report);
  manifest["oracle_stats"] = oracle_stats(*oracle);
  write_manifest(o.in.dir, "eval", manifest);
  std::printf("Fid+ %.4f +- %.4f   Fid- %.4f +- %.4f   (%zu instances, %zu skipped)\n", fid.fid_plus_mean,
              fid.fid_plus_std, fid.fid_minus_mean, fid.fid_minus_std, fid.n_instances, fid.n_skipped);
  std::printf("list accuracy: support %.4f, validation %.4f (mscx); validation %.4f (presence)\n",
              report["list_accuracy"]["support"]["mscx"].get<double>(),
              report["list_accuracy"]["validation"]["mscx"].get<double>(),
              report["list_accuracy"]["validation"]["presence"].get<double>());
}

// ---------------------------------------------------------------------------
// verify

struct VerifyCli {
  std::size_t seeds = 100;
  std::size_t kmax = 10;
  std::uint64_t seed = 0;
  double tau = 0.95;
};

void run_verify(const VerifyCli& o) {
  if (o.kmax < 1 || o.kmax > 15) throw lgx::ConfigError("--kmax must lie in [1, 15]");
  std::size_t instances = 0;
  std::size_t beam_mismatch = 0;
  std::size_t unsound = 0;
  std::size_t cover_runs = 0;
  std::size_t cover_violations = 0;
  std::size_t list_failures = 0;
  std::mt19937_64 rng(o.seed);
  lgx::SearchConfig defaults;
  defaults.tau_p = o.tau;

  for (std::size_t s = 0; s < o.seeds; ++s) {
    const std::uint64_t seed = o.seed + s;
    lgx::synth::GeneratorConfig g;
    g.num_classes = 2;
    g.vocab_size = std::max<std::size_t>(o.kmax, 12);
    g.instances_per_class = 2;
    g.min_objects = std::min<std::size_t>(3, o.kmax);
    g.max_objects = o.kmax;
    g.dominant_concepts = std::min<std::size_t>(3, g.vocab_size);
    g.seed = seed;
    const auto gen = lgx::synth::generate(g);
    lgx::SyntheticOracle oracle(gen.model, gen.dataset.instances);
    for (const auto& x : gen.dataset.instances) {
      lgx::SearchConfig cfg;
      cfg.tau_p = o.tau;
      cfg.beam_width = std::size_t{1} << x.objects.size();
      cfg.max_successors = std::nullopt;
      const auto beam = lgx::beam_add(oracle, x, x.predicted_class, cfg);
      const auto exact = lgx::exact_complete_explanation(oracle, x, x.predicted_class, o.tau);
      if (beam.concept_sets() != exact.concept_sets()) ++beam_mismatch;
      const auto narrow = lgx::beam_add(oracle, x, x.predicted_class, defaults);
      for (const auto& m : narrow.mscxs) {
        if (!lgx::is_sufficient(oracle, x, x.predicted_class, m.concepts, o.tau) ||
            !lgx::is_one_minimal(oracle, x, x.predicted_class, m.concepts, o.tau)) {
          ++unsound;
        }
      }
      ++instances;
    }

    // Greedy cover against the exact minimum on a random coverage map.
    const std::size_t n = 2 + rng() % 20;
    const std::size_t pool = 2 + rng() % 12;
    lgx::CoverageMap r;
    std::vector<std::string> support;
    for (std::size_t i = 0; i < n; ++i) {
      const std::string id = "x" + std::to_string(i);
      support.push_back(id);
      const std::size_t count = 1 + rng() % 3;
      for (std::size_t j = 0; j < count; ++j) r[lgx::ConceptSet{static_cast<lgx::ConceptId>(rng() % pool)}].push_back(id);
    }
    for (auto& [mask, ids] : r) {
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    }
    const auto phi = lgx::greedy_cover(support, r);
    const std::size_t m_star = lgx::exact_min_cover(support, r).size();
    std::size_t covered = 0;
    for (const auto& cl : phi.clauses) covered += cl.covered_marginal;
    ++cover_runs;
    if (covered != n ||
        static_cast<double>(phi.clauses.size()) > std::ceil(static_cast<double>(m_star) * std::log(static_cast<double>(n)))) {
      ++cover_violations;
    }

    lgx::synth::PlantedConfig pc;
    pc.num_classes = 2 + s % 3;
    pc.nested = s % 2 == 1;
    pc.seed = seed;
    const auto p = lgx::synth::planted_list_dataset(pc);
    lgx::SyntheticOracle poracle(p.model, p.dataset.instances);
    std::vector<lgx::CompleteExplanation> pe;
    for (const auto& x : p.dataset.instances) pe.push_back(lgx::beam_add(poracle, x, x.predicted_class, defaults));
    const auto d = lgx::join_explanations(p.dataset.instances, pe);
    if (lgx::list_accuracy(lgx::explanation_list(d), d, lgx::MatchMode::kMscx) != 1.0) ++list_failures;
  }

  std::printf("beam (B=2^k) vs exact: %zu instances, %zu mismatches\n", instances, beam_mismatch);
  std::printf("default beam soundness: %zu failures\n", unsound);
  std::printf("greedy cover: %zu runs, %zu violations of coverage or size bound\n", cover_runs, cover_violations);
  std::printf("planted lists: %zu seeds, %zu below accuracy 1.0\n", o.seeds, list_failures);
  if (beam_mismatch + unsound + cover_violations + list_failures > 0) {
    throw VerificationFailure("verification found violations");
  }
  std::printf("all checks passed\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concept-based local and global explanations for black-box classifiers"};
  app.set_version_flag("--version", LGX_VERSION);
  app.set_config("--config", "", "Read flags from a key=value file ([subcommand] sections allowed)");
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic dataset and model");
  gen_cmd->add_option("--dir,--out", gen.dir, "Output directory")->capture_default_str();
  gen_cmd->add_option("--classes", gen.gen.num_classes, "Number of classes")->capture_default_str();
  gen_cmd->add_option("--vocab", gen.gen.vocab_size, "Vocabulary size")->capture_default_str();
  gen_cmd->add_option("--per-class", gen.gen.instances_per_class, "Instances per class")->capture_default_str();
  gen_cmd->add_option("--kmin", gen.gen.min_objects, "Fewest objects per instance")->capture_default_str();
  gen_cmd->add_option("--kmax", gen.gen.max_objects, "Most objects per instance")->capture_default_str();
  gen_cmd->add_option("--sparsity", gen.gen.weight_sparsity, "Share of zeroed background weights")->capture_default_str();
  gen_cmd->add_option("--dominant", gen.gen.dominant_concepts, "Heavy concepts per class")->capture_default_str();
  gen_cmd->add_flag("--disjoint", gen.gen.disjoint_vocab, "Give each class its own vocabulary block");
  gen_cmd->add_flag("--planted", gen.use_planted, "Generate a dataset with a planted explanation list");
  gen_cmd->add_flag("--nested", gen.planted.nested, "Planted lists with shared masks");
  gen_cmd->add_option("--fillers", gen.planted.filler_concepts, "Filler concepts of planted datasets")->capture_default_str();
  std::uint64_t gen_seed = 0;
  gen_cmd->add_option("--seed", gen_seed, "Random seed")->capture_default_str();

  ExplainCli explain;
  auto* explain_cmd = app.add_subcommand("explain", "Compute the MSCXs of every instance");
  add_inputs(explain_cmd, explain.in, false);
  add_oracle(explain_cmd, explain.oracle);
  explain_cmd->add_option("--tau", explain.tau, "Sufficiency ratio")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  explain_cmd->add_option("--beam", explain.beam, "Beam width")->check(CLI::PositiveNumber)->capture_default_str();
  explain_cmd->add_option("--successors", explain.successors, "Successors per parent (0 or 'unlimited' for all)")
      ->capture_default_str();
  explain_cmd->add_option("--max-depth", explain.max_depth, "Stop after this subset size (0 = no cap)");
  explain_cmd->add_flag("--exact", explain.exact, "Enumerate every subset instead of beam search");
  explain_cmd->add_option("--workers", explain.workers, "Worker threads (0 = all cores)")->capture_default_str();
  explain_cmd->add_option("--out", explain.out, "Output file (default <dir>/explanations.jsonl)");

  CoverCli cover;
  auto* cover_cmd = app.add_subcommand("cover", "Build per-class covering explanations");
  add_inputs(cover_cmd, cover.in, true);
  add_split(cover_cmd, cover.split);
  cover_cmd->add_option("--min-pct", cover.min_pct, "Hide clauses below this percentage")->capture_default_str();
  cover_cmd->add_option("--display", cover.display, "Percentages shown in formulas")
      ->check(CLI::IsMember({"marginal", "total"}))
      ->capture_default_str();

  ListCli mclist;
  auto* list_cmd = app.add_subcommand("mclist", "Build the multi-class explanation list");
  add_inputs(list_cmd, mclist.in, true);
  add_split(list_cmd, mclist.split);

  EvalCli eval;
  auto* eval_cmd = app.add_subcommand("eval", "Fidelity, coverage curves and list accuracy");
  add_inputs(eval_cmd, eval.in, true);
  add_oracle(eval_cmd, eval.oracle);
  add_split(eval_cmd, eval.split);
  eval_cmd->add_option("--match", eval.match, "How clauses match instances")
      ->check(CLI::IsMember({"presence", "mscx"}))
      ->capture_default_str();

  VerifyCli verify;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check search, cover and list against brute force");
  verify_cmd->add_option("--seeds", verify.seeds, "Number of random seeds")->capture_default_str();
  verify_cmd->add_option("--kmax", verify.kmax, "Largest object count")->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "First seed")->capture_default_str();
  verify_cmd->add_option("--tau", verify.tau, "Sufficiency ratio")->check(CLI::Range(0.0, 1.0))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  }

  try {
    if (*gen_cmd) {
      gen.gen.seed = gen_seed;
      gen.planted.seed = gen_seed;
      gen.planted.num_classes = gen.gen.num_classes;
      gen.planted.instances_per_class = gen.gen.instances_per_class;
      run_gen(gen, gen_cmd);
    } else if (*explain_cmd) {
      run_explain(explain, explain_cmd);
    } else if (*cover_cmd) {
      run_cover(cover, cover_cmd);
    } else if (*list_cmd) {
      run_mclist(mclist, list_cmd);
    } else if (*eval_cmd) {
      run_eval(eval, eval_cmd);
    } else if (*verify_cmd) {
      run_verify(verify);
    }
  } catch (const VerificationFailure& e) {
    std::cerr << "lgx: " << e.what() << "\n";
    return kExitVerify;
  } catch (const lgx::OracleError& e) {
    std::cerr << "lgx: oracle failure: " << e.what() << "\n";
    return kExitOracle;
  } catch (const std::exception& e) {
    std::cerr << "lgx: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
