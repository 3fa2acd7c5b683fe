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

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

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

namespace py = pybind11;
using namespace lgx;

namespace {

class PyOracle : public Oracle, public py::trampoline_self_life_support {
 public:
  double score(const ScoreQuery& q) override { PYBIND11_OVERRIDE_PURE(double, Oracle, score, q); }
};

std::vector<std::vector<ConceptId>> sets_of(const CompleteExplanation& e) {
  std::vector<std::vector<ConceptId>> out;
  for (const auto& m : e.mscxs) out.push_back(m.concepts.ids());
  return out;
}

py::dict stats_dict(const SearchStats& s) {
  py::dict d;
  d["oracle_queries"] = s.oracle_queries;
  d["sufficient_collected"] = s.sufficient_collected;
  d["depth_reached"] = s.depth_reached;
  d["max_mscx_size"] = s.max_mscx_size;
  return d;
}

}  // namespace

PYBIND11_MODULE(_lgx, m) {
  m.doc() = "Concept-based local and global explanations for black-box classifiers";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<VocabularyError>(m, "VocabularyError", base);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<ConfigError>(m, "ConfigError", base);
  py::register_exception<SearchError>(m, "SearchError", base);
  py::register_exception<OracleError>(m, "OracleError", base);

  py::class_<ConceptSet>(m, "ConceptSet")
      .def(py::init<>())
      .def(py::init([](const std::vector<ConceptId>& ids) { return ConceptSet::from_ids(ids); }))
      .def("ids", &ConceptSet::ids)
      .def("contains", &ConceptSet::contains)
      .def("issubset", &ConceptSet::is_subset_of)
      .def("union", &ConceptSet::united)
      .def("__len__", &ConceptSet::size)
      .def("__contains__", &ConceptSet::contains)
      .def("__iter__", [](const ConceptSet& s) { return py::iter(py::cast(s.ids())); })
      .def("__hash__", &ConceptSet::hash)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__le__", [](const ConceptSet& a, const ConceptSet& b) { return a.is_subset_of(b); })
      .def("__repr__", [](const ConceptSet& s) { return "ConceptSet(" + s.to_string() + ")"; });
  py::implicitly_convertible<py::list, ConceptSet>();
  py::implicitly_convertible<py::tuple, ConceptSet>();

  py::class_<Vocabulary>(m, "Vocabulary")
      .def(py::init<std::vector<std::string>>())
      .def_property_readonly("names", &Vocabulary::names)
      .def("id", &Vocabulary::id)
      .def("name", &Vocabulary::name)
      .def("encode", &Vocabulary::encode)
      .def("decode", &Vocabulary::decode)
      .def("__len__", &Vocabulary::size);

  py::class_<ClassLabels>(m, "ClassLabels")
      .def(py::init<std::vector<std::string>>())
      .def_property_readonly("names", &ClassLabels::names)
      .def("id", &ClassLabels::id)
      .def("name", &ClassLabels::name)
      .def("__len__", &ClassLabels::size);

  py::class_<Instance>(m, "Instance")
      .def(py::init([](std::string id, ConceptSet objects, ClassId predicted_class,
                       std::optional<ClassId> true_class, std::map<ClassId, double> scores) {
             Instance x{std::move(id), std::move(objects), predicted_class, true_class, std::move(scores)};
             x.validate();
             return x;
           }),
           py::arg("id"), py::arg("objects"), py::arg("predicted_class") = 0, py::arg("true_class") = py::none(),
           py::arg("reference_scores") = std::map<ClassId, double>{})
      .def_readwrite("id", &Instance::id)
      .def_readwrite("objects", &Instance::objects)
      .def_readwrite("predicted_class", &Instance::predicted_class)
      .def_readwrite("true_class", &Instance::true_class)
      .def_readwrite("reference_scores", &Instance::reference_scores)
      .def("__repr__", [](const Instance& x) { return "Instance(" + x.id + ", " + x.objects.to_string() + ")"; });

  py::class_<Dataset>(m, "Dataset")
      .def_readonly("vocab", &Dataset::vocab)
      .def_readonly("classes", &Dataset::classes)
      .def_readonly("instances", &Dataset::instances)
      .def("__len__", [](const Dataset& d) { return d.instances.size(); });

  m.def("read_dataset", &io::read_dataset, py::arg("path"), py::arg("vocab") = std::filesystem::path{},
        py::arg("classes") = std::filesystem::path{});
  m.def("write_dataset", &io::write_dataset, py::arg("path"), py::arg("dataset"));

  py::class_<ScoreQuery>(m, "ScoreQuery")
      .def(py::init<std::string, ClassId, ConceptSet>(), py::arg("instance_id"), py::arg("class_id"),
           py::arg("subset"))
      .def_readonly("instance_id", &ScoreQuery::instance_id)
      .def_readonly("class_id", &ScoreQuery::class_id)
      .def_readonly("subset", &ScoreQuery::subset);

  py::class_<Oracle, PyOracle, py::smart_holder>(m, "Oracle",
                                                  "Subclass and implement score(query) to plug in a model.")
      .def(py::init<>())
      .def("score", &Oracle::score)
      .def("score_batch", [](Oracle& o, const std::vector<ScoreQuery>& qs) { return o.score_batch(qs); });

  py::class_<SyntheticModel>(m, "SyntheticModel")
      .def(py::init<std::vector<std::vector<double>>, bool, std::uint64_t>(), py::arg("weights"),
           py::arg("monotone") = true, py::arg("seed") = 0)
      .def_property_readonly("weights", &SyntheticModel::weights)
      .def_property_readonly("monotone", &SyntheticModel::monotone)
      .def("score", &SyntheticModel::score, py::arg("class_id"), py::arg("subset"))
      .def("predict", [](const SyntheticModel& model, const ConceptSet& s) { return synthetic_predict(model, s); })
      .def("scores", [](const SyntheticModel& model, const ConceptSet& s) { return synthetic_scores(model, s); });

  py::class_<SyntheticOracle, Oracle, py::smart_holder>(m, "SyntheticOracle")
      .def(py::init<SyntheticModel>(), py::arg("model"))
      .def(py::init<SyntheticModel, const std::vector<Instance>&>(), py::arg("model"), py::arg("instances"));

  py::class_<TableOracle, Oracle, py::smart_holder>(m, "TableOracle")
      .def_static("load", &TableOracle::load, py::arg("path"), py::arg("vocab"), py::arg("classes"))
      .def("add", &TableOracle::add)
      .def("__len__", &TableOracle::size);

  py::class_<ExternalOracle, Oracle, py::smart_holder>(m, "ExternalOracle")
      .def(py::init([](std::string command, Vocabulary vocab, ClassLabels classes, double timeout_s) {
             return std::make_unique<ExternalOracle>(
                 std::move(command), std::move(vocab), std::move(classes),
                 std::chrono::milliseconds(static_cast<long long>(timeout_s * 1000.0)));
           }),
           py::arg("command"), py::arg("vocab"), py::arg("classes"), py::arg("timeout") = 30.0);

  py::class_<CachedOracle, Oracle, py::smart_holder>(m, "CachedOracle")
      .def(py::init<std::shared_ptr<Oracle>, std::optional<std::size_t>>(), py::arg("inner"),
           py::arg("capacity") = py::none())
      .def("stats",
           [](const CachedOracle& c) {
             const auto s = c.stats();
             py::dict d;
             d["queries"] = s.query_count;
             d["cache_hits"] = s.cache_hits;
             return d;
           })
      .def("__len__", &CachedOracle::size);

  py::class_<SearchConfig>(m, "SearchConfig")
      .def(py::init([](double tau_p, std::size_t beam_width, std::optional<std::size_t> max_successors,
                       std::optional<std::size_t> max_depth) {
             SearchConfig c;
             c.tau_p = tau_p;
             c.beam_width = beam_width;
             c.max_successors = max_successors;
             c.max_depth = max_depth;
             c.validate();
             return c;
           }),
           py::arg("tau_p") = 0.95, py::arg("beam_width") = 3, py::arg("max_successors") = 5,
           py::arg("max_depth") = py::none())
      .def_readwrite("tau_p", &SearchConfig::tau_p)
      .def_readwrite("beam_width", &SearchConfig::beam_width)
      .def_readwrite("max_successors", &SearchConfig::max_successors)
      .def_readwrite("max_depth", &SearchConfig::max_depth);

  py::class_<CompleteExplanation>(m, "CompleteExplanation")
      .def_readonly("instance_id", &CompleteExplanation::instance_id)
      .def_readonly("class_id", &CompleteExplanation::class_id)
      .def_property_readonly("sets", &sets_of)
      .def_property_readonly("ratios",
                             [](const CompleteExplanation& e) {
                               std::vector<double> r;
                               for (const auto& mx : e.mscxs) r.push_back(mx.score_ratio);
                               return r;
                             })
      .def_property_readonly("found", [](const CompleteExplanation& e) { return e.status == SearchStatus::kFound; })
      .def("__len__", [](const CompleteExplanation& e) { return e.mscxs.size(); });

  m.def("beam_add",
        [](Oracle& o, const Instance& x, std::optional<ClassId> cls, const SearchConfig& cfg) {
          const auto r = beam_add_traced(o, x, cls.value_or(x.predicted_class), cfg);
          return py::make_tuple(r.explanation, stats_dict(r.stats));
        },
        py::arg("oracle"), py::arg("instance"), py::arg("class_id") = py::none(), py::arg("config") = SearchConfig{},
        "Beam search for the MSCXs of an instance; returns (explanation, stats).");
  m.def("exact_complete_explanation",
        [](Oracle& o, const Instance& x, std::optional<ClassId> cls, double tau, std::size_t k_limit) {
          return exact_complete_explanation(o, x, cls.value_or(x.predicted_class), tau, k_limit);
        },
        py::arg("oracle"), py::arg("instance"), py::arg("class_id") = py::none(), py::arg("tau_p") = 0.95,
        py::arg("k_limit") = 15);
  m.def("is_sufficient", &is_sufficient, py::arg("oracle"), py::arg("instance"), py::arg("class_id"),
        py::arg("subset"), py::arg("tau_p") = 0.95);
  m.def("minimize_set", &minimize_set, py::arg("oracle"), py::arg("instance"), py::arg("class_id"),
        py::arg("subset"), py::arg("tau_p") = 0.95);
  m.def("explain_dataset",
        [](Oracle& o, const std::vector<Instance>& xs, const SearchConfig& cfg, bool exact, std::size_t workers) {
          ExplainOptions opts{cfg, exact ? ExplainMethod::kExact : ExplainMethod::kBeam, workers};
          py::gil_scoped_release release;
          return explain_dataset(o, xs, opts).explanations;
        },
        py::arg("oracle"), py::arg("instances"), py::arg("config") = SearchConfig{}, py::arg("exact") = false,
        py::arg("workers") = 1);

  m.def("fidelity_plus", [](Oracle& o, const Instance& x, ClassId c, const std::vector<ConceptSet>& p) {
    return fidelity_plus(o, x, c, p);
  });
  m.def("fidelity_minus", [](Oracle& o, const Instance& x, ClassId c, const std::vector<ConceptSet>& p) {
    return fidelity_minus(o, x, c, p);
  });
  m.def("aggregate_fidelity",
        [](Oracle& o, const std::vector<Instance>& xs, const std::vector<CompleteExplanation>& e) {
          const auto r = aggregate_fidelity(o, xs, e);
          py::dict d;
          d["fid_plus_mean"] = r.fid_plus_mean;
          d["fid_plus_std"] = r.fid_plus_std;
          d["fid_minus_mean"] = r.fid_minus_mean;
          d["fid_minus_std"] = r.fid_minus_std;
          d["n_instances"] = r.n_instances;
          d["n_skipped"] = r.n_skipped;
          return d;
        });

  py::class_<MdnfClause>(m, "MdnfClause")
      .def_readonly("concepts", &MdnfClause::concepts)
      .def_readonly("covered_total", &MdnfClause::covered_total)
      .def_readonly("covered_marginal", &MdnfClause::covered_marginal)
      .def_readonly("d_total_pct", &MdnfClause::d_total_pct)
      .def_readonly("d_marginal_pct", &MdnfClause::d_marginal_pct);

  py::class_<CoveringExplanation>(m, "CoveringExplanation")
      .def_readonly("class_id", &CoveringExplanation::class_id)
      .def_readonly("clauses", &CoveringExplanation::clauses)
      .def_readonly("support_size", &CoveringExplanation::support_size)
      .def_readonly("unexplained", &CoveringExplanation::unexplained)
      .def("formula",
           [](const CoveringExplanation& c, const Vocabulary& v, const std::string& display, double min_pct) {
             return io::format_formula(c, v, display == "total" ? io::PctDisplay::kTotal : io::PctDisplay::kMarginal,
                                       min_pct);
           },
           py::arg("vocab"), py::arg("display") = "marginal", py::arg("min_pct") = 0.0);

  m.def("build_covering", [](ClassId c, const std::vector<CompleteExplanation>& e) { return build_covering(c, e); },
        py::arg("class_id"), py::arg("explanations"));

  py::class_<ExplainedInstance>(m, "ExplainedInstance")
      .def_readonly("id", &ExplainedInstance::id)
      .def_readonly("objects", &ExplainedInstance::objects)
      .def_readonly("predicted_class", &ExplainedInstance::predicted_class)
      .def_readonly("mscxs", &ExplainedInstance::mscxs);
  m.def("join_explanations", &join_explanations, py::arg("instances"), py::arg("explanations"));

  py::class_<ExplanationRule>(m, "ExplanationRule")
      .def_readonly("antecedent", &ExplanationRule::antecedent)
      .def_readonly("class_id", &ExplanationRule::class_id)
      .def_readonly("d_pct", &ExplanationRule::d_pct);

  py::class_<ExplanationList>(m, "ExplanationList")
      .def_readonly("rules", &ExplanationList::rules)
      .def_readonly("default_class", &ExplanationList::default_class)
      .def("__len__", &ExplanationList::size)
      .def("classify",
           [](const ExplanationList& l, const ExplainedInstance& x, const std::string& mode) {
             return classify_with_list(l, x, mode == "mscx" ? MatchMode::kMscx : MatchMode::kPresence);
           },
           py::arg("instance"), py::arg("mode") = "mscx")
      .def("accuracy",
           [](const ExplanationList& l, const std::vector<ExplainedInstance>& xs, const std::string& mode) {
             return list_accuracy(l, xs, mode == "mscx" ? MatchMode::kMscx : MatchMode::kPresence);
           },
           py::arg("instances"), py::arg("mode") = "mscx");
  m.def("explanation_list", [](const std::vector<ExplainedInstance>& xs) { return explanation_list(xs); },
        py::arg("instances"));

  m.def("generate",
        [](std::size_t classes, std::size_t vocab, std::size_t per_class, std::size_t kmin, std::size_t kmax,
           double sparsity, std::size_t dominant, bool disjoint, std::uint64_t seed) {
          synth::GeneratorConfig c;
          c.num_classes = classes;
          c.vocab_size = vocab;
          c.instances_per_class = per_class;
          c.min_objects = kmin;
          c.max_objects = kmax;
          c.weight_sparsity = sparsity;
          c.dominant_concepts = dominant;
          c.disjoint_vocab = disjoint;
          c.seed = seed;
          auto g = synth::generate(c);
          return py::make_tuple(std::move(g.dataset), std::move(g.model));
        },
        py::arg("classes") = 5, py::arg("vocab") = 40, py::arg("per_class") = 50, py::arg("kmin") = 4,
        py::arg("kmax") = 8, py::arg("sparsity") = 0.5, py::arg("dominant") = 3, py::arg("disjoint") = false,
        py::arg("seed") = 0, "Synthetic dataset and monotone model; returns (dataset, model).");
  m.def("planted_list_dataset",
        [](std::size_t classes, std::size_t per_class, bool nested, std::uint64_t seed) {
          synth::PlantedConfig c;
          c.num_classes = classes;
          c.instances_per_class = per_class;
          c.nested = nested;
          c.seed = seed;
          auto p = synth::planted_list_dataset(c);
          return py::make_tuple(std::move(p.dataset), std::move(p.model), std::move(p.plant));
        },
        py::arg("classes") = 3, py::arg("per_class") = 2, py::arg("nested") = false, py::arg("seed") = 0,
        "Dataset with a planted perfect explanation list; returns (dataset, model, plant).");
}
