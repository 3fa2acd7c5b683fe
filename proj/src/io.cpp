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

#include "lgx/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "lgx/error.hpp"

namespace lgx::io {

namespace {

std::string where(const std::filesystem::path& path, std::size_t line) {
  return path.string() + ":" + std::to_string(line) + ": ";
}

std::vector<std::string> string_array(const json& j, const char* field) {
  if (!j.is_array()) throw ParseError(std::string("'") + field + "' must be an array of strings");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError(std::string("'") + field + "' must hold strings only");
    out.push_back(e.get<std::string>());
  }
  return out;
}

const json& require(const json& j, const char* field) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(field);
  if (it == j.end()) throw ParseError(std::string("missing field '") + field + "'");
  return *it;
}

std::string require_string(const json& j, const char* field) {
  const auto& v = require(j, field);
  if (!v.is_string()) throw ParseError(std::string("field '") + field + "' must be a string");
  return v.get<std::string>();
}

double require_number(const json& j, const char* field) {
  const auto& v = require(j, field);
  if (!v.is_number()) throw ParseError(std::string("field '") + field + "' must be a number");
  return v.get<double>();
}

json names_of(const ConceptSet& s, const Vocabulary& vocab) { return json(vocab.decode(s)); }

ConceptSet concepts_from(const json& j, const char* field, const Vocabulary& vocab) {
  const auto names = string_array(require(j, field), field);
  return vocab.encode(names);
}

std::string format_pct(double v) {
  std::ostringstream os;
  if (std::fabs(v - std::round(v)) < 1e-9) {
    os << static_cast<long long>(std::llround(v));
  } else {
    os.setf(std::ios::fixed);
    os.precision(1);
    os << v;
  }
  return os.str();
}

}  // namespace

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const json& j) {
  write_text(path, j.dump(2) + "\n");
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write " + path.string());
  out << text;
  if (!out) throw ParseError("write failed for " + path.string());
}

std::vector<json> read_json_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::vector<json> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(json::parse(line));
    } catch (const json::exception& e) {
      throw ParseError(where(path, n) + e.what());
    }
  }
  return out;
}

Vocabulary read_vocabulary(const std::filesystem::path& path) {
  const json j = read_json(path);
  try {
    return Vocabulary(string_array(j, "vocabulary"));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_vocabulary(const std::filesystem::path& path, const Vocabulary& vocab) {
  write_json(path, json(vocab.names()));
}

ClassLabels read_classes(const std::filesystem::path& path) {
  const json j = read_json(path);
  try {
    return ClassLabels(string_array(j, "classes"));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_classes(const std::filesystem::path& path, const ClassLabels& classes) {
  write_json(path, json(classes.names()));
}

json instance_to_json(const Instance& inst, const Vocabulary& vocab, const ClassLabels& classes) {
  json j;
  j["id"] = inst.id;
  j["objects"] = names_of(inst.objects, vocab);
  j["predicted_class"] = classes.name(inst.predicted_class);
  j["true_class"] = inst.true_class ? json(classes.name(*inst.true_class)) : json(nullptr);
  if (inst.reference_scores.empty()) {
    j["scores"] = nullptr;
  } else {
    json s = json::object();
    for (const auto& [c, v] : inst.reference_scores) s[classes.name(c)] = v;
    j["scores"] = std::move(s);
  }
  return j;
}

Instance instance_from_json(const json& j, const Vocabulary& vocab, const ClassLabels& classes) {
  Instance inst;
  inst.id = require_string(j, "id");
  inst.objects = concepts_from(j, "objects", vocab);
  inst.predicted_class = classes.id(require_string(j, "predicted_class"));
  if (auto it = j.find("true_class"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) throw ParseError("field 'true_class' must be a string or null");
    inst.true_class = classes.id(it->get<std::string>());
  }
  if (auto it = j.find("scores"); it != j.end() && !it->is_null()) {
    if (!it->is_object()) throw ParseError("field 'scores' must be an object or null");
    for (const auto& [name, v] : it->items()) {
      if (!v.is_number()) throw ParseError("score for class '" + name + "' is not a number");
      inst.reference_scores[classes.id(name)] = v.get<double>();
    }
  }
  inst.validate();
  return inst;
}

std::vector<Instance> read_instances(const std::filesystem::path& path, const Vocabulary& vocab,
                                     const ClassLabels& classes) {
  const auto lines = read_json_lines(path);
  std::vector<Instance> out;
  out.reserve(lines.size());
  std::set<std::string> seen;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      out.push_back(instance_from_json(lines[i], vocab, classes));
    } catch (const Error& e) {
      throw ParseError(path.string() + ": record " + std::to_string(i + 1) + ": " + e.what());
    }
    if (!seen.insert(out.back().id).second) {
      throw ParseError(path.string() + ": duplicate instance id '" + out.back().id + "'");
    }
  }
  return out;
}

void write_dataset(const std::filesystem::path& path, const Dataset& ds) {
  std::string text;
  for (const auto& inst : ds.instances) {
    text += instance_to_json(inst, ds.vocab, ds.classes).dump();
    text += '\n';
  }
  write_text(path, text);
}

Dataset read_dataset(const std::filesystem::path& dataset, const std::filesystem::path& vocab_path,
                     const std::filesystem::path& classes_path) {
  Dataset ds;
  const bool have_vocab = !vocab_path.empty();
  const bool have_classes = !classes_path.empty();
  if (have_vocab) ds.vocab = read_vocabulary(vocab_path);
  if (have_classes) ds.classes = read_classes(classes_path);
  if (!have_vocab || !have_classes) {
    std::set<std::string> concepts;
    std::set<std::string> labels;
    for (const auto& j : read_json_lines(dataset)) {
      for (const auto& o : string_array(require(j, "objects"), "objects")) concepts.insert(o);
      labels.insert(require_string(j, "predicted_class"));
      if (auto it = j.find("true_class"); it != j.end() && it->is_string()) {
        labels.insert(it->get<std::string>());
      }
      if (auto it = j.find("scores"); it != j.end() && it->is_object()) {
        for (const auto& [name, v] : it->items()) labels.insert(name);
      }
    }
    if (!have_vocab) ds.vocab = Vocabulary({concepts.begin(), concepts.end()});
    if (!have_classes) ds.classes = ClassLabels({labels.begin(), labels.end()});
  }
  ds.instances = read_instances(dataset, ds.vocab, ds.classes);
  return ds;
}

json explanation_to_json(const CompleteExplanation& e, const Vocabulary& vocab,
                         const ClassLabels& classes) {
  json j;
  j["id"] = e.instance_id;
  j["class"] = classes.name(e.class_id);
  json arr = json::array();
  for (const auto& m : e.mscxs) {
    json mj;
    mj["concepts"] = names_of(m.concepts, vocab);
    mj["score_ratio"] = m.score_ratio;
    arr.push_back(std::move(mj));
  }
  j["mscxs"] = std::move(arr);
  if (e.status == SearchStatus::kNoSufficientSet) j["status"] = "no_sufficient_set";
  return j;
}

CompleteExplanation explanation_from_json(const json& j, const Vocabulary& vocab,
                                          const ClassLabels& classes) {
  CompleteExplanation e;
  e.instance_id = require_string(j, "id");
  e.class_id = classes.id(require_string(j, "class"));
  const auto& arr = require(j, "mscxs");
  if (!arr.is_array()) throw ParseError("field 'mscxs' must be an array");
  for (const auto& mj : arr) {
    Mscx m;
    m.concepts = concepts_from(mj, "concepts", vocab);
    m.score_ratio = require_number(mj, "score_ratio");
    m.instance_id = e.instance_id;
    m.class_id = e.class_id;
    e.mscxs.push_back(std::move(m));
  }
  if (auto it = j.find("status"); it != j.end()) {
    if (*it == "no_sufficient_set") {
      e.status = SearchStatus::kNoSufficientSet;
    } else if (*it != "found") {
      throw ParseError("unknown explanation status " + it->dump());
    }
  }
  return e;
}

std::vector<CompleteExplanation> read_explanations(const std::filesystem::path& path,
                                                   const Vocabulary& vocab,
                                                   const ClassLabels& classes) {
  std::vector<CompleteExplanation> out;
  const auto lines = read_json_lines(path);
  out.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      out.push_back(explanation_from_json(lines[i], vocab, classes));
    } catch (const Error& e) {
      throw ParseError(path.string() + ": record " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

void write_explanations(const std::filesystem::path& path,
                        const std::vector<CompleteExplanation>& expl, const Vocabulary& vocab,
                        const ClassLabels& classes) {
  std::string text;
  for (const auto& e : expl) {
    text += explanation_to_json(e, vocab, classes).dump();
    text += '\n';
  }
  write_text(path, text);
}

json covering_to_json(const CoveringExplanation& c, const Vocabulary& vocab,
                      const ClassLabels& classes) {
  json j;
  j["class"] = classes.name(c.class_id);
  j["support_size"] = c.support_size;
  json arr = json::array();
  for (const auto& cl : c.clauses) {
    json cj;
    cj["concepts"] = names_of(cl.concepts, vocab);
    cj["d_total_pct"] = cl.d_total_pct;
    cj["d_marginal_pct"] = cl.d_marginal_pct;
    cj["covered_total"] = cl.covered_total;
    cj["covered_marginal"] = cl.covered_marginal;
    arr.push_back(std::move(cj));
  }
  j["clauses"] = std::move(arr);
  j["unexplained"] = c.unexplained;
  return j;
}

CoveringExplanation covering_from_json(const json& j, const Vocabulary& vocab,
                                       const ClassLabels& classes) {
  CoveringExplanation c;
  c.class_id = classes.id(require_string(j, "class"));
  const auto& size = require(j, "support_size");
  if (!size.is_number_unsigned()) throw ParseError("'support_size' must be a non-negative integer");
  c.support_size = size.get<std::size_t>();
  const auto& arr = require(j, "clauses");
  if (!arr.is_array()) throw ParseError("field 'clauses' must be an array");
  for (const auto& cj : arr) {
    MdnfClause cl;
    cl.concepts = concepts_from(cj, "concepts", vocab);
    cl.d_total_pct = require_number(cj, "d_total_pct");
    cl.d_marginal_pct = require_number(cj, "d_marginal_pct");
    cl.covered_total = cj.value("covered_total", std::size_t{0});
    cl.covered_marginal = cj.value("covered_marginal", std::size_t{0});
    c.clauses.push_back(std::move(cl));
  }
  if (auto it = j.find("unexplained"); it != j.end()) {
    c.unexplained = string_array(*it, "unexplained");
  }
  return c;
}

json list_to_json(const ExplanationList& l, const Vocabulary& vocab, const ClassLabels& classes) {
  json j;
  json arr = json::array();
  for (const auto& r : l.rules) {
    json rj;
    rj["if"] = names_of(r.antecedent, vocab);
    rj["then"] = classes.name(r.class_id);
    rj["d_pct"] = r.d_pct;
    rj["covered"] = r.covered_marginal;
    arr.push_back(std::move(rj));
  }
  j["rules"] = std::move(arr);
  j["default"] = classes.name(l.default_class);
  j["default_d_pct"] = l.default_d_pct;
  j["default_covered"] = l.default_covered;
  return j;
}

ExplanationList list_from_json(const json& j, const Vocabulary& vocab, const ClassLabels& classes) {
  ExplanationList l;
  const auto& arr = require(j, "rules");
  if (!arr.is_array()) throw ParseError("field 'rules' must be an array");
  for (const auto& rj : arr) {
    ExplanationRule r;
    r.antecedent = concepts_from(rj, "if", vocab);
    r.class_id = classes.id(require_string(rj, "then"));
    r.d_pct = require_number(rj, "d_pct");
    r.covered_marginal = rj.value("covered", std::size_t{0});
    l.rules.push_back(std::move(r));
  }
  l.default_class = classes.id(require_string(j, "default"));
  l.default_d_pct = j.value("default_d_pct", 0.0);
  l.default_covered = j.value("default_covered", std::size_t{0});
  return l;
}

json model_to_json(const SyntheticModel& m, const Vocabulary& vocab, const ClassLabels& classes) {
  json w = json::object();
  for (ClassId c = 0; c < m.num_classes(); ++c) {
    json row = json::object();
    for (ConceptId o = 0; o < m.num_concepts(); ++o) {
      if (m.weights()[c][o] != 0.0) row[vocab.name(o)] = m.weights()[c][o];
    }
    w[classes.name(c)] = std::move(row);
  }
  json j;
  j["weights"] = std::move(w);
  j["monotone"] = m.monotone();
  j["seed"] = m.seed();
  return j;
}

SyntheticModel model_from_json(const json& j, const Vocabulary& vocab, const ClassLabels& classes) {
  std::vector<std::vector<double>> weights(classes.size(), std::vector<double>(vocab.size(), 0.0));
  const auto& w = require(j, "weights");
  if (!w.is_object()) throw ParseError("field 'weights' must be an object");
  for (const auto& [cname, row] : w.items()) {
    const ClassId c = classes.id(cname);
    if (!row.is_object()) throw ParseError("weights for '" + cname + "' must be an object");
    for (const auto& [oname, v] : row.items()) {
      if (!v.is_number()) throw ParseError("weight for '" + oname + "' is not a number");
      weights[c][vocab.id(oname)] = v.get<double>();
    }
  }
  const auto& mono = require(j, "monotone");
  if (!mono.is_boolean()) throw ParseError("field 'monotone' must be a boolean");
  const std::uint64_t seed = j.value("seed", std::uint64_t{0});
  return SyntheticModel(std::move(weights), mono.get<bool>(), seed);
}

std::string format_formula(const CoveringExplanation& c, const Vocabulary& vocab,
                           PctDisplay display, double min_pct) {
  std::string out;
  for (const auto& cl : c.clauses) {
    const double pct = display == PctDisplay::kMarginal ? cl.d_marginal_pct : cl.d_total_pct;
    if (pct < min_pct) continue;
    if (!out.empty()) out += " ∨ ";
    out += '(';
    bool first = true;
    for (const auto& name : vocab.decode(cl.concepts)) {
      if (!first) out += " ∧ ";
      out += name;
      first = false;
    }
    out += ")_" + format_pct(pct) + "%";
  }
  return out;
}

std::string format_list(const ExplanationList& l, const Vocabulary& vocab,
                        const ClassLabels& classes) {
  std::string out;
  auto one = [&](const ExplanationRule& r) {
    std::string s = "(";
    bool first = true;
    for (const auto& name : vocab.decode(r.antecedent)) {
      if (!first) s += " ∧ ";
      s += name;
      first = false;
    }
    if (r.antecedent.empty()) s += "∅";
    s += "; " + classes.name(r.class_id) + ")_" + format_pct(r.d_pct) + "%";
    return s;
  };
  for (const auto& r : l.rules) out += one(r) + " ≺ ";
  out += one(l.default_rule());
  return out;
}

}  // namespace lgx::io
