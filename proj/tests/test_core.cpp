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

#include <algorithm>
#include <random>
#include <unordered_set>

#include "doctest.h"
#include "lgx/error.hpp"
#include "lgx/io.hpp"
#include "lgx/types.hpp"
#include "lgx/vocabulary.hpp"

using namespace lgx;

namespace {

std::vector<ConceptId> random_ids(std::mt19937_64& rng, ConceptId max_id, std::size_t max_len) {
  std::vector<ConceptId> v(rng() % (max_len + 1));
  for (auto& id : v) id = static_cast<ConceptId>(rng() % max_id);
  return v;
}

Vocabulary numbered_vocab(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
  return Vocabulary(names);
}

}  // namespace

TEST_CASE("canonicalize sorts and deduplicates") {
  const Vocabulary vocab = numbered_vocab(10);
  const std::vector<ConceptId> raw{3, 1, 3, 2};
  const ConceptSet s = vocab.canonicalize(raw);
  CHECK(s == ConceptSet{1, 2, 3});
  CHECK(s.ids() == std::vector<ConceptId>{1, 2, 3});

  const ConceptSet empty = vocab.canonicalize(std::vector<ConceptId>{});
  CHECK(empty.empty());
  CHECK(empty.size() == 0);

  CHECK(vocab.canonicalize(std::vector<ConceptId>{7}) == ConceptSet{7});
}

TEST_CASE("canonicalize rejects ids outside the vocabulary") {
  const Vocabulary vocab = numbered_vocab(3);
  CHECK_THROWS_AS(vocab.canonicalize(std::vector<ConceptId>{0, 3}), VocabularyError);
  CHECK_THROWS_AS(vocab.id("nope"), VocabularyError);
  CHECK_THROWS_AS(Vocabulary(std::vector<std::string>{"a", "a"}), VocabularyError);
}

TEST_CASE("is_subset examples") {
  CHECK(is_subset(ConceptSet{}, ConceptSet{1, 2}));
  CHECK(is_subset(ConceptSet{1, 3}, ConceptSet{1, 2, 3}));
  CHECK_FALSE(is_subset(ConceptSet{4}, ConceptSet{1, 2, 3}));
}

TEST_CASE("sparse representation beyond the inline width") {
  const ConceptSet big{5, 300, 127, 128};
  CHECK(big.size() == 4);
  CHECK(big.contains(300));
  CHECK(big.max_id() == 300);
  CHECK(ConceptSet{5, 127}.is_subset_of(big));
  CHECK(big.without(300).without(128) == ConceptSet{5, 127});
  CHECK(big.without(300).without(128).hash() == ConceptSet{127, 5}.hash());
  CHECK(ConceptSet{1}.with(200) == ConceptSet{200, 1});
}

TEST_CASE("lexicographic order over member sequences") {
  CHECK(ConceptSet{1} < ConceptSet{1, 2});
  CHECK(ConceptSet{1, 2} < ConceptSet{2});
  CHECK(ConceptSet{} < ConceptSet{0});
  CHECK(ConceptSet{0, 5} < ConceptSet{0, 6});
  CHECK(ConceptSet{0, 64} < ConceptSet{0, 65});
  CHECK(ConceptSet{63} > ConceptSet{5, 64});
}

TEST_CASE("set properties over random inputs") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 2000; ++trial) {
    // Mix of inline-only and sparse sets.
    const ConceptId range = trial % 3 == 0 ? 400 : 130;
    const auto ra = random_ids(rng, range, 8);
    const auto rb = random_ids(rng, range, 8);
    const ConceptSet a = ConceptSet::from_ids(ra);
    const ConceptSet b = ConceptSet::from_ids(rb);

    // Idempotence.
    const auto ids = a.ids();
    CHECK(ConceptSet::from_ids(ids) == a);
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());

    // Antisymmetry of inclusion.
    CHECK((is_subset(a, b) && is_subset(b, a)) == (a == b));

    // Ordering agrees with the member sequences.
    const auto ia = a.ids();
    const auto ib = b.ids();
    const bool lex_less = std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
    CHECK((a < b) == lex_less);

    // Subset agrees with std::includes.
    CHECK(is_subset(a, b) == std::includes(ib.begin(), ib.end(), ia.begin(), ia.end()));

    // Algebra.
    CHECK(a.is_subset_of(a.united(b)));
    CHECK(a.minus(b).united(b) == a.united(b));
    if (a == b) CHECK(a.hash() == b.hash());
  }
}

TEST_CASE("instance validation") {
  Instance x;
  x.id = "x";
  CHECK_THROWS_AS(x.validate(), ParseError);
  x.objects = ConceptSet{0};
  x.reference_scores = {{0, 0.5}, {1, 0.5}};
  x.predicted_class = 0;
  CHECK_NOTHROW(x.validate());  // tie goes to the lowest id
  x.predicted_class = 1;
  CHECK_THROWS_AS(x.validate(), ParseError);
}

TEST_CASE("antichain check") {
  CHECK(is_antichain({ConceptSet{0, 1}, ConceptSet{0, 2}}));
  CHECK_FALSE(is_antichain({ConceptSet{0}, ConceptSet{0, 2}}));
  CHECK(is_antichain({}));
}

TEST_CASE("JSON round trip of every record type") {
  std::mt19937_64 rng(7);
  const Vocabulary vocab = numbered_vocab(20);
  const ClassLabels classes(std::vector<std::string>{"A", "B", "C"});
  auto random_set = [&](bool nonempty) {
    ConceptSet s;
    do {
      s = ConceptSet::from_ids(random_ids(rng, 20, 6));
    } while (nonempty && s.empty());
    return s;
  };
  auto real = [&] { return static_cast<double>(rng() % 100000) / 7919.0; };

  for (int trial = 0; trial < 200; ++trial) {
    Instance x;
    x.id = "i" + std::to_string(trial);
    x.objects = random_set(true);
    if (rng() % 2) {
      x.reference_scores = {{0, real()}, {1, real()}, {2, real()}};
      x.predicted_class = argmax_class(x.reference_scores);
    } else {
      x.predicted_class = static_cast<ClassId>(rng() % 3);
    }
    if (rng() % 2) x.true_class = static_cast<ClassId>(rng() % 3);
    CHECK(io::instance_from_json(io::instance_to_json(x, vocab, classes), vocab, classes) == x);

    CompleteExplanation e{x.id, x.predicted_class, {}, SearchStatus::kFound};
    for (int m = 0; m < static_cast<int>(rng() % 4); ++m) {
      e.mscxs.push_back(Mscx{random_set(true), x.id, x.predicted_class, real()});
    }
    if (e.mscxs.empty() && rng() % 2) e.status = SearchStatus::kNoSufficientSet;
    CHECK(io::explanation_from_json(io::explanation_to_json(e, vocab, classes), vocab, classes) == e);

    CoveringExplanation c{static_cast<ClassId>(rng() % 3), {}, rng() % 50, {"u1"}};
    for (int m = 0; m < 3; ++m) {
      c.clauses.push_back(MdnfClause{random_set(true), rng() % 9, rng() % 9, real(), real()});
    }
    CHECK(io::covering_from_json(io::covering_to_json(c, vocab, classes), vocab, classes) == c);

    ExplanationList l;
    for (int m = 0; m < 3; ++m) {
      l.rules.push_back(ExplanationRule{random_set(true), static_cast<ClassId>(rng() % 3), rng() % 9, real()});
    }
    l.default_class = static_cast<ClassId>(rng() % 3);
    l.default_covered = rng() % 5;
    l.default_d_pct = real();
    CHECK(io::list_from_json(io::list_to_json(l, vocab, classes), vocab, classes) == l);
  }

  std::vector<std::vector<double>> w(3, std::vector<double>(20, 0.0));
  for (auto& row : w) {
    for (auto& v : row) v = rng() % 3 == 0 ? real() : 0.0;
  }
  const SyntheticModel model(w, true, 99);
  CHECK(io::model_from_json(io::model_to_json(model, vocab, classes), vocab, classes) == model);
}

TEST_CASE("dataset line format") {
  const Vocabulary vocab(std::vector<std::string>{"bed", "wall"});
  const ClassLabels classes(std::vector<std::string>{"Bedroom", "Street"});
  Instance x;
  x.id = "img1";
  x.objects = ConceptSet{1, 0};
  x.predicted_class = 0;
  CHECK(io::instance_to_json(x, vocab, classes).dump() ==
        R"({"id":"img1","objects":["bed","wall"],"predicted_class":"Bedroom","true_class":null,"scores":null})");

  const auto j = io::json::parse(
      R"({"id":"a","objects":["wall","bed","wall"],"predicted_class":"Street","true_class":"Street","scores":{"Bedroom":0.1,"Street":0.7}})");
  const Instance y = io::instance_from_json(j, vocab, classes);
  CHECK(y.objects == ConceptSet{0, 1});
  CHECK(y.predicted_class == 1);
  CHECK(y.reference_scores.at(1) == doctest::Approx(0.7));

  CHECK_THROWS_AS(io::instance_from_json(io::json::parse(R"({"id":"a","objects":["sofa"],"predicted_class":"Street"})"),
                                         vocab, classes),
                  VocabularyError);
  CHECK_THROWS_AS(io::instance_from_json(io::json::parse(R"({"id":"a","objects":[],"predicted_class":"Street"})"),
                                         vocab, classes),
                  ParseError);
}

TEST_CASE("formula formatting") {
  const Vocabulary vocab(std::vector<std::string>{"bed", "wall", "lamp"});
  CoveringExplanation c;
  c.support_size = 4;
  c.clauses = {MdnfClause{ConceptSet{0, 1}, 2, 2, 50.0, 50.0},
               MdnfClause{ConceptSet{0, 2}, 3, 1, 75.0, 25.0},
               MdnfClause{ConceptSet{2}, 1, 1, 2.5, 2.5}};
  CHECK(io::format_formula(c, vocab) == "(bed ∧ wall)_50% ∨ (bed ∧ lamp)_25% ∨ (lamp)_2.5%");
  CHECK(io::format_formula(c, vocab, io::PctDisplay::kTotal, 3.0) ==
        "(bed ∧ wall)_50% ∨ (bed ∧ lamp)_75%");
  CHECK(io::format_formula(CoveringExplanation{}, vocab).empty());
}
