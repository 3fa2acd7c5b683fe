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

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "doctest.h"
#include "lgx/cached_oracle.hpp"
#include "lgx/error.hpp"
#include "lgx/synthetic.hpp"
#include "lgx/table_oracle.hpp"
#include "support/fixtures.hpp"

using namespace lgx;

namespace {

class CountingOracle final : public Oracle {
 public:
  double score(const ScoreQuery& q) override {
    ++calls;
    return static_cast<double>(q.subset.size()) + static_cast<double>(q.class_id) / 10.0;
  }
  std::vector<double> score_batch(std::span<const ScoreQuery> qs) override {
    ++batches;
    return Oracle::score_batch(qs);
  }
  std::atomic<int> calls{0};
  std::atomic<int> batches{0};
};

}  // namespace

TEST_CASE("synthetic scores on the bedroom scene") {
  testing::BedroomFixture fx;
  SyntheticOracle oracle(fx.model);
  const double full = oracle.score({"img1", 0, ConceptSet{0, 1, 2}});
  CHECK(full == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(oracle.score({"img1", 0, ConceptSet{0, 1}}) / full == doctest::Approx(0.95).epsilon(1e-12));
  CHECK(oracle.score({"img1", 0, ConceptSet{}}) == 0.0);
  CHECK(fx.instance.reference_scores.at(0) == full);
}

TEST_CASE("synthetic prediction examples") {
  const SyntheticModel model({{1.0, 0.0, 0.2}, {0.0, 1.0, 0.3}}, true, 0);
  CHECK(synthetic_predict(model, ConceptSet{0}) == 0);
  CHECK(synthetic_predict(model, ConceptSet{1, 2}) == 1);
  CHECK(synthetic_predict(model, ConceptSet{0, 1}) == 0);  // tie goes to the lowest id
  CHECK(synthetic_scores(model, ConceptSet{0, 2}).at(1) == doctest::Approx(0.3));
}

TEST_CASE("monotone model refuses negative weights") {
  CHECK_THROWS_AS(SyntheticModel({{0.5, -0.1}}, true, 0), ConfigError);
  CHECK_NOTHROW(SyntheticModel({{0.5, -0.1}}, false, 0));
  CHECK_THROWS_AS(SyntheticModel({{0.5}, {0.1, 0.2}}, true, 0), ConfigError);
}

TEST_CASE("monotone models never lose score along an inclusion chain") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::vector<double>> w(2, std::vector<double>(12));
    for (auto& row : w) {
      for (auto& v : row) v = u(rng) < 0.3 ? 0.0 : u(rng);
    }
    const SyntheticModel model(w, true, 0);
    std::vector<ConceptId> order(12);
    for (ConceptId i = 0; i < 12; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    ConceptSet s;
    double prev = model.score(0, s);
    for (ConceptId o : order) {
      s = s.with(o);
      const double cur = model.score(0, s);
      CHECK(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("synthetic oracle checks queries against its instances") {
  testing::BedroomFixture fx;
  SyntheticOracle oracle(fx.model, {fx.instance});
  CHECK_THROWS_AS(oracle.score({"nope", 0, ConceptSet{0}}), OracleError);
  CHECK_THROWS_AS(oracle.score({"img1", 0, ConceptSet{0, 5}}), OracleError);
  CHECK_THROWS_AS(oracle.score({"img1", 3, ConceptSet{0}}), OracleError);
  CHECK(oracle.score({"img1", 0, ConceptSet{2}}) == doctest::Approx(0.05));
}

TEST_CASE("table oracle replays exact keys") {
  const Vocabulary vocab(std::vector<std::string>{"bed", "wall", "lamp"});
  const ClassLabels classes(std::vector<std::string>{"Bedroom", "Street"});
  const auto dir = std::filesystem::path(LGX_TEST_TMP);
  std::filesystem::create_directories(dir);
  const auto path = dir / "table.jsonl";
  {
    std::ofstream out(path);
    out << R"({"id": "img1", "class": "Bedroom", "objects": ["wall", "bed"], "score": 0.8})" << "\n\n";
    out << R"({"id": "img1", "class": "Bedroom", "objects": [], "score": 0.01})" << "\n";
  }
  TableOracle table = TableOracle::load(path, vocab, classes);
  CHECK(table.size() == 2);
  CHECK(table.score({"img1", 0, ConceptSet{0, 1}}) == 0.8);
  CHECK(table.score({"img1", 0, ConceptSet{}}) == 0.01);
  CHECK_THROWS_AS(table.score({"img1", 0, ConceptSet{0}}), MissingKeyError);
  CHECK_THROWS_AS(table.score({"img1", 1, ConceptSet{0, 1}}), MissingKeyError);
  CHECK_THROWS_AS(table.add({"img1", 0, ConceptSet{1, 0}}, 0.3), ParseError);

  {
    std::ofstream out(path);
    out << R"({"id": "img1", "class": "Bedroom", "objects": ["sofa"], "score": 0.8})" << "\n";
  }
  CHECK_THROWS_WITH_AS(TableOracle::load(path, vocab, classes),
                       doctest::Contains("record 1: unknown concept"), ParseError);
}

TEST_CASE("cache is transparent and counts forwarded calls") {
  auto inner = std::make_shared<CountingOracle>();
  CachedOracle cache(inner);
  const ScoreQuery q{"a", 1, ConceptSet{0, 2}};
  CHECK(cache.score(q) == inner->score(q));
  inner->calls = 0;
  CHECK(cache.score(q) == doctest::Approx(2.1));
  CHECK(inner->calls == 0);
  CHECK(cache.stats().query_count == 1);
  CHECK(cache.stats().cache_hits == 1);

  // A batch forwards only its distinct misses, in one inner batch.
  std::vector<ScoreQuery> batch{q, {"a", 1, ConceptSet{0}}, {"a", 1, ConceptSet{0}}, {"b", 0, ConceptSet{}}};
  const auto got = cache.score_batch(batch);
  REQUIRE(got.size() == 4);
  CHECK(got[0] == doctest::Approx(2.1));
  CHECK(got[1] == doctest::Approx(1.1));
  CHECK(got[2] == got[1]);
  CHECK(got[3] == 0.0);
  CHECK(inner->calls == 2);
  CHECK(inner->batches == 1);
  CHECK(cache.stats().query_count == 3);
  CHECK(cache.size() == 3);
}

TEST_CASE("bounded cache evicts the least recently used entry") {
  auto inner = std::make_shared<CountingOracle>();
  CachedOracle cache(inner, 2);
  const ScoreQuery a{"x", 0, ConceptSet{0}};
  const ScoreQuery b{"x", 0, ConceptSet{1}};
  const ScoreQuery c{"x", 0, ConceptSet{2}};
  cache.score(a);
  cache.score(b);
  cache.score(a);  // b is now least recent
  cache.score(c);
  CHECK(cache.size() == 2);
  const int before = inner->calls;
  cache.score(a);
  CHECK(inner->calls == before);
  cache.score(b);
  CHECK(inner->calls == before + 1);
}

TEST_CASE("cache under concurrent readers") {
  auto inner = std::make_shared<CountingOracle>();
  for (std::optional<std::size_t> cap : {std::optional<std::size_t>{}, std::optional<std::size_t>{8}}) {
    CachedOracle cache(inner, cap);
    std::atomic<bool> ok{true};
    std::vector<std::jthread> pool;
    for (int t = 0; t < 4; ++t) {
      pool.emplace_back([&, t] {
        for (int i = 0; i < 500; ++i) {
          const ConceptId id = static_cast<ConceptId>((i * 7 + t) % 16);
          const ScoreQuery q{"x", 0, ConceptSet{id, id + 1}};
          if (cache.score(q) != 2.0) ok = false;
        }
      });
    }
    pool.clear();
    CHECK(ok);
    const auto st = cache.stats();
    CHECK(st.query_count + st.cache_hits == 2000);
  }
}
