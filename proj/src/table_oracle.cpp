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

#include "lgx/table_oracle.hpp"

#include "lgx/error.hpp"
#include "lgx/io.hpp"

namespace lgx {

std::size_t TableOracle::KeyHash::operator()(const ScoreQuery& q) const noexcept {
  std::size_t h = std::hash<std::string>{}(q.instance_id);
  h ^= q.subset.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h ^ (q.class_id * 0x100000001b3ULL);
}

TableOracle TableOracle::load(const std::filesystem::path& path, const Vocabulary& vocab,
                              const ClassLabels& classes) {
  TableOracle t;
  const auto lines = io::read_json_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& j = lines[i];
    const std::string at = path.string() + ": record " + std::to_string(i + 1) + ": ";
    try {
      if (!j.is_object() || !j.contains("id") || !j.contains("class") || !j.contains("objects") ||
          !j.contains("score")) {
        throw ParseError("table entries need id, class, objects and score");
      }
      if (!j["score"].is_number()) throw ParseError("'score' must be a number");
      std::vector<std::string> names = j["objects"].get<std::vector<std::string>>();
      ScoreQuery key{j["id"].get<std::string>(), classes.id(j["class"].get<std::string>()),
                     vocab.encode(names)};
      t.add(key, j["score"].get<double>());
    } catch (const io::json::exception& e) {
      throw ParseError(at + e.what());
    } catch (const Error& e) {
      throw ParseError(at + e.what());
    }
  }
  return t;
}

void TableOracle::add(const ScoreQuery& key, double score) {
  if (!table_.emplace(key, score).second) {
    throw ParseError("duplicate table key (" + key.instance_id + ", class " +
                     std::to_string(key.class_id) + ", " + key.subset.to_string() + ")");
  }
}

double TableOracle::score(const ScoreQuery& q) {
  auto it = table_.find(q);
  if (it == table_.end()) {
    throw MissingKeyError("no table entry for (" + q.instance_id + ", class " +
                          std::to_string(q.class_id) + ", " + q.subset.to_string() + ")");
  }
  return it->second;
}

}  // namespace lgx
