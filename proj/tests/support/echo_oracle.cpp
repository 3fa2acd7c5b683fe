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

// Line-protocol scorer for the external oracle tests.
//
//   echo_oracle [--model model.json] [--error-at N] [--garbage-at N]
//               [--no-score-at N] [--hang-at N] [--exit-at N]
//
// Without a model the score of a request is its object count. With a model
// file (the format written by `lgx gen`) it is the additive class score.
// The --*-at options misbehave on the N-th request (counting from 1).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <thread>

#include <nlohmann/json.hpp>

using json = nlohmann::json;

int main(int argc, char** argv) {
  std::map<std::string, long> at;
  json model;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--model") {
      std::ifstream in(argv[i + 1]);
      model = json::parse(in);
    } else {
      at[flag] = std::atol(argv[i + 1]);
    }
  }
  auto hit = [&](const char* flag, long n) {
    auto it = at.find(flag);
    return it != at.end() && it->second == n;
  };

  std::string line;
  long n = 0;
  while (std::getline(std::cin, line)) {
    ++n;
    if (hit("--exit-at", n)) return 3;
    if (hit("--hang-at", n)) std::this_thread::sleep_for(std::chrono::hours(1));
    if (hit("--garbage-at", n)) {
      std::cout << "not json" << std::endl;
      continue;
    }
    if (hit("--no-score-at", n)) {
      std::cout << R"({"value": 1.0})" << std::endl;
      continue;
    }
    if (hit("--error-at", n)) {
      std::cout << R"({"error": "refused"})" << std::endl;
      continue;
    }
    const json req = json::parse(line);
    double score = 0.0;
    if (model.is_null()) {
      score = static_cast<double>(req.at("objects").size());
    } else {
      const auto& row = model.at("weights").at(req.at("class").get<std::string>());
      long double sum = 0.0L;
      for (const auto& o : req.at("objects")) {
        const auto name = o.get<std::string>();
        if (row.contains(name)) sum += row.at(name).get<double>();
      }
      score = static_cast<double>(sum);
    }
    std::cout << json{{"score", score}}.dump() << std::endl;
  }
  return 0;
}
