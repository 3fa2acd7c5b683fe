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

#pragma once

#include <string>
#include <vector>

#include "lgx/synthetic.hpp"
#include "lgx/types.hpp"

namespace lgx::testing {

/// Three-object bedroom scene: bed 0.9, wall 0.05, lamp 0.05 (ids 0, 1, 2).
struct BedroomFixture {
  Vocabulary vocab{std::vector<std::string>{"bed", "wall", "lamp"}};
  ClassLabels classes{std::vector<std::string>{"Bedroom"}};
  SyntheticModel model{{{0.9, 0.05, 0.05}}, true, 0};
  Instance instance = [this] {
    Instance x;
    x.id = "img1";
    x.objects = ConceptSet{0, 1, 2};
    x.predicted_class = 0;
    x.reference_scores = synthetic_scores(model, x.objects);
    return x;
  }();
};

/// Single-class instance over ids 0..weights.size()-1 holding every object.
inline Instance full_instance(const std::string& id, std::size_t k, ClassId cls = 0) {
  Instance x;
  x.id = id;
  std::vector<ConceptId> ids;
  for (std::size_t i = 0; i < k; ++i) ids.push_back(static_cast<ConceptId>(i));
  x.objects = ConceptSet::from_ids(ids);
  x.predicted_class = cls;
  return x;
}

}  // namespace lgx::testing
