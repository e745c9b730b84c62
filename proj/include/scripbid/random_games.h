// Copyright 2026 The Scripbid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCRIPBID_RANDOM_GAMES_H_
#define SCRIPBID_RANDOM_GAMES_H_

#include <cstdint>
#include <random>

#include "scripbid/game.h"

namespace scripbid {

struct RandomTreeOptions {
  int max_height = 5;
  int max_children = 2;
  // Chance that a non-root node above max_height becomes a leaf.
  double leaf_probability = 0.3;
  // Distinct integer utilities per player drawn from [0, utility_max].
  bool distinct_utilities = true;
  int utility_max = 100;
  // Chance that an internal node gets a single child.
  double unary_probability = 0.0;
};

// Random tree; resampled until the leaf count fits the distinct-utility
// range.
BiddingGame RandomTree(std::mt19937_64& rng, const RandomTreeOptions& opts);

// Full binary tree with every leaf at depth `height`.
BiddingGame RandomFullBinaryTree(std::mt19937_64& rng, int height, int utility_max = 100);

// Layered DAG in which children are drawn from the next layers, so nodes are
// shared between parents.
BiddingGame RandomDag(std::mt19937_64& rng, int height, int width, int max_children = 2,
                      int utility_max = 100);

}  // namespace scripbid

#endif  // SCRIPBID_RANDOM_GAMES_H_
