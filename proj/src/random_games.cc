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

#include "scripbid/random_games.h"

#include <algorithm>
#include <functional>
#include <numeric>

namespace scripbid {
namespace {

int Uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

BiddingGame RandomTree(std::mt19937_64& rng, const RandomTreeOptions& opts) {
  while (true) {
    struct Proto {
      std::vector<int> children;
      bool leaf = false;
    };
    std::vector<Proto> protos;
    std::function<int(int)> grow = [&](int depth) -> int {
      int self = static_cast<int>(protos.size());
      protos.push_back({});
      bool leaf = depth >= opts.max_height ||
                  (depth > 0 && std::bernoulli_distribution(opts.leaf_probability)(rng));
      if (leaf) {
        protos[self].leaf = true;
        return self;
      }
      int count = Uniform(rng, 2, std::max(2, opts.max_children));
      if (std::bernoulli_distribution(opts.unary_probability)(rng)) count = 1;
      std::vector<int> ch;
      for (int k = 0; k < count; ++k) ch.push_back(grow(depth + 1));
      protos[self].children = std::move(ch);
      return self;
    };
    grow(0);
    int leaves = 0;
    for (const Proto& p : protos) leaves += p.leaf ? 1 : 0;
    if (opts.distinct_utilities && leaves > opts.utility_max + 1) continue;

    std::vector<int> pool1(opts.utility_max + 1), pool2(opts.utility_max + 1);
    std::iota(pool1.begin(), pool1.end(), 0);
    std::iota(pool2.begin(), pool2.end(), 0);
    std::shuffle(pool1.begin(), pool1.end(), rng);
    std::shuffle(pool2.begin(), pool2.end(), rng);
    BiddingGame game;
    int next_leaf = 0;
    for (const Proto& p : protos) {
      if (p.leaf) {
        int u1 = opts.distinct_utilities ? pool1[next_leaf] : Uniform(rng, 0, opts.utility_max);
        int u2 = opts.distinct_utilities ? pool2[next_leaf] : Uniform(rng, 0, opts.utility_max);
        ++next_leaf;
        game.AddTerminal(u1, u2);
      } else {
        game.AddInternal(p.children);
      }
    }
    game.SetRoot(0);
    game.Validate();
    return game;
  }
}

BiddingGame RandomFullBinaryTree(std::mt19937_64& rng, int height, int utility_max) {
  RandomTreeOptions opts;
  opts.max_height = height;
  opts.max_children = 2;
  opts.leaf_probability = 0.0;
  opts.utility_max = std::max(utility_max, (1 << height) - 1);
  return RandomTree(rng, opts);
}

BiddingGame RandomDag(std::mt19937_64& rng, int height, int width, int max_children,
                      int utility_max) {
  // Layer 0 is the root, layer `height` holds the leaves.
  std::vector<std::vector<int>> layers(height + 1);
  BiddingGame game;
  std::vector<int> pool1(utility_max + 1), pool2(utility_max + 1);
  std::iota(pool1.begin(), pool1.end(), 0);
  std::iota(pool2.begin(), pool2.end(), 0);
  std::shuffle(pool1.begin(), pool1.end(), rng);
  std::shuffle(pool2.begin(), pool2.end(), rng);
  int leaf_count = std::min(width, utility_max + 1);
  for (int k = 0; k < leaf_count; ++k) layers[height].push_back(game.AddTerminal(pool1[k], pool2[k]));
  for (int d = height - 1; d >= 0; --d) {
    int count = d == 0 ? 1 : Uniform(rng, 1, width);
    for (int k = 0; k < count; ++k) {
      int kids = Uniform(rng, 1, max_children);
      std::vector<int> ch;
      for (int m = 0; m < kids; ++m) {
        // Mostly the next layer, sometimes any deeper one.
        int target = d + 1;
        if (d + 2 <= height && std::bernoulli_distribution(0.25)(rng)) target = Uniform(rng, d + 2, height);
        const auto& layer = layers[target];
        ch.push_back(layer[Uniform(rng, 0, static_cast<int>(layer.size()) - 1)]);
      }
      // The first child always comes from the next layer to pin the height.
      ch[0] = layers[d + 1][Uniform(rng, 0, static_cast<int>(layers[d + 1].size()) - 1)];
      std::vector<int> unique;
      for (int c : ch) {
        if (std::find(unique.begin(), unique.end(), c) == unique.end()) unique.push_back(c);
      }
      layers[d].push_back(game.AddInternal(unique));
    }
  }
  game.SetRoot(layers[0][0]);
  game.Validate();
  return game;
}

}  // namespace scripbid
