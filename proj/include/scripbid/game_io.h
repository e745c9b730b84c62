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

#ifndef SCRIPBID_GAME_IO_H_
#define SCRIPBID_GAME_IO_H_

#include <string>
#include <string_view>

#include "scripbid/game.h"

namespace scripbid {

// Parses the game file format and returns a validated game. Node ids in the
// file may be any integers; dense indices follow ascending id order.
BiddingGame ParseGameJson(std::string_view text);

// Canonical dump: nodes in id order, terminals in numeric id order, integer
// utilities as numbers and fractions as "p/q" strings.
std::string DumpGameJson(const BiddingGame& game);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& contents);

}  // namespace scripbid

#endif  // SCRIPBID_GAME_IO_H_
