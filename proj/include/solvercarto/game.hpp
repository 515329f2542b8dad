// Copyright 2026 The Solvercarto Authors
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

#ifndef SOLVERCARTO_GAME_H_
#define SOLVERCARTO_GAME_H_

#include <map>
#include <string>
#include <vector>

#include "solvercarto/matrix.hpp"

namespace solvercarto {

// A two-player matrix game with centered, jointly normalized payoffs.
// `a` holds the row player's payoffs, `b` the column player's. All
// downstream computation assumes the normalization produced by
// center_normalize: per-player zero mean and a shared max-|entry| scale.
struct PayoffGame {
  Matrix a;
  Matrix b;
  std::string id;
  std::string family;
  std::map<std::string, double> gen_params;

  int rows() const { return a.rows(); }
  int cols() const { return a.cols(); }
};

// A mixed-strategy profile: x on the row simplex, y on the column simplex.
struct MixedStrategyPair {
  Vec x;
  Vec y;
};

// Per-step exploitability of one solver run. `auc` is the arithmetic mean
// of the recorded steps, so values are comparable across horizons.
struct RolloutTrace {
  Vec exploitability;
  double terminal = 0.0;
  double auc = 0.0;
  bool diverged = false;
};

inline Vec uniform_strategy(int n) { return Vec(static_cast<std::size_t>(n), 1.0 / n); }

// Center each player's payoffs to zero mean and divide both by the shared
// scale s = max(max|A'|, max|B'|, 1e-8). Throws on shape mismatch or
// non-finite input.
PayoffGame center_normalize(const Matrix& raw_a, const Matrix& raw_b);

// Euclidean projection onto the probability simplex (sort-and-threshold,
// exact). Throws on an empty or non-finite input.
Vec project_simplex(const Vec& v);

// Exploitability: the sum of both players' best pure-response improvements
// over the current profile. Zero exactly at a Nash equilibrium. Small
// negative round-off (>= -1e-12) is clamped to zero.
double exploitability(const PayoffGame& g, const MixedStrategyPair& s);

// Gradient of sum_i p_i log p_i, with entries floored before the log.
Vec negative_entropy_grad(const Vec& p, double floor = 1e-12);

// One JSON object per line: {"id","family","gen_params","a","b","n","m"},
// reals at 17 significant digits.
std::string game_to_jsonl(const PayoffGame& g);
PayoffGame game_from_jsonl(const std::string& line);

}  // namespace solvercarto

#endif  // SOLVERCARTO_GAME_H_
