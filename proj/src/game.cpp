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

#include "solvercarto/game.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nlohmann/json.hpp"
#include "solvercarto/io.hpp"

namespace solvercarto {

namespace {
constexpr double kScaleFloor = 1e-8;

Matrix centered(const Matrix& m) {
  const double mu = m.mean();
  Matrix c = m;
  for (double& v : c.data()) v -= mu;
  return c;
}
}  // namespace

PayoffGame center_normalize(const Matrix& raw_a, const Matrix& raw_b) {
  if (raw_a.rows() != raw_b.rows() || raw_a.cols() != raw_b.cols())
    throw std::invalid_argument("center_normalize: payoff shapes differ");
  if (raw_a.rows() < 2 || raw_a.cols() < 2)
    throw std::invalid_argument("center_normalize: need at least a 2x2 game");
  if (!raw_a.all_finite() || !raw_b.all_finite())
    throw std::invalid_argument("center_normalize: non-finite payoff entry");

  Matrix a = centered(raw_a);
  Matrix b = centered(raw_b);
  const double s = std::max({a.max_abs(), b.max_abs(), kScaleFloor});
  for (double& v : a.data()) v /= s;
  for (double& v : b.data()) v /= s;

  PayoffGame g;
  g.a = std::move(a);
  g.b = std::move(b);
  return g;
}

Vec project_simplex(const Vec& v) {
  if (v.empty()) throw std::invalid_argument("project_simplex: empty vector");
  if (!all_finite(v)) throw std::invalid_argument("project_simplex: non-finite entry");

  // Sort-and-threshold: find the largest k with sorted_k - (prefix_k - 1)/k > 0.
  Vec sorted = v;
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  double prefix = 0.0;
  double theta = 0.0;
  int support = 0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    prefix += sorted[k];
    const double candidate = (prefix - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - candidate > 0.0) {
      theta = candidate;
      support = static_cast<int>(k + 1);
    }
  }
  (void)support;

  Vec p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = std::max(v[i] - theta, 0.0);
  return p;
}

double exploitability(const PayoffGame& g, const MixedStrategyPair& s) {
  const int n = g.rows();
  const int m = g.cols();
  if (static_cast<int>(s.x.size()) != n || static_cast<int>(s.y.size()) != m)
    throw std::invalid_argument("exploitability: strategy dimensions do not match game");

  // Best responses are linear over the simplex, so pure strategies attain
  // the maxima.
  const Vec ay = g.a.apply(s.y);        // row player's payoff per pure row
  const Vec btx = g.b.apply_transposed(s.x);  // column player's payoff per pure column

  const double row_value = dot(s.x, ay);
  const double col_value = dot(s.y, btx);
  const double row_best = *std::max_element(ay.begin(), ay.end());
  const double col_best = *std::max_element(btx.begin(), btx.end());

  double e = (row_best - row_value) + (col_best - col_value);
  if (e < 0.0) {
    if (e < -1e-12) throw std::runtime_error("exploitability: negative beyond round-off");
    e = 0.0;
  }
  return e;
}

Vec negative_entropy_grad(const Vec& p, double floor) {
  if (floor <= 0.0) throw std::invalid_argument("negative_entropy_grad: floor must be > 0");
  Vec grad(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) grad[i] = std::log(std::max(p[i], floor)) + 1.0;
  return grad;
}

std::string game_to_jsonl(const PayoffGame& g) {
  JsonWriter w;
  w.begin_object();
  w.key("id").value(g.id);
  w.key("family").value(g.family);
  w.key("gen_params").begin_object();
  for (const auto& [k, v] : g.gen_params) w.key(k).value(v);
  w.end_object();
  w.key("a").value(g.a.data());
  w.key("b").value(g.b.data());
  w.key("n").value(g.rows());
  w.key("m").value(g.cols());
  w.end_object();
  return w.str();
}

PayoffGame game_from_jsonl(const std::string& line) {
  const auto j = nlohmann::json::parse(line);
  PayoffGame g;
  g.id = j.at("id").get<std::string>();
  g.family = j.at("family").get<std::string>();
  for (const auto& [k, v] : j.at("gen_params").items()) g.gen_params[k] = v.get<double>();
  const int n = j.at("n").get<int>();
  const int m = j.at("m").get<int>();
  g.a = Matrix(n, m, j.at("a").get<Vec>());
  g.b = Matrix(n, m, j.at("b").get<Vec>());
  return g;
}

}  // namespace solvercarto
