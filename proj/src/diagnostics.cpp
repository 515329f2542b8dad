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

#include "solvercarto/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "solvercarto/numerics.hpp"

namespace solvercarto {

namespace {

// Normalised potential residual: cross-differences of the two payoff
// matrices agree termwise exactly when the game admits an exact potential.
double potential_gap(const Matrix& a, const Matrix& b) {
  const int n = a.rows();
  const int m = a.cols();
  double num = 0.0;
  double den = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int ip = 0; ip < n; ++ip) {
      for (int j = 0; j < m; ++j) {
        for (int jp = 0; jp < m; ++jp) {
          const double da = a(i, j) - a(ip, j) - a(i, jp) + a(ip, jp);
          const double db = b(i, j) - b(i, jp) - b(ip, j) + b(ip, jp);
          num += (da - db) * (da - db);
          den += da * da + db * db;
        }
      }
    }
  }
  return std::sqrt(num) / (std::sqrt(den) + kDiagnosticEpsilon);
}

}  // namespace

Matrix game_jacobian(const PayoffGame& g) {
  const int n = g.rows();
  const int m = g.cols();
  Matrix j(n + m, n + m);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < m; ++k) j(i, n + k) = -g.a(i, k);
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < n; ++i) j(n + k, i) = -g.b(i, k);
  return j;
}

Matrix symmetric_part(const Matrix& j) {
  Matrix s = j;
  for (int i = 0; i < j.rows(); ++i)
    for (int k = 0; k < j.cols(); ++k) s(i, k) = 0.5 * (j(i, k) + j(k, i));
  return s;
}

Matrix skew_part(const Matrix& j) {
  Matrix s = j;
  for (int i = 0; i < j.rows(); ++i)
    for (int k = 0; k < j.cols(); ++k) s(i, k) = 0.5 * (j(i, k) - j(k, i));
  return s;
}

StructureDiagnostics structure_diagnostics(const PayoffGame& g) {
  if (!g.a.all_finite() || !g.b.all_finite())
    throw std::invalid_argument("structure_diagnostics: non-finite payoffs");
  // z_harm and z_sym compare a matrix with its transpose, which needs a
  // square action space. The whole benchmark is square.
  if (g.rows() != g.cols())
    throw std::invalid_argument("structure_diagnostics: square games only");

  const Matrix& a = g.a;
  const Matrix& b = g.b;
  const double fa = a.frobenius_norm();
  const double fb = b.frobenius_norm();
  const double denom = fa + fb + kDiagnosticEpsilon;

  StructureDiagnostics d;
  d.z_pot = std::max(0.0, 1.0 - potential_gap(a, b));

  // Skew-symmetric part of the zero-sum component Z = (A - B)/2.
  const Matrix z = 0.5 * (a - b);
  const Matrix h = skew_part(z);
  d.z_harm = std::min(1.0, 2.0 * h.frobenius_norm() / denom);

  d.z_zs = std::max(0.0, 1.0 - (a + b).frobenius_norm() / denom);
  d.z_sym = std::max(0.0, 1.0 - (a - b.transposed()).frobenius_norm() / denom);

  d.a_mono = min_eigenvalue_symmetric(symmetric_part(game_jacobian(g)));
  return d;
}

OptDiagnostics opt_diagnostics(const PayoffGame& g, const MixedStrategyPair& s,
                               const Vec& prev_update, const Vec& cur_update, int t, int T) {
  if (t < 1 || t > T) throw std::invalid_argument("opt_diagnostics: t outside [1, T]");

  OptDiagnostics u;
  u.gap = exploitability(g, s);
  u.grad_norm = norm2(concat(g.a.apply(s.y), g.b.apply_transposed(s.x)));

  const Matrix j = game_jacobian(g);
  const double jf = j.frobenius_norm();
  u.sym_loc = symmetric_part(j).frobenius_norm();
  u.skew_loc = skew_part(j).frobenius_norm();
  u.rot = u.skew_loc / (jf + kDiagnosticEpsilon);

  const double pn = norm2(prev_update);
  const double cn = norm2(cur_update);
  u.align = (pn == 0.0 || cn == 0.0)
                ? 0.0
                : std::clamp(dot(prev_update, cur_update) / (pn * cn), -1.0, 1.0);
  u.step_norm = cn;
  u.phase = static_cast<double>(t) / static_cast<double>(T);
  return u;
}

}  // namespace solvercarto
