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

#ifndef SOLVERCARTO_DIAGNOSTICS_H_
#define SOLVERCARTO_DIAGNOSTICS_H_

#include "solvercarto/game.hpp"
#include "solvercarto/matrix.hpp"

namespace solvercarto {

// The five analytic structure coordinates of a centered game. z_pot, z_harm,
// z_zs, z_sym live in [0,1]; a_mono is the minimum eigenvalue of the
// symmetrized game Jacobian and is <= 0 (the Jacobian's diagonal blocks are
// zero, so its symmetric part has zero trace).
struct StructureDiagnostics {
  double z_pot = 0.0;
  double z_harm = 0.0;
  double z_zs = 0.0;
  double z_sym = 0.0;
  double a_mono = 0.0;

  Vec as_vector() const { return {z_pot, z_harm, z_zs, z_sym, a_mono}; }
};

// Per-step optimisation diagnostics: equilibrium violation, gradient
// magnitude, rotational content, update alignment, local Jacobian symmetry
// split, and phase.
struct OptDiagnostics {
  double gap = 0.0;
  double grad_norm = 0.0;
  double rot = 0.0;
  double align = 0.0;
  double step_norm = 0.0;
  double sym_loc = 0.0;
  double skew_loc = 0.0;
  double phase = 0.0;

  Vec as_vector() const {
    return {gap, grad_norm, rot, align, step_norm, sym_loc, skew_loc, phase};
  }
};

// Shared denominator guard for all diagnostic ratios.
inline constexpr double kDiagnosticEpsilon = 1e-8;

StructureDiagnostics structure_diagnostics(const PayoffGame& g);

// The (n+m)x(n+m) game Jacobian [[0,-A],[-B^T,0]] and its symmetric part.
Matrix game_jacobian(const PayoffGame& g);
Matrix symmetric_part(const Matrix& j);
Matrix skew_part(const Matrix& j);

// `prev_update` and `cur_update` are (n+m)-concatenated displacement
// vectors; align is their cosine (0 when either is zero). t in [1, T].
OptDiagnostics opt_diagnostics(const PayoffGame& g, const MixedStrategyPair& s,
                               const Vec& prev_update, const Vec& cur_update, int t, int T);

}  // namespace solvercarto

#endif  // SOLVERCARTO_DIAGNOSTICS_H_
