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

#ifndef SOLVERCARTO_PRIMITIVES_H_
#define SOLVERCARTO_PRIMITIVES_H_

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "solvercarto/game.hpp"

namespace solvercarto {

// Enum order is the tie-break order everywhere (lowest index wins exact
// ties). The default library is the first seven; BestResponse is provided
// but excluded from default routing.
enum class PrimitiveKind {
  kGda = 0,
  kMirror,
  kProximal,
  kAveraging,
  kExtragradient,
  kOptimistic,
  kFictitiousPlay,
  kBestResponse,
};

inline constexpr int kDefaultLibrarySize = 7;

const std::vector<PrimitiveKind>& default_library();
std::string primitive_name(PrimitiveKind k);
PrimitiveKind primitive_from_name(const std::string& name);

struct RolloutConfig {
  int horizon = 60;
  double eta = 0.05;           // shared step size
  double tau = 0.05;           // entropic temperature (mirror primitive)
  double rho = 0.5;            // proximal damping in (0, 1]
  double gamma = 0.1;          // anchor strength
  double entropy_floor = 1e-12;

  void validate() const;
};

// Mutable per-rollout solver state. Each primitive owns its slice of the
// auxiliary fields, so one state can serve a whole mixture: anchors belong
// to Averaging, empirical best-response averages to FictitiousPlay, and the
// previous gradients to Optimistic.
struct SolverState {
  Vec x, y;
  Vec prev_grad_x, prev_grad_y;  // zero at t = 0
  Vec anchor_x, anchor_y;        // uniform at t = 0
  Vec fp_avg_x, fp_avg_y;        // uniform at t = 0
  int t = 0;

  static SolverState initial(const PayoffGame& g);
};

// Pre-projection displacement (x_next_raw - x_t, y_next_raw - y_t).
struct Proposal {
  Vec dx, dy;
};

// Evaluate one primitive's update rule at the current state and advance the
// primitive's own auxiliary fields. Every rule is expressed as a
// displacement so that convex mixtures are well defined even for the
// non-additive rules (Mirror, FictitiousPlay), whose displacement is
// x_rule_next - x_t. The caller composes displacements and projects.
Proposal primitive_update(PrimitiveKind kind, const PayoffGame& g, SolverState& st,
                          const RolloutConfig& cfg);

// Deterministic best pure response to the opponent profile; exact ties go
// to the lowest index.
int best_response_index(const Vec& payoff_per_action);

using UpdateGenerator =
    std::function<Proposal(const PayoffGame&, SolverState&, const RolloutConfig&)>;

// Run T projected steps from the uniform profile, recording exploitability
// after each step (step 0 excluded; the uniform start is identical across
// solvers). A non-finite iterate truncates the trace and pins auc/terminal
// at the divergence bound 4 * max|payoff|.
RolloutTrace rollout(const UpdateGenerator& solver, const PayoffGame& g,
                     const RolloutConfig& cfg);

RolloutTrace rollout_primitive(PrimitiveKind kind, const PayoffGame& g,
                               const RolloutConfig& cfg);

struct PrimitiveScore {
  double auc = 0.0;
  double terminal = 0.0;
};

struct PrimitiveScorecard {
  std::string game_id;
  std::map<PrimitiveKind, PrimitiveScore> per_primitive;
  PrimitiveKind oracle_kind = PrimitiveKind::kGda;
  double oracle_auc = 0.0;
  double margin = 0.0;  // second-best AUC minus best AUC

  double auc_of(PrimitiveKind k) const { return per_primitive.at(k).auc; }
};

// Sweep the library over one game. Oracle is the argmin-AUC primitive,
// ties broken by enum order.
PrimitiveScorecard score_primitives(const PayoffGame& g, const RolloutConfig& cfg,
                                    const std::vector<PrimitiveKind>& library = default_library());

}  // namespace solvercarto

#endif  // SOLVERCARTO_PRIMITIVES_H_
