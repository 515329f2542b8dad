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

#include "solvercarto/primitives.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace solvercarto {

namespace {

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec add_scaled(const Vec& a, double c, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + c * b[i];
  return r;
}

// x_{i} <- x_i * exp(exponent_i), renormalized; max-subtraction keeps the
// exponentials in range.
Vec multiplicative_step(const Vec& x, const Vec& exponent) {
  const double mx = *std::max_element(exponent.begin(), exponent.end());
  Vec next(x.size());
  double z = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    next[i] = x[i] * std::exp(exponent[i] - mx);
    z += next[i];
  }
  if (z <= 0.0) return x;  // fully degenerate point; multiplicative rule stalls
  for (double& v : next) v /= z;
  return next;
}

Vec pure_strategy(std::size_t dim, int index) {
  Vec e(dim, 0.0);
  e[static_cast<std::size_t>(index)] = 1.0;
  return e;
}

void running_average(Vec& avg, const Vec& sample, int t) {
  const double w = 1.0 / static_cast<double>(t + 1);
  for (std::size_t i = 0; i < avg.size(); ++i)
    avg[i] = (static_cast<double>(t) * avg[i] + sample[i]) * w;
}

}  // namespace

const std::vector<PrimitiveKind>& default_library() {
  static const std::vector<PrimitiveKind> lib = {
      PrimitiveKind::kGda,           PrimitiveKind::kMirror,
      PrimitiveKind::kProximal,      PrimitiveKind::kAveraging,
      PrimitiveKind::kExtragradient, PrimitiveKind::kOptimistic,
      PrimitiveKind::kFictitiousPlay,
  };
  return lib;
}

std::string primitive_name(PrimitiveKind k) {
  switch (k) {
    case PrimitiveKind::kGda: return "gda";
    case PrimitiveKind::kMirror: return "mirror";
    case PrimitiveKind::kProximal: return "proximal";
    case PrimitiveKind::kAveraging: return "averaging";
    case PrimitiveKind::kExtragradient: return "extragradient";
    case PrimitiveKind::kOptimistic: return "optimistic";
    case PrimitiveKind::kFictitiousPlay: return "fictitious_play";
    case PrimitiveKind::kBestResponse: return "best_response";
  }
  throw std::invalid_argument("primitive_name: unknown kind");
}

PrimitiveKind primitive_from_name(const std::string& name) {
  for (int k = 0; k <= static_cast<int>(PrimitiveKind::kBestResponse); ++k) {
    const auto kind = static_cast<PrimitiveKind>(k);
    if (primitive_name(kind) == name) return kind;
  }
  throw std::invalid_argument("primitive_from_name: unknown primitive '" + name + "'");
}

void RolloutConfig::validate() const {
  if (horizon <= 0) throw std::invalid_argument("RolloutConfig: horizon must be > 0");
  if (eta <= 0.0) throw std::invalid_argument("RolloutConfig: eta must be > 0");
  if (tau < 0.0) throw std::invalid_argument("RolloutConfig: tau must be >= 0");
  if (rho <= 0.0 || rho > 1.0) throw std::invalid_argument("RolloutConfig: rho must be in (0,1]");
  if (gamma < 0.0) throw std::invalid_argument("RolloutConfig: gamma must be >= 0");
  if (entropy_floor <= 0.0)
    throw std::invalid_argument("RolloutConfig: entropy_floor must be > 0");
}

SolverState SolverState::initial(const PayoffGame& g) {
  SolverState st;
  st.x = uniform_strategy(g.rows());
  st.y = uniform_strategy(g.cols());
  st.prev_grad_x = Vec(g.rows(), 0.0);
  st.prev_grad_y = Vec(g.cols(), 0.0);
  st.anchor_x = st.x;
  st.anchor_y = st.y;
  st.fp_avg_x = st.x;
  st.fp_avg_y = st.y;
  st.t = 0;
  return st;
}

int best_response_index(const Vec& payoff_per_action) {
  int best = 0;
  for (std::size_t i = 1; i < payoff_per_action.size(); ++i)
    if (payoff_per_action[i] > payoff_per_action[best]) best = static_cast<int>(i);
  return best;
}

Proposal primitive_update(PrimitiveKind kind, const PayoffGame& g, SolverState& st,
                          const RolloutConfig& cfg) {
  if (static_cast<int>(st.x.size()) != g.rows() || static_cast<int>(st.y.size()) != g.cols())
    throw std::invalid_argument("primitive_update: state does not match game dimensions");

  const Vec gx = g.a.apply(st.y);             // row ascent direction A y
  const Vec gy = g.b.apply_transposed(st.x);  // column ascent direction B^T x
  const double eta = cfg.eta;

  Proposal p;
  switch (kind) {
    case PrimitiveKind::kGda: {
      p.dx = add_scaled(Vec(st.x.size(), 0.0), eta, gx);
      p.dy = add_scaled(Vec(st.y.size(), 0.0), eta, gy);
      break;
    }
    case PrimitiveKind::kMirror: {
      // Multiplicative update on the entropic ascent direction
      // g - tau * grad(sum p log p); at tau = 0 this is plain mirror ascent.
      Vec ex = add_scaled(gx, -cfg.tau, negative_entropy_grad(st.x, cfg.entropy_floor));
      Vec ey = add_scaled(gy, -cfg.tau, negative_entropy_grad(st.y, cfg.entropy_floor));
      for (double& v : ex) v *= eta;
      for (double& v : ey) v *= eta;
      p.dx = sub(multiplicative_step(st.x, ex), st.x);
      p.dy = sub(multiplicative_step(st.y, ey), st.y);
      break;
    }
    case PrimitiveKind::kProximal: {
      // Damped GDA proposal: rho * (Pi(x + eta g) - x).
      const Vec xt = project_simplex(add_scaled(st.x, eta, gx));
      const Vec yt = project_simplex(add_scaled(st.y, eta, gy));
      p.dx = sub(xt, st.x);
      p.dy = sub(yt, st.y);
      for (double& v : p.dx) v *= cfg.rho;
      for (double& v : p.dy) v *= cfg.rho;
      break;
    }
    case PrimitiveKind::kAveraging: {
      p.dx = add_scaled(add_scaled(Vec(st.x.size(), 0.0), eta, gx), cfg.gamma,
                        sub(st.anchor_x, st.x));
      p.dy = add_scaled(add_scaled(Vec(st.y.size(), 0.0), eta, gy), cfg.gamma,
                        sub(st.anchor_y, st.y));
      // Anchors track the rule's own next iterate by running average.
      running_average(st.anchor_x, project_simplex(add_scaled(st.x, 1.0, p.dx)), st.t);
      running_average(st.anchor_y, project_simplex(add_scaled(st.y, 1.0, p.dy)), st.t);
      break;
    }
    case PrimitiveKind::kExtragradient: {
      const Vec xh = project_simplex(add_scaled(st.x, eta, gx));
      const Vec yh = project_simplex(add_scaled(st.y, eta, gy));
      p.dx = add_scaled(Vec(st.x.size(), 0.0), eta, g.a.apply(yh));
      p.dy = add_scaled(Vec(st.y.size(), 0.0), eta, g.b.apply_transposed(xh));
      break;
    }
    case PrimitiveKind::kOptimistic: {
      p.dx = Vec(st.x.size());
      p.dy = Vec(st.y.size());
      for (std::size_t i = 0; i < p.dx.size(); ++i)
        p.dx[i] = eta * (2.0 * gx[i] - st.prev_grad_x[i]);
      for (std::size_t i = 0; i < p.dy.size(); ++i)
        p.dy[i] = eta * (2.0 * gy[i] - st.prev_grad_y[i]);
      st.prev_grad_x = gx;
      st.prev_grad_y = gy;
      break;
    }
    case PrimitiveKind::kFictitiousPlay: {
      // Best responses against the opponent's stored empirical average; the
      // rule's next iterate is the running average of best responses.
      const Vec brx = pure_strategy(st.x.size(), best_response_index(g.a.apply(st.fp_avg_y)));
      const Vec bry =
          pure_strategy(st.y.size(), best_response_index(g.b.apply_transposed(st.fp_avg_x)));
      const double w = 1.0 / static_cast<double>(st.t + 1);
      p.dx = sub(brx, st.x);
      p.dy = sub(bry, st.y);
      for (double& v : p.dx) v *= w;
      for (double& v : p.dy) v *= w;
      running_average(st.fp_avg_x, brx, st.t);
      running_average(st.fp_avg_y, bry, st.t);
      break;
    }
    case PrimitiveKind::kBestResponse: {
      p.dx = sub(pure_strategy(st.x.size(), best_response_index(gx)), st.x);
      p.dy = sub(pure_strategy(st.y.size(), best_response_index(gy)), st.y);
      break;
    }
  }
  return p;
}

RolloutTrace rollout(const UpdateGenerator& solver, const PayoffGame& g,
                     const RolloutConfig& cfg) {
  cfg.validate();
  SolverState st = SolverState::initial(g);
  RolloutTrace trace;
  trace.exploitability.reserve(cfg.horizon);

  const double divergence_bound = 4.0 * std::max(g.a.max_abs(), g.b.max_abs());

  for (int t = 1; t <= cfg.horizon; ++t) {
    const Proposal p = solver(g, st, cfg);
    Vec xr = add_scaled(st.x, 1.0, p.dx);
    Vec yr = add_scaled(st.y, 1.0, p.dy);
    if (!all_finite(xr) || !all_finite(yr)) {
      trace.diverged = true;
      trace.auc = divergence_bound;
      trace.terminal = divergence_bound;
      return trace;
    }
    st.x = project_simplex(xr);
    st.y = project_simplex(yr);
    st.t += 1;
    trace.exploitability.push_back(exploitability(g, {st.x, st.y}));
  }

  double sum = 0.0;
  for (double e : trace.exploitability) sum += e;
  trace.auc = sum / static_cast<double>(trace.exploitability.size());
  trace.terminal = trace.exploitability.back();
  return trace;
}

RolloutTrace rollout_primitive(PrimitiveKind kind, const PayoffGame& g,
                               const RolloutConfig& cfg) {
  return rollout(
      [kind](const PayoffGame& game, SolverState& st, const RolloutConfig& c) {
        return primitive_update(kind, game, st, c);
      },
      g, cfg);
}

PrimitiveScorecard score_primitives(const PayoffGame& g, const RolloutConfig& cfg,
                                    const std::vector<PrimitiveKind>& library) {
  if (library.empty()) throw std::invalid_argument("score_primitives: empty library");

  PrimitiveScorecard card;
  card.game_id = g.id;
  for (PrimitiveKind kind : library) {
    const RolloutTrace tr = rollout_primitive(kind, g, cfg);
    card.per_primitive[kind] = {tr.auc, tr.terminal};
  }

  double best = std::numeric_limits<double>::infinity();
  double second = std::numeric_limits<double>::infinity();
  for (PrimitiveKind kind : library) {  // library follows enum order for ties
    const double auc = card.per_primitive[kind].auc;
    if (auc < best) {
      second = best;
      best = auc;
      card.oracle_kind = kind;
    } else if (auc < second) {
      second = auc;
    }
  }
  card.oracle_auc = best;
  card.margin = library.size() > 1 ? second - best : 0.0;
  return card;
}

}  // namespace solvercarto
