// Copyright 2026 The Authors.
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

#include "matroidprob/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "matroidprob/error.hpp"
#include "numeric.hpp"

namespace mprob {

namespace {

// Accepted steps may lose at most this much of F to rounding.
constexpr double kDecreaseSlack = 1e-14;
constexpr double kMinStep = 1e-18;

// Projected gradient of log f in the simplex geometry: g_e - <p, g>. Zero at
// an interior maximizer.
double ProjectedGradNorm(std::span<const double> p, std::span<const double> g) {
  const double mean = internal::PairwiseSum(0, p.size(), [&](std::size_t i) {
    return p[i] * g[i];
  });
  double norm = 0.0;
  for (double x : g) norm = std::max(norm, std::abs(x - mean));
  return norm;
}

}  // namespace

AscentResult MaximizeF(const IndepSetIndex& idx, const AscentConfig& cfg) {
  if (!(cfg.step_size > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "step_size must be positive");
  }
  const std::size_t m = idx.ground_size();
  Distribution start = cfg.start.value_or(Distribution::Uniform(m));
  if (start.size() != m) throw Error(ErrorCode::kDimensionMismatch, "start length != m");
  const double kfact = Factorial(idx.k());

  std::vector<double> p(start.probs().begin(), start.probs().end());
  double f = EvalF(idx, p);
  if (!(f > 0.0)) throw Error(ErrorCode::kStartOnZeroSet, "f(start) = 0");
  for (double x : p) {
    if (!(x > 0.0)) throw Error(ErrorCode::kInvalidArgument, "start must be strictly interior");
  }

  AscentResult res{std::move(start), kfact * f, 0, false, 0.0, {kfact * f}};
  std::vector<double> g(m), next(m);
  for (;;) {
    const auto grad = GradientF(idx, p);
    for (std::size_t e = 0; e < m; ++e) g[e] = grad[e] / f;
    res.grad_norm = ProjectedGradNorm(p, g);
    if (res.grad_norm <= cfg.tol_grad) {
      res.converged = true;
      break;
    }
    if (res.iterations >= cfg.max_iters) break;

    bool accepted = false;
    for (double eta = cfg.step_size; eta >= kMinStep; eta *= 0.5) {
      // Shift by the max exponent before exponentiating.
      double shift = -INFINITY;
      for (std::size_t e = 0; e < m; ++e) shift = std::max(shift, eta * g[e]);
      for (std::size_t e = 0; e < m; ++e) next[e] = p[e] * std::exp(eta * g[e] - shift);
      const double total = internal::PairwiseSum(next);
      for (double& x : next) x /= total;
      if (std::any_of(next.begin(), next.end(), [](double x) { return !(x > 0.0); })) {
        continue;
      }
      const double fn = EvalF(idx, next);
      if (kfact * fn >= kfact * f - kDecreaseSlack) {
        p.swap(next);
        f = fn;
        accepted = true;
        break;
      }
    }
    ++res.iterations;
    if (!accepted) {
      // No step size makes progress: f has plateaued at machine precision.
      res.converged = res.grad_norm <= std::sqrt(cfg.tol_grad);
      break;
    }
    res.trajectory.push_back(kfact * f);
  }
  res.p = Distribution(std::move(p), /*renormalize=*/true);
  res.value = EvalProbability(idx, res.p);
  return res;
}

double OptimalityGap(const IndepSetIndex& idx, const Distribution& p) {
  return EvalProbabilityGap(idx, Distribution::Uniform(idx.ground_size()), p);
}

}  // namespace mprob
