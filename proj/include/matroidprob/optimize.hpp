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

#ifndef MATROIDPROB_OPTIMIZE_HPP_
#define MATROIDPROB_OPTIMIZE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "matroidprob/genpoly.hpp"

namespace mprob {

struct AscentConfig {
  double step_size = 0.5;
  std::size_t max_iters = 10'000;
  // Threshold on the L-infinity norm of the simplex-projected gradient of
  // log f.
  double tol_grad = 1e-10;
  // Interior starting point; uniform when absent.
  std::optional<Distribution> start;
};

struct AscentResult {
  Distribution p;
  double value = 0.0;  // F(p)
  std::size_t iterations = 0;
  bool converged = false;
  double grad_norm = 0.0;
  // F at the start and after every accepted step.
  std::vector<double> trajectory;
};

// Exponentiated-gradient ascent on log f over the simplex:
//   p_e <- p_e exp(eta d_e log f(p)), then renormalize.
// A step that lowers f is retried with eta halved; eta resets to step_size
// after every accepted step. Throws Error(kStartOnZeroSet) if f(start) = 0
// and Error(kInvalidArgument) if the start is not strictly interior.
AscentResult MaximizeF(const IndepSetIndex& idx, const AscentConfig& cfg);

// F(u) - F(p) for the uniform u.
double OptimalityGap(const IndepSetIndex& idx, const Distribution& p);

}  // namespace mprob

#endif  // MATROIDPROB_OPTIMIZE_HPP_
