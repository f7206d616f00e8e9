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

#ifndef MATROIDPROB_MONTECARLO_HPP_
#define MATROIDPROB_MONTECARLO_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "matroidprob/genpoly.hpp"
#include "matroidprob/matroid.hpp"
#include "matroidprob/rng.hpp"

namespace mprob {

struct McEstimate {
  std::uint64_t n_trials = 0;
  std::uint64_t successes = 0;
  double p_hat = 0.0;
  double std_err = 0.0;
  std::uint64_t seed = 0;
};

struct KSetDraw {
  bool distinct = false;
  bool independent = false;  // only meaningful when distinct
  std::vector<std::size_t> elements;
};

// Cumulative sums of p for inverse-CDF sampling.
class Sampler {
 public:
  explicit Sampler(const Distribution& p);

  // Smallest e with u < cdf[e]; ties go to the lower index and zero-mass
  // elements are never returned.
  std::size_t Draw(double u) const;

 private:
  std::vector<double> cdf_;
  std::size_t last_positive_ = 0;
};

// Draws X_1..X_K i.i.d. from the sampler's distribution and tests whether
// they are distinct and independent in m. For linear and projective matroids
// independence is the rank over F_p of the representative rows.
KSetDraw SampleKSet(const Matroid& m, const Sampler& sampler, std::size_t k,
                    StreamRng& rng);

// Trial t draws from StreamRng(seed, t), so the estimate is bit-identical for
// any thread count.
McEstimate EstimateF(const Matroid& m, const Distribution& p, std::size_t k,
                     std::uint64_t n_trials, std::uint64_t seed,
                     unsigned threads = 0);

}  // namespace mprob

#endif  // MATROIDPROB_MONTECARLO_HPP_
