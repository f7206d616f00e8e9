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

#include "matroidprob/montecarlo.hpp"

#include <algorithm>
#include <cmath>

#include "matroidprob/error.hpp"
#include "parallel.hpp"

namespace mprob {

Sampler::Sampler(const Distribution& p) : cdf_(p.size()) {
  double acc = 0.0;
  for (std::size_t e = 0; e < p.size(); ++e) {
    acc += p[e];
    cdf_[e] = acc;
    if (p[e] > 0.0) last_positive_ = e;
  }
}

std::size_t Sampler::Draw(double u) const {
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  // Rounding can leave the total slightly below 1.
  if (it == cdf_.end()) return last_positive_;
  return static_cast<std::size_t>(it - cdf_.begin());
}

KSetDraw SampleKSet(const Matroid& m, const Sampler& sampler, std::size_t k,
                    StreamRng& rng) {
  if (k < 1) throw Error(ErrorCode::kKOutOfRange, "K must be >= 1");
  KSetDraw draw;
  draw.elements.reserve(k);
  for (std::size_t i = 0; i < k; ++i) draw.elements.push_back(sampler.Draw(rng.Uniform()));
  std::vector<std::size_t> sorted = draw.elements;
  std::sort(sorted.begin(), sorted.end());
  draw.distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (!draw.distinct) return draw;
  if (m.has_vectors()) {
    std::vector<std::span<const std::uint32_t>> rows;
    rows.reserve(k);
    for (std::size_t e : draw.elements) rows.push_back(m.vector(e));
    draw.independent = RankOfRows(m.field(), m.vector_dim(), rows) == k;
  } else {
    draw.independent = m.IsIndependent(sorted);
  }
  return draw;
}

McEstimate EstimateF(const Matroid& m, const Distribution& p, std::size_t k,
                     std::uint64_t n_trials, std::uint64_t seed, unsigned threads) {
  if (n_trials < 1) throw Error(ErrorCode::kInvalidArgument, "n_trials must be >= 1");
  if (p.size() != m.ground_size()) {
    throw Error(ErrorCode::kDimensionMismatch, "distribution length != ground size");
  }
  if (k < 1) throw Error(ErrorCode::kKOutOfRange, "K must be >= 1");
  const Sampler sampler(p);
  const unsigned t = internal::ResolveThreads(threads, n_trials);
  std::vector<std::uint64_t> counts(t, 0);
  internal::ParallelChunks(n_trials, t, [&](unsigned c, std::size_t lo, std::size_t hi) {
    std::uint64_t local = 0;
    for (std::size_t trial = lo; trial < hi; ++trial) {
      StreamRng rng(seed, trial);
      const KSetDraw d = SampleKSet(m, sampler, k, rng);
      if (d.distinct && d.independent) ++local;
    }
    counts[c] = local;
  });
  McEstimate est;
  est.n_trials = n_trials;
  est.seed = seed;
  for (auto c : counts) est.successes += c;
  est.p_hat = static_cast<double>(est.successes) / static_cast<double>(n_trials);
  est.std_err = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(n_trials));
  return est;
}

}  // namespace mprob
