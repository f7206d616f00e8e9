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

#include "matroidprob/projective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "matroidprob/error.hpp"
#include "matroidprob/rng.hpp"
#include "numeric.hpp"
#include "parallel.hpp"

namespace mprob {

std::string ToString(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  return num.str() + "/" + den.str();
}

double ToDouble(const Rational& r) { return r.convert_to<double>(); }

PGParams PGParams::Make(std::size_t n, std::int64_t q, std::size_t k) {
  const PrimeField field(q);
  if (n < 1) throw Error(ErrorCode::kSpecInvalid, "N must be >= 1");
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kKOutOfRange,
                "K=" + std::to_string(k) + " outside [1, N=" + std::to_string(n) + "]");
  }
  const BigInt m = GaussianBracket(n, field.modulus());
  if (m > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::kTooLarge, "projective space too large");
  }
  return PGParams{n, field.modulus(), k, m.convert_to<std::uint64_t>()};
}

PGParams PGParams::FromMatroid(const Matroid& m, std::size_t k) {
  const auto* spec = std::get_if<ProjectiveSpec>(&m.spec());
  if (spec == nullptr) throw Error(ErrorCode::kInvalidArgument, "matroid is not projective");
  return Make(spec->n, spec->q, k);
}

BigInt GaussianBracket(std::size_t j, std::uint32_t q) {
  // 1 + q + ... + q^{j-1}
  BigInt sum = 0, power = 1;
  for (std::size_t i = 0; i < j; ++i) {
    sum += power;
    power *= q;
  }
  return sum;
}

Rational UniformOptimumBracketForm(const PGParams& params) {
  const BigInt m = params.m;
  Rational r = 1;
  for (std::size_t j = 0; j < params.k; ++j) {
    r *= Rational(1) - Rational(GaussianBracket(j, params.q), m);
  }
  return r;
}

Rational UniformOptimumVectorForm(const PGParams& params) {
  const BigInt qn = boost::multiprecision::pow(BigInt(params.q), static_cast<unsigned>(params.n));
  Rational r = 1;
  BigInt qj = 1;
  for (std::size_t j = 0; j < params.k; ++j) {
    r *= Rational(qn - qj, qn - 1);
    qj *= params.q;
  }
  return r;
}

Rational UniformOptimum(const PGParams& params) {
  Rational bracket = UniformOptimumBracketForm(params);
  if (bracket != UniformOptimumVectorForm(params)) {
    throw Error(ErrorCode::kInternal, "closed forms of the uniform optimum disagree");
  }
  return bracket;
}

Rational B2Explicit(const PGParams& params) {
  if (params.k < 2) throw Error(ErrorCode::kKOutOfRange, "B2 requires K >= 2");
  Rational r = 1;
  for (std::size_t j = 2; j < params.k; ++j) {
    r *= Rational(BigInt(params.m) - GaussianBracket(j, params.q));
    r /= Rational(j - 1);  // accumulates 1/(K-2)!
  }
  return r;
}

std::uint64_t B2Count(const IndepSetIndex& idx, std::size_t e, std::size_t e2) {
  if (e >= idx.ground_size() || e2 >= idx.ground_size()) {
    throw Error(ErrorCode::kElementOutOfRange, "pair element out of range");
  }
  if (e == e2) throw Error(ErrorCode::kSameElement, "B2 needs two distinct elements");
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const auto s = idx.set(i);
    const bool has_e = std::find(s.begin(), s.end(), e) != s.end();
    if (has_e && std::find(s.begin(), s.end(), e2) != s.end()) ++count;
  }
  return count;
}

std::uint64_t B2Count(const Matroid& m, std::size_t k, std::size_t e, std::size_t e2) {
  if (e >= m.ground_size() || e2 >= m.ground_size()) {
    throw Error(ErrorCode::kElementOutOfRange, "pair element out of range");
  }
  if (e == e2) throw Error(ErrorCode::kSameElement, "B2 needs two distinct elements");
  return B2Count(EnumerateIndependentKSets(m, k), e, e2);
}

Rational HessianCoefficient(const PGParams& params) {
  Rational c = B2Explicit(params);
  for (std::size_t i = 2; i <= params.k; ++i) c *= Rational(i);
  for (std::size_t i = 2; i < params.k; ++i) c /= Rational(BigInt(params.m));
  return c;
}

double SquaredDistance(std::span<const double> p, std::span<const double> u) {
  if (p.size() != u.size()) throw Error(ErrorCode::kDimensionMismatch, "length mismatch");
  return internal::PairwiseSum(0, p.size(), [&](std::size_t i) {
    const double d = p[i] - u[i];
    return d * d;
  });
}

K2Gap ComputeK2Gap(const IndepSetIndex& idx, const PGParams& params,
                   const Distribution& p) {
  if (params.k != 2 || idx.k() != 2) {
    throw Error(ErrorCode::kKMismatch, "the K=2 identity needs K = 2");
  }
  if (idx.ground_size() != params.m || p.size() != params.m) {
    throw Error(ErrorCode::kDimensionMismatch, "distribution length != m");
  }
  const Distribution u = Distribution::Uniform(p.size());
  return K2Gap{EvalProbabilityGap(idx, u, p),
               SquaredDistance(p.probs(), u.probs())};
}

VectorDistribution::VectorDistribution(std::size_t n, std::int64_t q,
                                       std::vector<double> probs, bool renormalize)
    : n_(n),
      q_(PrimeField(q).modulus()),
      probs_(std::move(probs), renormalize) {
  if (n_ < 1) throw Error(ErrorCode::kSpecInvalid, "N must be >= 1");
  const BigInt count = boost::multiprecision::pow(BigInt(q_), static_cast<unsigned>(n_)) - 1;
  if (BigInt(probs_.size()) != count) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vector distribution needs q^N - 1 = " + count.str() + " entries");
  }
}

Distribution Pushforward(const VectorDistribution& dist) {
  const ProjectiveSpace space(dist.n(), PrimeField(dist.q()));
  std::vector<double> p(space.num_points(), 0.0);
  const auto probs = dist.probs();
  for (std::size_t i = 0; i < probs.size(); ++i) {
    p[space.PointOfNonzeroVector(i)] += probs[i];
  }
  return Distribution(std::move(p), /*renormalize=*/true);
}

namespace {

// d = u - p projected onto {sum d = 0}; removes rounding in sum(p) that would
// otherwise enter the gap at first order.
std::vector<double> TangentDisplacement(std::span<const double> u,
                                        std::span<const double> p) {
  const std::size_t m = p.size();
  std::vector<double> d(m);
  double sum = 0.0, comp = 0.0;
  for (std::size_t e = 0; e < m; ++e) {
    d[e] = u[e] - p[e];
    const double t = sum + d[e];
    comp += std::abs(sum) >= std::abs(d[e]) ? (sum - t) + d[e] : (d[e] - t) + sum;
    sum = t;
  }
  const double shift = (sum + comp) / static_cast<double>(m);
  for (double& x : d) x -= shift;
  return d;
}

// R at p, or +inf when p is within 1e-12 of u.
double RatioAt(const IndepSetIndex& idx, std::span<const double> u,
               std::span<const double> p) {
  const auto d = TangentDisplacement(u, p);
  double d2 = 0.0;
  for (double x : d) d2 += x * x;
  if (std::sqrt(d2) <= 1e-12) return std::numeric_limits<double>::infinity();
  return Factorial(idx.k()) * EvalFDrop(idx, u, d) / d2;
}

}  // namespace

double StabilityRatio(const IndepSetIndex& idx, const Distribution& p,
                      const Distribution& u) {
  if (p.size() != u.size() || p.size() != idx.ground_size()) {
    throw Error(ErrorCode::kDimensionMismatch, "distribution length != m");
  }
  const double r = RatioAt(idx, u.probs(), p.probs());
  if (std::isinf(r)) throw Error(ErrorCode::kDegenerateInput, "p coincides with u");
  return r;
}

namespace {

Distribution SparseSample(std::size_t m, std::uint64_t seed, std::uint64_t stream) {
  StreamRng rng(seed, stream);
  // Support sizes 1..min(m, 4) equally likely, support chosen uniformly.
  const std::size_t s = 1 + rng.Below(std::min<std::size_t>(m, 4));
  std::vector<std::size_t> perm(m);
  for (std::size_t i = 0; i < m; ++i) perm[i] = i;
  for (std::size_t i = 0; i < s; ++i) {
    std::swap(perm[i], perm[i + rng.Below(m - i)]);
  }
  std::vector<double> p(m, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < s; ++i) {
    p[perm[i]] = rng.Exponential();
    total += p[perm[i]];
  }
  for (double& x : p) x /= total;
  return Distribution(std::move(p), /*renormalize=*/true);
}

// Pattern search on R over moves p_i += d, p_j -= d.
void Refine(const IndepSetIndex& idx, const Distribution& u, double fu,
            std::vector<double>& p, double& best, std::size_t iters,
            std::uint64_t seed, std::uint64_t stream) {
  const std::size_t m = p.size();
  if (m < 2) return;
  StreamRng rng(seed, stream);
  // A move must beat the incumbent by more than the rounding noise of R.
  auto ratio = [&](const std::vector<double>& x, double& noise) {
    const double d2 = SquaredDistance(x, u.probs());
    noise = 64.0 * std::numeric_limits<double>::epsilon() * std::max(fu, 1.0) / std::sqrt(d2);
    return RatioAt(idx, u.probs(), x);
  };
  double step = 0.25 * *std::max_element(p.begin(), p.end());
  std::vector<double> trial(m);
  for (std::size_t it = 0; it < iters && step > 1e-15; ++it) {
    bool improved = false;
    for (std::size_t attempt = 0; attempt < 2 * m && !improved; ++attempt) {
      const std::size_t i = rng.Below(m);
      std::size_t j = rng.Below(m - 1);
      if (j >= i) ++j;
      const double d = std::min(step, p[j]);
      if (d <= 0.0) continue;
      trial = p;
      trial[i] += d;
      trial[j] -= d;
      double noise = 0.0;
      const double r = ratio(trial, noise);
      if (r < best - noise) {
        best = r;
        p = trial;
        improved = true;
      }
    }
    if (!improved) step *= 0.5;
  }
}

}  // namespace

ScanReport StabilityScan(const IndepSetIndex& idx, const ScanConfig& cfg) {
  if (cfg.samples < 1) throw Error(ErrorCode::kInvalidArgument, "samples must be >= 1");
  const std::size_t m = idx.ground_size();
  const Distribution u = Distribution::Uniform(m);
  const double fu = EvalProbability(idx, u);

  // NaN marks samples that landed on u.
  std::vector<double> ratios(cfg.samples, std::numeric_limits<double>::quiet_NaN());
  const unsigned threads = internal::ResolveThreads(cfg.threads, cfg.samples);
  internal::ParallelChunks(cfg.samples, threads, [&](unsigned, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const Distribution p = cfg.mode == ScanMode::kSparse
                                 ? SparseSample(m, cfg.seed, i)
                                 : Distribution::RandomDirichlet(m, cfg.seed, i);
      const double r = RatioAt(idx, u.probs(), p.probs());
      if (!std::isinf(r)) ratios[i] = r;
    }
  });

  ScanReport rep;
  rep.n_samples = cfg.samples;
  rep.seed = cfg.seed;
  rep.mode = cfg.mode;
  std::size_t best = cfg.samples;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    if (std::isnan(ratios[i])) continue;
    if (ratios[i] < lo) {
      lo = ratios[i];
      best = i;
    }
    hi = std::max(hi, ratios[i]);
  }
  if (best == cfg.samples) {
    throw Error(ErrorCode::kDegenerateInput, "every sample coincided with u");
  }
  rep.min_r_sampled = lo;
  rep.max_r = hi;

  const std::size_t nb = std::max<std::size_t>(cfg.buckets, 1);
  const double width = hi > lo ? (hi - lo) / static_cast<double>(nb) : 0.0;
  rep.histogram.resize(nb);
  for (std::size_t b = 0; b < nb; ++b) {
    rep.histogram[b].lo = lo + width * static_cast<double>(b);
    rep.histogram[b].hi = b + 1 == nb ? hi : lo + width * static_cast<double>(b + 1);
  }
  for (double r : ratios) {
    if (std::isnan(r)) continue;
    std::size_t b = width > 0.0 ? static_cast<std::size_t>((r - lo) / width) : 0;
    rep.histogram[std::min(b, nb - 1)].count++;
  }

  const Distribution start = cfg.mode == ScanMode::kSparse
                                 ? SparseSample(m, cfg.seed, best)
                                 : Distribution::RandomDirichlet(m, cfg.seed, best);
  std::vector<double> p(start.probs().begin(), start.probs().end());
  double min_r = lo;
  Refine(idx, u, fu, p, min_r, cfg.refine_iters, cfg.seed, cfg.samples);
  rep.min_r = min_r;
  rep.argmin = std::move(p);
  rep.nonunique = rep.min_r < ScanReport::kNonuniqueThreshold;
  return rep;
}

K2CheckReport CheckK2Identity(const IndepSetIndex& idx, const PGParams& params,
                              std::size_t samples, std::uint64_t seed) {
  K2CheckReport rep;
  rep.samples = samples;
  const Distribution u = Distribution::Uniform(idx.ground_size());
  for (std::size_t i = 0; i < samples; ++i) {
    const Distribution p = Distribution::RandomDirichlet(idx.ground_size(), seed, i);
    const K2Gap gap = ComputeK2Gap(idx, params, p);
    rep.max_residual = std::max(rep.max_residual, std::abs(gap.lhs - gap.rhs));
    rep.max_ratio_deviation =
        std::max(rep.max_ratio_deviation, std::abs(StabilityRatio(idx, p, u) - 1.0));
  }
  return rep;
}

HessianCheckReport CheckHessianIdentity(const IndepSetIndex& idx,
                                        const PGParams& params,
                                        std::size_t directions,
                                        std::uint64_t seed) {
  if (idx.ground_size() != params.m || idx.k() != params.k) {
    throw Error(ErrorCode::kDimensionMismatch, "index does not match PG parameters");
  }
  HessianCheckReport rep;
  rep.coefficient = HessianCoefficient(params);
  rep.b2_explicit = B2Explicit(params);
  rep.directions = directions;
  const std::size_t m = idx.ground_size();
  const double kfact = Factorial(params.k);
  const double coeff = ToDouble(rep.coefficient);

  StreamRng pairs(seed, ~std::uint64_t{0});
  rep.b2_consistent = true;
  for (std::size_t t = 0; t < 20; ++t) {
    const std::size_t e = pairs.Below(m);
    std::size_t e2 = pairs.Below(m - 1);
    if (e2 >= e) ++e2;
    const std::uint64_t c = B2Count(idx, e, e2);
    rep.b2_counts.push_back(c);
    rep.b2_consistent = rep.b2_consistent && Rational(c) == rep.b2_explicit;
  }

  const std::vector<double> u(m, 1.0 / static_cast<double>(m));
  const DenseMatrix hess = HessianF(idx, u);
  for (std::size_t e = 0; e < m; ++e) {
    rep.max_diagonal = std::max(rep.max_diagonal, std::abs(hess(e, e)));
  }
  const double fu = EvalF(idx, u);
  for (std::size_t d = 0; d < directions; ++d) {
    StreamRng rng(seed, d);
    std::vector<double> v(m);
    for (double& x : v) x = rng.Uniform() - 0.5;
    const double mean = internal::PairwiseSum(v) / static_cast<double>(m);
    for (double& x : v) x -= mean;
    const double norm2 = SquaredDistance(v, std::vector<double>(m, 0.0));
    const double exact = kfact * hess.QuadraticForm(v) / norm2;
    rep.max_relative_deviation =
        std::max(rep.max_relative_deviation, std::abs(exact + coeff) / coeff);

    // F(u + tv) is a polynomial in t; the central second difference has
    // O(t^2) truncation error.
    const double t = 1e-3 / std::sqrt(norm2);
    std::vector<double> plus(m), minus(m);
    for (std::size_t i = 0; i < m; ++i) {
      plus[i] = u[i] + t * v[i];
      minus[i] = u[i] - t * v[i];
    }
    const double second =
        kfact * (EvalF(idx, plus) - 2.0 * fu + EvalF(idx, minus)) / (t * t * norm2);
    rep.max_fd_relative_deviation =
        std::max(rep.max_fd_relative_deviation, std::abs(second + coeff) / coeff);
  }
  return rep;
}

}  // namespace mprob
