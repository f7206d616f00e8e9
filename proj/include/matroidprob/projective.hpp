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

#ifndef MATROIDPROB_PROJECTIVE_HPP_
#define MATROIDPROB_PROJECTIVE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "matroidprob/genpoly.hpp"
#include "matroidprob/matroid.hpp"

namespace mprob {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "num/den" (or "num" when den == 1).
std::string ToString(const Rational& r);
double ToDouble(const Rational& r);

// Parameters of PG(N-1, q) with K samples; m = (q^N - 1)/(q - 1).
struct PGParams {
  std::size_t n = 1;
  std::uint32_t q = 2;
  std::size_t k = 1;
  std::uint64_t m = 1;

  // Validates q prime, N >= 1 and 1 <= K <= N.
  static PGParams Make(std::size_t n, std::int64_t q, std::size_t k);
  // From a projective matroid; throws Error(kInvalidArgument) otherwise.
  static PGParams FromMatroid(const Matroid& m, std::size_t k);
};

// [j]_q = (q^j - 1)/(q - 1); [0]_q = 0.
BigInt GaussianBracket(std::size_t j, std::uint32_t q);

// prod_{j<K} (1 - [j]_q / m).
Rational UniformOptimumBracketForm(const PGParams& params);
// prod_{j<K} (q^N - q^j)/(q^N - 1).
Rational UniformOptimumVectorForm(const PGParams& params);
// F_{PG(N-1,q),K}(u). Both closed forms are computed and must agree exactly
// (Error(kInternal) otherwise).
Rational UniformOptimum(const PGParams& params);

// Number of independent K-sets through a fixed pair of points:
// (1/(K-2)!) prod_{j=2}^{K-1} (m - [j]_q). Throws Error(kKOutOfRange) if K < 2.
Rational B2Explicit(const PGParams& params);

// Counts the independent K-sets containing both e and e2 by enumeration.
std::uint64_t B2Count(const Matroid& m, std::size_t k, std::size_t e, std::size_t e2);
// Same count read off an existing index.
std::uint64_t B2Count(const IndepSetIndex& idx, std::size_t e, std::size_t e2);

// K! B2 m^{-(K-2)}: the magnitude c with v^T ∇²F(u) v = -c ||v||^2 on the
// zero-sum tangent space.
Rational HessianCoefficient(const PGParams& params);

struct K2Gap {
  double lhs = 0.0;  // F(u) - F(p)
  double rhs = 0.0;  // ||p - u||^2
};

// Throws Error(kKMismatch) unless params.k == idx.k() == 2.
K2Gap ComputeK2Gap(const IndepSetIndex& idx, const PGParams& params,
                   const Distribution& p);

// A distribution on the q^N - 1 nonzero vectors of F_q^N, in the
// lexicographic order of ProjectiveSpace::NonzeroVector.
class VectorDistribution {
 public:
  VectorDistribution(std::size_t n, std::int64_t q, std::vector<double> probs,
                     bool renormalize = false);

  std::size_t n() const { return n_; }
  std::uint32_t q() const { return q_; }
  std::span<const double> probs() const { return probs_.probs(); }

 private:
  std::size_t n_;
  std::uint32_t q_;
  Distribution probs_;
};

// p_L = sum of P(v) over the nonzero vectors v of the line L.
Distribution Pushforward(const VectorDistribution& dist);

// ||p - u||_2^2.
double SquaredDistance(std::span<const double> p, std::span<const double> u);

// R(p) = (F(u) - F(p)) / ||p - u||^2. Throws Error(kDegenerateInput) when
// ||p - u|| <= 1e-12.
double StabilityRatio(const IndepSetIndex& idx, const Distribution& p,
                      const Distribution& u);

enum class ScanMode { kDirichlet, kSparse };

struct ScanConfig {
  std::size_t samples = 10'000;
  std::uint64_t seed = 0;
  ScanMode mode = ScanMode::kDirichlet;
  unsigned threads = 0;  // 0 = hardware concurrency
  std::size_t buckets = 20;
  // Coordinate-pair descent on R from the best sample; 0 disables.
  std::size_t refine_iters = 200;
};

struct HistogramBucket {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;
};

struct ScanReport {
  double min_r = 0.0;
  std::vector<double> argmin;
  // Smallest R among the raw samples, before refinement.
  double min_r_sampled = 0.0;
  double max_r = 0.0;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
  ScanMode mode = ScanMode::kDirichlet;
  std::vector<HistogramBucket> histogram;
  // min_r < kNonuniqueThreshold: the optimum is not strictly stable.
  bool nonunique = false;

  static constexpr double kNonuniqueThreshold = 1e-6;
};

// Samples R(p) over random distributions. Sample i uses Philox stream i, so
// results do not depend on the thread count.
ScanReport StabilityScan(const IndepSetIndex& idx, const ScanConfig& cfg);

struct K2CheckReport {
  std::size_t samples = 0;
  double max_residual = 0.0;        // max |lhs - rhs|
  double max_ratio_deviation = 0.0; // max |R(p) - 1|
};

// Random Dirichlet p on PG with K = 2: the gap equals ||p - u||^2.
K2CheckReport CheckK2Identity(const IndepSetIndex& idx, const PGParams& params,
                              std::size_t samples, std::uint64_t seed);

struct HessianCheckReport {
  Rational coefficient;         // K! B2 m^{-(K-2)}
  Rational b2_explicit;
  std::vector<std::uint64_t> b2_counts;  // over sampled pairs
  bool b2_consistent = false;
  double max_diagonal = 0.0;             // max |H_ee|, exactly 0 expected
  double max_relative_deviation = 0.0;   // exact Hessian vs -coefficient
  double max_fd_relative_deviation = 0.0;  // second differences vs -coefficient
  std::size_t directions = 0;
};

// Compares K! ∇²f(u) on random zero-sum directions with -coefficient, both
// through the exact Hessian and through central second differences of F.
HessianCheckReport CheckHessianIdentity(const IndepSetIndex& idx,
                                        const PGParams& params,
                                        std::size_t directions,
                                        std::uint64_t seed);

}  // namespace mprob

#endif  // MATROIDPROB_PROJECTIVE_HPP_
