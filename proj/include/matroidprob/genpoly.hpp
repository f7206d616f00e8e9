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

#ifndef MATROIDPROB_GENPOLY_HPP_
#define MATROIDPROB_GENPOLY_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "matroidprob/matroid.hpp"

namespace mprob {

// A point of the probability simplex over the ground set.
class Distribution {
 public:
  static constexpr double kSumTolerance = 1e-12;
  static constexpr double kRepairTolerance = 1e-6;

  // Entries must be finite and nonnegative with sum within kSumTolerance of 1.
  // With `renormalize`, inputs whose sum is within kRepairTolerance of 1 are
  // divided by their sum. Throws Error(kInvalidDistribution).
  explicit Distribution(std::vector<double> probs, bool renormalize = false);

  static Distribution Uniform(std::size_t m);
  static Distribution PointMass(std::size_t m, std::size_t e);
  // Dirichlet(1,...,1) draw.
  static Distribution RandomDirichlet(std::size_t m, std::uint64_t seed,
                                      std::uint64_t stream);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const { return probs_; }
  operator std::span<const double>() const { return probs_; }

 private:
  std::vector<double> probs_;
};

// A point of the nonnegative orthant.
class NonnegPoint {
 public:
  // Throws Error(kInvalidArgument) on negative or non-finite coordinates.
  explicit NonnegPoint(std::vector<double> coords);

  std::size_t size() const { return coords_.size(); }
  std::span<const double> coords() const { return coords_; }
  operator std::span<const double>() const { return coords_; }

 private:
  std::vector<double> coords_;
};

// The independent K-subsets of a matroid: the support of f_{M,K}.
class IndepSetIndex {
 public:
  IndepSetIndex(std::size_t ground_size, std::size_t k,
                std::vector<std::uint32_t> flat_sets, std::string source);

  std::size_t ground_size() const { return ground_size_; }
  std::size_t k() const { return k_; }
  std::size_t size() const { return k_ == 0 ? 0 : flat_.size() / k_; }
  std::span<const std::uint32_t> set(std::size_t i) const {
    return std::span<const std::uint32_t>(flat_).subspan(i * k_, k_);
  }
  std::span<const std::uint32_t> flat() const { return flat_; }
  const std::string& source() const { return source_; }

 private:
  std::size_t ground_size_;
  std::size_t k_;
  std::vector<std::uint32_t> flat_;
  std::string source_;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

// Depth-first extension of independent prefixes in increasing index order.
// Sets come out lexicographically sorted. Throws Error(kKOutOfRange) unless
// 1 <= k <= rank, Error(kEnumerationLimit) if more than `cap` sets exist.
IndepSetIndex EnumerateIndependentKSets(const Matroid& m, std::size_t k,
                                        std::uint64_t cap = kDefaultEnumerationCap);

// f(a) - f(b) by telescoping each monomial; accurate when a is close to b.
double EvalFDifference(const IndepSetIndex& idx, std::span<const double> a,
                       std::span<const double> b);

// f(a) - f(a - d), with the displacement d taken as exact.
double EvalFDrop(const IndepSetIndex& idx, std::span<const double> a,
                 std::span<const double> d);

// F(a) - F(b).
double EvalProbabilityGap(const IndepSetIndex& idx, const Distribution& a,
                          const Distribution& b);

// f_{M,K}(x) = sum over independent K-sets of the product of coordinates,
// with pairwise summation. x may be any real vector of length m.
double EvalF(const IndepSetIndex& idx, std::span<const double> x);
// h_{M,K}(x) = f^{1/K}, 0 where f <= 0.
double EvalH(const IndepSetIndex& idx, std::span<const double> x);
// F_{M,K}(p) = K! f_{M,K}(p).
double EvalProbability(const IndepSetIndex& idx, const Distribution& p);

double Factorial(std::size_t k);

std::vector<double> GradientF(const IndepSetIndex& idx, std::span<const double> x);

// Symmetric m x m matrix, row-major.
struct DenseMatrix {
  std::size_t n = 0;
  std::vector<double> data;

  double operator()(std::size_t i, std::size_t j) const { return data[i * n + j]; }
  // v^T A v.
  double QuadraticForm(std::span<const double> v) const;
};

// Exact Hessian; f is multi-affine so the diagonal is identically zero.
DenseMatrix HessianF(const IndepSetIndex& idx, std::span<const double> x);

struct ConcavityReport {
  std::size_t trials = 0;
  // max over trials of (h(x)+h(y))/2 - h((x+y)/2), clamped at 0.
  double max_violation = 0.0;
  // max over trials of min(f(x), f(y)) - f((x+y)/2), clamped at 0.
  double max_superlevel_violation = 0.0;
};

// Random midpoint tests of concavity of h and convexity of the superlevel
// sets of f. Sampled points are scaled simplex points, some with sparse
// support.
ConcavityReport ConcavityProbe(const IndepSetIndex& idx, std::size_t trials,
                               std::uint64_t seed);

}  // namespace mprob

#endif  // MATROIDPROB_GENPOLY_HPP_
