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

#include "matroidprob/genpoly.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "matroidprob/error.hpp"
#include "matroidprob/rng.hpp"
#include "numeric.hpp"

namespace mprob {

Distribution::Distribution(std::vector<double> probs, bool renormalize)
    : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw Error(ErrorCode::kInvalidDistribution, "distribution is empty");
  }
  for (double x : probs_) {
    if (!std::isfinite(x) || x < 0.0) {
      throw Error(ErrorCode::kInvalidDistribution,
                  "distribution entries must be finite and nonnegative");
    }
  }
  const double sum = internal::PairwiseSum(probs_);
  if (std::abs(sum - 1.0) <= kSumTolerance) return;
  if (renormalize && std::abs(sum - 1.0) <= kRepairTolerance) {
    for (double& x : probs_) x /= sum;
    return;
  }
  throw Error(ErrorCode::kInvalidDistribution,
              "distribution sums to " + std::to_string(sum) + ", not 1");
}

Distribution Distribution::Uniform(std::size_t m) {
  return Distribution(std::vector<double>(m, 1.0 / static_cast<double>(m)));
}

Distribution Distribution::PointMass(std::size_t m, std::size_t e) {
  if (e >= m) throw Error(ErrorCode::kElementOutOfRange, "point mass index out of range");
  std::vector<double> p(m, 0.0);
  p[e] = 1.0;
  return Distribution(std::move(p));
}

Distribution Distribution::RandomDirichlet(std::size_t m, std::uint64_t seed,
                                           std::uint64_t stream) {
  StreamRng rng(seed, stream);
  std::vector<double> g(m);
  for (double& x : g) x = rng.Exponential();
  const double s = internal::PairwiseSum(g);
  for (double& x : g) x /= s;
  return Distribution(std::move(g), /*renormalize=*/true);
}

NonnegPoint::NonnegPoint(std::vector<double> coords) : coords_(std::move(coords)) {
  for (double x : coords_) {
    if (!std::isfinite(x) || x < 0.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "point coordinates must be finite and nonnegative");
    }
  }
}

IndepSetIndex::IndepSetIndex(std::size_t ground_size, std::size_t k,
                             std::vector<std::uint32_t> flat_sets,
                             std::string source)
    : ground_size_(ground_size),
      k_(k),
      flat_(std::move(flat_sets)),
      source_(std::move(source)) {
  if (k_ == 0 || flat_.size() % k_ != 0) {
    throw Error(ErrorCode::kInvalidArgument, "malformed independent-set list");
  }
}

namespace {

// Incremental echelon basis for vector-backed matroids. Rows are kept with a
// leading 1 at their pivot column.
class EchelonStack {
 public:
  EchelonStack(const PrimeField& f, std::size_t dim) : f_(f), dim_(dim) {}

  // Reduces v against the stack; pushes and returns true if independent.
  bool TryPush(std::span<const std::uint32_t> v) {
    std::vector<std::uint32_t> r(v.begin(), v.end());
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const std::uint32_t c = r[pivots_[i]];
      if (c == 0) continue;
      const std::uint32_t* row = &rows_[i * dim_];
      for (std::size_t j = 0; j < dim_; ++j) r[j] = f_.sub(r[j], f_.mul(c, row[j]));
    }
    std::size_t piv = 0;
    while (piv < dim_ && r[piv] == 0) ++piv;
    if (piv == dim_) return false;
    const std::uint32_t inv = f_.inv(r[piv]);
    for (auto& x : r) x = f_.mul(x, inv);
    pivots_.push_back(piv);
    rows_.insert(rows_.end(), r.begin(), r.end());
    return true;
  }

  void Pop() {
    pivots_.pop_back();
    rows_.resize(pivots_.size() * dim_);
  }

 private:
  PrimeField f_;
  std::size_t dim_;
  std::vector<std::size_t> pivots_;
  std::vector<std::uint32_t> rows_;
};

struct Enumerator {
  const Matroid& m;
  std::size_t k;
  std::uint64_t cap;
  std::vector<std::size_t> prefix;
  std::vector<std::uint32_t> out;
  std::uint64_t count = 0;

  void Emit() {
    if (++count > cap) {
      throw Error(ErrorCode::kEnumerationLimit,
                  "more than " + std::to_string(cap) + " independent sets");
    }
    for (std::size_t e : prefix) out.push_back(static_cast<std::uint32_t>(e));
  }

  void Generic(std::size_t start) {
    if (prefix.size() == k) {
      Emit();
      return;
    }
    const std::size_t n = m.ground_size();
    // Leave room for the remaining k - |prefix| - 1 elements.
    for (std::size_t e = start; e + (k - prefix.size()) <= n; ++e) {
      prefix.push_back(e);
      if (m.IsIndependent(prefix)) Generic(e + 1);
      prefix.pop_back();
    }
  }

  void Vector(std::size_t start, EchelonStack& stack) {
    if (prefix.size() == k) {
      Emit();
      return;
    }
    const std::size_t n = m.ground_size();
    for (std::size_t e = start; e + (k - prefix.size()) <= n; ++e) {
      if (!stack.TryPush(m.vector(e))) continue;
      prefix.push_back(e);
      Vector(e + 1, stack);
      prefix.pop_back();
      stack.Pop();
    }
  }
};

}  // namespace

IndepSetIndex EnumerateIndependentKSets(const Matroid& m, std::size_t k,
                                        std::uint64_t cap) {
  if (k < 1 || k > m.rank()) {
    throw Error(ErrorCode::kKOutOfRange,
                "K=" + std::to_string(k) + " outside [1, rank=" +
                    std::to_string(m.rank()) + "]");
  }
  Enumerator en{m, k, cap, {}, {}, 0};
  if (m.has_vectors()) {
    EchelonStack stack(m.field(), m.vector_dim());
    en.Vector(0, stack);
  } else {
    en.Generic(0);
  }
  return IndepSetIndex(m.ground_size(), k, std::move(en.out), m.description());
}

namespace {

void CheckDim(const IndepSetIndex& idx, std::size_t n) {
  if (n != idx.ground_size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "point has length " + std::to_string(n) + ", ground set has " +
                    std::to_string(idx.ground_size()));
  }
}

}  // namespace

double EvalF(const IndepSetIndex& idx, std::span<const double> x) {
  CheckDim(idx, x.size());
  const std::size_t k = idx.k();
  const std::uint32_t* flat = idx.flat().data();
  return internal::PairwiseSum(0, idx.size(), [&](std::size_t i) {
    const std::uint32_t* s = flat + i * k;
    double prod = 1.0;
    for (std::size_t j = 0; j < k; ++j) prod *= x[s[j]];
    return prod;
  });
}

namespace {

// f(a) - f(b) given d = a - b, by telescoping each monomial:
// prod(a) - prod(b) = sum_j d_j * prod_{i<j} a_i * prod_{i>j} b_i.
double TelescopedDifference(const IndepSetIndex& idx, std::span<const double> a,
                            std::span<const double> b, std::span<const double> d) {
  const std::size_t k = idx.k();
  const std::uint32_t* flat = idx.flat().data();
  return internal::PairwiseSum(0, idx.size(), [&](std::size_t i) {
    const std::uint32_t* s = flat + i * k;
    double suffix = 1.0;
    double total = 0.0;
    // Walk right to left: prefix products of a are recomputed per term.
    for (std::size_t j = k; j-- > 0;) {
      double prefix = 1.0;
      for (std::size_t t = 0; t < j; ++t) prefix *= a[s[t]];
      total += d[s[j]] * prefix * suffix;
      suffix *= b[s[j]];
    }
    return total;
  });
}

}  // namespace

double EvalFDifference(const IndepSetIndex& idx, std::span<const double> a,
                       std::span<const double> b) {
  CheckDim(idx, a.size());
  CheckDim(idx, b.size());
  std::vector<double> d(a.size());
  for (std::size_t e = 0; e < a.size(); ++e) d[e] = a[e] - b[e];
  return TelescopedDifference(idx, a, b, d);
}

double EvalFDrop(const IndepSetIndex& idx, std::span<const double> a,
                 std::span<const double> d) {
  CheckDim(idx, a.size());
  CheckDim(idx, d.size());
  std::vector<double> b(a.size());
  for (std::size_t e = 0; e < a.size(); ++e) b[e] = a[e] - d[e];
  return TelescopedDifference(idx, a, b, d);
}

double EvalProbabilityGap(const IndepSetIndex& idx, const Distribution& a,
                          const Distribution& b) {
  return Factorial(idx.k()) * EvalFDifference(idx, a.probs(), b.probs());
}

double EvalH(const IndepSetIndex& idx, std::span<const double> x) {
  const double f = EvalF(idx, x);
  if (f <= 0.0) return 0.0;
  return std::pow(f, 1.0 / static_cast<double>(idx.k()));
}

double Factorial(std::size_t k) {
  double r = 1.0;
  for (std::size_t i = 2; i <= k; ++i) r *= static_cast<double>(i);
  return r;
}

double EvalProbability(const IndepSetIndex& idx, const Distribution& p) {
  return Factorial(idx.k()) * EvalF(idx, p.probs());
}

std::vector<double> GradientF(const IndepSetIndex& idx, std::span<const double> x) {
  CheckDim(idx, x.size());
  const std::size_t k = idx.k();
  std::vector<double> grad(idx.ground_size(), 0.0);
  std::vector<double> prefix(k + 1), suffix(k + 1);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const auto s = idx.set(i);
    prefix[0] = 1.0;
    for (std::size_t j = 0; j < k; ++j) prefix[j + 1] = prefix[j] * x[s[j]];
    suffix[k] = 1.0;
    for (std::size_t j = k; j-- > 0;) suffix[j] = suffix[j + 1] * x[s[j]];
    for (std::size_t j = 0; j < k; ++j) grad[s[j]] += prefix[j] * suffix[j + 1];
  }
  return grad;
}

double DenseMatrix::QuadraticForm(std::span<const double> v) const {
  if (v.size() != n) throw Error(ErrorCode::kDimensionMismatch, "vector length != matrix size");
  return internal::PairwiseSum(0, n, [&](std::size_t i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += data[i * n + j] * v[j];
    return v[i] * row;
  });
}

DenseMatrix HessianF(const IndepSetIndex& idx, std::span<const double> x) {
  CheckDim(idx, x.size());
  const std::size_t n = idx.ground_size();
  const std::size_t k = idx.k();
  DenseMatrix h{n, std::vector<double>(n * n, 0.0)};
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const auto s = idx.set(i);
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        double prod = 1.0;
        for (std::size_t c = 0; c < k; ++c) {
          if (c != a && c != b) prod *= x[s[c]];
        }
        h.data[s[a] * n + s[b]] += prod;
        h.data[s[b] * n + s[a]] += prod;
      }
    }
  }
  return h;
}

ConcavityReport ConcavityProbe(const IndepSetIndex& idx, std::size_t trials,
                               std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be >= 1");
  const std::size_t m = idx.ground_size();
  auto sample = [m](StreamRng& rng) {
    std::vector<double> x(m, 0.0);
    // Roughly one probe in three uses a sparse support.
    const bool sparse = rng.Below(3) == 0;
    double total = 0.0;
    for (double& c : x) {
      if (sparse && rng.Below(2) == 0) continue;
      c = rng.Exponential();
      total += c;
    }
    if (total == 0.0) {
      x[rng.Below(m)] = 1.0;
      total = 1.0;
    }
    const double scale = 0.25 + 2.75 * rng.Uniform();
    for (double& c : x) c *= scale / total;
    return x;
  };

  ConcavityReport report;
  report.trials = trials;
  std::vector<double> mid(m);
  for (std::size_t t = 0; t < trials; ++t) {
    StreamRng rng(seed, t);
    const auto x = sample(rng);
    const auto y = sample(rng);
    for (std::size_t i = 0; i < m; ++i) mid[i] = 0.5 * (x[i] + y[i]);
    const double hx = EvalH(idx, x), hy = EvalH(idx, y), hm = EvalH(idx, mid);
    report.max_violation = std::max(report.max_violation, 0.5 * (hx + hy) - hm);
    const double fx = EvalF(idx, x), fy = EvalF(idx, y), fm = EvalF(idx, mid);
    report.max_superlevel_violation =
        std::max(report.max_superlevel_violation, std::min(fx, fy) - fm);
  }
  return report;
}

}  // namespace mprob
