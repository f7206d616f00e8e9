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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "matroidprob/error.hpp"
#include "matroidprob/genpoly.hpp"
#include "matroidprob/matroid.hpp"
#include "matroidprob/rng.hpp"
#include "matroidprob/symmetry.hpp"
#include "oracles.hpp"

using namespace mprob;

namespace {

const Matroid& Fano() {
  static const Matroid m = Matroid::Build(ProjectiveSpec{3, 2});
  return m;
}

std::vector<double> RandomInterior(std::size_t m, std::uint64_t seed) {
  StreamRng rng(seed, 0);
  std::vector<double> x(m);
  for (double& v : x) v = 0.1 + rng.Uniform();
  return x;
}

}  // namespace

TEST_CASE("distribution validation") {
  CHECK_NOTHROW(Distribution({0.5, 0.25, 0.25}));
  CHECK_THROWS_AS(Distribution({0.5, 0.5, 0.1}), Error);
  CHECK_THROWS_AS(Distribution({1.2, -0.2}), Error);
  CHECK_THROWS_AS(Distribution({}), Error);
  CHECK_THROWS_AS(Distribution({0.5, 0.5 + 1e-9}), Error);
  const Distribution repaired({0.5, 0.5 + 1e-9}, /*renormalize=*/true);
  CHECK(std::abs(repaired[0] + repaired[1] - 1.0) <= 1e-15);
  CHECK_THROWS_AS(Distribution({0.5, 0.5 + 1e-5}, true), Error);
  CHECK_THROWS_AS(NonnegPoint({1.0, -1e-300}), Error);
}

TEST_CASE("enumeration counts match brute force") {
  // PG(1,2), K=2: all 3 pairs.
  const auto pg12 = EnumerateIndependentKSets(Matroid::Build(ProjectiveSpec{2, 2}), 2);
  CHECK(pg12.size() == 3);
  // Fano, K=3: 35 triples minus 7 lines.
  const auto fano = EnumerateIndependentKSets(Fano(), 3);
  CHECK(fano.size() == 28);
  const auto pc = EnumerateIndependentKSets(Matroid::Build(ParallelClassesSpec{2}), 2);
  CHECK(pc.size() == 4);

  for (auto [n, q, k] : {std::tuple<std::size_t, std::uint32_t, std::size_t>{3, 2, 2},
                         {3, 2, 3}, {3, 3, 3}, {4, 2, 3}, {4, 2, 4}, {2, 5, 2}}) {
    const auto idx = EnumerateIndependentKSets(Matroid::Build(ProjectiveSpec{n, q}), k);
    const auto brute = oracle::ProjectiveIndependentSets(n, q, k);
    REQUIRE(idx.size() == brute.size());
    for (std::size_t i = 0; i < brute.size(); ++i) {
      const auto s = idx.set(i);
      CHECK(std::vector<std::size_t>(s.begin(), s.end()) == brute[i]);
    }
  }
}

TEST_CASE("enumeration on the generic path matches brute force") {
  const Matroid u = Matroid::Build(UniformSpec{3, 6});
  CHECK(EnumerateIndependentKSets(u, 3).size() == 20);
  CHECK(EnumerateIndependentKSets(u, 1).size() == 6);
  const auto pc3 = EnumerateIndependentKSets(Matroid::Build(ParallelClassesSpec{3}), 2);
  CHECK(pc3.size() == 9);
  for (std::size_t i = 0; i < pc3.size(); ++i) {
    CHECK(pc3.set(i)[0] < 3);
    CHECK(pc3.set(i)[1] >= 3);
  }
}

TEST_CASE("enumeration errors") {
  CHECK_THROWS_AS(EnumerateIndependentKSets(Fano(), 4), Error);
  CHECK_THROWS_AS(EnumerateIndependentKSets(Fano(), 0), Error);
  try {
    EnumerateIndependentKSets(Fano(), 3, 27);
    FAIL("expected EnumerationLimit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEnumerationLimit);
  }
  CHECK(EnumerateIndependentKSets(Fano(), 3, 28).size() == 28);
}

TEST_CASE("f, h and F on anchor points") {
  const auto idx = EnumerateIndependentKSets(Fano(), 3);
  CHECK(EvalF(idx, std::vector<double>(7, 1.0)) == 28.0);
  CHECK(EvalF(idx, std::vector<double>(7, 0.0)) == 0.0);
  CHECK(EvalH(idx, std::vector<double>(7, 0.0)) == 0.0);
  const auto u = Distribution::Uniform(7);
  CHECK(EvalF(idx, u) == doctest::Approx(28.0 / 343.0).epsilon(1e-14));
  CHECK(EvalProbability(idx, u) == doctest::Approx(24.0 / 49.0).epsilon(1e-14));
  // h at a point with f = 27/343: scale x so that f(x) = 27/343.
  std::vector<double> x(7, 1.0);
  const double t = std::cbrt(27.0 / 343.0 / 28.0);
  for (double& v : x) v *= t;
  CHECK(EvalH(idx, x) == doctest::Approx(3.0 / 7.0).epsilon(1e-13));

  const auto pg12 = EnumerateIndependentKSets(Matroid::Build(ProjectiveSpec{2, 2}), 2);
  CHECK(EvalH(pg12, Distribution::Uniform(3)) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(EvalProbability(pg12, Distribution::Uniform(3)) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));

  const auto pc = EnumerateIndependentKSets(Matroid::Build(ParallelClassesSpec{2}), 2);
  CHECK(EvalProbability(pc, Distribution::Uniform(4)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(EvalF(idx, std::vector<double>(6, 0.1)), Error);
}

TEST_CASE("F equals the ordered-tuple probability") {
  struct Case {
    Matroid m;
    std::size_t k;
  };
  const std::vector<Case> cases = {
      {Fano(), 3}, {Fano(), 2}, {Matroid::Build(ProjectiveSpec{3, 3}), 3},
      {Matroid::Build(ParallelClassesSpec{2}), 2}, {Matroid::Build(UniformSpec{2, 5}), 2},
      {Matroid::Build(LinearSpec{3, {{1, 0}, {0, 1}, {1, 2}, {2, 4 % 3}}}), 2}};
  for (const auto& c : cases) {
    const auto idx = EnumerateIndependentKSets(c.m, c.k);
    for (std::uint64_t s = 0; s < 10; ++s) {
      const auto p = Distribution::RandomDirichlet(c.m.ground_size(), 123, s);
      const std::vector<double> pv(p.probs().begin(), p.probs().end());
      const double brute = oracle::ProbabilityByTuples(
          c.m.ground_size(), c.k, pv,
          [&](const std::vector<std::size_t>& set) { return c.m.IsIndependent(set); });
      CHECK(EvalProbability(idx, p) == doctest::Approx(brute).epsilon(1e-12));
    }
  }
}

TEST_CASE("homogeneity") {
  const auto idx = EnumerateIndependentKSets(Matroid::Build(ProjectiveSpec{3, 3}), 3);
  StreamRng rng(31, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = RandomInterior(13, trial);
    const double t = 3.0 * rng.Uniform();
    std::vector<double> tx(x);
    for (double& v : tx) v *= t;
    CHECK(EvalF(idx, tx) == doctest::Approx(std::pow(t, 3) * EvalF(idx, x)).epsilon(1e-12));
    CHECK(EvalH(idx, tx) == doctest::Approx(t * EvalH(idx, x)).epsilon(1e-12));
  }
}

TEST_CASE("gradient anchors and finite differences") {
  const auto pg12 = EnumerateIndependentKSets(Matroid::Build(ProjectiveSpec{2, 2}), 2);
  for (double g : GradientF(pg12, std::vector<double>(3, 1.0 / 3.0))) {
    CHECK(g == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  }
  const auto fano = EnumerateIndependentKSets(Fano(), 3);
  for (double g : GradientF(fano, std::vector<double>(7, 1.0))) CHECK(g == 12.0);
  for (double g : GradientF(fano, std::vector<double>(7, 0.0))) CHECK(g == 0.0);

  for (const auto* idx : {&fano, &pg12}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = RandomInterior(idx->ground_size(), 100 + trial);
      const auto grad = GradientF(*idx, x);
      for (std::size_t e = 0; e < x.size(); ++e) {
        const double fd = oracle::CentralDifference(
            [&](const std::vector<double>& y) { return EvalF(*idx, y); }, x, e, 1e-5);
        CHECK(std::abs(grad[e] - fd) <= 1e-6);
      }
    }
  }
}

TEST_CASE("Hessian: zero diagonal, symmetry, anchors, finite differences") {
  const auto fano = EnumerateIndependentKSets(Fano(), 3);
  const auto hu = HessianF(fano, std::vector<double>(7, 1.0 / 7.0));
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(hu(i, i) == 0.0);
    for (std::size_t j = 0; j < 7; ++j) {
      CHECK(hu(i, j) == hu(j, i));
      if (i != j) CHECK(hu(i, j) == doctest::Approx(4.0 / 7.0).epsilon(1e-14));
    }
  }
  const auto pg12 = EnumerateIndependentKSets(Matroid::Build(ProjectiveSpec{2, 2}), 2);
  const auto h2 = HessianF(pg12, RandomInterior(3, 9));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(h2(i, j) == (i == j ? 0.0 : 1.0));
  }
  const auto x = RandomInterior(7, 77);
  const auto h = HessianF(fano, x);
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = 0; j < 7; ++j) {
      const double fd = oracle::CentralDifference(
          [&](const std::vector<double>& y) { return GradientF(fano, y)[i]; }, x, j, 1e-5);
      CHECK(std::abs(h(i, j) - fd) <= 1e-6);
    }
  }
}

TEST_CASE("concavity probes") {
  const auto fano = EnumerateIndependentKSets(Fano(), 3);
  const auto rep = ConcavityProbe(fano, 1000, 42);
  CHECK(rep.trials == 1000);
  CHECK(rep.max_violation <= 1e-9);
  CHECK(rep.max_superlevel_violation <= 1e-9);

  const auto lin = EnumerateIndependentKSets(Matroid::Build(UniformSpec{1, 5}), 1);
  CHECK(ConcavityProbe(lin, 200, 1).max_violation <= 1e-15);
  CHECK_THROWS_AS(ConcavityProbe(fano, 0, 1), Error);
}

TEST_CASE("f is invariant under PGL-induced permutations") {
  const auto fano = EnumerateIndependentKSets(Fano(), 3);
  const PrimeField f2(2);
  const FieldMatrix a = FieldMatrix::FromRows(f2, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
  const auto g = PglPointPermutation(a, Fano());
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto p = Distribution::RandomDirichlet(7, 8, s);
    CHECK(std::abs(EvalF(fano, ApplyToDistribution(g, p)) - EvalF(fano, p)) <=
          1e-12 * EvalF(fano, p));
  }
}
