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
#include "matroidprob/montecarlo.hpp"
#include "matroidprob/rng.hpp"

using namespace mprob;

TEST_CASE("inverse-CDF sampler") {
  const Sampler s(Distribution({0.25, 0.0, 0.5, 0.25}));
  CHECK(s.Draw(0.0) == 0);
  CHECK(s.Draw(0.2499) == 0);
  CHECK(s.Draw(0.25) == 2);
  CHECK(s.Draw(0.7499) == 2);
  CHECK(s.Draw(0.75) == 3);
  CHECK(s.Draw(0.9999999) == 3);
  // Trailing zero mass is never drawn.
  const Sampler t(Distribution({0.5, 0.5, 0.0}));
  CHECK(t.Draw(0.9999999999999999) == 1);
}

TEST_CASE("sample_kset anchors") {
  const auto fano = Matroid::Build(ProjectiveSpec{3, 2});
  const Sampler point(Distribution::PointMass(7, 4));
  StreamRng rng(1, 0);
  for (int t = 0; t < 100; ++t) {
    const auto d = SampleKSet(fano, point, 2, rng);
    CHECK_FALSE(d.distinct);
    CHECK_FALSE(d.independent);
  }
  const auto pg12 = Matroid::Build(ProjectiveSpec{2, 2});
  const Sampler u3(Distribution::Uniform(3));
  for (int t = 0; t < 1000; ++t) {
    const auto d = SampleKSet(pg12, u3, 2, rng);
    CHECK(d.independent == d.distinct);
  }
}

TEST_CASE("golden draw for Fano, uniform, K=3, seed 11") {
  const auto fano = Matroid::Build(ProjectiveSpec{3, 2});
  const Sampler u7(Distribution::Uniform(7));
  StreamRng rng(11, 0);
  const auto d = SampleKSet(fano, u7, 3, rng);
  CHECK(d.elements == std::vector<std::size_t>{6, 2, 5});
  CHECK(d.distinct);
  CHECK(d.independent);
  const auto est = EstimateF(fano, Distribution::Uniform(7), 3, 1'000'000, 11);
  CHECK(est.successes == 490751);
}

TEST_CASE("estimates agree with exact values") {
  const auto fano = Matroid::Build(ProjectiveSpec{3, 2});
  const auto e1 = EstimateF(fano, Distribution::Uniform(7), 3, 1'000'000, 2);
  CHECK(e1.n_trials == 1'000'000);
  CHECK(e1.p_hat == static_cast<double>(e1.successes) / 1e6);
  CHECK(e1.std_err == doctest::Approx(std::sqrt(e1.p_hat * (1 - e1.p_hat) / 1e6)));
  CHECK(std::abs(e1.p_hat - 24.0 / 49.0) <= 4 * e1.std_err);

  const auto pg12 = Matroid::Build(ProjectiveSpec{2, 2});
  const auto e2 = EstimateF(pg12, Distribution({0.5, 0.25, 0.25}), 2, 1'000'000, 3);
  CHECK(std::abs(e2.p_hat - 0.625) <= 4 * e2.std_err);

  const auto e3 = EstimateF(fano, Distribution::Uniform(7), 1, 10'000, 4);
  CHECK(e3.p_hat == 1.0);
  CHECK(e3.std_err == 0.0);
  CHECK_THROWS_AS(EstimateF(fano, Distribution::Uniform(7), 1, 0, 4), Error);
  CHECK_THROWS_AS(EstimateF(fano, Distribution::Uniform(6), 1, 10, 4), Error);
}

TEST_CASE("exact F agrees with simulation on random distributions") {
  const std::vector<std::pair<MatroidSpec, std::size_t>> battery = {
      {ProjectiveSpec{3, 2}, 3}, {ProjectiveSpec{3, 3}, 2}, {ParallelClassesSpec{2}, 2},
      {UniformSpec{2, 5}, 2}, {LinearSpec{3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 2, 1}}}, 3}};
  std::size_t outside = 0, total = 0;
  for (const auto& [spec, k] : battery) {
    const auto m = Matroid::Build(spec);
    const auto idx = EnumerateIndependentKSets(m, k);
    for (std::uint64_t s = 0; s < 10; ++s) {
      const auto p = Distribution::RandomDirichlet(m.ground_size(), 808, s);
      const auto est = EstimateF(m, p, k, 100'000, 1000 + s);
      ++total;
      if (std::abs(est.p_hat - EvalProbability(idx, p)) > 4 * est.std_err) ++outside;
    }
  }
  // 4 standard errors: about 6e-5 expected failures per comparison.
  CHECK(outside <= 1);
  CHECK(total == 50);
}

TEST_CASE("estimates are identical across thread counts") {
  const auto m = Matroid::Build(ProjectiveSpec{3, 3});
  const auto p = Distribution::RandomDirichlet(13, 5, 5);
  const auto a = EstimateF(m, p, 3, 200'000, 77, 1);
  const auto b = EstimateF(m, p, 3, 200'000, 77, 3);
  const auto c = EstimateF(m, p, 3, 200'000, 77, 8);
  CHECK(a.successes == b.successes);
  CHECK(a.successes == c.successes);
  CHECK(a.seed == 77);
}

TEST_CASE("simple matroids with K=2: success iff distinct") {
  const auto m = Matroid::Build(ProjectiveSpec{3, 3});
  const auto p = Distribution::RandomDirichlet(13, 1, 2);
  const Sampler s(p);
  StreamRng rng(3, 3);
  for (int t = 0; t < 5000; ++t) {
    const auto d = SampleKSet(m, s, 2, rng);
    CHECK(d.independent == d.distinct);
  }
}
