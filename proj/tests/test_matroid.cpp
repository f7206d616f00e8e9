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

#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "matroidprob/error.hpp"
#include "matroidprob/genpoly.hpp"
#include "matroidprob/json_io.hpp"
#include "matroidprob/matroid.hpp"
#include "matroidprob/rng.hpp"
#include "oracles.hpp"

using namespace mprob;

namespace {

Matroid Build(const char* json_text) {
  return Matroid::Build(MatroidSpecFromJson(nlohmann::json::parse(json_text)));
}

ErrorCode BuildError(const char* json_text) {
  try {
    Build(json_text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected failure for " << json_text);
  return ErrorCode::kInternal;
}

// A random independent set of random target size.
std::vector<std::size_t> RandomIndependent(const Matroid& m, StreamRng& rng) {
  std::vector<std::size_t> order(m.ground_size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.Below(i)]);
  const std::size_t target = rng.Below(m.rank() + 1);
  std::vector<std::size_t> s;
  for (std::size_t e : order) {
    if (s.size() == target) break;
    s.push_back(e);
    if (!m.IsIndependent(s)) s.pop_back();
  }
  return s;
}

const char* kBattery[] = {
    R"({"type":"projective","n":2,"q":2})",
    R"({"type":"projective","n":3,"q":2})",
    R"({"type":"projective","n":3,"q":3})",
    R"({"type":"projective","n":4,"q":2})",
    R"({"type":"uniform","r":3,"n":6})",
    R"({"type":"parallel_classes","m_per_class":3})",
    R"({"type":"linear","q":3,"columns":[[1,0,0],[0,1,0],[1,2,0],[0,0,1],[1,1,1],[2,2,2]]})",
};

}  // namespace

TEST_CASE("projective ground sets match (q^N - 1)/(q - 1) and the oracle points") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint32_t q : {2u, 3u, 5u}) {
      const Matroid m = Matroid::Build(ProjectiveSpec{n, q});
      std::uint64_t qn = 1;
      for (std::size_t i = 0; i < n; ++i) qn *= q;
      CHECK(m.ground_size() == (qn - 1) / (q - 1));
      CHECK(m.rank() == n);
      const auto pts = oracle::ProjectivePoints(n, q);
      REQUIRE(pts.size() == m.ground_size());
      for (std::size_t e = 0; e < pts.size(); ++e) {
        const auto v = m.vector(e);
        CHECK(std::vector<std::uint32_t>(v.begin(), v.end()) == pts[e]);
      }
    }
  }
}

TEST_CASE("PG(1,2) has points (0,1), (1,0), (1,1)") {
  const Matroid m = Build(R"({"type":"projective","n":2,"q":2})");
  REQUIRE(m.ground_size() == 3);
  std::set<std::vector<std::uint32_t>> pts;
  for (std::size_t e = 0; e < 3; ++e) {
    pts.insert(std::vector<std::uint32_t>(m.vector(e).begin(), m.vector(e).end()));
  }
  CHECK(pts == std::set<std::vector<std::uint32_t>>{{1, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("Fano plane independence") {
  const Matroid m = Build(R"({"type":"projective","n":3,"q":2})");
  CHECK(m.ground_size() == 7);
  CHECK(m.rank() == 3);
  CHECK(m.IsIndependent(std::vector<std::size_t>{}));
  for (std::size_t a = 0; a < 7; ++a) {
    for (std::size_t b = a + 1; b < 7; ++b) {
      CHECK(m.IsIndependent(std::vector<std::size_t>{a, b}));
    }
  }
  // Points (0,0,1)=0, (0,1,0)=1, (0,1,1)=2 lie on the line x0 = 0.
  CHECK_FALSE(m.IsIndependent(std::vector<std::size_t>{0, 1, 2}));
  // (1,0,0), (0,1,0), (1,1,0) are collinear.
  const auto* space = m.projective_space();
  REQUIRE(space != nullptr);
  const std::vector<std::size_t> line{
      space->PointOf(std::vector<std::uint32_t>{1, 0, 0}),
      space->PointOf(std::vector<std::uint32_t>{0, 1, 0}),
      space->PointOf(std::vector<std::uint32_t>{1, 1, 0})};
  CHECK_FALSE(m.IsIndependent(line));
  CHECK_FALSE(m.IsIndependent(std::vector<std::size_t>{0, 1, 3, 4}));
}

TEST_CASE("projective independence agrees with exhaustive linear relations") {
  for (auto [n, q] : {std::pair<std::size_t, std::uint32_t>{3, 2}, {3, 3}, {4, 2}}) {
    const Matroid m = Matroid::Build(ProjectiveSpec{n, q});
    const auto pts = oracle::ProjectivePoints(n, q);
    StreamRng rng(n * 10 + q, 0);
    for (int t = 0; t < 300; ++t) {
      std::vector<std::size_t> s;
      const std::size_t k = 1 + rng.Below(n + 1);
      while (s.size() < k) {
        const std::size_t e = rng.Below(pts.size());
        if (std::find(s.begin(), s.end(), e) == s.end()) s.push_back(e);
      }
      std::vector<oracle::Vec> vs;
      for (auto e : s) vs.push_back(pts[e]);
      CHECK(m.IsIndependent(s) == oracle::IndependentByExhaustion(vs, q));
    }
  }
}

TEST_CASE("rank of families") {
  CHECK(Build(R"({"type":"projective","n":3,"q":2})").rank() == 3);
  CHECK(Build(R"({"type":"uniform","r":2,"n":5})").rank() == 2);
  CHECK(Build(R"({"type":"parallel_classes","m_per_class":3})").rank() == 2);
  CHECK(Build(R"({"type":"uniform","r":0,"n":3})").rank() == 0);
  CHECK(Build(R"({"type":"linear","q":3,"columns":[[1,0],[0,1],[1,2]]})").rank() == 2);
  CHECK(Build(R"({"type":"explicit","ground_size":4,"k":2,"sets":[[0,2],[0,3],[1,2],[1,3]]})").rank() == 2);
}

TEST_CASE("parallel classes: A x B pairs are the independent 2-sets") {
  const Matroid m = Build(R"({"type":"parallel_classes","m_per_class":2})");
  CHECK(m.ground_size() == 4);
  CHECK(m.IsIndependent(std::vector<std::size_t>{0, 2}));
  CHECK(m.IsIndependent(std::vector<std::size_t>{1, 3}));
  CHECK_FALSE(m.IsIndependent(std::vector<std::size_t>{0, 1}));
  CHECK_FALSE(m.IsIndependent(std::vector<std::size_t>{2, 3}));
  CHECK_FALSE(m.IsIndependent(std::vector<std::size_t>{0, 2, 3}));
}

TEST_CASE("invalid specs are rejected") {
  CHECK(BuildError(R"({"type":"uniform","r":3,"n":2})") == ErrorCode::kSpecInvalid);
  CHECK(BuildError(R"({"type":"projective","n":0,"q":2})") == ErrorCode::kSpecInvalid);
  CHECK(BuildError(R"({"type":"projective","n":2,"q":4})") == ErrorCode::kNotPrime);
  CHECK(BuildError(R"({"type":"parallel_classes","m_per_class":0})") == ErrorCode::kSpecInvalid);
  CHECK(BuildError(R"({"type":"linear","q":3,"columns":[[1,0],[0,0]]})") == ErrorCode::kSpecInvalid);
  CHECK(BuildError(R"({"type":"linear","q":3,"columns":[[1,0],[0]]})") == ErrorCode::kSpecInvalid);
  CHECK(BuildError(R"({"type":"linear","q":3,"columns":[[1,3]]})") == ErrorCode::kSpecInvalid);
  CHECK(BuildError(R"({"type":"explicit","ground_size":3,"k":2,"sets":[[0,3]]})") == ErrorCode::kSpecInvalid);
  CHECK(BuildError(R"({"type":"explicit","ground_size":3,"k":2,"sets":[[0,0]]})") == ErrorCode::kSpecInvalid);
  CHECK(BuildError(R"({"type":"explicit","ground_size":3,"k":2,"sets":[[0,1,2]]})") == ErrorCode::kSpecInvalid);
  CHECK(BuildError(R"({"type":"explicit","ground_size":3,"k":2,"sets":[[0,1],[1,0]]})") == ErrorCode::kSpecInvalid);
  CHECK(BuildError(R"({"type":"graphic"})") == ErrorCode::kSpecInvalid);
  CHECK(BuildError(R"({"n":2})") == ErrorCode::kSpecInvalid);
  CHECK(BuildError(R"([1,2])") == ErrorCode::kSpecInvalid);
}

TEST_CASE("oracle rejects out-of-range and repeated elements") {
  const Matroid m = Build(R"({"type":"uniform","r":2,"n":3})");
  try {
    m.IsIndependent(std::vector<std::size_t>{0, 3});
    FAIL("expected ElementOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kElementOutOfRange);
  }
  CHECK_THROWS_AS(m.IsIndependent(std::vector<std::size_t>{1, 1}), Error);
}

TEST_CASE("downward closure on random independent sets") {
  for (const char* spec : kBattery) {
    const Matroid m = Build(spec);
    StreamRng rng(99, 0);
    for (int t = 0; t < 1000; ++t) {
      const auto s = RandomIndependent(m, rng);
      REQUIRE(m.IsIndependent(s));
      std::vector<std::size_t> sub;
      for (std::size_t e : s) {
        if (rng.Below(2) == 0) sub.push_back(e);
      }
      CHECK(m.IsIndependent(sub));
    }
  }
}

TEST_CASE("exchange property on random independent pairs") {
  for (const char* spec : kBattery) {
    const Matroid m = Build(spec);
    StreamRng rng(5, 0);
    for (int t = 0; t < 300; ++t) {
      auto a = RandomIndependent(m, rng);
      auto b = RandomIndependent(m, rng);
      if (a.size() == b.size()) continue;
      if (a.size() > b.size()) std::swap(a, b);
      bool found = false;
      for (std::size_t e : b) {
        if (std::find(a.begin(), a.end(), e) != a.end()) continue;
        auto c = a;
        c.push_back(e);
        if (m.IsIndependent(c)) {
          found = true;
          break;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("every pair of projective points is independent") {
  const Matroid m = Matroid::Build(ProjectiveSpec{3, 3});
  for (std::size_t a = 0; a < m.ground_size(); ++a) {
    for (std::size_t b = a + 1; b < m.ground_size(); ++b) {
      REQUIRE(m.IsIndependent(std::vector<std::size_t>{a, b}));
    }
  }
}

TEST_CASE("explicit layer round-trips through enumeration") {
  const char* spec = R"({"type":"explicit","ground_size":5,"k":2,"sets":[[3,1],[0,2],[0,3],[1,2],[4,0]]})";
  const Matroid m = Build(spec);
  const auto idx = EnumerateIndependentKSets(m, 2);
  std::set<std::vector<std::uint32_t>> got;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    got.insert(std::vector<std::uint32_t>(idx.set(i).begin(), idx.set(i).end()));
  }
  CHECK(got == std::set<std::vector<std::uint32_t>>{{1, 3}, {0, 2}, {0, 3}, {1, 2}, {0, 4}});
  // Smaller sets are independent iff contained in a listed set.
  CHECK(m.IsIndependent(std::vector<std::size_t>{4}));
  CHECK(m.IsIndependent(std::vector<std::size_t>{}));
}

TEST_CASE("explicit layer exchange check") {
  const Matroid good = Build(R"({"type":"explicit","ground_size":4,"k":2,"sets":[[0,2],[0,3],[1,2],[1,3]]})");
  CHECK(ExplicitExchangeViolations(good, 500, 1) == 0);
  // {0,1} and {2,3}: removing 0 from {0,1} needs {1,2} or {1,3}, neither listed.
  const Matroid bad = Build(R"({"type":"explicit","ground_size":4,"k":2,"sets":[[0,1],[2,3]]})");
  CHECK(ExplicitExchangeViolations(bad, 500, 1) > 0);
}

TEST_CASE("subset rank matches dimension of the span") {
  const Matroid m = Matroid::Build(ProjectiveSpec{3, 3});
  const auto* space = m.projective_space();
  const PrimeField f(3);
  StreamRng rng(17, 0);
  for (int t = 0; t < 200; ++t) {
    // Rows are random nonzero scalar multiples of random points.
    std::vector<std::vector<std::uint32_t>> rows;
    std::vector<std::size_t> pts;
    const std::size_t k = 1 + rng.Below(5);
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t e = rng.Below(m.ground_size());
      const auto s = static_cast<std::uint32_t>(1 + rng.Below(2));
      std::vector<std::uint32_t> row;
      for (auto x : space->point(e)) row.push_back(f.mul(s, x));
      rows.push_back(row);
      pts.push_back(e);
    }
    CHECK(RankOverFp(FieldMatrix::FromRows(f, rows)) == m.SubsetRank(pts));
  }
}

TEST_CASE("spec JSON round-trips") {
  for (const char* spec : kBattery) {
    const auto j = nlohmann::json::parse(spec);
    CHECK(MatroidSpecToJson(MatroidSpecFromJson(j)) == j);
  }
}
