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

#include <string>

#include "doctest.h"
#include "json.hpp"
#include "matroidprob/error.hpp"
#include "matroidprob/genpoly.hpp"
#include "matroidprob/json_io.hpp"
#include "matroidprob/matroid.hpp"
#include "matroidprob/symmetry.hpp"

using namespace mprob;
using nlohmann::json;

namespace {

ErrorCode CodeOf(const json& j) {
  try {
    Matroid::Build(MatroidSpecFromJson(j));
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

}  // namespace

TEST_CASE("spec JSON for every family") {
  const char* specs[] = {
      R"({"type":"projective","n":3,"q":2})",
      R"({"type":"uniform","r":2,"n":5})",
      R"({"type":"parallel_classes","m_per_class":2})",
      R"({"type":"linear","q":3,"columns":[[1,0],[0,1],[1,2]]})",
      R"({"type":"explicit","ground_size":4,"k":2,"sets":[[0,2],[0,3],[1,2],[1,3]]})",
  };
  const std::size_t sizes[] = {7, 5, 4, 3, 4};
  for (std::size_t i = 0; i < 5; ++i) {
    const json j = json::parse(specs[i]);
    const auto spec = MatroidSpecFromJson(j);
    CHECK(MatroidSpecToJson(spec) == j);
    CHECK(Matroid::Build(spec).ground_size() == sizes[i]);
  }
}

TEST_CASE("invalid specs") {
  CHECK(CodeOf(json::parse(R"([1,2])")) == ErrorCode::kSpecInvalid);
  CHECK(CodeOf(json::parse(R"({"n":3,"q":2})")) == ErrorCode::kSpecInvalid);
  CHECK(CodeOf(json::parse(R"({"type":"torus"})")) == ErrorCode::kSpecInvalid);
  CHECK(CodeOf(json::parse(R"({"type":"projective","n":3})")) == ErrorCode::kSpecInvalid);
  CHECK(CodeOf(json::parse(R"({"type":"projective","n":3,"q":2.5})")) == ErrorCode::kSpecInvalid);
  CHECK(CodeOf(json::parse(R"({"type":"projective","n":-1,"q":2})")) == ErrorCode::kSpecInvalid);
  CHECK(CodeOf(json::parse(R"({"type":"projective","n":"3","q":2})")) == ErrorCode::kSpecInvalid);
  CHECK(CodeOf(json::parse(R"({"type":"projective","n":3,"q":4})")) == ErrorCode::kNotPrime);
  CHECK(CodeOf(json::parse(R"({"type":"uniform","r":6,"n":5})")) == ErrorCode::kSpecInvalid);
  CHECK(CodeOf(json::parse(R"({"type":"linear","q":3,"columns":[[1.5,0]]})")) ==
        ErrorCode::kSpecInvalid);
  CHECK(CodeOf(json::parse(R"({"type":"linear","q":3,"columns":[[0,0]]})")) ==
        ErrorCode::kSpecInvalid);
  CHECK(CodeOf(json::parse(R"({"type":"explicit","ground_size":3,"k":2,"sets":[[0,0]]})")) ==
        ErrorCode::kSpecInvalid);
  CHECK(CodeOf(json::parse(R"({"type":"explicit","ground_size":3,"k":2,"sets":[[0,5]]})")) ==
        ErrorCode::kSpecInvalid);
}

TEST_CASE("distributions and generators") {
  const auto p = DistributionFromJson(json::parse("[0.5,0.25,0.25]"));
  CHECK(p[0] == 0.5);
  CHECK_THROWS_AS(DistributionFromJson(json::parse("[0.5,0.6]")), Error);
  CHECK_THROWS_AS(DistributionFromJson(json::parse(R"({"p":1})")), Error);
  CHECK_THROWS_AS(DistributionFromJson(json::parse(R"([0.5,"x"])")), Error);
  CHECK_NOTHROW(DistributionFromJson(json::parse("[0.5,0.5000000001]"), true));

  // Emitted distributions reproduce F to the last bit.
  const auto idx = EnumerateIndependentKSets(Matroid::Build(ProjectiveSpec{3, 3}), 3);
  const auto q = Distribution::RandomDirichlet(13, 4, 4);
  const auto back = DistributionFromJson(json::parse(ToJson(q).dump()));
  CHECK(EvalProbability(idx, back) == EvalProbability(idx, q));

  const auto gens = GeneratorSetFromJson(json::parse("[[1,0,2,3],[0,1,3,2]]"));
  CHECK(gens.gens().size() == 2);
  CHECK(ToJson(gens.gens()[0]) == json::parse("[1,0,2,3]"));
  CHECK_THROWS_AS(GeneratorSetFromJson(json::parse("[[1,1,2]]")), Error);
  CHECK_THROWS_AS(GeneratorSetFromJson(json::parse("[[0,1],[0,1,2]]")), Error);
  CHECK_THROWS_AS(GeneratorSetFromJson(json::parse("[]")), Error);
  CHECK_THROWS_AS(GeneratorSetFromJson(json::parse("[[0,-1]]")), Error);
}
