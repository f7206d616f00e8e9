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

#ifndef MATROIDPROB_JSON_IO_HPP_
#define MATROIDPROB_JSON_IO_HPP_

#include "json.hpp"

#include "matroidprob/genpoly.hpp"
#include "matroidprob/matroid.hpp"

namespace mprob {

struct AscentResult;
struct ConcavityReport;
struct HessianCheckReport;
struct K2CheckReport;
struct McEstimate;
struct ScanReport;
class GeneratorSet;
class Permutation;

// {"type":"projective","n":3,"q":2}, {"type":"uniform","r":2,"n":5},
// {"type":"parallel_classes","m_per_class":2},
// {"type":"linear","q":3,"columns":[[1,0],[0,1],[1,2]]},
// {"type":"explicit","ground_size":4,"k":2,"sets":[[0,2],[0,3],[1,2],[1,3]]}.
// Throws Error(kSpecInvalid) on malformed input.
MatroidSpec MatroidSpecFromJson(const nlohmann::json& j);
nlohmann::json MatroidSpecToJson(const MatroidSpec& spec);

// A JSON array of probabilities.
Distribution DistributionFromJson(const nlohmann::json& j, bool renormalize = false);
// A JSON array of image arrays, e.g. [[1,0,2],[0,2,1]].
GeneratorSet GeneratorSetFromJson(const nlohmann::json& j);
nlohmann::json ToJson(const Permutation& g);

nlohmann::json ToJson(const Distribution& p);
nlohmann::json ToJson(const McEstimate& est);
nlohmann::json ToJson(const ScanReport& rep);
nlohmann::json ToJson(const AscentResult& res);
nlohmann::json ToJson(const ConcavityReport& rep);
nlohmann::json ToJson(const K2CheckReport& rep);
nlohmann::json ToJson(const HessianCheckReport& rep);

}  // namespace mprob

#endif  // MATROIDPROB_JSON_IO_HPP_
