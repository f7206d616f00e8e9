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

#include "matroidprob/json_io.hpp"

#include <string>

#include "matroidprob/error.hpp"
#include "matroidprob/montecarlo.hpp"
#include "matroidprob/optimize.hpp"
#include "matroidprob/projective.hpp"
#include "matroidprob/symmetry.hpp"

namespace mprob {

using nlohmann::json;

namespace {

template <typename T>
T Field(const json& j, const char* key) {
  if (!j.contains(key)) {
    throw Error(ErrorCode::kSpecInvalid, std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::kSpecInvalid, std::string("bad value for \"") + key + "\"");
  }
}

std::int64_t Integer(const json& j, const char* key) {
  if (j.contains(key) && !j.at(key).is_number_integer()) {
    throw Error(ErrorCode::kSpecInvalid, std::string("\"") + key + "\" must be an integer");
  }
  return Field<std::int64_t>(j, key);
}

// Array of integer arrays.
std::vector<std::vector<std::int64_t>> IntegerRows(const json& j, const char* key) {
  const auto& rows = Field<json>(j, key);
  const auto bad = [&] {
    return Error(ErrorCode::kSpecInvalid,
                 std::string("\"") + key + "\" must be an array of integer arrays");
  };
  if (!rows.is_array()) throw bad();
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& row : rows) {
    if (!row.is_array()) throw bad();
    std::vector<std::int64_t> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw bad();
      r.push_back(x.get<std::int64_t>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

// Nonnegative integer field.
std::size_t Count(const json& j, const char* key) {
  const auto v = Integer(j, key);
  if (v < 0) throw Error(ErrorCode::kSpecInvalid, std::string("\"") + key + "\" must be >= 0");
  return static_cast<std::size_t>(v);
}

}  // namespace

MatroidSpec MatroidSpecFromJson(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kSpecInvalid, "matroid spec must be a JSON object");
  const auto type = Field<std::string>(j, "type");
  if (type == "uniform") return UniformSpec{Count(j, "r"), Count(j, "n")};
  if (type == "projective") return ProjectiveSpec{Count(j, "n"), Integer(j, "q")};
  if (type == "parallel_classes") return ParallelClassesSpec{Count(j, "m_per_class")};
  if (type == "linear") {
    LinearSpec s;
    s.q = Integer(j, "q");
    for (const auto& col : IntegerRows(j, "columns")) {
      std::vector<std::uint32_t> c;
      for (auto x : col) {
        if (x < 0 || x >= (std::int64_t{1} << 16)) {
          throw Error(ErrorCode::kSpecInvalid, "linear: entry outside [0, q)");
        }
        c.push_back(static_cast<std::uint32_t>(x));
      }
      s.columns.push_back(std::move(c));
    }
    return s;
  }
  if (type == "explicit") {
    ExplicitSpec s;
    s.ground_size = Count(j, "ground_size");
    s.k = Count(j, "k");
    for (const auto& set : IntegerRows(j, "sets")) {
      std::vector<std::size_t> t;
      for (auto x : set) {
        if (x < 0) throw Error(ErrorCode::kSpecInvalid, "explicit: negative element");
        t.push_back(static_cast<std::size_t>(x));
      }
      s.sets.push_back(std::move(t));
    }
    return s;
  }
  throw Error(ErrorCode::kSpecInvalid, "unknown matroid type \"" + type + "\"");
}

json MatroidSpecToJson(const MatroidSpec& spec) {
  if (const auto* u = std::get_if<UniformSpec>(&spec)) {
    return {{"type", "uniform"}, {"r", u->r}, {"n", u->n}};
  }
  if (const auto* l = std::get_if<LinearSpec>(&spec)) {
    return {{"type", "linear"}, {"q", l->q}, {"columns", l->columns}};
  }
  if (const auto* p = std::get_if<ProjectiveSpec>(&spec)) {
    return {{"type", "projective"}, {"n", p->n}, {"q", p->q}};
  }
  if (const auto* pc = std::get_if<ParallelClassesSpec>(&spec)) {
    return {{"type", "parallel_classes"}, {"m_per_class", pc->m_per_class}};
  }
  const auto& e = std::get<ExplicitSpec>(spec);
  return {{"type", "explicit"}, {"ground_size", e.ground_size}, {"k", e.k}, {"sets", e.sets}};
}

Distribution DistributionFromJson(const json& j, bool renormalize) {
  if (!j.is_array()) throw Error(ErrorCode::kInvalidDistribution, "distribution must be a JSON array");
  std::vector<double> p;
  for (const auto& x : j) {
    if (!x.is_number()) throw Error(ErrorCode::kInvalidDistribution, "distribution entries must be numbers");
    p.push_back(x.get<double>());
  }
  return Distribution(std::move(p), renormalize);
}

GeneratorSet GeneratorSetFromJson(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kInvalidArgument, "generators must be a JSON array of arrays");
  std::vector<Permutation> gens;
  for (const auto& g : j) {
    std::vector<std::size_t> img;
    if (!g.is_array()) throw Error(ErrorCode::kInvalidArgument, "generator must be an array");
    for (const auto& x : g) {
      if (!x.is_number_integer() || x.get<std::int64_t>() < 0) {
        throw Error(ErrorCode::kInvalidArgument, "permutation entries must be nonnegative integers");
      }
      img.push_back(x.get<std::size_t>());
    }
    gens.emplace_back(std::move(img));
  }
  return GeneratorSet(std::move(gens));
}

json ToJson(const Permutation& g) {
  return json(std::vector<std::size_t>(g.image().begin(), g.image().end()));
}

json ToJson(const Distribution& p) {
  return json(std::vector<double>(p.probs().begin(), p.probs().end()));
}

json ToJson(const McEstimate& est) {
  return {{"n_trials", est.n_trials}, {"successes", est.successes},
          {"p_hat", est.p_hat},       {"std_err", est.std_err},
          {"seed", est.seed}};
}

json ToJson(const ScanReport& rep) {
  json hist = json::array();
  for (const auto& b : rep.histogram) {
    hist.push_back({{"lo", b.lo}, {"hi", b.hi}, {"count", b.count}});
  }
  return {{"min_R", rep.min_r},
          {"min_R_sampled", rep.min_r_sampled},
          {"max_R", rep.max_r},
          {"argmin", rep.argmin},
          {"n_samples", rep.n_samples},
          {"seed", rep.seed},
          {"mode", rep.mode == ScanMode::kSparse ? "sparse" : "dirichlet"},
          {"histogram", hist},
          {"nonunique", rep.nonunique}};
}

json ToJson(const AscentResult& res) {
  return {{"p", ToJson(res.p)},
          {"F", res.value},
          {"iterations", res.iterations},
          {"converged", res.converged},
          {"grad_norm", res.grad_norm},
          {"trajectory", res.trajectory}};
}

json ToJson(const ConcavityReport& rep) {
  return {{"trials", rep.trials},
          {"max_violation", rep.max_violation},
          {"max_superlevel_violation", rep.max_superlevel_violation}};
}

json ToJson(const K2CheckReport& rep) {
  return {{"samples", rep.samples},
          {"max_residual", rep.max_residual},
          {"max_ratio_deviation", rep.max_ratio_deviation}};
}

json ToJson(const HessianCheckReport& rep) {
  return {{"coefficient", ToString(rep.coefficient)},
          {"coefficient_float", ToDouble(rep.coefficient)},
          {"b2_explicit", ToString(rep.b2_explicit)},
          {"b2_counts", rep.b2_counts},
          {"b2_consistent", rep.b2_consistent},
          {"max_diagonal", rep.max_diagonal},
          {"max_relative_deviation", rep.max_relative_deviation},
          {"max_fd_relative_deviation", rep.max_fd_relative_deviation},
          {"directions", rep.directions}};
}

}  // namespace mprob
