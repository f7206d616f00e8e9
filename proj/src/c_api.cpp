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

#include "matroidprob/matroidprob.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "matroidprob/error.hpp"
#include "matroidprob/genpoly.hpp"
#include "matroidprob/json_io.hpp"
#include "matroidprob/matroid.hpp"
#include "matroidprob/montecarlo.hpp"
#include "matroidprob/optimize.hpp"
#include "matroidprob/projective.hpp"
#include "matroidprob/symmetry.hpp"

struct mp_matroid {
  mprob::Matroid matroid;
};

struct mp_index {
  mprob::Matroid matroid;
  mprob::IndepSetIndex index;
};

namespace {

using mprob::ErrorCode;
using nlohmann::json;

thread_local std::string g_last_error;

mp_status ToStatus(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime: return MP_ERR_NOT_PRIME;
    case ErrorCode::kTooLarge: return MP_ERR_TOO_LARGE;
    case ErrorCode::kSpecInvalid: return MP_ERR_SPEC_INVALID;
    case ErrorCode::kElementOutOfRange: return MP_ERR_ELEMENT_OUT_OF_RANGE;
    case ErrorCode::kKOutOfRange: return MP_ERR_K_OUT_OF_RANGE;
    case ErrorCode::kEnumerationLimit: return MP_ERR_ENUMERATION_LIMIT;
    case ErrorCode::kDimensionMismatch: return MP_ERR_DIMENSION_MISMATCH;
    case ErrorCode::kInvalidDistribution: return MP_ERR_INVALID_DISTRIBUTION;
    case ErrorCode::kSingularMatrix: return MP_ERR_SINGULAR_MATRIX;
    case ErrorCode::kSameElement: return MP_ERR_SAME_ELEMENT;
    case ErrorCode::kKMismatch: return MP_ERR_K_MISMATCH;
    case ErrorCode::kDegenerateInput: return MP_ERR_DEGENERATE_INPUT;
    case ErrorCode::kStartOnZeroSet: return MP_ERR_START_ON_ZERO_SET;
    case ErrorCode::kInvalidArgument: return MP_ERR_INVALID_ARGUMENT;
    case ErrorCode::kInternal: return MP_ERR_INTERNAL;
  }
  return MP_ERR_INTERNAL;
}

mp_status Fail(mp_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body() and translates exceptions into status codes.
template <typename Body>
mp_status Guard(Body&& body) {
  try {
    body();
    return MP_OK;
  } catch (const mprob::Error& e) {
    return Fail(ToStatus(e.code()), e.what());
  } catch (const json::exception& e) {
    return Fail(MP_ERR_BAD_JSON, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(MP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(MP_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(MP_ERR_INTERNAL, "unknown error");
  }
}

template <typename... Ptrs>
bool AnyNull(const Ptrs*... ptrs) {
  return ((ptrs == nullptr) || ...);
}

#define MP_REQUIRE_NONNULL(...)                                  \
  do {                                                           \
    if (AnyNull(__VA_ARGS__)) {                                  \
      return Fail(MP_ERR_NULL_ARGUMENT, "null argument");        \
    }                                                            \
  } while (0)

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<double> ToVector(const double* p, std::size_t n) {
  return std::vector<double>(p, p + n);
}

mprob::Distribution ToDistribution(const double* p, std::size_t n) {
  return mprob::Distribution(ToVector(p, n));
}

mprob::Rational ExactUniform(const mprob::IndepSetIndex& idx) {
  mprob::Rational r(mprob::BigInt(idx.size()));
  for (std::size_t i = 2; i <= idx.k(); ++i) r *= mprob::Rational(i);
  for (std::size_t i = 0; i < idx.k(); ++i) r /= mprob::Rational(idx.ground_size());
  return r;
}

void CopyOut(const std::vector<double>& v, double* out) {
  std::copy(v.begin(), v.end(), out);
}

}  // namespace

extern "C" {

const char* mp_version(void) { return "1.0.0"; }

const char* mp_status_name(mp_status status) {
  switch (status) {
    case MP_OK: return "Ok";
    case MP_ERR_NOT_PRIME: return "NotPrime";
    case MP_ERR_TOO_LARGE: return "TooLarge";
    case MP_ERR_SPEC_INVALID: return "SpecInvalid";
    case MP_ERR_ELEMENT_OUT_OF_RANGE: return "ElementOutOfRange";
    case MP_ERR_K_OUT_OF_RANGE: return "KOutOfRange";
    case MP_ERR_ENUMERATION_LIMIT: return "EnumerationLimit";
    case MP_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case MP_ERR_INVALID_DISTRIBUTION: return "InvalidDistribution";
    case MP_ERR_SINGULAR_MATRIX: return "SingularMatrix";
    case MP_ERR_SAME_ELEMENT: return "SameElement";
    case MP_ERR_K_MISMATCH: return "KMismatch";
    case MP_ERR_DEGENERATE_INPUT: return "DegenerateInput";
    case MP_ERR_START_ON_ZERO_SET: return "StartOnZeroSet";
    case MP_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case MP_ERR_BAD_JSON: return "BadJson";
    case MP_ERR_NULL_ARGUMENT: return "NullArgument";
    case MP_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* mp_last_error(void) { return g_last_error.c_str(); }

void mp_string_free(char* s) { std::free(s); }

mp_status mp_matroid_from_json(const char* spec_json, mp_matroid** out) {
  MP_REQUIRE_NONNULL(spec_json, out);
  return Guard([&] {
    const json j = json::parse(spec_json);
    auto m = mprob::Matroid::Build(mprob::MatroidSpecFromJson(j));
    *out = new mp_matroid{std::move(m)};
  });
}

void mp_matroid_free(mp_matroid* m) { delete m; }

mp_status mp_matroid_ground_size(const mp_matroid* m, size_t* out) {
  MP_REQUIRE_NONNULL(m, out);
  *out = m->matroid.ground_size();
  return MP_OK;
}

mp_status mp_matroid_rank(const mp_matroid* m, size_t* out) {
  MP_REQUIRE_NONNULL(m, out);
  *out = m->matroid.rank();
  return MP_OK;
}

mp_status mp_matroid_is_projective(const mp_matroid* m, int* out) {
  MP_REQUIRE_NONNULL(m, out);
  *out = m->matroid.is_projective() ? 1 : 0;
  return MP_OK;
}

mp_status mp_matroid_is_independent(const mp_matroid* m, const size_t* elems,
                                    size_t n, int* out) {
  MP_REQUIRE_NONNULL(m, out);
  if (n > 0 && elems == nullptr) return Fail(MP_ERR_NULL_ARGUMENT, "null elements");
  return Guard([&] {
    *out = m->matroid.IsIndependent(std::span<const std::size_t>(elems, n)) ? 1 : 0;
  });
}

mp_status mp_matroid_spec_json(const mp_matroid* m, char** out_json) {
  MP_REQUIRE_NONNULL(m, out_json);
  return Guard([&] { *out_json = CopyString(m->matroid.description()); });
}

mp_status mp_matroid_labels_json(const mp_matroid* m, char** out_json) {
  MP_REQUIRE_NONNULL(m, out_json);
  return Guard([&] {
    json labels = nullptr;
    if (m->matroid.has_vectors()) {
      labels = json::array();
      for (std::size_t e = 0; e < m->matroid.ground_size(); ++e) {
        const auto v = m->matroid.vector(e);
        labels.push_back(std::vector<std::uint32_t>(v.begin(), v.end()));
      }
    }
    *out_json = CopyString(labels.dump());
  });
}

mp_status mp_matroid_standard_generators(const mp_matroid* m, char** out_json) {
  MP_REQUIRE_NONNULL(m, out_json);
  return Guard([&] {
    json out = nullptr;
    if (const auto gens = mprob::StandardGenerators(m->matroid)) {
      out = json::array();
      for (const auto& g : gens->gens()) out.push_back(mprob::ToJson(g));
    }
    *out_json = CopyString(out.dump());
  });
}

mp_status mp_matroid_exchange_violations(const mp_matroid* m, size_t trials,
                                         uint64_t seed, size_t* out) {
  MP_REQUIRE_NONNULL(m, out);
  return Guard([&] { *out = mprob::ExplicitExchangeViolations(m->matroid, trials, seed); });
}

mp_status mp_index_build(const mp_matroid* m, size_t k, uint64_t cap, mp_index** out) {
  MP_REQUIRE_NONNULL(m, out);
  return Guard([&] {
    auto idx = mprob::EnumerateIndependentKSets(
        m->matroid, k, cap == 0 ? mprob::kDefaultEnumerationCap : cap);
    *out = new mp_index{m->matroid, std::move(idx)};
  });
}

void mp_index_free(mp_index* idx) { delete idx; }

mp_status mp_index_count(const mp_index* idx, size_t* out) {
  MP_REQUIRE_NONNULL(idx, out);
  *out = idx->index.size();
  return MP_OK;
}

mp_status mp_index_k(const mp_index* idx, size_t* out) {
  MP_REQUIRE_NONNULL(idx, out);
  *out = idx->index.k();
  return MP_OK;
}

mp_status mp_index_ground_size(const mp_index* idx, size_t* out) {
  MP_REQUIRE_NONNULL(idx, out);
  *out = idx->index.ground_size();
  return MP_OK;
}

mp_status mp_index_set(const mp_index* idx, size_t i, size_t* out_elems) {
  MP_REQUIRE_NONNULL(idx, out_elems);
  if (i >= idx->index.size()) {
    return Fail(MP_ERR_ELEMENT_OUT_OF_RANGE, "set index out of range");
  }
  const auto s = idx->index.set(i);
  std::copy(s.begin(), s.end(), out_elems);
  return MP_OK;
}

mp_status mp_distribution_normalize(const double* p, size_t n, int renormalize,
                                    double* out) {
  MP_REQUIRE_NONNULL(p, out);
  return Guard([&] {
    const mprob::Distribution d(ToVector(p, n), renormalize != 0);
    std::copy(d.probs().begin(), d.probs().end(), out);
  });
}

mp_status mp_random_distribution(size_t n, uint64_t seed, uint64_t stream, double* out) {
  MP_REQUIRE_NONNULL(out);
  return Guard([&] {
    const auto d = mprob::Distribution::RandomDirichlet(n, seed, stream);
    std::copy(d.probs().begin(), d.probs().end(), out);
  });
}

mp_status mp_eval_f(const mp_index* idx, const double* x, size_t n, double* out) {
  MP_REQUIRE_NONNULL(idx, x, out);
  return Guard([&] { *out = mprob::EvalF(idx->index, std::span<const double>(x, n)); });
}

mp_status mp_eval_h(const mp_index* idx, const double* x, size_t n, double* out) {
  MP_REQUIRE_NONNULL(idx, x, out);
  return Guard([&] { *out = mprob::EvalH(idx->index, std::span<const double>(x, n)); });
}

mp_status mp_eval_probability(const mp_index* idx, const double* p, size_t n,
                              double* out) {
  MP_REQUIRE_NONNULL(idx, p, out);
  return Guard([&] { *out = mprob::EvalProbability(idx->index, ToDistribution(p, n)); });
}

mp_status mp_exact_uniform_probability(const mp_index* idx, char** out_rational) {
  MP_REQUIRE_NONNULL(idx, out_rational);
  return Guard([&] { *out_rational = CopyString(mprob::ToString(ExactUniform(idx->index))); });
}

mp_status mp_gradient_f(const mp_index* idx, const double* x, size_t n, double* out) {
  MP_REQUIRE_NONNULL(idx, x, out);
  return Guard([&] { CopyOut(mprob::GradientF(idx->index, std::span<const double>(x, n)), out); });
}

mp_status mp_hessian_f(const mp_index* idx, const double* x, size_t n, double* out) {
  MP_REQUIRE_NONNULL(idx, x, out);
  return Guard([&] { CopyOut(mprob::HessianF(idx->index, std::span<const double>(x, n)).data, out); });
}

mp_status mp_concavity_probe(const mp_index* idx, size_t trials, uint64_t seed,
                             char** out_json) {
  MP_REQUIRE_NONNULL(idx, out_json);
  return Guard([&] {
    *out_json = CopyString(mprob::ToJson(mprob::ConcavityProbe(idx->index, trials, seed)).dump());
  });
}

mp_status mp_orbits(const char* gens_json, char** out_json) {
  MP_REQUIRE_NONNULL(gens_json, out_json);
  return Guard([&] {
    const auto gens = mprob::GeneratorSetFromJson(json::parse(gens_json));
    *out_json = CopyString(json(mprob::Orbits(gens)).dump());
  });
}

mp_status mp_orbit_average(const char* gens_json, const double* p, size_t n,
                           double* out) {
  MP_REQUIRE_NONNULL(gens_json, p, out);
  return Guard([&] {
    const auto gens = mprob::GeneratorSetFromJson(json::parse(gens_json));
    const auto avg = mprob::OrbitAverage(gens, ToDistribution(p, n));
    std::copy(avg.probs().begin(), avg.probs().end(), out);
  });
}

mp_status mp_apply_permutation(const size_t* image, const double* p, size_t n,
                               double* out) {
  MP_REQUIRE_NONNULL(image, p, out);
  return Guard([&] {
    const mprob::Permutation g(std::vector<std::size_t>(image, image + n));
    const auto gp = mprob::ApplyToDistribution(g, ToDistribution(p, n));
    std::copy(gp.probs().begin(), gp.probs().end(), out);
  });
}

mp_status mp_check_invariance(const mp_index* idx, const size_t* image,
                              const double* p, size_t n, double* out) {
  MP_REQUIRE_NONNULL(idx, image, p, out);
  return Guard([&] {
    const mprob::Permutation g(std::vector<std::size_t>(image, image + n));
    *out = mprob::CheckInvariance(idx->index, g, ToDistribution(p, n));
  });
}

mp_status mp_pgl_point_permutation(const mp_matroid* m, const uint32_t* entries,
                                   size_t n_entries, size_t* out_image) {
  MP_REQUIRE_NONNULL(m, entries, out_image);
  return Guard([&] {
    const std::size_t d = m->matroid.has_vectors() ? m->matroid.vector_dim() : 0;
    if (!m->matroid.is_projective() || n_entries != d * d) {
      throw mprob::Error(ErrorCode::kInvalidArgument, "need an N x N matrix for a projective matroid");
    }
    const mprob::FieldMatrix a(m->matroid.field(), d, d,
                               std::vector<std::uint32_t>(entries, entries + n_entries));
    const auto g = mprob::PglPointPermutation(a, m->matroid);
    std::copy(g.image().begin(), g.image().end(), out_image);
  });
}

mp_status mp_pg_closed_forms(size_t n, int64_t q, size_t k, char** out_json) {
  MP_REQUIRE_NONNULL(out_json);
  return Guard([&] {
    const auto params = mprob::PGParams::Make(n, q, k);
    const auto value = mprob::UniformOptimum(params);
    json j = {{"n", n},
              {"q", q},
              {"k", k},
              {"m", params.m},
              {"value", mprob::ToString(value)},
              {"float", mprob::ToDouble(value)},
              {"bracket_form", mprob::ToString(mprob::UniformOptimumBracketForm(params))},
              {"vector_form", mprob::ToString(mprob::UniformOptimumVectorForm(params))}};
    if (k >= 2) {
      j["b2"] = mprob::ToString(mprob::B2Explicit(params));
      const auto c = mprob::HessianCoefficient(params);
      j["hessian_coefficient"] = mprob::ToString(c);
      j["hessian_coefficient_float"] = mprob::ToDouble(c);
    }
    *out_json = CopyString(j.dump());
  });
}

mp_status mp_pg_gaussian_bracket(size_t j, int64_t q, char** out) {
  MP_REQUIRE_NONNULL(out);
  return Guard([&] {
    const mprob::PrimeField f(q);
    *out = CopyString(mprob::GaussianBracket(j, f.modulus()).str());
  });
}

mp_status mp_pg_b2_count(const mp_index* idx, size_t e, size_t e2, uint64_t* out) {
  MP_REQUIRE_NONNULL(idx, out);
  return Guard([&] { *out = mprob::B2Count(idx->index, e, e2); });
}

mp_status mp_k2_gap(const mp_index* idx, const double* p, size_t n, double* lhs,
                    double* rhs) {
  MP_REQUIRE_NONNULL(idx, p, lhs, rhs);
  return Guard([&] {
    const auto params = mprob::PGParams::FromMatroid(idx->matroid, idx->index.k());
    const auto gap = mprob::ComputeK2Gap(idx->index, params, ToDistribution(p, n));
    *lhs = gap.lhs;
    *rhs = gap.rhs;
  });
}

mp_status mp_k2_check(const mp_index* idx, size_t samples, uint64_t seed,
                      char** out_json) {
  MP_REQUIRE_NONNULL(idx, out_json);
  return Guard([&] {
    const auto params = mprob::PGParams::FromMatroid(idx->matroid, idx->index.k());
    const auto rep = mprob::CheckK2Identity(idx->index, params, samples, seed);
    *out_json = CopyString(mprob::ToJson(rep).dump());
  });
}

mp_status mp_hessian_check(const mp_index* idx, size_t directions, uint64_t seed,
                           char** out_json) {
  MP_REQUIRE_NONNULL(idx, out_json);
  return Guard([&] {
    const auto params = mprob::PGParams::FromMatroid(idx->matroid, idx->index.k());
    const auto rep = mprob::CheckHessianIdentity(idx->index, params, directions, seed);
    *out_json = CopyString(mprob::ToJson(rep).dump());
  });
}

mp_status mp_pushforward(size_t n, int64_t q, const double* vec_probs, size_t len,
                         int renormalize, double* out, size_t out_len) {
  MP_REQUIRE_NONNULL(vec_probs, out);
  return Guard([&] {
    const mprob::VectorDistribution vd(n, q, ToVector(vec_probs, len), renormalize != 0);
    const auto p = mprob::Pushforward(vd);
    if (p.size() != out_len) {
      throw mprob::Error(ErrorCode::kDimensionMismatch,
                         "output buffer needs " + std::to_string(p.size()) + " entries");
    }
    std::copy(p.probs().begin(), p.probs().end(), out);
  });
}

mp_status mp_stability_ratio(const mp_index* idx, const double* p, size_t n,
                             double* out) {
  MP_REQUIRE_NONNULL(idx, p, out);
  return Guard([&] {
    *out = mprob::StabilityRatio(idx->index, ToDistribution(p, n),
                                 mprob::Distribution::Uniform(idx->index.ground_size()));
  });
}

mp_status mp_stability_scan(const mp_index* idx, const char* config_json,
                            char** out_json) {
  MP_REQUIRE_NONNULL(idx, out_json);
  return Guard([&] {
    mprob::ScanConfig cfg;
    if (config_json != nullptr) {
      const json j = json::parse(config_json);
      cfg.samples = j.value("samples", cfg.samples);
      cfg.seed = j.value("seed", cfg.seed);
      cfg.threads = j.value("threads", cfg.threads);
      cfg.buckets = j.value("buckets", cfg.buckets);
      cfg.refine_iters = j.value("refine_iters", cfg.refine_iters);
      const std::string mode = j.value("mode", std::string("dirichlet"));
      if (mode == "sparse") {
        cfg.mode = mprob::ScanMode::kSparse;
      } else if (mode != "dirichlet") {
        throw mprob::Error(ErrorCode::kInvalidArgument, "unknown scan mode \"" + mode + "\"");
      }
    }
    *out_json = CopyString(mprob::ToJson(mprob::StabilityScan(idx->index, cfg)).dump());
  });
}

mp_status mp_optimality_gap(const mp_index* idx, const double* p, size_t n, double* out) {
  MP_REQUIRE_NONNULL(idx, p, out);
  return Guard([&] { *out = mprob::OptimalityGap(idx->index, ToDistribution(p, n)); });
}

mp_status mp_maximize(const mp_index* idx, const char* config_json,
                      const double* start, size_t n, char** out_json) {
  MP_REQUIRE_NONNULL(idx, out_json);
  return Guard([&] {
    mprob::AscentConfig cfg;
    if (config_json != nullptr) {
      const json j = json::parse(config_json);
      cfg.step_size = j.value("step_size", cfg.step_size);
      cfg.max_iters = j.value("max_iters", cfg.max_iters);
      cfg.tol_grad = j.value("tol_grad", cfg.tol_grad);
    }
    if (start != nullptr) cfg.start = ToDistribution(start, n);
    *out_json = CopyString(mprob::ToJson(mprob::MaximizeF(idx->index, cfg)).dump());
  });
}

mp_status mp_estimate_probability(const mp_matroid* m, const double* p, size_t n,
                                  size_t k, uint64_t trials, uint64_t seed,
                                  unsigned threads, char** out_json) {
  MP_REQUIRE_NONNULL(m, p, out_json);
  return Guard([&] {
    const auto est = mprob::EstimateF(m->matroid, ToDistribution(p, n), k, trials, seed, threads);
    *out_json = CopyString(mprob::ToJson(est).dump());
  });
}

mp_status mp_sample_kset(const mp_matroid* m, const double* p, size_t n, size_t k,
                         uint64_t seed, uint64_t stream, size_t* out_elems,
                         int* distinct, int* independent) {
  MP_REQUIRE_NONNULL(m, p, out_elems, distinct, independent);
  return Guard([&] {
    const auto dist = ToDistribution(p, n);
    if (dist.size() != m->matroid.ground_size()) {
      throw mprob::Error(ErrorCode::kDimensionMismatch, "distribution length != ground size");
    }
    mprob::StreamRng rng(seed, stream);
    const auto draw = mprob::SampleKSet(m->matroid, mprob::Sampler(dist), k, rng);
    std::copy(draw.elements.begin(), draw.elements.end(), out_elems);
    *distinct = draw.distinct ? 1 : 0;
    *independent = draw.independent ? 1 : 0;
  });
}

}  // extern "C"
