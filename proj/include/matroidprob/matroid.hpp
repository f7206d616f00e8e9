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

#ifndef MATROIDPROB_MATROID_HPP_
#define MATROIDPROB_MATROID_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "matroidprob/finite_field.hpp"
#include "matroidprob/projective_space.hpp"

namespace mprob {

// U_{r,n}: every set of at most r elements is independent.
struct UniformSpec {
  std::size_t r = 0;
  std::size_t n = 0;
};

// Column matroid of vectors over F_q (q prime).
struct LinearSpec {
  std::int64_t q = 2;
  std::vector<std::vector<std::uint32_t>> columns;
};

// PG(N-1, q).
struct ProjectiveSpec {
  std::size_t n = 1;
  std::int64_t q = 2;
};

// Two parallel classes A = {0..m-1}, B = {m..2m-1} of equal size; rank 2.
struct ParallelClassesSpec {
  std::size_t m_per_class = 1;
};

// A user-supplied size-k layer. Independence is answered for sets of size at
// most k: a set is independent iff it is contained in a listed set.
struct ExplicitSpec {
  std::size_t ground_size = 0;
  std::size_t k = 0;
  std::vector<std::vector<std::size_t>> sets;
};

using MatroidSpec = std::variant<UniformSpec, LinearSpec, ProjectiveSpec,
                                 ParallelClassesSpec, ExplicitSpec>;

// Immutable matroid on the ground set {0, ..., m-1} with an independence
// oracle. Cheap to copy (shared immutable state).
class Matroid {
 public:
  // Throws Error(kSpecInvalid) (or kNotPrime / kTooLarge for bad fields).
  static Matroid Build(const MatroidSpec& spec);

  const MatroidSpec& spec() const;
  std::size_t ground_size() const;
  std::size_t rank() const;

  // Independence oracle. Elements must be distinct and < ground_size()
  // (Error(kElementOutOfRange) / Error(kInvalidArgument) otherwise).
  bool IsIndependent(std::span<const std::size_t> subset) const;
  // Rank of a subset, by greedy extension.
  std::size_t SubsetRank(std::span<const std::size_t> subset) const;

  bool is_projective() const;
  // Representative vectors, present for linear and projective matroids.
  bool has_vectors() const;
  const PrimeField& field() const;
  std::size_t vector_dim() const;
  std::span<const std::uint32_t> vector(std::size_t e) const;
  // Present for projective matroids only.
  const ProjectiveSpace* projective_space() const;

  // Canonical description used to tag derived data (compact spec JSON).
  const std::string& description() const;

 private:
  struct State;
  explicit Matroid(std::shared_ptr<const State> state)
      : state_(std::move(state)) {}

  bool IndependentUnchecked(std::span<const std::size_t> subset) const;

  std::shared_ptr<const State> state_;
};

// Sampled basis-exchange check on an explicit layer: for random listed sets
// B1, B2 and x in B1\B2, some y in B2\B1 must give a listed B1-x+y. Returns the
// number of violating triples out of `trials`. Not exhaustive.
std::size_t ExplicitExchangeViolations(const Matroid& m, std::size_t trials,
                                       std::uint64_t seed);

}  // namespace mprob

#endif  // MATROIDPROB_MATROID_HPP_
