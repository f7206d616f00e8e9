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

#ifndef MATROIDPROB_PROJECTIVE_SPACE_HPP_
#define MATROIDPROB_PROJECTIVE_SPACE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "matroidprob/finite_field.hpp"

namespace mprob {

// The points of PG(N-1, p): one-dimensional subspaces of F_p^N.
//
// Each point is stored as its canonical representative, the unique vector
// whose first nonzero coordinate is 1. Points are ordered lexicographically
// by these representatives. Nonzero vectors of F_p^N are likewise indexed in
// lexicographic order (index i <-> base-p digits of i+1, most significant
// coordinate first).
class ProjectiveSpace {
 public:
  // Refuses spaces with more than kMaxVectors vectors (Error(kSpecInvalid)).
  static constexpr std::uint64_t kMaxVectors = std::uint64_t{1} << 24;

  ProjectiveSpace(std::size_t dim, PrimeField field);

  std::size_t dim() const { return dim_; }
  const PrimeField& field() const { return field_; }
  std::size_t num_points() const { return num_points_; }
  // q^N - 1.
  std::size_t num_nonzero_vectors() const { return lookup_.size() - 1; }

  std::span<const std::uint32_t> point(std::size_t i) const {
    return std::span<const std::uint32_t>(reps_).subspan(i * dim_, dim_);
  }

  // Scales v so that its first nonzero coordinate is 1. v must be nonzero.
  std::vector<std::uint32_t> Canonicalize(std::span<const std::uint32_t> v) const;
  // Index of the point spanned by the nonzero vector v.
  std::size_t PointOf(std::span<const std::uint32_t> v) const;

  // The i-th nonzero vector in lexicographic order.
  std::vector<std::uint32_t> NonzeroVector(std::size_t i) const;
  // Index of the projective point spanned by the i-th nonzero vector.
  std::size_t PointOfNonzeroVector(std::size_t i) const {
    return static_cast<std::size_t>(lookup_[i + 1]);
  }

 private:
  std::uint64_t Encode(std::span<const std::uint32_t> v) const;

  std::size_t dim_;
  PrimeField field_;
  std::size_t num_points_ = 0;
  std::vector<std::uint32_t> reps_;
  // Base-p code of a vector -> index of its projective point (-1 for zero).
  std::vector<std::int32_t> lookup_;
};

}  // namespace mprob

#endif  // MATROIDPROB_PROJECTIVE_SPACE_HPP_
