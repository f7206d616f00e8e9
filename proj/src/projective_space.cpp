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

#include "matroidprob/projective_space.hpp"

#include <string>

#include "matroidprob/error.hpp"

namespace mprob {

ProjectiveSpace::ProjectiveSpace(std::size_t dim, PrimeField field)
    : dim_(dim), field_(field) {
  if (dim_ == 0) throw Error(ErrorCode::kSpecInvalid, "projective N must be >= 1");
  const std::uint64_t p = field_.modulus();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim_; ++i) {
    total *= p;
    if (total > kMaxVectors) {
      throw Error(ErrorCode::kSpecInvalid,
                  "projective space too large: q^N exceeds 2^24");
    }
  }
  lookup_.assign(total, -1);
  std::vector<std::uint32_t> v(dim_, 0);
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = dim_; i-- > 0;) {
      v[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] == 1) {
      lookup_[code] = static_cast<std::int32_t>(num_points_++);
      reps_.insert(reps_.end(), v.begin(), v.end());
    }
  }
  // Fill in the non-canonical vectors from their canonical scalings.
  for (std::uint64_t code = 1; code < total; ++code) {
    if (lookup_[code] >= 0) continue;
    lookup_[code] = static_cast<std::int32_t>(
        PointOf(std::span<const std::uint32_t>(NonzeroVector(code - 1))));
  }
}

std::uint64_t ProjectiveSpace::Encode(std::span<const std::uint32_t> v) const {
  std::uint64_t code = 0;
  for (std::uint32_t x : v) code = code * field_.modulus() + x;
  return code;
}

std::vector<std::uint32_t> ProjectiveSpace::Canonicalize(
    std::span<const std::uint32_t> v) const {
  if (v.size() != dim_) {
    throw Error(ErrorCode::kDimensionMismatch, "vector length != N");
  }
  std::size_t lead = 0;
  while (lead < dim_ && v[lead] == 0) ++lead;
  if (lead == dim_) {
    throw Error(ErrorCode::kInvalidArgument, "zero vector has no projective point");
  }
  const std::uint32_t s = field_.inv(v[lead]);
  std::vector<std::uint32_t> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = field_.mul(v[i], s);
  return out;
}

std::size_t ProjectiveSpace::PointOf(std::span<const std::uint32_t> v) const {
  const auto c = Canonicalize(v);
  const std::int32_t idx = lookup_[Encode(c)];
  if (idx < 0) throw Error(ErrorCode::kInternal, "canonical vector not indexed");
  return static_cast<std::size_t>(idx);
}

std::vector<std::uint32_t> ProjectiveSpace::NonzeroVector(std::size_t i) const {
  if (i + 1 >= lookup_.size()) {
    throw Error(ErrorCode::kElementOutOfRange,
                "nonzero vector index " + std::to_string(i) + " out of range");
  }
  std::uint64_t c = i + 1;
  std::vector<std::uint32_t> v(dim_);
  for (std::size_t k = dim_; k-- > 0;) {
    v[k] = static_cast<std::uint32_t>(c % field_.modulus());
    c /= field_.modulus();
  }
  return v;
}

}  // namespace mprob
