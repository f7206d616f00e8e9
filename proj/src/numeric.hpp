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

#ifndef MATROIDPROB_SRC_NUMERIC_HPP_
#define MATROIDPROB_SRC_NUMERIC_HPP_

#include <cstddef>
#include <span>

namespace mprob::internal {

// Pairwise summation of term(i) for i in [lo, hi).
template <typename Term>
double PairwiseSum(std::size_t lo, std::size_t hi, const Term& term) {
  if (hi - lo <= 16) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += term(i);
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return PairwiseSum(lo, mid, term) + PairwiseSum(mid, hi, term);
}

inline double PairwiseSum(std::span<const double> v) {
  return PairwiseSum(0, v.size(), [&](std::size_t i) { return v[i]; });
}

}  // namespace mprob::internal

#endif  // MATROIDPROB_SRC_NUMERIC_HPP_
