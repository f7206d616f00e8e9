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

#ifndef MATROIDPROB_SYMMETRY_HPP_
#define MATROIDPROB_SYMMETRY_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "matroidprob/finite_field.hpp"
#include "matroidprob/genpoly.hpp"
#include "matroidprob/matroid.hpp"

namespace mprob {

// A bijection g of {0, ..., m-1}; g maps e to image()[e].
class Permutation {
 public:
  // Throws Error(kInvalidArgument) unless `image` is a permutation.
  explicit Permutation(std::vector<std::size_t> image);

  static Permutation Identity(std::size_t m);
  static Permutation Transposition(std::size_t m, std::size_t a, std::size_t b);

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t e) const { return image_[e]; }
  std::span<const std::size_t> image() const { return image_; }

  Permutation Inverse() const;
  bool IsIdentity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

// (a ∘ b)(e) = a(b(e)).
Permutation Compose(const Permutation& a, const Permutation& b);

class GeneratorSet {
 public:
  // Throws Error(kInvalidArgument) if empty or of mixed sizes.
  explicit GeneratorSet(std::vector<Permutation> gens);

  std::size_t ground_size() const { return gens_.front().size(); }
  const std::vector<Permutation>& gens() const { return gens_; }

 private:
  std::vector<Permutation> gens_;
};

// (gp)_e = p_{g^{-1}(e)}: the mass at e moves to g(e).
Distribution ApplyToDistribution(const Permutation& g, const Distribution& p);

// Orbits of the group generated by `gens`, each sorted, listed by smallest
// member.
std::vector<std::vector<std::size_t>> Orbits(const GeneratorSet& gens);

bool IsTransitive(const GeneratorSet& gens);

// Replaces p_e by the mean of p over the orbit of e. Equals the full group
// average (1/|G|) sum_g gp.
Distribution OrbitAverage(const GeneratorSet& gens, const Distribution& p);

// |f(gp) - f(p)|.
double CheckInvariance(const IndepSetIndex& idx, const Permutation& g,
                       const Distribution& p);

// Permutation of the canonical points of a projective matroid induced by
// v -> A v. Throws Error(kSingularMatrix) if A is not invertible and
// Error(kInvalidArgument) if `m` is not projective or A has the wrong shape.
Permutation PglPointPermutation(const FieldMatrix& a, const Matroid& m);

// Known automorphism generators for the built-in families: the symmetric
// group for uniform matroids, in-class permutations plus the class swap for
// parallel classes, and a generating set of GL(N, q) acting on points for
// projective geometries. Returns nullopt for linear and explicit matroids.
std::optional<GeneratorSet> StandardGenerators(const Matroid& m);

}  // namespace mprob

#endif  // MATROIDPROB_SYMMETRY_HPP_
