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

#include "matroidprob/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "matroidprob/error.hpp"

namespace mprob {

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (std::size_t e : image_) {
    if (e >= image_.size() || seen[e]) {
      throw Error(ErrorCode::kInvalidArgument, "image vector is not a permutation");
    }
    seen[e] = 1;
  }
}

Permutation Permutation::Identity(std::size_t m) {
  std::vector<std::size_t> img(m);
  std::iota(img.begin(), img.end(), std::size_t{0});
  return Permutation(std::move(img));
}

Permutation Permutation::Transposition(std::size_t m, std::size_t a, std::size_t b) {
  std::vector<std::size_t> img(m);
  std::iota(img.begin(), img.end(), std::size_t{0});
  if (a >= m || b >= m) throw Error(ErrorCode::kElementOutOfRange, "transposition out of range");
  std::swap(img[a], img[b]);
  return Permutation(std::move(img));
}

Permutation Permutation::Inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t e = 0; e < image_.size(); ++e) inv[image_[e]] = e;
  return Permutation(std::move(inv));
}

bool Permutation::IsIdentity() const {
  for (std::size_t e = 0; e < image_.size(); ++e) {
    if (image_[e] != e) return false;
  }
  return true;
}

Permutation Compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kDimensionMismatch, "composing permutations of different sizes");
  std::vector<std::size_t> img(a.size());
  for (std::size_t e = 0; e < img.size(); ++e) img[e] = a(b(e));
  return Permutation(std::move(img));
}

GeneratorSet::GeneratorSet(std::vector<Permutation> gens) : gens_(std::move(gens)) {
  if (gens_.empty()) throw Error(ErrorCode::kInvalidArgument, "generator set is empty");
  for (const auto& g : gens_) {
    if (g.size() != gens_.front().size()) {
      throw Error(ErrorCode::kInvalidArgument, "generators act on different ground sizes");
    }
  }
}

Distribution ApplyToDistribution(const Permutation& g, const Distribution& p) {
  if (g.size() != p.size()) throw Error(ErrorCode::kDimensionMismatch, "permutation and distribution sizes differ");
  std::vector<double> out(p.size());
  for (std::size_t e = 0; e < p.size(); ++e) out[g(e)] = p[e];
  return Distribution(std::move(out));
}

namespace {

std::size_t Find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::vector<std::vector<std::size_t>> Orbits(const GeneratorSet& gens) {
  const std::size_t m = gens.ground_size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (const auto& g : gens.gens()) {
    for (std::size_t e = 0; e < m; ++e) {
      const std::size_t a = Find(parent, e), b = Find(parent, g(e));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  // Roots are the smallest members, so scanning e upward lists orbits in
  // order of their smallest element.
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<std::size_t> slot(m, m);
  for (std::size_t e = 0; e < m; ++e) {
    const std::size_t r = Find(parent, e);
    if (slot[r] == m) {
      slot[r] = orbits.size();
      orbits.emplace_back();
    }
    orbits[slot[r]].push_back(e);
  }
  return orbits;
}

bool IsTransitive(const GeneratorSet& gens) { return Orbits(gens).size() == 1; }

Distribution OrbitAverage(const GeneratorSet& gens, const Distribution& p) {
  if (gens.ground_size() != p.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "generators and distribution sizes differ");
  }
  std::vector<double> out(p.size());
  for (const auto& orbit : Orbits(gens)) {
    const double first = p[orbit.front()];
    bool constant = true;
    double s = 0.0;
    for (std::size_t e : orbit) {
      s += p[e];
      constant = constant && p[e] == first;
    }
    // Constant orbits are kept as-is so averaging is idempotent bit for bit.
    const double mean = constant ? first : s / static_cast<double>(orbit.size());
    for (std::size_t e : orbit) out[e] = mean;
  }
  return Distribution(std::move(out), /*renormalize=*/true);
}

double CheckInvariance(const IndepSetIndex& idx, const Permutation& g,
                       const Distribution& p) {
  if (g.size() != idx.ground_size()) {
    throw Error(ErrorCode::kDimensionMismatch, "permutation size != ground size");
  }
  if (g.IsIdentity()) return 0.0;
  return std::abs(EvalF(idx, ApplyToDistribution(g, p)) - EvalF(idx, p));
}

Permutation PglPointPermutation(const FieldMatrix& a, const Matroid& m) {
  const ProjectiveSpace* space = m.projective_space();
  if (space == nullptr) throw Error(ErrorCode::kInvalidArgument, "matroid is not projective");
  if (a.rows() != space->dim() || a.cols() != space->dim() ||
      !(a.field() == space->field())) {
    throw Error(ErrorCode::kInvalidArgument, "matrix must be N x N over F_q");
  }
  if (!IsInvertible(a)) throw Error(ErrorCode::kSingularMatrix, "matrix is singular");
  std::vector<std::size_t> img(space->num_points());
  for (std::size_t e = 0; e < img.size(); ++e) {
    img[e] = space->PointOf(a.apply(space->point(e)));
  }
  return Permutation(std::move(img));
}

namespace {

std::vector<Permutation> SymmetricGroupGens(std::size_t offset, std::size_t count,
                                            std::size_t m) {
  std::vector<Permutation> gens;
  if (count < 2) return gens;
  gens.push_back(Permutation::Transposition(m, offset, offset + 1));
  std::vector<std::size_t> cycle(m);
  std::iota(cycle.begin(), cycle.end(), std::size_t{0});
  for (std::size_t i = 0; i < count; ++i) cycle[offset + i] = offset + (i + 1) % count;
  gens.emplace_back(std::move(cycle));
  return gens;
}

}  // namespace

std::optional<GeneratorSet> StandardGenerators(const Matroid& m) {
  const std::size_t n = m.ground_size();
  std::vector<Permutation> gens;
  if (std::holds_alternative<UniformSpec>(m.spec())) {
    gens = SymmetricGroupGens(0, n, n);
  } else if (const auto* pc = std::get_if<ParallelClassesSpec>(&m.spec())) {
    const std::size_t k = pc->m_per_class;
    gens = SymmetricGroupGens(0, k, n);
    auto b = SymmetricGroupGens(k, k, n);
    gens.insert(gens.end(), b.begin(), b.end());
    std::vector<std::size_t> swap(n);
    for (std::size_t i = 0; i < k; ++i) {
      swap[i] = i + k;
      swap[i + k] = i;
    }
    gens.emplace_back(std::move(swap));
  } else if (m.is_projective()) {
    // GL(N, q) is generated by the elementary transvection I + E_{01}, the
    // diagonal scaling by a primitive root in coordinate 0, and coordinate
    // permutations (an adjacent transposition and an N-cycle).
    const PrimeField& f = m.field();
    const std::size_t d = m.vector_dim();
    auto ident = [&] {
      std::vector<std::uint32_t> e(d * d, 0);
      for (std::size_t i = 0; i < d; ++i) e[i * d + i] = 1;
      return e;
    };
    std::vector<FieldMatrix> mats;
    if (d >= 2) {
      auto t = ident();
      t[0 * d + 1] = 1;
      mats.emplace_back(f, d, d, t);
      std::vector<std::uint32_t> sw(d * d, 0), cyc(d * d, 0);
      for (std::size_t i = 0; i < d; ++i) {
        const std::size_t j = i < 2 ? 1 - i : i;
        sw[i * d + j] = 1;
        cyc[i * d + (i + 1) % d] = 1;
      }
      mats.emplace_back(f, d, d, sw);
      mats.emplace_back(f, d, d, cyc);
    }
    if (f.modulus() > 2) {
      // Smallest primitive root.
      std::uint32_t g = 2;
      for (;; ++g) {
        std::uint32_t x = 1, order = 0;
        do {
          x = f.mul(x, g);
          ++order;
        } while (x != 1);
        if (order == f.modulus() - 1) break;
      }
      auto s = ident();
      s[0] = g;
      mats.emplace_back(f, d, d, s);
    }
    for (const auto& a : mats) gens.push_back(PglPointPermutation(a, m));
  } else {
    return std::nullopt;
  }
  if (gens.empty()) gens.push_back(Permutation::Identity(n));
  return GeneratorSet(std::move(gens));
}

}  // namespace mprob
