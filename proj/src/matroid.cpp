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

#include "matroidprob/matroid.hpp"

#include <algorithm>
#include <string>

#include "matroidprob/error.hpp"
#include "matroidprob/json_io.hpp"
#include "matroidprob/rng.hpp"

namespace mprob {

struct Matroid::State {
  MatroidSpec spec;
  std::string description;
  std::size_t ground_size = 0;
  std::size_t rank = 0;

  // Linear and projective families.
  std::optional<PrimeField> field;
  std::size_t dim = 0;
  std::vector<std::uint32_t> vectors;  // ground_size x dim, row-major
  std::optional<ProjectiveSpace> space;

  // Explicit layer, each set sorted, list sorted lexicographically.
  std::vector<std::vector<std::size_t>> layer;
};

namespace {

[[noreturn]] void Invalid(const std::string& why) {
  throw Error(ErrorCode::kSpecInvalid, why);
}

bool IsSubsetOfSorted(std::span<const std::size_t> small_sorted,
                      const std::vector<std::size_t>& big_sorted) {
  return std::includes(big_sorted.begin(), big_sorted.end(),
                       small_sorted.begin(), small_sorted.end());
}

}  // namespace

Matroid Matroid::Build(const MatroidSpec& spec) {
  auto st = std::make_shared<State>();
  st->spec = spec;
  st->description = MatroidSpecToJson(spec).dump();

  if (const auto* u = std::get_if<UniformSpec>(&spec)) {
    if (u->n < 1) Invalid("uniform: n must be >= 1");
    if (u->r > u->n) Invalid("uniform: need 0 <= r <= n");
    st->ground_size = u->n;
  } else if (const auto* lin = std::get_if<LinearSpec>(&spec)) {
    st->field = PrimeField(lin->q);
    if (lin->columns.empty()) Invalid("linear: at least one column required");
    st->dim = lin->columns.front().size();
    if (st->dim < 1) Invalid("linear: columns must have dimension >= 1");
    for (const auto& col : lin->columns) {
      if (col.size() != st->dim) Invalid("linear: columns of unequal dimension");
      bool nonzero = false;
      for (std::uint32_t x : col) {
        if (x >= st->field->modulus()) Invalid("linear: entry outside [0, q)");
        nonzero = nonzero || x != 0;
      }
      if (!nonzero) Invalid("linear: zero column (loop) not allowed");
      st->vectors.insert(st->vectors.end(), col.begin(), col.end());
    }
    st->ground_size = lin->columns.size();
  } else if (const auto* pr = std::get_if<ProjectiveSpec>(&spec)) {
    if (pr->n < 1) Invalid("projective: n must be >= 1");
    st->field = PrimeField(pr->q);
    st->space.emplace(pr->n, *st->field);
    st->dim = pr->n;
    st->ground_size = st->space->num_points();
    st->vectors.reserve(st->ground_size * st->dim);
    for (std::size_t i = 0; i < st->ground_size; ++i) {
      const auto pt = st->space->point(i);
      st->vectors.insert(st->vectors.end(), pt.begin(), pt.end());
    }
  } else if (const auto* pc = std::get_if<ParallelClassesSpec>(&spec)) {
    if (pc->m_per_class < 1) Invalid("parallel_classes: m_per_class must be >= 1");
    st->ground_size = 2 * pc->m_per_class;
  } else {
    const auto& ex = std::get<ExplicitSpec>(spec);
    if (ex.ground_size < 1) Invalid("explicit: ground_size must be >= 1");
    if (ex.k > ex.ground_size) Invalid("explicit: k exceeds ground_size");
    for (const auto& s : ex.sets) {
      if (s.size() != ex.k) Invalid("explicit: every set must have exactly k elements");
      std::vector<std::size_t> sorted = s;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        Invalid("explicit: repeated element within a set");
      }
      if (!sorted.empty() && sorted.back() >= ex.ground_size) {
        Invalid("explicit: element out of range");
      }
      st->layer.push_back(std::move(sorted));
    }
    std::sort(st->layer.begin(), st->layer.end());
    if (std::adjacent_find(st->layer.begin(), st->layer.end()) != st->layer.end()) {
      Invalid("explicit: duplicate set in layer");
    }
    st->ground_size = ex.ground_size;
  }

  Matroid m(st);
  if (std::holds_alternative<ExplicitSpec>(spec)) {
    st->rank = std::get<ExplicitSpec>(spec).k;
  } else {
    std::vector<std::size_t> all(st->ground_size);
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    st->rank = m.SubsetRank(all);
  }
  return m;
}

const MatroidSpec& Matroid::spec() const { return state_->spec; }
std::size_t Matroid::ground_size() const { return state_->ground_size; }
std::size_t Matroid::rank() const { return state_->rank; }
const std::string& Matroid::description() const { return state_->description; }

bool Matroid::is_projective() const { return state_->space.has_value(); }
bool Matroid::has_vectors() const { return state_->field.has_value(); }
std::size_t Matroid::vector_dim() const { return state_->dim; }

const PrimeField& Matroid::field() const {
  if (!state_->field) throw Error(ErrorCode::kInvalidArgument, "matroid has no field");
  return *state_->field;
}

std::span<const std::uint32_t> Matroid::vector(std::size_t e) const {
  if (!state_->field) throw Error(ErrorCode::kInvalidArgument, "matroid has no vectors");
  if (e >= state_->ground_size) {
    throw Error(ErrorCode::kElementOutOfRange, "element " + std::to_string(e) + " out of range");
  }
  return std::span<const std::uint32_t>(state_->vectors).subspan(e * state_->dim, state_->dim);
}

const ProjectiveSpace* Matroid::projective_space() const {
  return state_->space ? &*state_->space : nullptr;
}

bool Matroid::IsIndependent(std::span<const std::size_t> subset) const {
  for (std::size_t e : subset) {
    if (e >= state_->ground_size) {
      throw Error(ErrorCode::kElementOutOfRange,
                  "element " + std::to_string(e) + " out of range");
    }
  }
  std::vector<std::size_t> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidArgument, "subset has repeated elements");
  }
  return IndependentUnchecked(sorted);
}

// `subset` is sorted, distinct and in range.
bool Matroid::IndependentUnchecked(std::span<const std::size_t> subset) const {
  const State& st = *state_;
  if (subset.empty()) return true;
  if (st.field) {
    if (subset.size() > st.dim) return false;
    std::vector<std::span<const std::uint32_t>> rows;
    rows.reserve(subset.size());
    for (std::size_t e : subset) {
      rows.push_back(std::span<const std::uint32_t>(st.vectors).subspan(e * st.dim, st.dim));
    }
    return RankOfRows(*st.field, st.dim, rows) == subset.size();
  }
  if (const auto* u = std::get_if<UniformSpec>(&st.spec)) {
    return subset.size() <= u->r;
  }
  if (const auto* pc = std::get_if<ParallelClassesSpec>(&st.spec)) {
    if (subset.size() > 2) return false;
    if (subset.size() < 2) return true;
    return (subset[0] < pc->m_per_class) != (subset[1] < pc->m_per_class);
  }
  const auto& ex = std::get<ExplicitSpec>(st.spec);
  if (subset.size() > ex.k) return false;
  if (subset.size() == ex.k) {
    return std::binary_search(
        st.layer.begin(), st.layer.end(),
        std::vector<std::size_t>(subset.begin(), subset.end()));
  }
  return std::any_of(st.layer.begin(), st.layer.end(), [&](const auto& s) {
    return IsSubsetOfSorted(subset, s);
  });
}

std::size_t Matroid::SubsetRank(std::span<const std::size_t> subset) const {
  std::vector<std::size_t> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t e : sorted) {
    if (e >= state_->ground_size) {
      throw Error(ErrorCode::kElementOutOfRange,
                  "element " + std::to_string(e) + " out of range");
    }
  }
  std::vector<std::size_t> basis;
  for (std::size_t e : sorted) {
    auto candidate = basis;
    candidate.insert(std::upper_bound(candidate.begin(), candidate.end(), e), e);
    if (IndependentUnchecked(candidate)) basis = std::move(candidate);
  }
  return basis.size();
}

std::size_t ExplicitExchangeViolations(const Matroid& m, std::size_t trials,
                                       std::uint64_t seed) {
  const auto* ex = std::get_if<ExplicitSpec>(&m.spec());
  if (ex == nullptr || ex->sets.size() < 2) return 0;
  std::vector<std::vector<std::size_t>> sets;
  for (const auto& s : ex->sets) {
    auto t = s;
    std::sort(t.begin(), t.end());
    sets.push_back(std::move(t));
  }
  StreamRng rng(seed, 0);
  std::size_t violations = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto& b1 = sets[rng.Below(sets.size())];
    const auto& b2 = sets[rng.Below(sets.size())];
    std::vector<std::size_t> only1, only2;
    std::set_difference(b1.begin(), b1.end(), b2.begin(), b2.end(),
                        std::back_inserter(only1));
    std::set_difference(b2.begin(), b2.end(), b1.begin(), b1.end(),
                        std::back_inserter(only2));
    if (only1.empty()) continue;
    const std::size_t x = only1[rng.Below(only1.size())];
    bool found = false;
    for (std::size_t y : only2) {
      std::vector<std::size_t> swapped;
      for (std::size_t e : b1) {
        if (e != x) swapped.push_back(e);
      }
      swapped.push_back(y);
      if (m.IsIndependent(swapped)) {
        found = true;
        break;
      }
    }
    if (!found) ++violations;
  }
  return violations;
}

}  // namespace mprob
