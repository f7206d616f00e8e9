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

#ifndef MATROIDPROB_FINITE_FIELD_HPP_
#define MATROIDPROB_FINITE_FIELD_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mprob {

// The prime field F_p for a prime p < 2^16. Elements are integers in [0, p).
// Products fit in 64 bits without overflow, so arithmetic is multiply-then-
// reduce.
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxModulus = 1u << 16;

  // Throws Error(kNotPrime) for composite p or p < 2, Error(kTooLarge) for
  // p >= 2^16.
  explicit PrimeField(std::int64_t p);

  std::uint32_t modulus() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p_);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((std::uint64_t{a} + p_ - b) % p_);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  // Multiplicative inverse via Fermat; a must be nonzero.
  std::uint32_t inv(std::uint32_t a) const;
  // Reduces an arbitrary signed integer into [0, p).
  std::uint32_t reduce(std::int64_t a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

// Dense row-major matrix over a prime field.
class FieldMatrix {
 public:
  // Throws Error(kDimensionMismatch) if entries.size() != rows*cols and
  // Error(kInvalidArgument) if an entry is not in [0, p).
  FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols,
              std::vector<std::uint32_t> entries);

  static FieldMatrix Zero(PrimeField field, std::size_t rows, std::size_t cols);
  static FieldMatrix Identity(PrimeField field, std::size_t n);
  // Builds a matrix whose i-th row is rows[i]; all rows must share a length.
  static FieldMatrix FromRows(PrimeField field,
                              const std::vector<std::vector<std::uint32_t>>& rows);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const std::uint32_t> entries() const { return entries_; }

  std::uint32_t at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  std::span<const std::uint32_t> row(std::size_t r) const {
    return std::span<const std::uint32_t>(entries_).subspan(r * cols_, cols_);
  }

  FieldMatrix transpose() const;
  // Returns this * rhs. Throws Error(kDimensionMismatch).
  FieldMatrix multiply(const FieldMatrix& rhs) const;
  // Returns this * v for a column vector v.
  std::vector<std::uint32_t> apply(std::span<const std::uint32_t> v) const;

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> entries_;
};

// Rank over F_p by Gaussian elimination with first-nonzero pivoting.
std::size_t RankOverFp(const FieldMatrix& mat);

// Rank of the matrix whose rows are the given vectors (all of length `dim`).
std::size_t RankOfRows(const PrimeField& field, std::size_t dim,
                       std::span<const std::span<const std::uint32_t>> rows);

bool IsInvertible(const FieldMatrix& mat);

}  // namespace mprob

#endif  // MATROIDPROB_FINITE_FIELD_HPP_
