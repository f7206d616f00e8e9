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

#include "matroidprob/finite_field.hpp"

#include <string>
#include <utility>

#include "matroidprob/error.hpp"

namespace mprob {

PrimeField::PrimeField(std::int64_t p) {
  if (p >= static_cast<std::int64_t>(kMaxModulus)) {
    throw Error(ErrorCode::kTooLarge,
                "field modulus " + std::to_string(p) + " is not below 2^16");
  }
  bool prime = p >= 2;
  for (std::int64_t d = 2; prime && d * d <= p; ++d) {
    if (p % d == 0) prime = false;
  }
  if (!prime) {
    throw Error(ErrorCode::kNotPrime,
                "field modulus " + std::to_string(p) + " is not prime");
  }
  p_ = static_cast<std::uint32_t>(p);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw Error(ErrorCode::kInvalidArgument, "inverse of zero");
  std::uint64_t result = 1;
  std::uint64_t base = a % p_;
  std::uint32_t e = p_ - 2;
  while (e > 0) {
    if (e & 1u) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t PrimeField::reduce(std::int64_t a) const {
  std::int64_t r = a % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

FieldMatrix::FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols,
                         std::vector<std::uint32_t> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matrix entry count does not match rows*cols");
  }
  for (std::uint32_t e : entries_) {
    if (e >= field_.modulus()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "matrix entry " + std::to_string(e) + " outside [0, p)");
    }
  }
}

FieldMatrix FieldMatrix::Zero(PrimeField field, std::size_t rows,
                              std::size_t cols) {
  return FieldMatrix(field, rows, cols,
                     std::vector<std::uint32_t>(rows * cols, 0));
}

FieldMatrix FieldMatrix::Identity(PrimeField field, std::size_t n) {
  std::vector<std::uint32_t> e(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  return FieldMatrix(field, n, n, std::move(e));
}

FieldMatrix FieldMatrix::FromRows(
    PrimeField field, const std::vector<std::vector<std::uint32_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<std::uint32_t> e;
  e.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged matrix rows");
    }
    e.insert(e.end(), r.begin(), r.end());
  }
  return FieldMatrix(field, rows.size(), cols, std::move(e));
}

FieldMatrix FieldMatrix::transpose() const {
  std::vector<std::uint32_t> t(entries_.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t[c * rows_ + r] = at(r, c);
  }
  return FieldMatrix(field_, cols_, rows_, std::move(t));
}

FieldMatrix FieldMatrix::multiply(const FieldMatrix& rhs) const {
  if (cols_ != rhs.rows_ || !(field_ == rhs.field_)) {
    throw Error(ErrorCode::kDimensionMismatch, "incompatible matrix product");
  }
  const std::uint64_t p = field_.modulus();
  std::vector<std::uint32_t> out(rows_ * rhs.cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < rhs.cols_; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) {
        acc = (acc + std::uint64_t{at(i, k)} * rhs.at(k, j)) % p;
      }
      out[i * rhs.cols_ + j] = static_cast<std::uint32_t>(acc);
    }
  }
  return FieldMatrix(field_, rows_, rhs.cols_, std::move(out));
}

std::vector<std::uint32_t> FieldMatrix::apply(
    std::span<const std::uint32_t> v) const {
  if (v.size() != cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "vector length != matrix cols");
  }
  const std::uint64_t p = field_.modulus();
  std::vector<std::uint32_t> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < cols_; ++k) {
      acc = (acc + std::uint64_t{at(i, k)} * v[k]) % p;
    }
    out[i] = static_cast<std::uint32_t>(acc);
  }
  return out;
}

namespace {

// Row-reduces `work` (rows x cols, in place) and returns the rank.
std::size_t EliminateInPlace(const PrimeField& f, std::size_t rows,
                             std::size_t cols, std::vector<std::uint32_t>& work) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && work[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t k = c; k < cols; ++k) {
        std::swap(work[pivot * cols + k], work[rank * cols + k]);
      }
    }
    const std::uint32_t inv = f.inv(work[rank * cols + c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::uint32_t lead = work[r * cols + c];
      if (lead == 0) continue;
      const std::uint32_t factor = f.mul(lead, inv);
      for (std::size_t k = c; k < cols; ++k) {
        work[r * cols + k] =
            f.sub(work[r * cols + k], f.mul(factor, work[rank * cols + k]));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t RankOverFp(const FieldMatrix& mat) {
  std::vector<std::uint32_t> work(mat.entries().begin(), mat.entries().end());
  return EliminateInPlace(mat.field(), mat.rows(), mat.cols(), work);
}

std::size_t RankOfRows(const PrimeField& field, std::size_t dim,
                       std::span<const std::span<const std::uint32_t>> rows) {
  std::vector<std::uint32_t> work;
  work.reserve(rows.size() * dim);
  for (const auto& r : rows) {
    if (r.size() != dim) {
      throw Error(ErrorCode::kDimensionMismatch, "row length != dimension");
    }
    work.insert(work.end(), r.begin(), r.end());
  }
  return EliminateInPlace(field, rows.size(), dim, work);
}

bool IsInvertible(const FieldMatrix& mat) {
  return mat.rows() == mat.cols() && RankOverFp(mat) == mat.rows();
}

}  // namespace mprob
