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

#ifndef MATROIDPROB_RNG_HPP_
#define MATROIDPROB_RNG_HPP_

#include <array>
#include <cstddef>
#include <cstdint>

namespace mprob {

// Philox4x32-10 counter-based block cipher (Salmon et al., Random123).
// Every random quantity in the library is a pure function of
// (key, counter), so work can be partitioned across threads freely.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter Block(Counter ctr, Key key);
};

// A sequential stream over Philox blocks for a fixed (seed, stream) pair.
// The counter is laid out as {stream_lo, stream_hi, block_lo, block_hi} and
// the key as {seed_lo, seed_hi}. Streams with different ids never overlap.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t stream);

  std::uint32_t NextU32();
  std::uint64_t NextU64();
  // Uniform on [0, 1) with 53 random bits.
  double Uniform();
  // Uniform on (0, 1].
  double UniformPositive() { return 1.0 - Uniform(); }
  // Uniform integer in [0, n) by rejection; n >= 1.
  std::uint64_t Below(std::uint64_t n);
  // Standard exponential variate.
  double Exponential();

 private:
  void Refill();

  Philox4x32::Key key_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  Philox4x32::Counter buffer_{};
  std::size_t used_ = 4;
};

}  // namespace mprob

#endif  // MATROIDPROB_RNG_HPP_
