// Copyright 2026 The rmgen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RMGEN_RNG_HPP
#define RMGEN_RNG_HPP

#include <cstdint>
#include <random>

#include "rmgen/matrix.hpp"
#include "rmgen/quaternion.hpp"

namespace rmgen {

/// Seedable stream of standard normal variates over R, C and H.
///
/// A stream is identified by (seed, stream_index); equal identifiers replay
/// the identical sequence. Streams with distinct index share no state: the
/// engine is seeded with
///
///   splitmix64(splitmix64(seed) ^ (stream_index + 0x9E3779B97F4A7C15))
///
/// which is the fixed stream-derivation hash. Normals come from the
/// Box-Muller transform on 53-bit uniforms (one spare cached), so the scalar
/// kinds share a single underlying N(0,1) sequence:
///   normal_real     -> next variate, variance 1
///   normal_complex  -> (next, next)/sqrt(2), E|z|^2 = 1
///   normal_quaternion -> four next variates / sqrt(2), E|q|^2 = 2
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_index = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  double normal_real();
  Complex normal_complex();
  Quaternion normal_quaternion();

  /// Uniform double in [0, 1) with 53-bit resolution.
  double uniform01();
  /// Uniform integer in [0, bound); rejection-sampled, no modulo bias.
  std::uint64_t uniform_below(std::uint64_t bound);

  static std::uint64_t splitmix64(std::uint64_t x);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_index_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// n x n matrix of i.i.d. variates of the given kind, filled row-major.
/// Throws std::invalid_argument for n < 1.
RealMatrix ginibre_real(Index n, RngStream& rng);
ComplexMatrix ginibre_complex(Index n, RngStream& rng);
QuaternionMatrix ginibre_quaternion(Index n, RngStream& rng);

}  // namespace rmgen

#endif  // RMGEN_RNG_HPP
