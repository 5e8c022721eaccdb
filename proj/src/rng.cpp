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

#include "rmgen/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rmgen {

std::uint64_t RngStream::splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_index)
    : seed_(seed),
      stream_index_(stream_index),
      engine_(splitmix64(splitmix64(seed) ^ (stream_index + 0x9E3779B97F4A7C15ULL))) {}

double RngStream::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
  const std::uint64_t rem = (-bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= rem) return r % bound;
  }
}

double RngStream::normal_real() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
  const double u2 = uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Complex RngStream::normal_complex() {
  constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
  const double re = normal_real() * inv_sqrt2;
  const double im = normal_real() * inv_sqrt2;
  return {re, im};
}

Quaternion RngStream::normal_quaternion() {
  constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
  const double a = normal_real() * inv_sqrt2;
  const double b = normal_real() * inv_sqrt2;
  const double c = normal_real() * inv_sqrt2;
  const double d = normal_real() * inv_sqrt2;
  return {a, b, c, d};
}

namespace {
void require_dim(Index n) {
  if (n < 1) throw std::invalid_argument("ginibre matrix: dimension must be >= 1");
}
}  // namespace

RealMatrix ginibre_real(Index n, RngStream& rng) {
  require_dim(n);
  RealMatrix z(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) z(i, j) = rng.normal_real();
  return z;
}

ComplexMatrix ginibre_complex(Index n, RngStream& rng) {
  require_dim(n);
  ComplexMatrix z(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) z(i, j) = rng.normal_complex();
  return z;
}

QuaternionMatrix ginibre_quaternion(Index n, RngStream& rng) {
  require_dim(n);
  QuaternionMatrix z(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) z(i, j) = rng.normal_quaternion();
  return z;
}

}  // namespace rmgen
