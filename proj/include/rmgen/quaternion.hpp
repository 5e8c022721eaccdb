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

#ifndef RMGEN_QUATERNION_HPP
#define RMGEN_QUATERNION_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace rmgen {

/// Hamilton quaternion q = a + b i1 + c i2 + d i3 stored as four reals,
/// so conjugation is branch-free and exactly involutive.
struct Quaternion {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {}
  /// Real scalar embedded as a + 0 i1 + 0 i2 + 0 i3.
  constexpr explicit Quaternion(double real) : a(real) {}

  static constexpr Quaternion one() { return {1, 0, 0, 0}; }
  static constexpr Quaternion i1() { return {0, 1, 0, 0}; }
  static constexpr Quaternion i2() { return {0, 0, 1, 0}; }
  static constexpr Quaternion i3() { return {0, 0, 0, 1}; }

  double norm_sq() const { return a * a + b * b + c * c + d * d; }
  double norm() const {
    // sqrt(a*a) can be one ulp away from |a|; keep pure reals exact.
    if (b == 0.0 && c == 0.0 && d == 0.0) return std::abs(a);
    return std::sqrt(norm_sq());
  }
  bool is_zero() const { return a == 0.0 && b == 0.0 && c == 0.0 && d == 0.0; }

  friend constexpr Quaternion conj(const Quaternion& q) { return {q.a, -q.b, -q.c, -q.d}; }

  friend constexpr Quaternion operator+(const Quaternion& p, const Quaternion& q) {
    return {p.a + q.a, p.b + q.b, p.c + q.c, p.d + q.d};
  }
  friend constexpr Quaternion operator-(const Quaternion& p, const Quaternion& q) {
    return {p.a - q.a, p.b - q.b, p.c - q.c, p.d - q.d};
  }
  friend constexpr Quaternion operator-(const Quaternion& q) { return {-q.a, -q.b, -q.c, -q.d}; }

  /// Hamilton product; non-commutative.
  friend constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
            p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
            p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
            p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
  }
  friend constexpr Quaternion operator*(const Quaternion& q, double s) {
    return {q.a * s, q.b * s, q.c * s, q.d * s};
  }
  friend constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }
  friend constexpr Quaternion operator/(const Quaternion& q, double s) {
    return {q.a / s, q.b / s, q.c / s, q.d / s};
  }

  Quaternion& operator+=(const Quaternion& q) { return *this = *this + q; }
  Quaternion& operator-=(const Quaternion& q) { return *this = *this - q; }
  Quaternion& operator*=(const Quaternion& q) { return *this = *this * q; }

  friend constexpr bool operator==(const Quaternion& p, const Quaternion& q) {
    return p.a == q.a && p.b == q.b && p.c == q.c && p.d == q.d;
  }
};

/// Hamilton product, spelled out for symmetry with qm_mul.
inline Quaternion q_mul(const Quaternion& p, const Quaternion& q) { return p * q; }

/// Dense square matrix over the quaternions, row-major.
class QuaternionMatrix {
 public:
  using Scalar = Quaternion;
  using Index = Eigen::Index;

  QuaternionMatrix() = default;
  explicit QuaternionMatrix(Index n) : n_(n), entries_(static_cast<std::size_t>(n * n)) {
    if (n < 1) throw std::invalid_argument("QuaternionMatrix: dimension must be >= 1");
  }

  /// Two-argument form so generic code can treat Eigen and quaternion matrices alike.
  static QuaternionMatrix Identity(Index rows, Index cols);

  Index rows() const { return n_; }
  Index cols() const { return n_; }

  Quaternion& operator()(Index i, Index j) { return entries_[static_cast<std::size_t>(i * n_ + j)]; }
  const Quaternion& operator()(Index i, Index j) const {
    return entries_[static_cast<std::size_t>(i * n_ + j)];
  }

  QuaternionMatrix adjoint() const;
  double frobenius_norm() const;

 private:
  Index n_ = 0;
  std::vector<Quaternion> entries_;
};

/// Matrix product with Hamilton products, left-to-right order preserved.
QuaternionMatrix qm_mul(const QuaternionMatrix& p, const QuaternionMatrix& q);
inline QuaternionMatrix operator*(const QuaternionMatrix& p, const QuaternionMatrix& q) {
  return qm_mul(p, q);
}

/// Conjugate transpose, (Q*)_{jk} = conj(Q_{kj}).
inline QuaternionMatrix qm_conj_transpose(const QuaternionMatrix& q) { return q.adjoint(); }

/// 2x2 complex representation [[z, w], [-conj(w), conj(z)]] with z = a+ib, w = c+id.
Eigen::Matrix2cd embed_scalar(const Quaternion& q);

/// 2n x 2n complex representation; the 2x2 block at (j, k) is embed_scalar(q_{jk}).
Eigen::MatrixXcd embed_matrix(const QuaternionMatrix& q);

}  // namespace rmgen

#endif  // RMGEN_QUATERNION_HPP
