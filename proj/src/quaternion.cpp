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

#include "rmgen/quaternion.hpp"

namespace rmgen {

QuaternionMatrix QuaternionMatrix::Identity(Index rows, Index cols) {
  if (rows != cols) throw std::invalid_argument("QuaternionMatrix::Identity: must be square");
  QuaternionMatrix m(rows);
  for (Index i = 0; i < rows; ++i) m(i, i) = Quaternion::one();
  return m;
}

QuaternionMatrix QuaternionMatrix::adjoint() const {
  QuaternionMatrix out(n_);
  for (Index i = 0; i < n_; ++i)
    for (Index j = 0; j < n_; ++j) out(i, j) = conj((*this)(j, i));
  return out;
}

double QuaternionMatrix::frobenius_norm() const {
  double acc = 0.0;
  for (const Quaternion& q : entries_) acc += q.norm_sq();
  return std::sqrt(acc);
}

QuaternionMatrix qm_mul(const QuaternionMatrix& p, const QuaternionMatrix& q) {
  if (p.cols() != q.rows()) throw std::invalid_argument("qm_mul: dimension mismatch");
  const auto n = p.rows();
  QuaternionMatrix out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      Quaternion acc;
      for (Eigen::Index k = 0; k < n; ++k) acc += p(i, k) * q(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

Eigen::Matrix2cd embed_scalar(const Quaternion& q) {
  const std::complex<double> z(q.a, q.b);
  const std::complex<double> w(q.c, q.d);
  Eigen::Matrix2cd m;
  m << z, w, -std::conj(w), std::conj(z);
  return m;
}

Eigen::MatrixXcd embed_matrix(const QuaternionMatrix& q) {
  const auto n = q.rows();
  Eigen::MatrixXcd out(2 * n, 2 * n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) out.block<2, 2>(2 * j, 2 * k) = embed_scalar(q(j, k));
  return out;
}

}  // namespace rmgen
