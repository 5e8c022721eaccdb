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

#include "rmgen/qr.hpp"

#include <cmath>
#include <limits>

namespace rmgen {
namespace {

template <class Mat, class S = typename Mat::Scalar>
QrFactors<Mat> decompose_impl(const Mat& z, QrConvention convention, QrOpCount* ops) {
  if (z.rows() != z.cols()) throw std::invalid_argument("qr_decompose: matrix must be square");
  const Index n = z.rows();
  if (n < 1) throw std::invalid_argument("qr_decompose: dimension must be >= 1");

  const double scale = detail::frobenius(z);
  const double tiny = static_cast<double>(n) * std::numeric_limits<double>::epsilon() * scale;
  const bool with_leading = convention == QrConvention::positive_diagonal;

  Mat r = z;
  Mat p = Mat::Identity(n, n);  // accumulates the reflections; Q = P*
  std::vector<S> column;

  for (Index k = 0; k < n; ++k) {
    const Index m = n - k;
    column.resize(static_cast<std::size_t>(m));
    double norm_sq = 0.0;
    for (Index j = 0; j < m; ++j) {
      column[static_cast<std::size_t>(j)] = r(k + j, k);
      norm_sq += detail::abs_sq(r(k + j, k));
    }
    const double norm = std::sqrt(norm_sq);
    if (norm <= tiny)
      throw SingularityError("qr_decompose: numerically rank-deficient at column " +
                                 std::to_string(k),
                             k);

    const S phase = detail::unit_or_one(column[0]);
    const auto step = householder_step<S>(column);
    apply_reflection_block(step, r, k, k + 1, with_leading, ops);
    apply_reflection_block(step, p, k, 0, with_leading, ops);

    // The pivot column's image is known in closed form; write it exactly.
    r(k, k) = with_leading ? detail::from_real<S>(norm) : phase * detail::from_real<S>(-norm);
    for (Index j = 1; j < m; ++j) r(k + j, k) = detail::from_real<S>(0.0);
  }

  return {detail::adjoint_of(p), std::move(r), convention};
}

template <class Mat, class S = typename Mat::Scalar>
QrFactors<Mat> phase_fix_impl(const QrFactors<Mat>& f) {
  const Index n = f.r.rows();
  QrFactors<Mat> out{f.q, f.r, QrConvention::positive_diagonal};
  for (Index k = 0; k < n; ++k) {
    const S diag = out.r(k, k);
    if (detail::is_positive_real(diag)) continue;  // Lambda_kk = 1 exactly
    const double mag = detail::abs_s(diag);
    if (mag == 0.0)
      throw SingularityError("phase_fix: zero diagonal at column " + std::to_string(k), k);
    const S lambda = diag * (1.0 / mag);
    const S lambda_inv = detail::conj_s(lambda);
    for (Index i = 0; i < n; ++i) out.q(i, k) = out.q(i, k) * lambda;      // Q' = Q Lambda
    for (Index j = k + 1; j < n; ++j) out.r(k, j) = lambda_inv * out.r(k, j);
    out.r(k, k) = detail::from_real<S>(mag);
  }
  return out;
}

}  // namespace

QrFactors<RealMatrix> qr_decompose(const RealMatrix& z, QrConvention convention, QrOpCount* ops) {
  return decompose_impl(z, convention, ops);
}
QrFactors<ComplexMatrix> qr_decompose(const ComplexMatrix& z, QrConvention convention,
                                      QrOpCount* ops) {
  return decompose_impl(z, convention, ops);
}
QrFactors<QuaternionMatrix> qr_decompose(const QuaternionMatrix& z, QrConvention convention,
                                         QrOpCount* ops) {
  return decompose_impl(z, convention, ops);
}

QrFactors<RealMatrix> phase_fix(const QrFactors<RealMatrix>& f) { return phase_fix_impl(f); }
QrFactors<ComplexMatrix> phase_fix(const QrFactors<ComplexMatrix>& f) { return phase_fix_impl(f); }
QrFactors<QuaternionMatrix> phase_fix(const QrFactors<QuaternionMatrix>& f) {
  return phase_fix_impl(f);
}

}  // namespace rmgen
