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

#ifndef RMGEN_QR_HPP
#define RMGEN_QR_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rmgen/matrix.hpp"
#include "rmgen/quaternion.hpp"

namespace rmgen {

/// Diagonal convention of the factorization.
///   positive_diagonal: every r_jj is real and strictly positive (unique QR);
///   raw: no constraint on the phase of r_jj, emulating standard library
///        routines whose reflections omit the phase prefactor.
enum class QrConvention { positive_diagonal, raw };

/// Raised when a pivot column is numerically zero; `column` names the pivot.
class SingularityError : public std::runtime_error {
 public:
  SingularityError(std::string what, Index column)
      : std::runtime_error(std::move(what)), column(column) {}
  Index column;
};

template <class Mat>
struct QrFactors {
  Mat q;
  Mat r;
  QrConvention convention = QrConvention::positive_diagonal;
};

/// Multiply-accumulate tally for the complexity contract (O(n^3) assembly).
struct QrOpCount {
  std::uint64_t scalar_ops = 0;
};

namespace detail {

inline double conj_s(double x) { return x; }
inline Complex conj_s(const Complex& x) { return std::conj(x); }
inline Quaternion conj_s(const Quaternion& x) { return conj(x); }

inline double abs_sq(double x) { return x * x; }
inline double abs_sq(const Complex& x) { return std::norm(x); }
inline double abs_sq(const Quaternion& x) { return x.norm_sq(); }

inline double abs_s(double x) { return std::abs(x); }
inline double abs_s(const Complex& x) { return std::abs(x); }
inline double abs_s(const Quaternion& x) { return x.norm(); }

// x/|x| with the convention that the factor is 1 at x = 0 (sgn(0) = +1),
// keeping the map total and deterministic.
inline double unit_or_one(double x) { return x < 0.0 ? -1.0 : 1.0; }
inline Complex unit_or_one(const Complex& x) {
  const double m = std::abs(x);
  return m == 0.0 ? Complex(1.0, 0.0) : x / m;
}
inline Quaternion unit_or_one(const Quaternion& x) {
  const double m = x.norm();
  return m == 0.0 ? Quaternion::one() : x / m;
}

template <class S>
S from_real(double x) {
  return S(x);
}

inline bool is_positive_real(double x) { return x > 0.0; }
inline bool is_positive_real(const Complex& x) { return x.imag() == 0.0 && x.real() > 0.0; }
inline bool is_positive_real(const Quaternion& x) {
  return x.b == 0.0 && x.c == 0.0 && x.d == 0.0 && x.a > 0.0;
}

inline RealMatrix adjoint_of(const RealMatrix& m) { return m.transpose(); }
inline ComplexMatrix adjoint_of(const ComplexMatrix& m) { return m.adjoint(); }
inline QuaternionMatrix adjoint_of(const QuaternionMatrix& m) { return m.adjoint(); }

inline double frobenius(const RealMatrix& m) { return m.norm(); }
inline double frobenius(const ComplexMatrix& m) { return m.norm(); }
inline double frobenius(const QuaternionMatrix& m) { return m.frobenius_norm(); }

}  // namespace detail

/// One Householder reflection H(v) = leading_factor * (I - 2 u u*) with ||u|| = 1,
/// built so that H(v) v = ||v|| e1 exactly up to round-off. The leading factor is
/// -sgn(x1), -e^{-i theta}, or -conj(q) for R, C, H respectively; the sign/phase
/// branch of u is the one that adds constructively (no cancellation).
template <class S>
struct HouseholderStep {
  std::vector<S> unit;
  S leading_factor;
};

template <class S>
HouseholderStep<S> householder_step(std::span<const S> v) {
  double norm_sq = 0.0;
  for (const S& x : v) norm_sq += detail::abs_sq(x);
  if (norm_sq == 0.0) throw std::invalid_argument("householder_step: zero vector");
  const double inv_norm = 1.0 / std::sqrt(norm_sq);

  const S phase = detail::unit_or_one(v[0]);
  HouseholderStep<S> step;
  step.unit.resize(v.size());
  step.unit[0] = v[0] * inv_norm + phase;
  for (std::size_t j = 1; j < v.size(); ++j) step.unit[j] = v[j] * inv_norm;

  double u_sq = 0.0;
  for (const S& x : step.unit) u_sq += detail::abs_sq(x);
  const double inv_u = 1.0 / std::sqrt(u_sq);
  for (S& x : step.unit) x = x * inv_u;

  step.leading_factor = -detail::conj_s(phase);
  return step;
}

/// Applies the reflection in place: x <- lead * (x - 2 u <u, x>). Quaternion
/// products keep left-to-right order; <u, x> = sum conj(u_j) x_j.
template <class S>
void apply_reflection(const HouseholderStep<S>& step, std::span<S> x, bool with_leading = true) {
  S dot = detail::from_real<S>(0.0);
  for (std::size_t j = 0; j < x.size(); ++j) dot += detail::conj_s(step.unit[j]) * x[j];
  const S twice = dot * 2.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    S value = x[j] - step.unit[j] * twice;
    x[j] = with_leading ? step.leading_factor * value : value;
  }
}

/// Applies the reflection from the left to rows [row0, row0+m) of the columns
/// [col0, cols) of `m`, where the step has length m.
template <class Mat, class S = typename Mat::Scalar>
void apply_reflection_block(const HouseholderStep<S>& step, Mat& m, Index row0, Index col0,
                            bool with_leading = true, QrOpCount* ops = nullptr) {
  const Index size = static_cast<Index>(step.unit.size());
  for (Index c = col0; c < m.cols(); ++c) {
    S dot = detail::from_real<S>(0.0);
    for (Index j = 0; j < size; ++j) dot += detail::conj_s(step.unit[j]) * m(row0 + j, c);
    const S twice = dot * 2.0;
    for (Index j = 0; j < size; ++j) {
      S value = m(row0 + j, c) - step.unit[j] * twice;
      m(row0 + j, c) = with_leading ? step.leading_factor * value : value;
    }
  }
  if (ops) ops->scalar_ops += static_cast<std::uint64_t>(size) * (m.cols() - col0) * 4u;
}

/// Householder QR of a square full-rank matrix over R, C or H.
///
/// positive_diagonal yields the unique factorization with real, strictly
/// positive diag(R); raw leaves the diagonal phases as the unmodified
/// reflections produce them. Q is assembled explicitly. Exact zeros are
/// written below the diagonal. Throws SingularityError when a pivot column
/// norm falls below n * eps * ||Z||_F.
QrFactors<RealMatrix> qr_decompose(const RealMatrix& z, QrConvention convention,
                                   QrOpCount* ops = nullptr);
QrFactors<ComplexMatrix> qr_decompose(const ComplexMatrix& z, QrConvention convention,
                                      QrOpCount* ops = nullptr);
QrFactors<QuaternionMatrix> qr_decompose(const QuaternionMatrix& z, QrConvention convention,
                                         QrOpCount* ops = nullptr);

/// The Lambda correction: Q' = Q Lambda, R' = Lambda^{-1} R with
/// Lambda = diag(r_jj / |r_jj|). diag(R') becomes real and strictly positive
/// and Q'R' = QR. Throws SingularityError if some r_jj = 0.
QrFactors<RealMatrix> phase_fix(const QrFactors<RealMatrix>& f);
QrFactors<ComplexMatrix> phase_fix(const QrFactors<ComplexMatrix>& f);
QrFactors<QuaternionMatrix> phase_fix(const QrFactors<QuaternionMatrix>& f);

}  // namespace rmgen

#endif  // RMGEN_QR_HPP
