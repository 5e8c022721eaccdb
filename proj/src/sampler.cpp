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

#include "rmgen/sampler.hpp"

#include <numeric>
#include <stdexcept>

#include "rmgen/qr.hpp"

namespace rmgen {

std::string to_string(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::cue: return "cue";
    case EnsembleKind::coe: return "coe";
    case EnsembleKind::cse: return "cse";
    case EnsembleKind::orthogonal: return "orthogonal";
    case EnsembleKind::usp: return "usp";
    case EnsembleKind::sp_quaternion: return "sp_quaternion";
    case EnsembleKind::ginibre_real: return "ginibre_real";
    case EnsembleKind::ginibre_complex: return "ginibre_complex";
    case EnsembleKind::ginibre_quaternion: return "ginibre_quaternion";
    case EnsembleKind::cue_wrong: return "cue_wrong";
  }
  throw std::logic_error("unknown ensemble kind");
}

std::string to_string(SamplerAlgorithm algorithm) {
  return algorithm == SamplerAlgorithm::qr ? "qr" : "householder_product";
}

EnsembleKind ensemble_from_string(const std::string& name) {
  if (name == "cue") return EnsembleKind::cue;
  if (name == "coe") return EnsembleKind::coe;
  if (name == "cse") return EnsembleKind::cse;
  if (name == "orthogonal") return EnsembleKind::orthogonal;
  if (name == "usp") return EnsembleKind::usp;
  if (name == "sp_quaternion") return EnsembleKind::sp_quaternion;
  if (name == "ginibre_real") return EnsembleKind::ginibre_real;
  if (name == "ginibre_complex") return EnsembleKind::ginibre_complex;
  if (name == "ginibre_quaternion") return EnsembleKind::ginibre_quaternion;
  if (name == "cue_wrong") return EnsembleKind::cue_wrong;
  throw std::invalid_argument("unknown ensemble: " + name);
}

SamplerAlgorithm algorithm_from_string(const std::string& name) {
  if (name == "qr") return SamplerAlgorithm::qr;
  if (name == "householder" || name == "householder_product")
    return SamplerAlgorithm::householder_product;
  throw std::invalid_argument("unknown algorithm: " + name);
}

void EnsembleSpec::validate() const {
  if (n < 1) throw std::invalid_argument("EnsembleSpec: dimension must be >= 1");
  if (algorithm == SamplerAlgorithm::householder_product && kind != EnsembleKind::orthogonal &&
      kind != EnsembleKind::cue)
    throw std::invalid_argument(
        "EnsembleSpec: householder_product is only defined for orthogonal and cue");
}

Index EnsembleSpec::output_dim() const {
  return (kind == EnsembleKind::cse || kind == EnsembleKind::usp) ? 2 * n : n;
}

namespace {

// Singular Ginibre draws are a measure-zero event; redraw to keep the
// samplers total.
template <class MakeGinibre>
auto qr_haar(Index n, RngStream& rng, QrConvention convention, MakeGinibre make) {
  for (;;) {
    auto z = make(n, rng);
    try {
      return qr_decompose(z, convention).q;
    } catch (const SingularityError&) {
      continue;
    }
  }
}

template <class Mat, class Draw>
Mat householder_product_impl(Index n, RngStream& rng, Draw draw_unit) {
  using S = typename Mat::Scalar;
  if (n < 1) throw std::invalid_argument("householder product: dimension must be >= 1");
  Mat o = Mat::Identity(n, n);
  std::vector<S> v;
  for (Index m = 1; m <= n; ++m) {
    v.resize(static_cast<std::size_t>(m));
    draw_unit(v, rng);
    const auto step = householder_step<S>(v);
    apply_reflection_block(step, o, n - m, 0, true);
  }
  return o;
}

}  // namespace

ComplexMatrix sample_haar_unitary(Index n, RngStream& rng) {
  return qr_haar(n, rng, QrConvention::positive_diagonal, ginibre_complex);
}

ComplexMatrix sample_cue_wrong(Index n, RngStream& rng) {
  return qr_haar(n, rng, QrConvention::raw, ginibre_complex);
}

ComplexMatrix sample_unitary_householder_product(Index n, RngStream& rng) {
  return householder_product_impl<ComplexMatrix>(n, rng, [](std::vector<Complex>& v, RngStream& r) {
    for (;;) {
      double norm_sq = 0.0;
      for (auto& x : v) {
        x = r.normal_complex();
        norm_sq += std::norm(x);
      }
      if (norm_sq == 0.0) continue;
      const double inv = 1.0 / std::sqrt(norm_sq);
      for (auto& x : v) x *= inv;
      return;
    }
  });
}

RealMatrix sample_orthogonal_householder_product(Index n, RngStream& rng) {
  return householder_product_impl<RealMatrix>(n, rng, [](std::vector<double>& v, RngStream& r) {
    const RealVector unit = sample_sphere(static_cast<Index>(v.size()), r);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = unit[static_cast<Index>(j)];
  });
}

RealMatrix sample_haar_orthogonal(Index n, RngStream& rng, SamplerAlgorithm algorithm) {
  if (algorithm == SamplerAlgorithm::householder_product)
    return sample_orthogonal_householder_product(n, rng);
  return qr_haar(n, rng, QrConvention::positive_diagonal, ginibre_real);
}

QuaternionMatrix sample_haar_sp_quaternion(Index n, RngStream& rng) {
  return qr_haar(n, rng, QrConvention::positive_diagonal, ginibre_quaternion);
}

ComplexMatrix sample_haar_usp(Index n, RngStream& rng) {
  const ComplexMatrix omega_form = embed_matrix(sample_haar_sp_quaternion(n, rng));
  // Perfect shuffle from the interleaved Omega basis to the J-block basis:
  // J-index j <-> Omega-index 2j, and n+j <-> 2j+1.
  const auto to_omega = [n](Index j) { return j < n ? 2 * j : 2 * (j - n) + 1; };
  ComplexMatrix out(2 * n, 2 * n);
  for (Index a = 0; a < 2 * n; ++a)
    for (Index b = 0; b < 2 * n; ++b) out(a, b) = omega_form(to_omega(a), to_omega(b));
  return out;
}

ComplexMatrix sample_coe(Index n, RngStream& rng) {
  const ComplexMatrix w = sample_haar_unitary(n, rng);
  return w * w.transpose();
}

ComplexMatrix sample_cse(Index n, RngStream& rng) {
  const ComplexMatrix w = sample_haar_unitary(2 * n, rng);
  const ComplexMatrix j = symplectic_form_j(n);
  return -(w * j * w.transpose() * j);
}

RealVector sample_sphere(Index m, RngStream& rng) {
  if (m < 1) throw std::invalid_argument("sample_sphere: dimension must be >= 1");
  RealVector v(m);
  for (;;) {
    for (Index i = 0; i < m; ++i) v[i] = rng.normal_real();
    const double norm = v.norm();
    if (norm > 0.0) return v / norm;
  }
}

std::vector<Index> sample_permutation(Index n, RngStream& rng) {
  if (n < 1) throw std::invalid_argument("sample_permutation: n must be >= 1");
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Index{0});
  for (Index m = 2; m <= n; ++m) {
    const auto j = static_cast<Index>(rng.uniform_below(static_cast<std::uint64_t>(m)));
    std::swap(perm[static_cast<std::size_t>(m - 1)], perm[static_cast<std::size_t>(j)]);
  }
  return perm;
}

ComplexMatrix symplectic_form_j(Index n) {
  ComplexMatrix j = ComplexMatrix::Zero(2 * n, 2 * n);
  for (Index k = 0; k < n; ++k) {
    j(k, n + k) = 1.0;
    j(n + k, k) = -1.0;
  }
  return j;
}

ComplexMatrix symplectic_form_omega(Index n) {
  ComplexMatrix omega = ComplexMatrix::Zero(2 * n, 2 * n);
  for (Index k = 0; k < n; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

SampleValue sample_ensemble(const EnsembleSpec& spec, std::uint64_t index) {
  spec.validate();
  RngStream rng(spec.seed, index);
  switch (spec.kind) {
    case EnsembleKind::cue:
      return spec.algorithm == SamplerAlgorithm::householder_product
                 ? sample_unitary_householder_product(spec.n, rng)
                 : sample_haar_unitary(spec.n, rng);
    case EnsembleKind::coe: return sample_coe(spec.n, rng);
    case EnsembleKind::cse: return sample_cse(spec.n, rng);
    case EnsembleKind::orthogonal: return sample_haar_orthogonal(spec.n, rng, spec.algorithm);
    case EnsembleKind::usp: return sample_haar_usp(spec.n, rng);
    case EnsembleKind::sp_quaternion: return sample_haar_sp_quaternion(spec.n, rng);
    case EnsembleKind::ginibre_real: return ginibre_real(spec.n, rng);
    case EnsembleKind::ginibre_complex: return ginibre_complex(spec.n, rng);
    case EnsembleKind::ginibre_quaternion: return ginibre_quaternion(spec.n, rng);
    case EnsembleKind::cue_wrong: return sample_cue_wrong(spec.n, rng);
  }
  throw std::logic_error("unknown ensemble kind");
}

}  // namespace rmgen
