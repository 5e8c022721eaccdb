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

#ifndef RMGEN_SAMPLER_HPP
#define RMGEN_SAMPLER_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "rmgen/matrix.hpp"
#include "rmgen/quaternion.hpp"
#include "rmgen/rng.hpp"

namespace rmgen {

enum class EnsembleKind {
  cue,
  coe,
  cse,
  orthogonal,
  usp,
  sp_quaternion,
  ginibre_real,
  ginibre_complex,
  ginibre_quaternion,
  cue_wrong,
};

enum class SamplerAlgorithm { qr, householder_product };

std::string to_string(EnsembleKind kind);
std::string to_string(SamplerAlgorithm algorithm);
EnsembleKind ensemble_from_string(const std::string& name);
SamplerAlgorithm algorithm_from_string(const std::string& name);

/// Ensemble kind + dimension + seed + sampler choice; the unit of
/// reproducibility. For cse/usp, n is N and the output is 2N x 2N.
struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::cue;
  Index n = 1;
  std::uint64_t seed = 0;
  SamplerAlgorithm algorithm = SamplerAlgorithm::qr;

  /// Throws std::invalid_argument on n < 1 or an algorithm/ensemble mismatch
  /// (householder_product is defined for orthogonal and cue only).
  void validate() const;
  /// Edge length of the emitted matrix (2n for cse/usp, else n).
  Index output_dim() const;
};

using SampleValue = std::variant<RealMatrix, ComplexMatrix, QuaternionMatrix>;

/// Draws sample `index` of the ensemble. Each index owns the RNG stream
/// (seed, index), so batches are reproducible and order-independent.
SampleValue sample_ensemble(const EnsembleSpec& spec, std::uint64_t index);

// --- individual samplers -------------------------------------------------

/// Haar-distributed U(n) via complex Ginibre + positive-diagonal QR.
ComplexMatrix sample_haar_unitary(Index n, RngStream& rng);

/// Haar-distributed U(n) as a product of complex Householder reflections on
/// uniformly random unit vectors of C^m, m = 1..n.
ComplexMatrix sample_unitary_householder_product(Index n, RngStream& rng);

/// Haar-distributed O(n); algorithm selects QR or the reflection product.
RealMatrix sample_haar_orthogonal(Index n, RngStream& rng,
                                  SamplerAlgorithm algorithm = SamplerAlgorithm::qr);

/// Product of real Householder reflections on uniform sphere vectors,
/// O = H_n(v_n) H_{n-1}(v_{n-1}) ... H_1(v_1).
RealMatrix sample_orthogonal_householder_product(Index n, RngStream& rng);

/// Haar-distributed Sp(n) over the quaternions (quaternion Ginibre + QR).
QuaternionMatrix sample_haar_sp_quaternion(Index n, RngStream& rng);

/// Haar-distributed USp(2n) in the J-block basis: complex embedding of an
/// Sp(n) sample, perfect-shuffled from the interleaved Omega form.
ComplexMatrix sample_haar_usp(Index n, RngStream& rng);

/// COE: U = W W^t with W Haar in U(n); symmetric unitary.
ComplexMatrix sample_coe(Index n, RngStream& rng);

/// CSE: U = -W J W^t J with W Haar in U(2n); self-dual unitary, 2n x 2n,
/// doubly degenerate spectrum.
ComplexMatrix sample_cse(Index n, RngStream& rng);

/// Unitary but deliberately not Haar: raw-convention QR with no phase fix.
ComplexMatrix sample_cue_wrong(Index n, RngStream& rng);

/// Uniform unit vector in R^m (normalized Gaussian).
RealVector sample_sphere(Index m, RngStream& rng);

/// Uniform permutation of {0..n-1} by the subgroup algorithm: at step m the
/// coset representative is a transposition with a uniform target in {0..m-1}.
/// Element i maps to perm[i].
std::vector<Index> sample_permutation(Index n, RngStream& rng);

// --- symplectic forms -----------------------------------------------------

/// J = [[0, I_n], [-I_n, 0]], size 2n.
ComplexMatrix symplectic_form_j(Index n);
/// Omega = I_n (x) e2, the interleaved form, size 2n.
ComplexMatrix symplectic_form_omega(Index n);

}  // namespace rmgen

#endif  // RMGEN_SAMPLER_HPP
