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

#ifndef RMGEN_CHECKS_HPP
#define RMGEN_CHECKS_HPP

#include <string>

#include "rmgen/matrix.hpp"

namespace rmgen {

enum class MatrixProperty {
  unitarity,         // ||U*U - I||_max
  orthogonality,     // ||O^t O - I||_max (real matrices)
  symplectic_j,      // ||S J S^t - J||_max
  symplectic_omega,  // ||S Omega S^t - Omega||_max
  symmetry,          // ||U - U^t||_max
  self_duality,      // ||U + J U^t J||_max
  determinant_modulus,  // | |det U| - 1 |
};

std::string to_string(MatrixProperty property);
MatrixProperty property_from_string(const std::string& name);

/// Max-norm residual of the property's defining identity; pass iff
/// residual <= tolerance. Residual is exactly 0 for exact witnesses.
struct ResidualReport {
  MatrixProperty property;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Throws std::invalid_argument on a dimension mismatch with the property
/// (symplectic/self-dual need even dimension) or a property that does not
/// apply to the scalar field.
ResidualReport check(const ComplexMatrix& m, MatrixProperty property, double tolerance);
ResidualReport check(const RealMatrix& m, MatrixProperty property, double tolerance);

}  // namespace rmgen

#endif  // RMGEN_CHECKS_HPP
