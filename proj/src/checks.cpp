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

#include "rmgen/checks.hpp"

#include <cmath>
#include <stdexcept>

#include "rmgen/sampler.hpp"

namespace rmgen {

std::string to_string(MatrixProperty property) {
  switch (property) {
    case MatrixProperty::unitarity: return "unitarity";
    case MatrixProperty::orthogonality: return "orthogonality";
    case MatrixProperty::symplectic_j: return "symplectic_J";
    case MatrixProperty::symplectic_omega: return "symplectic_Omega";
    case MatrixProperty::symmetry: return "symmetry";
    case MatrixProperty::self_duality: return "self_duality";
    case MatrixProperty::determinant_modulus: return "determinant_modulus";
  }
  throw std::logic_error("unknown matrix property");
}

MatrixProperty property_from_string(const std::string& name) {
  if (name == "unitarity") return MatrixProperty::unitarity;
  if (name == "orthogonality") return MatrixProperty::orthogonality;
  if (name == "symplectic_J") return MatrixProperty::symplectic_j;
  if (name == "symplectic_Omega") return MatrixProperty::symplectic_omega;
  if (name == "symmetry") return MatrixProperty::symmetry;
  if (name == "self_duality") return MatrixProperty::self_duality;
  if (name == "determinant_modulus") return MatrixProperty::determinant_modulus;
  throw std::invalid_argument("unknown matrix property: " + name);
}

namespace {

void require_even(const ComplexMatrix& m, const char* what) {
  if (m.rows() % 2 != 0)
    throw std::invalid_argument(std::string(what) + ": matrix dimension must be even");
}

double residual_of(const ComplexMatrix& m, MatrixProperty property) {
  const Index n = m.rows();
  switch (property) {
    case MatrixProperty::unitarity:
      return (m.adjoint() * m - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
    case MatrixProperty::orthogonality: {
      const double realness = m.imag().cwiseAbs().maxCoeff();
      const double ortho =
          (m.transpose() * m - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
      return std::max(realness, ortho);
    }
    case MatrixProperty::symplectic_j: {
      require_even(m, "symplectic_J");
      const ComplexMatrix j = symplectic_form_j(n / 2);
      return (m * j * m.transpose() - j).cwiseAbs().maxCoeff();
    }
    case MatrixProperty::symplectic_omega: {
      require_even(m, "symplectic_Omega");
      const ComplexMatrix omega = symplectic_form_omega(n / 2);
      return (m * omega * m.transpose() - omega).cwiseAbs().maxCoeff();
    }
    case MatrixProperty::symmetry:
      return (m - m.transpose()).cwiseAbs().maxCoeff();
    case MatrixProperty::self_duality: {
      require_even(m, "self_duality");
      const ComplexMatrix j = symplectic_form_j(n / 2);
      return (m + j * m.transpose() * j).cwiseAbs().maxCoeff();
    }
    case MatrixProperty::determinant_modulus:
      return std::abs(std::abs(m.determinant()) - 1.0);
  }
  throw std::logic_error("unknown matrix property");
}

}  // namespace

ResidualReport check(const ComplexMatrix& m, MatrixProperty property, double tolerance) {
  if (m.rows() != m.cols() || m.rows() < 1)
    throw std::invalid_argument("check: matrix must be square and non-empty");
  ResidualReport report;
  report.property = property;
  report.tolerance = tolerance;
  report.residual = residual_of(m, property);
  report.pass = report.residual <= tolerance;
  return report;
}

ResidualReport check(const RealMatrix& m, MatrixProperty property, double tolerance) {
  return check(ComplexMatrix(m.cast<Complex>()), property, tolerance);
}

}  // namespace rmgen
