#include <cmath>
#include <complex>

#include "doctest.h"
#include "rmgen/quaternion.hpp"
#include "rmgen/rng.hpp"

using rmgen::Quaternion;
using rmgen::QuaternionMatrix;

namespace {
const std::complex<double> kI(0.0, 1.0);

template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}
}  // namespace

TEST_CASE("quaternion unit algebra") {
  CHECK(Quaternion::i1() * Quaternion::i2() == Quaternion::i3());
  CHECK(Quaternion::i2() * Quaternion::i1() == -Quaternion::i3());
  CHECK(Quaternion::i1() * Quaternion::i1() == -Quaternion::one());
  CHECK(Quaternion::i1() * Quaternion::i2() * Quaternion::i3() == -Quaternion::one());

  const Quaternion q{0.5, -1.25, 2.0, 3.5};
  CHECK(Quaternion::one() * q == q);
  const Quaternion qqbar = q * conj(q);
  CHECK(qqbar.a == doctest::Approx(q.norm_sq()).epsilon(1e-15));
  CHECK(qqbar.b == 0.0);
  CHECK(qqbar.c == 0.0);
  CHECK(qqbar.d == 0.0);
  CHECK(conj(conj(q)) == q);
}

TEST_CASE("norm is multiplicative on random pairs") {
  rmgen::RngStream rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Quaternion p = rng.normal_quaternion();
    const Quaternion q = rng.normal_quaternion();
    CHECK(std::abs((p * q).norm() - p.norm() * q.norm()) <= 1e-12 * (1.0 + p.norm() * q.norm()));
  }
}

TEST_CASE("scalar embedding hits the defining 2x2 matrices") {
  CHECK(max_abs(embed_scalar(Quaternion::one()) - Eigen::Matrix2cd::Identity()) == 0.0);

  Eigen::Matrix2cd e1, e2, e3;
  e1 << kI, 0.0, 0.0, -kI;
  e2 << 0.0, 1.0, -1.0, 0.0;
  e3 << 0.0, kI, kI, 0.0;
  CHECK(max_abs(embed_scalar(Quaternion::i1()) - e1) == 0.0);
  CHECK(max_abs(embed_scalar(Quaternion::i2()) - e2) == 0.0);
  CHECK(max_abs(embed_scalar(Quaternion::i3()) - e3) == 0.0);

  rmgen::RngStream rng(12);
  const Quaternion q = rng.normal_quaternion();
  CHECK(max_abs(embed_scalar(conj(q)) - embed_scalar(q).adjoint()) == 0.0);
}

TEST_CASE("matrix embedding: identity, units, homomorphism") {
  CHECK(max_abs(embed_matrix(QuaternionMatrix::Identity(2, 2)) - Eigen::MatrixXcd::Identity(4, 4)) ==
        0.0);

  QuaternionMatrix d(1);
  d(0, 0) = Quaternion::i2();
  Eigen::MatrixXcd e2(2, 2);
  e2 << 0.0, 1.0, -1.0, 0.0;
  CHECK(max_abs(embed_matrix(d) - e2) == 0.0);

  rmgen::RngStream rng(13);
  const auto p = rmgen::ginibre_quaternion(3, rng);
  const auto q = rmgen::ginibre_quaternion(3, rng);
  CHECK(max_abs(embed_matrix(qm_mul(p, q)) - embed_matrix(p) * embed_matrix(q)) < 1e-12);

  const auto a = rmgen::ginibre_quaternion(4, rng);
  const auto b = rmgen::ginibre_quaternion(4, rng);
  CHECK(max_abs(embed_matrix(qm_mul(a, b)) - embed_matrix(a) * embed_matrix(b)) < 1e-12);
  CHECK(max_abs(embed_matrix(a.adjoint()) - embed_matrix(a).adjoint()) == 0.0);
}

TEST_CASE("quaternion matrix product basics") {
  rmgen::RngStream rng(14);
  const auto p = rmgen::ginibre_quaternion(3, rng);
  const auto product = qm_mul(p, QuaternionMatrix::Identity(3, 3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(product(i, j) == p(i, j));

  // n = 1 reduces to the scalar Hamilton product
  QuaternionMatrix x(1), y(1);
  x(0, 0) = rng.normal_quaternion();
  y(0, 0) = rng.normal_quaternion();
  CHECK(qm_mul(x, y)(0, 0) == x(0, 0) * y(0, 0));

  QuaternionMatrix two(2);
  CHECK_THROWS_AS(qm_mul(x, two), std::invalid_argument);
}

TEST_CASE("conjugate transpose is an involution and matches the embedding") {
  rmgen::RngStream rng(15);
  const auto q = rmgen::ginibre_quaternion(4, rng);
  const auto qcc = q.adjoint().adjoint();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(qcc(i, j) == q(i, j));

  QuaternionMatrix d(2);
  d(0, 0) = Quaternion::i3();
  d(1, 1) = Quaternion::i3();
  const auto dstar = d.adjoint();
  CHECK(dstar(0, 0) == -Quaternion::i3());
  CHECK(dstar(1, 1) == -Quaternion::i3());
}

TEST_CASE("embedding of i2 * identity is Omega = I (x) e2") {
  const int n = 3;
  QuaternionMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = Quaternion::i2();
  Eigen::MatrixXcd omega = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  CHECK(max_abs(embed_matrix(m) - omega) == 0.0);
}
