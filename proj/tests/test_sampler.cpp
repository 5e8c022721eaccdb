#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "rmgen/checks.hpp"
#include "rmgen/rng.hpp"
#include "rmgen/sampler.hpp"
#include "rmgen/spectra.hpp"

using rmgen::check;
using rmgen::ComplexMatrix;
using rmgen::EnsembleKind;
using rmgen::EnsembleSpec;
using rmgen::MatrixProperty;
using rmgen::RealMatrix;
using rmgen::RngStream;
using rmgen::SamplerAlgorithm;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

TEST_CASE("ensemble spec validation") {
  EnsembleSpec bad{EnsembleKind::cue, 0, 1, SamplerAlgorithm::qr};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

  EnsembleSpec mismatch{EnsembleKind::coe, 4, 1, SamplerAlgorithm::householder_product};
  CHECK_THROWS_AS(mismatch.validate(), std::invalid_argument);

  EnsembleSpec ok{EnsembleKind::orthogonal, 4, 1, SamplerAlgorithm::householder_product};
  CHECK_NOTHROW(ok.validate());

  CHECK(EnsembleSpec{EnsembleKind::cse, 3, 0, SamplerAlgorithm::qr}.output_dim() == 6);
  CHECK(EnsembleSpec{EnsembleKind::usp, 5, 0, SamplerAlgorithm::qr}.output_dim() == 10);
  CHECK(EnsembleSpec{EnsembleKind::cue, 7, 0, SamplerAlgorithm::qr}.output_dim() == 7);
}

TEST_CASE("ensemble and algorithm names round-trip") {
  for (auto kind :
       {EnsembleKind::cue, EnsembleKind::coe, EnsembleKind::cse, EnsembleKind::orthogonal,
        EnsembleKind::usp, EnsembleKind::sp_quaternion, EnsembleKind::ginibre_real,
        EnsembleKind::ginibre_complex, EnsembleKind::ginibre_quaternion, EnsembleKind::cue_wrong})
    CHECK(rmgen::ensemble_from_string(rmgen::to_string(kind)) == kind);
  CHECK(rmgen::algorithm_from_string("householder") == SamplerAlgorithm::householder_product);
  CHECK_THROWS_AS(rmgen::ensemble_from_string("gue"), std::invalid_argument);
}

TEST_CASE("sample_ensemble is deterministic in (seed, index)") {
  const EnsembleSpec spec{EnsembleKind::cue, 6, 42, SamplerAlgorithm::qr};
  const auto a = std::get<ComplexMatrix>(rmgen::sample_ensemble(spec, 3));
  const auto b = std::get<ComplexMatrix>(rmgen::sample_ensemble(spec, 3));
  const auto c = std::get<ComplexMatrix>(rmgen::sample_ensemble(spec, 4));
  CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
  CHECK((a - c).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("haar unitary samples are unitary to 1e-12") {
  RngStream rng(51);
  for (int n : {1, 2, 20, 64}) {
    const auto u = rmgen::sample_haar_unitary(n, rng);
    CHECK(check(u, MatrixProperty::unitarity, 1e-12).pass);
  }
}

TEST_CASE("u(1) eigenphases are uniform") {
  RngStream rng(52);
  const int samples = 100000;
  std::vector<double> unit(samples);
  for (int i = 0; i < samples; ++i) {
    const auto u = rmgen::sample_haar_unitary(1, rng);
    double theta = std::arg(u(0, 0));
    if (theta < 0) theta += kTwoPi;
    unit[i] = theta / kTwoPi;
  }
  const auto gof = rmgen::ks_test(unit, [](double x) { return x; });
  CHECK(gof.ks_p_value > 1e-3);
}

TEST_CASE("o(1) is a fair coin") {
  RngStream rng(53);
  const int samples = 10000;
  int plus = 0;
  for (int i = 0; i < samples; ++i) {
    const auto o = rmgen::sample_haar_orthogonal(1, rng);
    CHECK(std::abs(std::abs(o(0, 0)) - 1.0) <= 1e-14);
    if (o(0, 0) > 0) ++plus;
  }
  CHECK(std::abs(plus / static_cast<double>(samples) - 0.5) <= 0.015);  // 3 sigma
}

TEST_CASE("orthogonal samples: residual and balanced determinant") {
  RngStream rng(54);
  int det_plus = 0;
  const int samples = 10000;
  for (int i = 0; i < samples; ++i) {
    const auto o = rmgen::sample_haar_orthogonal(6, rng);
    if (i < 50) CHECK(check(o, MatrixProperty::orthogonality, 1e-12).pass);
    if (o.determinant() > 0) ++det_plus;
  }
  CHECK(std::abs(det_plus / static_cast<double>(samples) - 0.5) <= 0.015);
}

TEST_CASE("householder product sampler matches the qr sampler on tr(O)") {
  RngStream rng_a(55), rng_b(56);
  const int samples = 800, n = 10;
  std::vector<double> tr_qr(samples), tr_hh(samples);
  for (int i = 0; i < samples; ++i) {
    tr_qr[i] = rmgen::sample_haar_orthogonal(n, rng_a).trace();
    tr_hh[i] = rmgen::sample_orthogonal_householder_product(n, rng_b).trace();
  }
  CHECK(rmgen::ks_test_two_sample(tr_qr, tr_hh).ks_p_value > 1e-3);
}

TEST_CASE("householder product factors: orthogonality and the 1x1 corner") {
  RngStream rng(57);
  const auto o = rmgen::sample_orthogonal_householder_product(20, rng);
  CHECK(check(o, MatrixProperty::orthogonality, 1e-12).pass);

  // n = 1: the product reduces to the single reflection H_1 = +-1
  int plus = 0;
  for (int i = 0; i < 2000; ++i) {
    const auto h1 = rmgen::sample_orthogonal_householder_product(1, rng);
    CHECK(std::abs(std::abs(h1(0, 0)) - 1.0) <= 1e-14);
    if (h1(0, 0) > 0) ++plus;
  }
  CHECK(std::abs(plus / 2000.0 - 0.5) <= 3.0 * std::sqrt(0.25 / 2000.0));
}

TEST_CASE("complex householder product sampler is unitary and matches qr on Re tr") {
  RngStream rng_a(58), rng_b(59);
  const auto u = rmgen::sample_unitary_householder_product(12, rng_a);
  CHECK(check(u, MatrixProperty::unitarity, 1e-12).pass);

  const int samples = 800, n = 10;
  std::vector<double> tr_qr(samples), tr_hh(samples);
  for (int i = 0; i < samples; ++i) {
    tr_qr[i] = rmgen::sample_haar_unitary(n, rng_a).trace().real();
    tr_hh[i] = rmgen::sample_unitary_householder_product(n, rng_b).trace().real();
  }
  CHECK(rmgen::ks_test_two_sample(tr_qr, tr_hh).ks_p_value > 1e-3);
}

TEST_CASE("sp(n) samples: quaternion unitarity via the embedding") {
  RngStream rng(60);
  const auto s = rmgen::sample_haar_sp_quaternion(5, rng);
  const auto e = embed_matrix(s);
  CHECK(check(e, MatrixProperty::unitarity, 1e-10).pass);
  CHECK(check(e, MatrixProperty::symplectic_omega, 1e-10).pass);

  const auto s1 = rmgen::sample_haar_sp_quaternion(1, rng);
  CHECK(std::abs(s1(0, 0).norm() - 1.0) <= 1e-12);
}

TEST_CASE("usp samples satisfy S J S^t = J in the block basis") {
  RngStream rng(61);
  const auto s = rmgen::sample_haar_usp(5, rng);
  CHECK(s.rows() == 10);
  CHECK(check(s, MatrixProperty::unitarity, 1e-10).pass);
  CHECK(check(s, MatrixProperty::symplectic_j, 1e-10).pass);

  // eigenphases pair as {theta, 2pi - theta}
  const auto phases = rmgen::eigenphases(s).phases;
  for (std::size_t i = 0; i < phases.size() / 2; ++i) {
    const double sum = phases[i] + phases[phases.size() - 1 - i];
    CHECK(std::abs(sum - kTwoPi) < 1e-8);
  }

  const auto s2 = rmgen::sample_haar_usp(1, rng);
  CHECK(s2.rows() == 2);
  CHECK(std::abs(s2.determinant() - 1.0) < 1e-12);  // USp(2) = SU(2)
}

TEST_CASE("the perfect shuffle carries Omega to J") {
  const int n = 4;
  const auto omega = rmgen::symplectic_form_omega(n);
  const auto j = rmgen::symplectic_form_j(n);
  const auto to_omega = [n](int a) { return a < n ? 2 * a : 2 * (a - n) + 1; };
  for (int a = 0; a < 2 * n; ++a)
    for (int b = 0; b < 2 * n; ++b)
      CHECK(j(a, b) == omega(to_omega(a), to_omega(b)));
}

TEST_CASE("coe samples are symmetric unitary; conjugation invariance of tr") {
  RngStream rng(62);
  const auto u = rmgen::sample_coe(20, rng);
  CHECK(check(u, MatrixProperty::symmetry, 1e-12).pass);
  CHECK(check(u, MatrixProperty::unitarity, 1e-12).pass);

  const int samples = 2000, n = 8;
  const auto o = rmgen::sample_haar_orthogonal(n, rng);
  std::vector<double> plain(samples), conjugated(samples);
  for (int i = 0; i < samples; ++i) {
    plain[i] = rmgen::sample_coe(n, rng).trace().real();
    const ComplexMatrix v = rmgen::sample_coe(n, rng);
    conjugated[i] = (o.transpose().cast<rmgen::Complex>() * v * o.cast<rmgen::Complex>())
                        .trace()
                        .real();
  }
  CHECK(rmgen::ks_test_two_sample(plain, conjugated).ks_p_value > 1e-3);
}

TEST_CASE("cse samples: self-dual, unitary, doubly degenerate") {
  RngStream rng(63);
  const auto u = rmgen::sample_cse(10, rng);
  CHECK(u.rows() == 20);
  CHECK(check(u, MatrixProperty::self_duality, 1e-12).pass);
  CHECK(check(u, MatrixProperty::unitarity, 1e-12).pass);

  const auto phases = rmgen::eigenphases(u);
  const auto dedup = rmgen::dedup_kramers(phases, 1e-8);
  CHECK(dedup.size() == 10);
}

TEST_CASE("cue_wrong is unitary but visibly non-haar") {
  RngStream rng(64);
  const auto u = rmgen::sample_cue_wrong(20, rng);
  CHECK(check(u, MatrixProperty::unitarity, 1e-12).pass);

  // smoke-scale density test: chi^2 against uniform must reject hard
  std::vector<double> phases;
  for (int i = 0; i < 500; ++i) {
    const auto sample = rmgen::sample_cue_wrong(20, rng);
    for (double theta : rmgen::eigenphases(sample).phases) phases.push_back(theta);
  }
  const auto h = rmgen::density_histogram(phases, 60);
  const auto gof = rmgen::chi_square_uniform(h);
  CHECK(gof.chi_square_p_value < 1e-4);

  // the correct sampler at the same scale accepts
  std::vector<double> good;
  for (int i = 0; i < 500; ++i) {
    const auto sample = rmgen::sample_haar_unitary(20, rng);
    for (double theta : rmgen::eigenphases(sample).phases) good.push_back(theta);
  }
  CHECK(rmgen::chi_square_uniform(rmgen::density_histogram(good, 60)).chi_square_p_value > 1e-3);
}

TEST_CASE("sphere samples: unit norm, fair sign at m=1, archimedes at m=3") {
  RngStream rng(65);
  for (int m : {1, 2, 7}) {
    const auto v = rmgen::sample_sphere(m, rng);
    CHECK(std::abs(v.norm() - 1.0) <= 1e-12);
  }

  int plus = 0;
  const int flips = 10000;
  for (int i = 0; i < flips; ++i)
    if (rmgen::sample_sphere(1, rng)(0) > 0) ++plus;
  CHECK(std::abs(plus / static_cast<double>(flips) - 0.5) <= 0.015);

  const int samples = 100000;
  std::vector<double> first(samples);
  double mean_x = 0, mean_y = 0, mean_z = 0;
  for (int i = 0; i < samples; ++i) {
    const auto v = rmgen::sample_sphere(3, rng);
    first[i] = 0.5 * (v(0) + 1.0);  // uniform on [0,1] iff v0 uniform on [-1,1]
    mean_x += v(0);
    mean_y += v(1);
    mean_z += v(2);
  }
  const double three_sigma = 3.0 * std::sqrt(1.0 / 3.0 / samples);
  CHECK(std::abs(mean_x / samples) <= three_sigma);
  CHECK(std::abs(mean_y / samples) <= three_sigma);
  CHECK(std::abs(mean_z / samples) <= three_sigma);
  CHECK(rmgen::ks_test(first, [](double x) { return x; }).ks_p_value > 1e-3);
}

TEST_CASE("permutations: identity at n=1, bijection, uniform at n=3") {
  RngStream rng(66);
  CHECK(rmgen::sample_permutation(1, rng) == std::vector<rmgen::Index>{0});

  auto perm = rmgen::sample_permutation(17, rng);
  std::sort(perm.begin(), perm.end());
  for (int i = 0; i < 17; ++i) CHECK(perm[i] == i);

  std::map<std::vector<rmgen::Index>, int> freq;
  const int draws = 60000;
  for (int i = 0; i < draws; ++i) ++freq[rmgen::sample_permutation(3, rng)];
  CHECK(freq.size() == 6);
  const double three_sigma = 3.0 * std::sqrt((1.0 / 6) * (5.0 / 6) / draws);
  for (const auto& [p, count] : freq)
    CHECK(std::abs(count / static_cast<double>(draws) - 1.0 / 6) <= three_sigma);
}

TEST_CASE("ginibre ensembles pass through sample_ensemble") {
  const EnsembleSpec spec{EnsembleKind::ginibre_quaternion, 3, 9, SamplerAlgorithm::qr};
  const auto q = std::get<rmgen::QuaternionMatrix>(rmgen::sample_ensemble(spec, 0));
  CHECK(q.rows() == 3);

  const EnsembleSpec specr{EnsembleKind::ginibre_real, 4, 9, SamplerAlgorithm::qr};
  CHECK(std::get<RealMatrix>(rmgen::sample_ensemble(specr, 0)).rows() == 4);
}
