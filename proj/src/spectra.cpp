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

#include "rmgen/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rmgen {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

EigenphaseSet eigenphases(const ComplexMatrix& u) {
  if (u.rows() != u.cols() || u.rows() < 1)
    throw std::invalid_argument("eigenphases: matrix must be square and non-empty");
  const Index n = u.rows();
  const double unitarity =
      (u.adjoint() * u - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (!(unitarity < 1e-8))
    throw std::invalid_argument("eigenphases: input is not unitary (residual " +
                                std::to_string(unitarity) + ")");

  Eigen::ComplexEigenSolver<ComplexMatrix> solver(u, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigenphases: eigensolver failed to converge");

  EigenphaseSet out;
  out.phases.resize(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    const Complex lambda = solver.eigenvalues()(i);
    if (std::abs(std::abs(lambda) - 1.0) > 1e-8)
      throw std::runtime_error("eigenphases: eigenvalue off the unit circle");
    const double residual = (u * solver.eigenvectors().col(i) -
                             lambda * solver.eigenvectors().col(i))
                                .norm();
    out.max_residual = std::max(out.max_residual, residual);
    double theta = std::arg(lambda);
    if (theta < 0.0) theta += kTwoPi;
    if (theta >= kTwoPi) theta -= kTwoPi;  // guards the round-to-2pi corner
    out.phases[static_cast<std::size_t>(i)] = theta;
  }
  std::sort(out.phases.begin(), out.phases.end());
  return out;
}

SpacingSample spacings(const EigenphaseSet& e) {
  const Index n = e.size();
  if (n < 2) throw std::invalid_argument("spacings: need at least two phases");
  SpacingSample out;
  out.s.resize(static_cast<std::size_t>(n));
  const double scale = static_cast<double>(n) / kTwoPi;
  for (Index j = 0; j + 1 < n; ++j)
    out.s[static_cast<std::size_t>(j)] =
        scale * (e.phases[static_cast<std::size_t>(j + 1)] - e.phases[static_cast<std::size_t>(j)]);
  out.s[static_cast<std::size_t>(n - 1)] =
      scale * (e.phases.front() + kTwoPi - e.phases.back());
  return out;
}

HistogramData histogram_range(std::span<const double> values, int bins, double lo, double hi) {
  if (bins < 1) throw std::invalid_argument("histogram: bins must be >= 1");
  if (!(hi > lo)) throw std::invalid_argument("histogram: empty range");
  if (values.empty()) throw std::invalid_argument("histogram: empty input");

  HistogramData h;
  h.bin_edges.resize(static_cast<std::size_t>(bins) + 1);
  const double width = (hi - lo) / bins;
  for (int b = 0; b <= bins; ++b)
    h.bin_edges[static_cast<std::size_t>(b)] = lo + width * b;
  h.counts.assign(static_cast<std::size_t>(bins), 0);

  std::int64_t total = 0;
  for (double v : values) {
    if (v < lo || v >= hi) continue;
    auto b = static_cast<std::size_t>((v - lo) / width);
    if (b >= static_cast<std::size_t>(bins)) b = static_cast<std::size_t>(bins) - 1;
    ++h.counts[b];
    ++total;
  }
  if (total == 0) throw std::invalid_argument("histogram: no values in range");

  h.density.resize(static_cast<std::size_t>(bins));
  for (int b = 0; b < bins; ++b)
    h.density[static_cast<std::size_t>(b)] =
        static_cast<double>(h.counts[static_cast<std::size_t>(b)]) /
        (static_cast<double>(total) * width);
  return h;
}

HistogramData density_histogram(std::span<const double> phases, int bins) {
  return histogram_range(phases, bins, 0.0, kTwoPi);
}

double wigner_surmise(double s, int beta) {
  if (s < 0.0) throw std::invalid_argument("wigner_surmise: s must be >= 0");
  const double pi = std::numbers::pi;
  switch (beta) {
    case 1: return 0.5 * pi * s * std::exp(-0.25 * pi * s * s);
    case 2: return (32.0 / (pi * pi)) * s * s * std::exp(-4.0 * s * s / pi);
    case 4: {
      const double c = 262144.0 / (729.0 * pi * pi * pi);  // 2^18 / 3^6 pi^3
      return c * s * s * s * s * std::exp(-64.0 * s * s / (9.0 * pi));
    }
    default: throw std::invalid_argument("wigner_surmise: beta must be 1, 2 or 4");
  }
}

double kolmogorov_q(double t) {
  if (t <= 0.0) return 1.0;
  if (t < 1.18) {
    // dual theta series, accurate where the alternating series converges slowly
    const double pi = std::numbers::pi;
    const double f = std::exp(-pi * pi / (8.0 * t * t));
    const double p =
        std::sqrt(kTwoPi) / t * (f + std::pow(f, 9.0) + std::pow(f, 25.0) + std::pow(f, 49.0));
    return std::clamp(1.0 - p, 0.0, 1.0);
  }
  double q = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = 2.0 * std::exp(-2.0 * static_cast<double>(k) * k * t * t);
    q += (k % 2 == 1) ? term : -term;
    if (term < 1e-16) break;
  }
  return std::clamp(q, 0.0, 1.0);
}

GofReport ks_test(std::vector<double> sample, const std::function<double(double)>& cdf) {
  if (sample.empty()) throw std::invalid_argument("ks_test: empty sample");
  std::sort(sample.begin(), sample.end());
  const auto n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max(d, std::max(f - static_cast<double>(i) / n,
                             static_cast<double>(i + 1) / n - f));
  }
  GofReport report;
  report.ks_statistic = d;
  report.ks_p_value = kolmogorov_q(std::sqrt(n) * d);
  return report;
}

GofReport ks_test_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("ks_test_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const auto na = static_cast<double>(a.size());
  const auto nb = static_cast<double>(b.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  GofReport report;
  report.ks_statistic = d;
  report.ks_p_value = kolmogorov_q(std::sqrt(na * nb / (na + nb)) * d);
  return report;
}

GofReport chi_square_uniform(const HistogramData& h) {
  const auto bins = h.counts.size();
  if (bins < 2) throw std::invalid_argument("chi_square_uniform: need at least two bins");
  std::int64_t total = 0;
  for (auto c : h.counts) total += c;
  const double expected = static_cast<double>(total) / static_cast<double>(bins);
  if (expected < 5.0)
    throw std::invalid_argument("chi_square_uniform: expected counts below 5 (undersampled)");
  double chi2 = 0.0;
  for (auto c : h.counts) {
    const double diff = static_cast<double>(c) - expected;
    chi2 += diff * diff / expected;
  }
  GofReport report;
  report.chi_square = chi2;
  report.chi_square_dof = static_cast<int>(bins) - 1;
  report.chi_square_p_value = gamma_q(0.5 * static_cast<double>(report.chi_square_dof), 0.5 * chi2);
  return report;
}

EigenphaseSet dedup_kramers(const EigenphaseSet& e, double tol) {
  const auto n = e.phases.size();
  if (n % 2 != 0) throw std::runtime_error("dedup_kramers: odd number of phases");
  const auto& p = e.phases;

  // Degenerate pairs straddling 0/2pi appear at opposite ends of the sorted
  // list; in that case pairing is offset by one with a wrapped last pair.
  const bool wrapped = n >= 2 && (p.front() + kTwoPi - p.back()) <= tol &&
                       (n == 2 || p[1] - p[0] > tol);

  EigenphaseSet out;
  out.max_residual = e.max_residual;
  out.phases.reserve(n / 2);
  const std::size_t start = wrapped ? 1 : 0;
  for (std::size_t i = start; i + 1 < n; i += 2) {
    if (p[i + 1] - p[i] > tol)
      throw std::runtime_error("dedup_kramers: unpaired phase at index " + std::to_string(i));
    out.phases.push_back(0.5 * (p[i] + p[i + 1]));
  }
  if (wrapped) {
    double mean = 0.5 * (p.front() + p.back() + kTwoPi);
    if (mean >= kTwoPi) mean -= kTwoPi;
    out.phases.push_back(mean);
    std::sort(out.phases.begin(), out.phases.end());
  }
  return out;
}

// Regularized incomplete gamma by series / continued fraction, the classical
// split at x = a + 1.
namespace {

double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_cont_fraction(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gamma_q(double a, double x) {
  if (a <= 0.0 || x < 0.0) throw std::invalid_argument("gamma_q: bad arguments");
  if (x == 0.0) return 1.0;
  const double q = (x < a + 1.0) ? 1.0 - gamma_p_series(a, x) : gamma_q_cont_fraction(a, x);
  return std::clamp(q, 0.0, 1.0);
}

}  // namespace rmgen
