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

#ifndef RMGEN_SPECTRA_HPP
#define RMGEN_SPECTRA_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "rmgen/matrix.hpp"

namespace rmgen {

/// Sorted eigenphases theta in [0, 2pi) of a unitary matrix, plus the largest
/// eigenpair residual ||U v - lambda v|| seen while computing them.
struct EigenphaseSet {
  std::vector<double> phases;
  double max_residual = 0.0;

  Index size() const { return static_cast<Index>(phases.size()); }
};

/// Normalized spacings s_j = n/(2pi) (theta_{j+1} - theta_j), including the
/// wrap-around gap theta_1 + 2pi - theta_n, so the mean is exactly 1.
struct SpacingSample {
  std::vector<double> s;
};

struct HistogramData {
  std::vector<double> bin_edges;  // bins+1 monotone edges
  std::vector<std::int64_t> counts;
  std::vector<double> density;  // normalized so the histogram integrates to 1
};

/// Goodness-of-fit results; the KS and chi-square halves are filled by their
/// respective tests (NaN where not computed).
struct GofReport {
  double ks_statistic = std::numeric_limits<double>::quiet_NaN();
  double ks_p_value = std::numeric_limits<double>::quiet_NaN();
  double chi_square = std::numeric_limits<double>::quiet_NaN();
  int chi_square_dof = 0;
  double chi_square_p_value = std::numeric_limits<double>::quiet_NaN();
};

/// Eigenphases of a unitary matrix (validated to ||U*U - I||_max < 1e-8).
/// Backed by a dense complex eigensolver; the contract is the residual bound,
/// not the method.
EigenphaseSet eigenphases(const ComplexMatrix& u);

/// Throws std::invalid_argument when fewer than two phases are present.
SpacingSample spacings(const EigenphaseSet& e);

/// Equal-width histogram of phases over [0, 2pi).
HistogramData density_histogram(std::span<const double> phases, int bins);

/// Equal-width histogram over [lo, hi); values outside the range are ignored.
HistogramData histogram_range(std::span<const double> values, int bins, double lo, double hi);

/// Wigner surmise density for beta in {1, 2, 4}.
double wigner_surmise(double s, int beta);

/// One-sample Kolmogorov-Smirnov test of `sample` against the distribution
/// function `cdf`; p-value from the asymptotic Kolmogorov series.
GofReport ks_test(std::vector<double> sample, const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov-Smirnov test with effective size n1 n2 / (n1 + n2).
GofReport ks_test_two_sample(std::vector<double> a, std::vector<double> b);

/// Chi-square test of a histogram against the flat expectation;
/// dof = bins - 1. Requires every expected count >= 5.
GofReport chi_square_uniform(const HistogramData& h);

/// Collapses a doubly degenerate (Kramers) spectrum to one phase per pair.
/// Throws std::runtime_error if any phase is left unpaired at tolerance tol.
EigenphaseSet dedup_kramers(const EigenphaseSet& e, double tol);

/// Upper tail Q(t) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 t^2) of the Kolmogorov
/// distribution (with the dual theta-series used for small t).
double kolmogorov_q(double t);

/// Regularized upper incomplete gamma Q(a, x); chi-square tail probability.
double gamma_q(double a, double x);

}  // namespace rmgen

#endif  // RMGEN_SPECTRA_HPP
