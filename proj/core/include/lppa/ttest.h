// Copyright 2026 The LPPA Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LPPA_TTEST_H_
#define LPPA_TTEST_H_

#include <cstddef>
#include <optional>
#include <span>

namespace lppa {

// Regularized incomplete beta I_x(a, b), via Lentz's continued fraction.
double RegularizedIncompleteBeta(double a, double b, double x);

// P(|T| >= |t|) for Student's t with `df` degrees of freedom.
double StudentTTwoTailedP(double t, double df);

struct TTestResult {
  // Undefined when every difference is zero.
  std::optional<double> t;
  double p = 1.0;
  bool significant = false;
  std::size_t n_pairs = 0;
};

inline constexpr double kSignificanceLevel = 0.05;

// Two-tailed paired t-test on d_i = a_i - b_i with n - 1 degrees of
// freedom. Zero variance gives p = 1 when the mean difference is zero and
// p = 0 (t = +/-inf) otherwise. Throws LengthMismatch or TooFewPairs.
TTestResult PairedTTest(std::span<const double> a, std::span<const double> b,
                        double alpha = kSignificanceLevel);

}  // namespace lppa

#endif  // LPPA_TTEST_H_
