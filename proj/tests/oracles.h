// Copyright 2026 The exaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only oracles. Nothing here calls into the code under test.

#ifndef EXAUDIT_TESTS_ORACLES_H_
#define EXAUDIT_TESTS_ORACLES_H_

#include <bit>
#include <cmath>
#include <cstdint>
#include <utility>

namespace exaudit::testing {

// Exhaustive enumeration over all `budget`-subsets of a 4-element claim set
// in which the first `k` elements are misreported. Returns
// (subsets hitting a misreported claim, total subsets).
inline std::pair<int, int> EnumerateDetection(int k, int budget) {
  const unsigned misreported = (1u << k) - 1u;
  int hits = 0;
  int total = 0;
  for (unsigned mask = 0; mask < 16u; ++mask) {
    if (std::popcount(mask) != budget) continue;
    ++total;
    if (mask & misreported) ++hits;
  }
  return {hits, total};
}

// |observed - p| <= 3 sigma of a binomial proportion over n trials. At p = 0
// or p = 1 the only admissible observation is p itself.
inline bool WithinBinomial3Sigma(double observed, double p, double n) {
  if (p <= 0.0 || p >= 1.0) return observed == p;
  return std::abs(observed - p) <= 3.0 * std::sqrt(p * (1.0 - p) / n);
}

inline bool WithinCount3Sigma(std::size_t count, double p, std::size_t n) {
  return WithinBinomial3Sigma(static_cast<double>(count) / n, p,
                              static_cast<double>(n));
}

// |sample mean - mu| <= 3 sd / sqrt(n). A zero sd demands exact agreement up
// to rounding.
inline bool WithinMean3Sigma(double mean, double mu, double sd, double n) {
  if (sd == 0.0) return std::abs(mean - mu) <= 1e-9;
  return std::abs(mean - mu) <= 3.0 * sd / std::sqrt(n);
}

}  // namespace exaudit::testing

#endif  // EXAUDIT_TESTS_ORACLES_H_
