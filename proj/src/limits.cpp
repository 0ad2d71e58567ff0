// Copyright 2026 The fracop Authors
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

#include "fracop/limits.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "fracop/errors.hpp"

namespace fracop {

namespace {

constexpr int kLevels = 7;  // ε = scale·10^{-1} … scale·10^{-7}

// Even columns of Wynn's epsilon table on v; returns the deepest estimate
// and the gap to the one before it.
LimitResult wynn(const std::array<double, kLevels>& v, int len) {
  std::array<double, kLevels> prev{};   // column k-1
  std::array<double, kLevels> cur = v;  // column k
  double best = v[len - 1];
  double last = v[len - 2];
  for (int k = 1; len > 1; ++k) {
    std::array<double, kLevels> next{};
    for (int i = 0; i + 1 < len; ++i) {
      const double diff = cur[i + 1] - cur[i];
      if (diff == 0.0 || !std::isfinite(diff)) return {best, std::abs(best - last)};
      next[i] = prev[i + 1] + 1.0 / diff;
    }
    prev = cur;
    cur = next;
    --len;
    if (k % 2 == 0) {
      last = best;
      best = cur[len - 1];
    }
  }
  return {best, std::abs(best - last)};
}

}  // namespace

LimitResult one_sided_limit(const std::function<double(double)>& g, double scale) {
  if (!(scale > 0.0)) throw DomainError("one_sided_limit: scale must be positive");
  std::array<double, kLevels> v{};
  double eps = scale;
  double size = 1.0;
  for (auto& s : v) {
    eps *= 0.1;
    s = g(eps);
    if (!std::isfinite(s)) throw NumericalError("one-sided limit: non-finite samples", HUGE_VAL);
    size = std::max(size, std::abs(s));
  }
  // Samples past the first roundoff-level difference carry no information.
  const double noise = 1e-10 * size;
  for (int i = 0; i + 1 < kLevels; ++i) {
    if (std::abs(v[i + 1] - v[i]) <= noise) return {v[i + 1], std::abs(v[i + 1] - v[i])};
  }
  const int len = kLevels;
  const double d1 = v[len - 2] - v[len - 3];
  const double d2 = v[len - 1] - v[len - 2];
  if (std::abs(d2) > std::abs(d1)) throw NumericalError("one-sided limit: samples diverge", std::abs(d2));
  if ((d1 > 0.0) != (d2 > 0.0)) {
    throw NumericalError("one-sided limit: samples oscillate", std::abs(d2));
  }
  auto r = wynn(v, len);
  if (!std::isfinite(r.value)) throw NumericalError("one-sided limit: extrapolation failed", HUGE_VAL);
  return r;
}

}  // namespace fracop
